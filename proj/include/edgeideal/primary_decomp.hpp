// Minimal primes of the binomial edge ideal via graph branching.
//
// A graph whose components are all cliques has a prime edge ideal. Any other
// graph has a vertex v it is not complete around, and I_G is the intersection
// of the ideals of two simpler graphs: one with v deleted (contributing
// (X_v, Y_v)) and one with the neighborhood of v completed. Iterating this
// until every leaf is a disjoint union of cliques and keeping the minimal
// ideals yields the minimal primes.
//
// Each leaf is recorded as a PrimeComponent: the removed vertices W plus the
// clique partition of the rest; its ideal is (X_w, Y_w : w in W) + all
// 2-minors within each clique, of height 2|W| + sum(|V_i| - 1).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/ideal_gb.hpp"

namespace edgeideal {

struct PrimeComponent {
  std::vector<int> removed;                // sorted
  std::vector<std::vector<int>> cliques;   // sorted lists, ordered by first vertex

  bool operator==(const PrimeComponent& other) const = default;
  bool operator<(const PrimeComponent& other) const {
    if (removed.size() != other.removed.size()) return removed.size() < other.removed.size();
    if (removed != other.removed) return removed < other.removed;
    return cliques < other.cliques;
  }
};

int component_height(const PrimeComponent& c);
std::vector<Polynomial> component_ideal(const Ring& ring, const PrimeComponent& c);

// ideal(a) ⊆ ideal(b): b removes at least a's vertices, and every clique pair
// of a either loses an endpoint to b's removed set or stays inside one clique
// of b. Sound and complete for these primes.
bool component_contains(const PrimeComponent& a, const PrimeComponent& b);

// A branching state: the working graph, with removed vertices kept isolated.
struct BranchState {
  Graph graph;
  uint64_t removed = 0;
};

// Splits at pivot v (throws invalid_argument("not a valid pivot") when v is
// removed or the graph is complete around it). First successor removes v,
// second completes its neighborhood. Verifies that both successors strictly
// decrease the number of not-complete-around vertices and throws logic_error
// otherwise.
std::pair<BranchState, BranchState> branch_step(const BranchState& state, int v);

enum class PivotRule { SMALLEST_INDEX, LARGEST_INDEX };

struct TraceNode {
  std::vector<int> removed;
  std::vector<std::pair<int, int>> edges;
  int pivot = 0;  // 0 at leaves
  std::vector<TraceNode> children;
};

struct DecomposeOptions {
  PivotRule pivot_rule = PivotRule::SMALLEST_INDEX;
  bool trace = false;  // builds the branch tree; disables memoization
};

struct Decomposition {
  std::vector<PrimeComponent> components;  // minimal primes, canonically sorted
  int height = 0;                          // min over components
  uint64_t leaf_count = 0;                 // distinct leaves before minimalization
  uint64_t branch_steps = 0;               // splits expanded (after memo hits)
  std::optional<TraceNode> trace;
};

Decomposition decompose(const Graph& g, const DecomposeOptions& opts = {});

int ideal_height(const Graph& g);

// Indices (into decomposition.components) of the components of minimal
// height, i.e. the primes where the height of I_G is attained.
std::vector<int> assh_indices(const Decomposition& d);

// Checks decompose(g) against the commutative-algebra oracle: pairwise
// non-containment of the reported primes, each prime containing I_G, and
// I_G equal to the intersection of the primes (computed by elimination).
// Throws invalid_argument when g.n() > max_oracle_n.
VerifyReport verify_decomposition(const Ring& ring, const Graph& g, int max_oracle_n = 5);

struct HamiltonReport {
  int n = 0;
  int height = 0;
  bool hamilton_path = false;
  bool hamilton_cycle = false;
  bool ore = false;
  bool tree = false;
  bool assh_is_full_minor_ideal = false;  // assh = { 2-minors of the full vertex set }
  std::vector<std::string> violations;    // internal inconsistencies; expected empty
};

// Height and hamiltonicity facts side by side, with any violated implication
// (hamilton path => height n-1; tree of height n-1 => hamilton path; hamilton
// cycle => assh is the full minor ideal; Ore => hamilton cycle) reported.
// Requires a connected graph on at least three vertices.
HamiltonReport hamilton_diagnostics(const Graph& g);

}  // namespace edgeideal
