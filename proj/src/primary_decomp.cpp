#include "edgeideal/primary_decomp.hpp"

#include <algorithm>
#include <unordered_set>

namespace edgeideal {

int component_height(const PrimeComponent& c) {
  int h = 2 * static_cast<int>(c.removed.size());
  for (const auto& v : c.cliques) h += static_cast<int>(v.size()) - 1;
  return h;
}

std::vector<Polynomial> component_ideal(const Ring& ring, const PrimeComponent& c) {
  std::vector<Polynomial> gens;
  for (int w : c.removed) {
    gens.push_back(var_polynomial(ring, var_x(w)));
    gens.push_back(var_polynomial(ring, var_y(w)));
  }
  for (const auto& clique : c.cliques)
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j)
        gens.push_back(minor2(ring, clique[i], clique[j]));
  return gens;
}

bool component_contains(const PrimeComponent& a, const PrimeComponent& b) {
  if (!std::includes(b.removed.begin(), b.removed.end(), a.removed.begin(), a.removed.end()))
    return false;
  auto removed_in_b = [&](int v) {
    return std::binary_search(b.removed.begin(), b.removed.end(), v);
  };
  // Clique index of each vertex in b; 0 when removed there.
  std::vector<int> clique_of(Graph::kMaxVertices + 1, 0);
  for (size_t k = 0; k < b.cliques.size(); ++k)
    for (int v : b.cliques[k]) clique_of[v] = static_cast<int>(k) + 1;

  for (const auto& clique : a.cliques)
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j) {
        int x = clique[i], y = clique[j];
        if (removed_in_b(x) || removed_in_b(y)) continue;
        if (clique_of[x] == 0 || clique_of[x] != clique_of[y]) return false;
      }
  return true;
}

std::pair<BranchState, BranchState> branch_step(const BranchState& state, int v) {
  const Graph& g = state.graph;
  if (v < 1 || v > g.n() || (state.removed & Graph::bit(v)) || is_complete_around(g, v))
    throw std::invalid_argument("not a valid pivot");

  BranchState remove{g.with_vertex_isolated(v), state.removed | Graph::bit(v)};
  BranchState saturate{g.with_clique_on(g.neighbors_mask(v) | Graph::bit(v)), state.removed};

  int before = not_complete_count(g);
  if (not_complete_count(remove.graph) >= before ||
      not_complete_count(saturate.graph) >= before)
    throw std::logic_error("branching did not shrink the obstruction count");
  return {std::move(remove), std::move(saturate)};
}

namespace {

struct StateKey {
  std::vector<uint64_t> rows;
  uint64_t removed;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  size_t operator()(const StateKey& k) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    for (uint64_t r : k.rows) mix(r);
    mix(k.removed);
    return static_cast<size_t>(h);
  }
};

StateKey key_of(const BranchState& s) {
  StateKey k;
  k.rows.reserve(s.graph.n());
  for (int v = 1; v <= s.graph.n(); ++v) k.rows.push_back(s.graph.neighbors_mask(v));
  k.removed = s.removed;
  return k;
}

int find_pivot(const BranchState& s, PivotRule rule) {
  int found = 0;
  for (int v = 1; v <= s.graph.n(); ++v) {
    if (s.removed & Graph::bit(v)) continue;  // removed vertices are isolated
    if (is_complete_around(s.graph, v)) continue;
    if (rule == PivotRule::SMALLEST_INDEX) return v;
    found = v;
  }
  return found;  // 0 when the graph is a disjoint union of cliques
}

PrimeComponent leaf_component(const BranchState& s) {
  PrimeComponent c;
  for (int v = 1; v <= s.graph.n(); ++v)
    if (s.removed & Graph::bit(v)) c.removed.push_back(v);
  for (auto& comp : clique_partition(s.graph)) {
    if (comp.size() == 1 && (s.removed & Graph::bit(comp[0]))) continue;
    c.cliques.push_back(std::move(comp));
  }
  return c;
}

struct Search {
  DecomposeOptions opts;
  std::unordered_set<StateKey, StateKeyHash> seen;
  std::vector<PrimeComponent> leaves;
  uint64_t branch_steps = 0;

  void run(const BranchState& state, TraceNode* node) {
    if (node) {
      for (int v = 1; v <= state.graph.n(); ++v)
        if (state.removed & Graph::bit(v)) node->removed.push_back(v);
      node->edges = state.graph.edges();
    }
    if (!opts.trace && !seen.insert(key_of(state)).second) return;

    int pivot = find_pivot(state, opts.pivot_rule);
    if (pivot == 0) {
      leaves.push_back(leaf_component(state));
      return;
    }
    if (node) node->pivot = pivot;
    auto [removed, saturated] = branch_step(state, pivot);
    ++branch_steps;
    if (node) {
      node->children.resize(2);
      run(removed, &node->children[0]);
      run(saturated, &node->children[1]);
    } else {
      run(removed, nullptr);
      run(saturated, nullptr);
    }
  }
};

}  // namespace

Decomposition decompose(const Graph& g, const DecomposeOptions& opts) {
  Search search;
  search.opts = opts;

  Decomposition d;
  BranchState root{g, 0};
  if (opts.trace) {
    d.trace.emplace();
    search.run(root, &*d.trace);
  } else {
    search.run(root, nullptr);
  }
  d.branch_steps = search.branch_steps;

  std::sort(search.leaves.begin(), search.leaves.end());
  search.leaves.erase(std::unique(search.leaves.begin(), search.leaves.end()),
                      search.leaves.end());
  d.leaf_count = search.leaves.size();

  // Keep the minimal ideals. Containment is antisymmetric on distinct
  // components, so one quadratic pass suffices.
  for (size_t i = 0; i < search.leaves.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < search.leaves.size() && minimal; ++j)
      if (j != i && component_contains(search.leaves[j], search.leaves[i])) minimal = false;
    if (minimal) d.components.push_back(search.leaves[i]);
  }

  d.height = component_height(d.components[0]);
  for (const auto& c : d.components) d.height = std::min(d.height, component_height(c));
  return d;
}

int ideal_height(const Graph& g) { return decompose(g).height; }

std::vector<int> assh_indices(const Decomposition& d) {
  std::vector<int> idx;
  for (size_t i = 0; i < d.components.size(); ++i)
    if (component_height(d.components[i]) == d.height) idx.push_back(static_cast<int>(i));
  return idx;
}

VerifyReport verify_decomposition(const Ring& ring, const Graph& g, int max_oracle_n) {
  if (ring.n() != g.n()) throw std::logic_error("ring and graph sizes differ");
  if (g.n() > max_oracle_n)
    throw std::invalid_argument(
        "graph too large for the intersection oracle; raise --max-oracle-n to override");

  VerifyReport report;
  Decomposition d = decompose(g);

  for (size_t i = 0; i < d.components.size(); ++i)
    for (size_t j = 0; j < d.components.size(); ++j)
      if (i != j && component_contains(d.components[i], d.components[j]))
        report.fail("component " + std::to_string(j) + " is not minimal (contains component " +
                    std::to_string(i) + ")");

  // Every reported prime must contain I_G: each edge keeps an endpoint in W
  // or lies inside one clique.
  for (size_t i = 0; i < d.components.size(); ++i) {
    const PrimeComponent& c = d.components[i];
    std::vector<Polynomial> prime = component_ideal(ring, c);
    GroebnerBasis prime_gb = buchberger(prime, MonomialOrder::DEGREVLEX);
    for (auto [a, b] : g.edges())
      if (!normal_form(minor2(ring, a, b), prime_gb.elements, MonomialOrder::DEGREVLEX)
               .is_zero())
        report.fail("component " + std::to_string(i) + " does not contain the edge minor [" +
                    std::to_string(a) + "," + std::to_string(b) + "]");
  }

  // The intersection of the primes must be I_G exactly.
  std::vector<Polynomial> inter;
  for (size_t i = 0; i < d.components.size(); ++i) {
    std::vector<Polynomial> prime = component_ideal(ring, d.components[i]);
    inter = (i == 0) ? prime : ideal_intersect(ring, inter, prime);
  }
  if (!ideal_equal(edge_generators(ring, g), inter, MonomialOrder::DEGREVLEX))
    report.fail("intersection of the components differs from the edge ideal");
  return report;
}

HamiltonReport hamilton_diagnostics(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("diagnostics need a connected graph");
  if (g.n() < 3) throw std::invalid_argument("diagnostics need at least three vertices");

  HamiltonReport r;
  r.n = g.n();
  Decomposition d = decompose(g);
  r.height = d.height;
  r.hamilton_path = hamilton_path_exists(g);
  r.hamilton_cycle = hamilton_cycle_exists(g);
  r.ore = ore_condition(g);
  r.tree = is_tree(g);

  std::vector<int> full(static_cast<size_t>(g.n()));
  for (int v = 1; v <= g.n(); ++v) full[v - 1] = v;
  PrimeComponent full_minors{{}, {full}};
  std::vector<int> assh = assh_indices(d);
  r.assh_is_full_minor_ideal =
      assh.size() == 1 && d.components[assh[0]] == full_minors;

  if (r.hamilton_path && r.height != g.n() - 1)
    r.violations.push_back("hamilton path present but height is not n-1");
  if (r.tree && r.height == g.n() - 1 && !r.hamilton_path)
    r.violations.push_back("tree of height n-1 without a hamilton path");
  if (r.hamilton_cycle && !r.assh_is_full_minor_ideal)
    r.violations.push_back("hamilton cycle present but assh is not the full minor ideal");
  if (r.ore && !r.hamilton_cycle)
    r.violations.push_back("Ore condition holds but no hamilton cycle found");
  return r;
}

}  // namespace edgeideal
