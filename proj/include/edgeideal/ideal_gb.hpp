// The binomial edge ideal of a graph and its Groebner basis, computed
// combinatorially from irreducible paths and cross-checkable against the
// general-purpose Buchberger engine.
#pragma once

#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/groebner.hpp"

namespace edgeideal {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> messages;

  void fail(std::string msg) {
    ok = false;
    messages.push_back(std::move(msg));
  }
};

// Generators [i, j] of I_G, one per edge, in sorted edge order.
std::vector<Polynomial> edge_generators(const Ring& ring, const Graph& g);

// The reduced DEGREVLEX Groebner basis of I_G: { g_P : P irreducible },
// assembled without any pair completion. Requires ring.n() == g.n().
GroebnerBasis groebner_combinatorial(const Ring& ring, const Graph& g);

// Leading monomials of a basis, sorted increasingly under its order.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);
bool is_squarefree_initial(const GroebnerBasis& gb);

// Cross-checks groebner_combinatorial(g) against the engine: exact equality
// with buchberger(edge_generators(g)), reducedness of the combinatorial
// basis, and every S-polynomial reducing to zero against it.
VerifyReport verify_gb(const Ring& ring, const Graph& g);

}  // namespace edgeideal
