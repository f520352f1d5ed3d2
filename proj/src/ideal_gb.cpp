#include "edgeideal/ideal_gb.hpp"

#include <algorithm>

#include "edgeideal/paths.hpp"

namespace edgeideal {

std::vector<Polynomial> edge_generators(const Ring& ring, const Graph& g) {
  if (ring.n() != g.n()) throw std::logic_error("ring and graph sizes differ");
  std::vector<Polynomial> gens;
  for (auto [i, j] : g.edges()) gens.push_back(minor2(ring, i, j));
  return gens;
}

GroebnerBasis groebner_combinatorial(const Ring& ring, const Graph& g) {
  GroebnerBasis gb{MonomialOrder::DEGREVLEX, {}};
  for (const Path& p : enumerate_irreducible_paths(g))
    gb.elements.push_back(g_of_path(ring, g, p));
  std::sort(gb.elements.begin(), gb.elements.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_less(a.leading_monomial(gb.order), b.leading_monomial(gb.order),
                                   gb.order);
            });
  // Distinct paths can share (ends, joint set) and hence give one binomial.
  gb.elements.erase(std::unique(gb.elements.begin(), gb.elements.end()), gb.elements.end());
  return gb;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  for (const auto& p : gb.elements) lms.push_back(p.leading_monomial(gb.order));
  std::sort(lms.begin(), lms.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_less(a, b, gb.order);
  });
  return lms;
}

bool is_squarefree_initial(const GroebnerBasis& gb) {
  return std::all_of(gb.elements.begin(), gb.elements.end(), [&](const Polynomial& p) {
    return p.leading_monomial(gb.order).is_squarefree();
  });
}

VerifyReport verify_gb(const Ring& ring, const Graph& g) {
  VerifyReport report;
  GroebnerBasis comb = groebner_combinatorial(ring, g);
  GroebnerBasis oracle = buchberger(edge_generators(ring, g), MonomialOrder::DEGREVLEX);
  if (!(comb == oracle))
    report.fail("combinatorial basis differs from the Buchberger result (" +
                std::to_string(comb.elements.size()) + " vs " +
                std::to_string(oracle.elements.size()) + " elements)");

  // Reducedness: monic, and no term of any element divisible by another
  // element's leading monomial.
  for (size_t i = 0; i < comb.elements.size(); ++i) {
    const Polynomial& p = comb.elements[i];
    if (p.leading_term(comb.order).coeff != 1) {
      report.fail("element " + std::to_string(i) + " is not monic");
      continue;
    }
    for (size_t j = 0; j < comb.elements.size(); ++j) {
      if (j == i) continue;
      const Monomial& lm = comb.elements[j].leading_monomial(comb.order);
      for (const auto& t : p.terms())
        if (lm.divides(t.mon))
          report.fail("element " + std::to_string(i) + " is not reduced against element " +
                      std::to_string(j));
    }
  }

  // Buchberger's criterion, checked directly.
  for (size_t i = 0; i < comb.elements.size(); ++i)
    for (size_t j = i + 1; j < comb.elements.size(); ++j) {
      Polynomial s = s_polynomial(comb.elements[i], comb.elements[j], comb.order);
      if (!normal_form(s, comb.elements, comb.order).is_zero())
        report.fail("S-polynomial of elements " + std::to_string(i) + ", " + std::to_string(j) +
                    " does not reduce to zero");
    }
  return report;
}

}  // namespace edgeideal
