#include "edgeideal/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace edgeideal {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
  const Term& lf = f.leading_term(ord);
  const Term& lg = g.leading_term(ord);
  Monomial l = Monomial::lcm(lf.mon, lg.mon);
  return f.times(l.divided_by(lf.mon), 1 / lf.coeff) -
         g.times(l.divided_by(lg.mon), 1 / lg.coeff);
}

namespace {

struct OrdGreater {
  MonomialOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_greater(a, b, ord);
  }
};

// Divisor scan order: increasing leading monomial, ties broken structurally.
std::vector<int> divisor_scan_order(const std::vector<Polynomial>& basis, MonomialOrder ord) {
  std::vector<int> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    Cmp c = cmp_monomials(basis[a].leading_monomial(ord), basis[b].leading_monomial(ord), ord);
    if (c != Cmp::EQ) return c == Cmp::LT;
    return canonical_cmp(basis[a], basis[b]) < 0;
  });
  return idx;
}

Division divide_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                     MonomialOrder ord, bool track_quotients) {
  for (const auto& b : basis)
    if (b.is_zero()) throw std::invalid_argument("zero polynomial in divisor basis");
  std::vector<int> scan = divisor_scan_order(basis, ord);

  Division out;
  if (track_quotients) out.quotients.assign(basis.size(), Polynomial{});

  std::map<Monomial, Rational, OrdGreater> work{OrdGreater{ord}};
  for (const auto& t : f.terms()) work.emplace(t.mon, t.coeff);

  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();  // largest monomial under ord
    Monomial m = top->first;
    Rational c = top->second;
    work.erase(top);
    if (is_zero(c)) continue;

    int chosen = -1;
    for (int i : scan) {
      if (basis[i].leading_monomial(ord).divides(m)) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) {
      remainder.push_back(Term{std::move(m), std::move(c)});
      continue;
    }

    const Term& lt = basis[chosen].leading_term(ord);
    Monomial q = m.divided_by(lt.mon);
    Rational qc = c / lt.coeff;
    if (track_quotients)
      out.quotients[chosen] = out.quotients[chosen] + Polynomial::term(q, qc);
    // Cancel the chosen multiple: subtract qc * q * tail(basis[chosen]).
    for (const auto& t : basis[chosen].terms()) {
      if (t.mon == lt.mon) continue;
      auto [it, inserted] = work.emplace(t.mon * q, -qc * t.coeff);
      if (!inserted) it->second -= qc * t.coeff;
    }
  }
  out.remainder = Polynomial::from_terms(std::move(remainder));
  return out;
}

struct SPair {
  Monomial lcm;
  int i, j;
};

struct SPairLess {
  MonomialOrder ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.lcm.total_degree() != b.lcm.total_degree())
      return a.lcm.total_degree() < b.lcm.total_degree();
    Cmp c = cmp_monomials(a.lcm, b.lcm, ord);
    if (c != Cmp::EQ) return c == Cmp::LT;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

Division divide(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder ord) {
  return divide_impl(f, basis, ord, true);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder ord) {
  return divide_impl(f, basis, ord, false).remainder;
}

GroebnerBasis reduce_basis(std::vector<Polynomial> basis, MonomialOrder ord) {
  std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
  for (auto& p : basis) p = p.monic(ord);

  // Minimal generating set of the leading-term ideal: keep an element only if
  // no other kept element's leading monomial divides its own.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    Cmp c = cmp_monomials(a.leading_monomial(ord), b.leading_monomial(ord), ord);
    if (c != Cmp::EQ) return c == Cmp::LT;
    return canonical_cmp(a, b) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : basis) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_monomial(ord).divides(p.leading_monomial(ord))) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(p));
  }

  // Tail reduction. Divisibility decisions depend only on the (now pairwise
  // non-dividing) leading monomials, so reducing against the pre-pass list is
  // enough to make every element fully reduced.
  GroebnerBasis out{ord, {}};
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.elements.push_back(normal_form(minimal[i], others, ord).monic(ord));
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_less(a.leading_monomial(ord), b.leading_monomial(ord), ord);
            });
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder ord) {
  std::vector<Polynomial> basis;
  for (const auto& f : gens)
    if (!f.is_zero()) basis.push_back(f.monic(ord));
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return canonical_cmp(a, b) < 0; });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::set<SPair, SPairLess> pairs{SPairLess{ord}};
  auto queue_pairs_with = [&](int k) {
    const Monomial& lk = basis[k].leading_monomial(ord);
    for (int i = 0; i < k; ++i) {
      const Monomial& li = basis[i].leading_monomial(ord);
      // Buchberger's coprimality criterion: such pairs reduce to zero.
      if (li.coprime_with(lk)) continue;
      pairs.insert(SPair{Monomial::lcm(li, lk), i, k});
    }
  };
  for (size_t k = 0; k < basis.size(); ++k) queue_pairs_with(static_cast<int>(k));

  while (!pairs.empty()) {
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(ord));
    queue_pairs_with(static_cast<int>(basis.size()) - 1);
  }
  return reduce_basis(std::move(basis), ord);
}

bool ideal_contains(const std::vector<Polynomial>& gens, const Polynomial& f,
                    MonomialOrder ord) {
  if (f.is_zero()) return true;
  return normal_form(f, buchberger(gens, ord).elements, ord).is_zero();
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 MonomialOrder ord) {
  return buchberger(a, ord) == buchberger(b, ord);
}

namespace {

Polynomial lift_to_aux(const Ring& aux_ring, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(aux_ring.num_vars());
    for (int id = 0; id < t.mon.num_vars(); ++id) m.set_exponent(id, t.mon.exponent(id));
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial project_from_aux(const Ring& base_ring, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mon.exponent(t.mon.num_vars() - 1) != 0)
      throw std::logic_error("projection of a polynomial involving t");
    Monomial m(base_ring.num_vars());
    for (int id = 0; id < base_ring.num_vars(); ++id) m.set_exponent(id, t.mon.exponent(id));
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

std::vector<Polynomial> ideal_intersect(const Ring& ring, const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b) {
  if (ring.has_aux()) throw std::invalid_argument("intersection ring must not have t");
  auto nonzero = [](const std::vector<Polynomial>& v) {
    return std::any_of(v.begin(), v.end(), [](const Polynomial& p) { return !p.is_zero(); });
  };
  if (!nonzero(a) || !nonzero(b)) return {};  // intersection with the zero ideal

  Ring aux_ring(ring.n(), true);
  Polynomial t = var_polynomial(aux_ring, var_aux());
  Polynomial one_minus_t = Polynomial::term(Monomial::one(aux_ring), 1) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * lift_to_aux(aux_ring, f));
  for (const auto& g : b) gens.push_back(one_minus_t * lift_to_aux(aux_ring, g));

  GroebnerBasis gb = buchberger(gens, MonomialOrder::ELIM_BLOCK);
  std::vector<Polynomial> result;
  for (const auto& p : gb.elements) {
    bool aux_free = true;
    for (const auto& term : p.terms())
      if (term.mon.exponent(term.mon.num_vars() - 1) != 0) aux_free = false;
    if (aux_free) result.push_back(project_from_aux(ring, p));
  }
  return result;
}

}  // namespace edgeideal
