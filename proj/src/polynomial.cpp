#include "edgeideal/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgeideal {

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mon < b.mon; });
  Polynomial p;
  for (auto& t : terms) {
    if (edgeideal::is_zero(t.coeff)) continue;
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff += t.coeff;
      if (edgeideal::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mon.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  // Merge of two sorted term lists.
  Polynomial r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mon < b->mon)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mon < a->mon) {
      r.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!edgeideal::is_zero(c)) r.terms_.push_back(Term{a->mon, std::move(c)});
      ++a, ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  if (edgeideal::is_zero(c)) return {};
  // Adding a fixed exponent vector preserves the structural sort.
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.mon = t.mon * m;
    t.coeff *= c;
  }
  return r;
}

Polynomial Polynomial::times(const Rational& c) const {
  if (edgeideal::is_zero(c)) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial r;
  for (const auto& t : other.terms_) r = r + times(t.mon, t.coeff);
  return r;
}

const Term& Polynomial::leading_term(MonomialOrder ord) const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (monomial_greater(t.mon, best->mon, ord)) best = &t;
  return *best;
}

Polynomial Polynomial::monic(MonomialOrder ord) const {
  const Rational& lc = leading_term(ord).coeff;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff /= lc;
  return r;
}

std::vector<Term> Polynomial::terms_descending(MonomialOrder ord) const {
  std::vector<Term> ts = terms_;
  std::sort(ts.begin(), ts.end(),
            [ord](const Term& a, const Term& b) { return monomial_greater(a.mon, b.mon, ord); });
  return ts;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mon == other.terms_[i].mon) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

int canonical_cmp(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    auto c = ta[i].mon <=> tb[i].mon;
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less ? -1 : 1;
    int cc = cmp(ta[i].coeff, tb[i].coeff);
    if (cc != 0) return cc;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

Polynomial minor2(const Ring& ring, int i, int j) {
  if (i == j) throw std::invalid_argument("minor [i,i] is not defined");
  Monomial xi_yj = Monomial::of(ring, var_x(i)) * Monomial::of(ring, var_y(j));
  Monomial yi_xj = Monomial::of(ring, var_y(i)) * Monomial::of(ring, var_x(j));
  return Polynomial::from_terms({Term{std::move(xi_yj), 1}, Term{std::move(yi_xj), -1}});
}

Polynomial var_polynomial(const Ring& ring, Variable v) {
  return Polynomial::term(Monomial::of(ring, v), 1);
}

}  // namespace edgeideal
