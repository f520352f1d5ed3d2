// Multivariate polynomials with exact rational coefficients.
//
// Terms are kept merged (distinct monomials, no zero coefficients) and sorted
// by the structural monomial order, which is independent of any monomial
// order parameter; every operation is deterministic. Leading-term queries
// take the order explicitly.
#pragma once

#include <initializer_list>
#include <vector>

#include "edgeideal/monomial.hpp"
#include "edgeideal/rational.hpp"
#include "edgeideal/ring.hpp"

namespace edgeideal {

struct Term {
  Monomial mon;
  Rational coeff;
};

class Polynomial {
 public:
  Polynomial() = default;  // zero

  // Merges duplicate monomials, drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);
  static Polynomial term(Monomial m, Rational c) {
    return from_terms({Term{std::move(m), std::move(c)}});
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;  // max over terms; -1 for the zero polynomial

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial times(const Monomial& m, const Rational& c) const;
  Polynomial times(const Rational& c) const;

  // Throws invalid_argument on the zero polynomial.
  const Term& leading_term(MonomialOrder ord) const;
  const Monomial& leading_monomial(MonomialOrder ord) const {
    return leading_term(ord).mon;
  }
  // Scaled so the leading coefficient is 1.
  Polynomial monic(MonomialOrder ord) const;
  // Terms in decreasing order under ord (for rendering).
  std::vector<Term> terms_descending(MonomialOrder ord) const;

  bool operator==(const Polynomial& other) const;

 private:
  std::vector<Term> terms_;
};

// Deterministic total order on polynomials (structural; no monomial order
// involved). Returns <0, 0, >0.
int canonical_cmp(const Polynomial& a, const Polynomial& b);

// The 2x2 minor [i,j] = X_i*Y_j - Y_i*X_j, for i != j.
Polynomial minor2(const Ring& ring, int i, int j);

// X_v and Y_v as polynomials.
Polynomial var_polynomial(const Ring& ring, Variable v);

}  // namespace edgeideal
