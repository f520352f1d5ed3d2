// Monomials and the two monomial orders used throughout.
//
// A monomial stores one exponent per variable id of its ring (see ring.hpp for
// the id layout). Orders:
//   DEGREVLEX  total degree first, ties by reverse lexicographic: a > b iff the
//              last nonzero entry of exp(a) - exp(b), reading ids from highest
//              rank (Y_1) to lowest (X_n), is negative.
//   ELIM_BLOCK auxiliary exponent first, then DEGREVLEX on the X/Y block; only
//              meaningful for monomials of a ring with an auxiliary variable.
#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "edgeideal/ring.hpp"

namespace edgeideal {

enum class MonomialOrder { DEGREVLEX, ELIM_BLOCK };

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int num_vars) : e_(num_vars, 0) {}

  static Monomial one(const Ring& ring) { return Monomial(ring.num_vars()); }
  static Monomial of(const Ring& ring, Variable v, int power = 1) {
    Monomial m(ring.num_vars());
    m.set_exponent(ring.id(v), power);
    return m;
  }

  int num_vars() const { return static_cast<int>(e_.size()); }
  int exponent(int id) const { return e_[id]; }
  void set_exponent(int id, int value);

  int total_degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Precondition: other divides *this.
  Monomial divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Order-independent structural comparison (lexicographic on the exponent
  // vector from id 0). Used only to keep containers canonically sorted.
  std::strong_ordering operator<=>(const Monomial& other) const {
    return std::lexicographical_compare_three_way(e_.begin(), e_.end(),
                                                  other.e_.begin(), other.e_.end());
  }
  bool operator==(const Monomial& other) const { return e_ == other.e_; }

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

enum class Cmp { LT, EQ, GT };

// Compares a and b, which must come from the same ring. ELIM_BLOCK requires a
// ring with an auxiliary variable (odd slot count).
Cmp cmp_monomials(const Monomial& a, const Monomial& b, MonomialOrder ord);

inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return cmp_monomials(a, b, ord) == Cmp::LT;
}
inline bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return cmp_monomials(a, b, ord) == Cmp::GT;
}

}  // namespace edgeideal
