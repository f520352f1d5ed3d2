#include "edgeideal/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgeideal {

void Monomial::set_exponent(int id, int value) {
  if (id < 0 || id >= num_vars()) throw std::out_of_range("variable id out of range");
  if (value < 0) throw std::invalid_argument("negative exponent");
  deg_ += value - e_[id];
  e_[id] = value;
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() != other.e_.size()) throw std::logic_error("monomials from different rings");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  if (e_.size() != other.e_.size()) throw std::logic_error("monomials from different rings");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && other.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (e_.size() != other.e_.size()) throw std::logic_error("monomials from different rings");
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  r.deg_ += other.deg_;
  return r;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial division with remainder");
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
  r.deg_ -= other.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.e_.size() != b.e_.size()) throw std::logic_error("monomials from different rings");
  Monomial r = a;
  r.deg_ = 0;
  for (size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.e_.size() != b.e_.size()) throw std::logic_error("monomials from different rings");
  Monomial r = a;
  r.deg_ = 0;
  for (size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

namespace {

// Reverse lexicographic tie-break over ids [0, limit): the winner is the one
// whose exponent is smaller at the last differing id (ids run from highest
// rank to lowest, so we scan from limit-1 down).
Cmp revlex_tiebreak(const Monomial& a, const Monomial& b, int limit) {
  for (int id = limit - 1; id >= 0; --id) {
    int d = a.exponent(id) - b.exponent(id);
    if (d != 0) return d < 0 ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp degrevlex_on_block(const Monomial& a, const Monomial& b, int limit, int deg_a, int deg_b) {
  if (deg_a != deg_b) return deg_a < deg_b ? Cmp::LT : Cmp::GT;
  return revlex_tiebreak(a, b, limit);
}

}  // namespace

Cmp cmp_monomials(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.num_vars() != b.num_vars()) throw std::logic_error("monomials from different rings");
  int nv = a.num_vars();
  if (ord == MonomialOrder::DEGREVLEX)
    return degrevlex_on_block(a, b, nv, a.total_degree(), b.total_degree());

  // ELIM_BLOCK: rings with an auxiliary variable have an odd slot count, and
  // the auxiliary id is the last one.
  if (nv % 2 == 0) throw std::logic_error("elimination order needs an auxiliary variable");
  int aux = nv - 1;
  if (a.exponent(aux) != b.exponent(aux))
    return a.exponent(aux) < b.exponent(aux) ? Cmp::LT : Cmp::GT;
  return degrevlex_on_block(a, b, aux, a.total_degree() - a.exponent(aux),
                            b.total_degree() - b.exponent(aux));
}

}  // namespace edgeideal
