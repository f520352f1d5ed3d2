// Polynomial ring context: K[X_1..X_n, Y_1..Y_n], optionally extended by one
// auxiliary variable t used for intersection-by-elimination.
//
// Variables are ranked Y_1 > ... > Y_n > X_1 > ... > X_n; the elimination
// block order puts t above all of them. Internally a variable is addressed by
// its rank id: 0..n-1 are Y_1..Y_n, n..2n-1 are X_1..X_n, and 2n is t (only
// in a ring built with an auxiliary variable). Monomial exponent vectors use
// the same id layout, so a ring with aux has an odd number of slots.
#pragma once

#include <stdexcept>
#include <string>

namespace edgeideal {

enum class VarKind { X, Y, Aux };

struct Variable {
  VarKind kind;
  int index;  // 1-based; ignored for Aux

  friend bool operator==(const Variable& a, const Variable& b) {
    if (a.kind != b.kind) return false;
    return a.kind == VarKind::Aux || a.index == b.index;
  }
};

inline Variable var_x(int i) { return {VarKind::X, i}; }
inline Variable var_y(int i) { return {VarKind::Y, i}; }
inline Variable var_aux() { return {VarKind::Aux, 0}; }

class Ring {
 public:
  explicit Ring(int n, bool with_aux = false) : n_(n), with_aux_(with_aux) {
    if (n < 1) throw std::invalid_argument("ring needs at least one pair of variables");
  }

  int n() const { return n_; }
  bool has_aux() const { return with_aux_; }
  int num_vars() const { return 2 * n_ + (with_aux_ ? 1 : 0); }
  int aux_id() const {
    if (!with_aux_) throw std::logic_error("ring has no auxiliary variable");
    return 2 * n_;
  }

  int id(Variable v) const {
    switch (v.kind) {
      case VarKind::Y:
        check_index(v.index);
        return v.index - 1;
      case VarKind::X:
        check_index(v.index);
        return n_ + v.index - 1;
      case VarKind::Aux:
        return aux_id();
    }
    throw std::logic_error("bad variable kind");
  }

  Variable variable(int id) const {
    if (id < 0 || id >= num_vars()) throw std::out_of_range("variable id out of range");
    if (id < n_) return var_y(id + 1);
    if (id < 2 * n_) return var_x(id - n_ + 1);
    return var_aux();
  }

  std::string name(int id) const {
    Variable v = variable(id);
    switch (v.kind) {
      case VarKind::Y: return "Y" + std::to_string(v.index);
      case VarKind::X: return "X" + std::to_string(v.index);
      case VarKind::Aux: return "t";
    }
    throw std::logic_error("bad variable kind");
  }

  // Name -> variable, for JSON exponent keys.
  Variable variable_named(const std::string& name) const {
    if (name == "t") {
      if (!with_aux_) throw std::invalid_argument("no variable named t in this ring");
      return var_aux();
    }
    if (name.size() < 2 || (name[0] != 'X' && name[0] != 'Y'))
      throw std::invalid_argument("unknown variable name: " + name);
    int idx = 0;
    for (size_t k = 1; k < name.size(); ++k) {
      if (name[k] < '0' || name[k] > '9')
        throw std::invalid_argument("unknown variable name: " + name);
      idx = idx * 10 + (name[k] - '0');
    }
    if (idx < 1 || idx > n_) throw std::invalid_argument("variable index out of range: " + name);
    return name[0] == 'X' ? var_x(idx) : var_y(idx);
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("variable index out of range");
  }

  int n_;
  bool with_aux_;
};

}  // namespace edgeideal
