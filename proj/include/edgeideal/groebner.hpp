// General-purpose Groebner basis engine over the rationals.
//
// Everything here is deterministic: the division algorithm always picks the
// first eligible divisor in canonical leading-monomial order, Buchberger uses
// normal pair selection (smallest lcm) with full tie-breaks, and returned
// bases are reduced and canonically sorted, hence unique for the ideal and
// order.
#pragma once

#include <vector>

#include "edgeideal/polynomial.hpp"

namespace edgeideal {

struct GroebnerBasis {
  MonomialOrder order;
  // Monic, reduced, sorted by increasing leading monomial.
  std::vector<Polynomial> elements;

  bool operator==(const GroebnerBasis& other) const = default;
};

// S(f, g) = (lcm/lt(f)) f / lc(f) - (lcm/lt(g)) g / lc(g).
// Throws invalid_argument if f or g is zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder ord);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // aligned with the divisor list
};

// Multivariate division: f = sum quotients[i] * basis[i] + remainder, with no
// remainder monomial divisible by any basis leading monomial. Basis elements
// must be nonzero.
Division divide(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder ord);

// Remainder of divide(), without quotient bookkeeping.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder ord);

// Reduced Groebner basis of (gens). Zero generators are ignored; the zero
// ideal yields an empty basis and the unit ideal yields {1}.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder ord);

// Interreduces a set already known to be a Groebner basis (used to finish
// combinatorial constructions without rerunning pair completion).
GroebnerBasis reduce_basis(std::vector<Polynomial> basis, MonomialOrder ord);

bool ideal_contains(const std::vector<Polynomial>& gens, const Polynomial& f, MonomialOrder ord);
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 MonomialOrder ord);

// Generators of (a) ∩ (b) in ring (which must not have an auxiliary
// variable), computed by elimination: the t-free part of a Groebner basis of
// t*(a) + (1-t)*(b) under ELIM_BLOCK. The result is a reduced DEGREVLEX
// Groebner basis of the intersection.
std::vector<Polynomial> ideal_intersect(const Ring& ring, const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b);

}  // namespace edgeideal
