// Deterministic text and JSON serialization.
//
// Text polynomials list terms in decreasing order under the given monomial
// order; monomial factors are printed in variable-id order (Y's before X's).
// A binomial of the shape M * (X_i*Y_j - Y_i*X_j) with i < j is shortened to
// "M*[i,j]". JSON polynomials are arrays of {"coeff": string, "exponents":
// {name: int}} term objects, in the same term order.
#pragma once

#include <string>

#include "edgeideal/groebner.hpp"
#include "edgeideal/primary_decomp.hpp"

namespace edgeideal {

std::string render_monomial_text(const Ring& ring, const Monomial& m);
std::string render_polynomial_text(const Ring& ring, const Polynomial& p, MonomialOrder ord,
                                   bool shorthand = true);

std::string render_basis_text(const Ring& ring, const GroebnerBasis& gb);
std::string render_basis_json(const Ring& ring, const GroebnerBasis& gb);
GroebnerBasis parse_basis_json(const Ring& ring, const std::string& text);

std::string render_polynomial_json(const Ring& ring, const Polynomial& p, MonomialOrder ord);
Polynomial parse_polynomial_json(const Ring& ring, const std::string& text);

std::string render_graph_json(const Graph& g);
Graph parse_graph_json(const std::string& text);
// Dispatches on the first significant byte: '{' means JSON.
Graph parse_graph_any(const std::string& text);

std::string render_component_text(const Ring& ring, const PrimeComponent& c);
std::string render_decomposition_text(const Ring& ring, const Decomposition& d);
std::string render_decomposition_json(const Decomposition& d);
Decomposition parse_decomposition_json(const std::string& text);

std::string render_trace_text(const TraceNode& t);
std::string render_trace_json(const TraceNode& t);

}  // namespace edgeideal
