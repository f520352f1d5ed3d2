// Serialization: deterministic text rendering (including the minor
// shorthand), JSON round trips, and parse error reporting.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgeideal/ideal_gb.hpp"
#include "edgeideal/io.hpp"
#include "support.hpp"

using namespace edgeideal;
using namespace testsupport;

namespace {

constexpr MonomialOrder kOrd = MonomialOrder::DEGREVLEX;

Polynomial constant(const Ring& ring, Rational c) {
  return Polynomial::term(Monomial::one(ring), std::move(c));
}

}  // namespace

TEST_CASE("monomial text lists factors in variable-id order") {
  Ring ring(5);
  CHECK(render_monomial_text(ring, Monomial::one(ring)) == "1");
  CHECK(render_monomial_text(ring, Monomial::of(ring, var_x(3))) == "X3");
  // Y's carry lower ids than X's, so Y2 prints before X1.
  Monomial m = Monomial::of(ring, var_y(2)) * Monomial::of(ring, var_x(1), 2);
  CHECK(render_monomial_text(ring, m) == "Y2*X1^2");
}

TEST_CASE("polynomial text and the minor shorthand") {
  Ring ring(5);
  Polynomial m = minor2(ring, 1, 2);
  CHECK(render_polynomial_text(ring, m, kOrd) == "[1,2]");
  CHECK(render_polynomial_text(ring, m, kOrd, false) == "Y2*X1 - Y1*X2");
  CHECK(render_polynomial_text(ring, m.times(Monomial::of(ring, var_x(1)), Rational(1)), kOrd) ==
        "X1*[1,2]");

  // The shorthand needs unit coefficients; anything else spells the terms out.
  CHECK(render_polynomial_text(ring, m.times(Rational("3/4")), kOrd) ==
        "3/4*Y2*X1 - 3/4*Y1*X2");
  CHECK(render_polynomial_text(ring, m.times(Rational(-1)), kOrd) == "-Y2*X1 + Y1*X2");
  CHECK(render_polynomial_text(ring, m.times(Rational("-1/2")), kOrd) ==
        "-1/2*Y2*X1 + 1/2*Y1*X2");

  CHECK(render_polynomial_text(ring, Polynomial(), kOrd) == "0");
  CHECK(render_polynomial_text(ring, constant(ring, Rational(-7)), kOrd) == "-7");
  CHECK(render_polynomial_text(ring, m + constant(ring, Rational(1)), kOrd) ==
        "Y2*X1 - Y1*X2 + 1");
  Polynomial spread = Polynomial::term(Monomial::of(ring, var_y(5)), Rational(1)) +
                      Polynomial::term(Monomial::of(ring, var_x(1)), Rational(-2));
  CHECK(render_polynomial_text(ring, spread, kOrd) == "Y5 - 2*X1");
}

TEST_CASE("basis text of the nine-element example") {
  Ring ring(5);
  GroebnerBasis gb = groebner_combinatorial(ring, goranger_graph());
  CHECK(render_basis_text(ring, gb) ==
        "[3,5]\n"
        "[2,4]\n"
        "[1,5]\n"
        "[1,4]\n"
        "X5*[1,3]\n"
        "X4*[1,2]\n"
        "Y1*[4,5]\n"
        "Y1*X5*[3,4]\n"
        "Y1*X4*X5*[2,3]\n");
}

TEST_CASE("polynomial json round trip") {
  Ring ring(5);
  for (const Polynomial& p :
       {minor2(ring, 1, 2), minor2(ring, 2, 5).times(Rational("3/4")),
        minor2(ring, 1, 3).times(Monomial::of(ring, var_x(5)), Rational(-2)),
        constant(ring, Rational(7)), Polynomial()}) {
    CHECK(parse_polynomial_json(ring, render_polynomial_json(ring, p, kOrd)) == p);
  }
  CHECK_THROWS_AS(parse_polynomial_json(ring, "{\"not\": \"terms\"}"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_polynomial_json(ring, "[{\"coeff\": \"1\", \"exponents\": {\"X1\": -1}}]"),
      "negative exponent for X1", ParseError);
}

TEST_CASE("basis json round trip") {
  Ring ring(5);
  GroebnerBasis gb = groebner_combinatorial(ring, goranger_graph());
  std::string text = render_basis_json(ring, gb);
  CHECK(text.find("\"n\": 5") != std::string::npos);
  CHECK(text.find("\"order\": \"degrevlex\"") != std::string::npos);
  GroebnerBasis back = parse_basis_json(ring, text);
  CHECK(back == gb);

  Ring other(4);
  CHECK_THROWS_WITH_AS(parse_basis_json(other, text), "basis is over a different ring",
                       ParseError);
  CHECK_THROWS_WITH_AS(
      parse_basis_json(ring, "{\"order\": \"grlex\", \"elements\": []}"),
      "unknown monomial order: grlex", ParseError);
}

TEST_CASE("graph json round trip and errors") {
  for (const Graph& g : {d5_graph(), goranger_graph(), countex_graph(), Graph(1)})
    CHECK(parse_graph_json(render_graph_json(g)) == g);

  CHECK_THROWS_WITH_AS(parse_graph_json("{\"n\": 0, \"edges\": []}"),
                       "vertex count must be between 1 and 64", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_json("{\"n\": 65, \"edges\": []}"),
                       "vertex count must be between 1 and 64", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_json("{\"n\": 3, \"edges\": [[1]]}"),
                       "edge must be a pair [i, j]", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_json("{\"n\": 3, \"edges\": [[1, 9]]}"),
                       "edge endpoint out of range", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_json("{\"n\": 3, \"edges\": [[2, 2]]}"), "loop edge 2",
                       ParseError);
  CHECK_THROWS_AS(parse_graph_json("{\"edges\": []}"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("not json at all"), ParseError);
}

TEST_CASE("parse_graph_any dispatches on the first significant byte") {
  Graph g = d5_graph();
  CHECK(parse_graph_any(render_graph_json(g)) == g);
  CHECK(parse_graph_any(render_graph_text(g)) == g);
  CHECK(parse_graph_any("  \n\t" + render_graph_json(g)) == g);
  CHECK_THROWS_WITH_AS(parse_graph_any("  \n \t "), "empty graph input", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph_any(""), "empty graph input", ParseError);
}

TEST_CASE("component text") {
  Ring ring(5);
  CHECK(render_component_text(ring, PrimeComponent{{1}, {{2, 3}, {4}, {5}}}) ==
        "removed={1} cliques={2,3},{4},{5} height=3 ideal=(X1, Y1, [2,3])");
  CHECK(render_component_text(ring, PrimeComponent{{1, 2, 3, 4, 5}, {}}) ==
        "removed={1,2,3,4,5} cliques=none height=10 ideal=(X1, Y1, X2, Y2, X3, Y3, X4, Y4, "
        "X5, Y5)");
}

TEST_CASE("decomposition text and json") {
  Ring ring(5);
  Decomposition d = decompose(d5_graph());
  CHECK(render_decomposition_text(ring, d) ==
        "component 1: removed={} cliques={1,2,3,4,5} height=4 ideal=([1,2], [1,3], [1,4], "
        "[1,5], [2,3], [2,4], [2,5], [3,4], [3,5], [4,5])\n"
        "component 2: removed={1} cliques={2,3},{4},{5} height=3 ideal=(X1, Y1, [2,3])\n"
        "component 3: removed={2} cliques={1,4,5},{3} height=4 ideal=(X2, Y2, [1,4], [1,5], "
        "[4,5])\n"
        "height 3\n"
        "assh 2\n");

  // JSON keeps 0-based assh indices and a computed height per component.
  std::string text = render_decomposition_json(d);
  CHECK(text.find("\"assh_indices\": [\n    1\n  ]") != std::string::npos);
  Decomposition back = parse_decomposition_json(text);
  CHECK(back.components == d.components);
  CHECK(back.height == d.height);
}

TEST_CASE("trace text and json") {
  DecomposeOptions traced;
  traced.trace = true;
  Decomposition d = decompose(d5_graph(), traced);
  REQUIRE(d.trace.has_value());
  CHECK(render_trace_text(*d.trace) ==
        "removed={} edges=(1,2),(1,4),(1,5),(2,3) pivot=1\n"
        "  remove: removed={1} edges=(2,3) leaf\n"
        "  saturate: removed={} edges=(1,2),(1,4),(1,5),(2,3),(2,4),(2,5),(4,5) pivot=2\n"
        "    remove: removed={2} edges=(1,4),(1,5),(4,5) leaf\n"
        "    saturate: removed={} "
        "edges=(1,2),(1,3),(1,4),(1,5),(2,3),(2,4),(2,5),(3,4),(3,5),(4,5) leaf\n");

  std::string tj = render_trace_json(*d.trace);
  CHECK(tj.find("\"pivot\": 1") != std::string::npos);
  CHECK(tj.find("\"children\"") != std::string::npos);
  // The traced decomposition embeds the tree under a "trace" key.
  CHECK(render_decomposition_json(d).find("\"trace\"") != std::string::npos);

  // A leaf-only trace: disjoint clique unions never branch.
  Decomposition k3 = decompose(complete_graph(3), traced);
  REQUIRE(k3.trace.has_value());
  CHECK(render_trace_text(*k3.trace) == "removed={} edges=(1,2),(1,3),(2,3) leaf\n");

  Graph lonely(1);
  Decomposition single = decompose(lonely, traced);
  REQUIRE(single.trace.has_value());
  CHECK(render_trace_text(*single.trace) == "removed={} edges=none leaf\n");
}
