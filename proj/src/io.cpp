#include "edgeideal/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace edgeideal {

using nlohmann::json;

std::string render_monomial_text(const Ring& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int id = 0; id < m.num_vars(); ++id) {
    int e = m.exponent(id);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(id);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

// Recognizes p = M * (X_i*Y_j - Y_i*X_j) with i < j; fills m and i, j.
bool minor_shorthand(const Ring& ring, const Polynomial& p, Monomial& m, int& i, int& j) {
  if (p.term_count() != 2) return false;
  const Term *pos = nullptr, *neg = nullptr;
  for (const auto& t : p.terms()) {
    if (t.coeff == 1) pos = &t;
    if (t.coeff == -1) neg = &t;
  }
  if (!pos || !neg) return false;
  m = Monomial::gcd(pos->mon, neg->mon);
  Monomial a = pos->mon.divided_by(m);
  if (a.total_degree() != 2) return false;
  i = j = 0;
  for (int id = 0; id < a.num_vars(); ++id) {
    if (a.exponent(id) == 0) continue;
    if (a.exponent(id) != 1) return false;
    Variable v = ring.variable(id);
    if (v.kind == VarKind::X && i == 0)
      i = v.index;
    else if (v.kind == VarKind::Y && j == 0)
      j = v.index;
    else
      return false;
  }
  if (i == 0 || j == 0 || i >= j) return false;
  Monomial yixj = Monomial::of(ring, var_y(i)) * Monomial::of(ring, var_x(j));
  return neg->mon == m * yixj;
}

std::string coeff_prefix(const Rational& c, bool first) {
  Rational a = abs(c);
  std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  if (a == 1) return sign;
  return sign + to_string(a) + "*";
}

}  // namespace

std::string render_polynomial_text(const Ring& ring, const Polynomial& p, MonomialOrder ord,
                                   bool shorthand) {
  if (p.is_zero()) return "0";
  if (shorthand) {
    Monomial m;
    int i, j;
    if (minor_shorthand(ring, p, m, i, j)) {
      std::string bracket = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      if (m.is_one()) return bracket;
      return render_monomial_text(ring, m) + "*" + bracket;
    }
  }
  std::string out;
  bool first = true;
  for (const auto& t : p.terms_descending(ord)) {
    out += coeff_prefix(t.coeff, first);
    if (t.mon.is_one()) {
      // Bare constant: restore the "1" swallowed by the coefficient prefix.
      if (abs(t.coeff) == 1) out += "1";
      else out.pop_back();  // drop the '*'
    } else {
      out += render_monomial_text(ring, t.mon);
    }
    first = false;
  }
  return out;
}

std::string render_basis_text(const Ring& ring, const GroebnerBasis& gb) {
  std::string out;
  for (const auto& p : gb.elements) out += render_polynomial_text(ring, p, gb.order) + "\n";
  return out;
}

namespace {

const char* order_name(MonomialOrder ord) {
  return ord == MonomialOrder::DEGREVLEX ? "degrevlex" : "elim_block";
}

MonomialOrder order_from_name(const std::string& s) {
  if (s == "degrevlex") return MonomialOrder::DEGREVLEX;
  if (s == "elim_block") return MonomialOrder::ELIM_BLOCK;
  throw ParseError(0, "unknown monomial order: " + s);
}

json polynomial_to_json(const Ring& ring, const Polynomial& p, MonomialOrder ord) {
  json terms = json::array();
  for (const auto& t : p.terms_descending(ord)) {
    json exps = json::object();
    for (int id = 0; id < t.mon.num_vars(); ++id)
      if (t.mon.exponent(id) > 0) exps[ring.name(id)] = t.mon.exponent(id);
    terms.push_back(json{{"coeff", to_string(t.coeff)}, {"exponents", exps}});
  }
  return terms;
}

Polynomial polynomial_from_json(const Ring& ring, const json& j) {
  if (!j.is_array()) throw ParseError(0, "polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& tj : j) {
    Rational c = rational_from_string(tj.at("coeff").get<std::string>());
    Monomial m = Monomial::one(ring);
    for (const auto& [name, e] : tj.at("exponents").items()) {
      int exp = e.get<int>();
      if (exp < 0) throw ParseError(0, "negative exponent for " + name);
      m.set_exponent(ring.id(ring.variable_named(name)), exp);
    }
    terms.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

template <typename Fn>
auto wrap_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

std::string render_polynomial_json(const Ring& ring, const Polynomial& p, MonomialOrder ord) {
  return polynomial_to_json(ring, p, ord).dump(2);
}

Polynomial parse_polynomial_json(const Ring& ring, const std::string& text) {
  return wrap_json_errors([&] { return polynomial_from_json(ring, json::parse(text)); });
}

std::string render_basis_json(const Ring& ring, const GroebnerBasis& gb) {
  json j;
  j["n"] = ring.n();
  j["order"] = order_name(gb.order);
  json elems = json::array();
  for (const auto& p : gb.elements) elems.push_back(polynomial_to_json(ring, p, gb.order));
  j["elements"] = elems;
  return j.dump(2);
}

GroebnerBasis parse_basis_json(const Ring& ring, const std::string& text) {
  return wrap_json_errors([&] {
    json j = json::parse(text);
    if (j.contains("n") && j.at("n").get<int>() != ring.n())
      throw ParseError(0, "basis is over a different ring");
    GroebnerBasis gb{order_from_name(j.at("order").get<std::string>()), {}};
    for (const auto& pj : j.at("elements"))
      gb.elements.push_back(polynomial_from_json(ring, pj));
    return gb;
  });
}

std::string render_graph_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  return j.dump(2);
}

Graph parse_graph_json(const std::string& text) {
  return wrap_json_errors([&] {
    json j = json::parse(text);
    long long n = j.at("n").get<long long>();
    if (n < 1 || n > Graph::kMaxVertices)
      throw ParseError(0, "vertex count must be between 1 and 64");
    Graph g(static_cast<int>(n));
    for (const auto& ej : j.at("edges")) {
      if (!ej.is_array() || ej.size() != 2) throw ParseError(0, "edge must be a pair [i, j]");
      long long a = ej[0].get<long long>(), b = ej[1].get<long long>();
      if (a < 1 || a > n || b < 1 || b > n) throw ParseError(0, "edge endpoint out of range");
      if (a == b) throw ParseError(0, "loop edge " + std::to_string(a));
      g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return g;
  });
}

Graph parse_graph_any(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  throw ParseError(0, "empty graph input");
}

namespace {

std::string vertex_set(const std::vector<int>& vs) {
  std::string out = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

json component_to_json(const PrimeComponent& c) {
  json j;
  j["removed"] = c.removed;
  j["cliques"] = c.cliques;
  j["height"] = component_height(c);
  return j;
}

PrimeComponent component_from_json(const json& j) {
  PrimeComponent c;
  c.removed = j.at("removed").get<std::vector<int>>();
  c.cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
  return c;
}

}  // namespace

std::string render_component_text(const Ring& ring, const PrimeComponent& c) {
  std::string out = "removed=" + vertex_set(c.removed) + " cliques=";
  if (c.cliques.empty()) out += "none";
  for (size_t i = 0; i < c.cliques.size(); ++i) {
    if (i) out += ",";
    out += vertex_set(c.cliques[i]);
  }
  out += " height=" + std::to_string(component_height(c)) + " ideal=(";
  std::vector<Polynomial> gens = component_ideal(ring, c);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += render_polynomial_text(ring, gens[i], MonomialOrder::DEGREVLEX);
  }
  return out + ")";
}

std::string render_decomposition_text(const Ring& ring, const Decomposition& d) {
  std::ostringstream out;
  if (d.trace) out << "branch tree:\n" << render_trace_text(*d.trace);
  for (size_t i = 0; i < d.components.size(); ++i)
    out << "component " << i + 1 << ": " << render_component_text(ring, d.components[i])
        << "\n";
  out << "height " << d.height << "\n";
  out << "assh";
  for (int i : assh_indices(d)) out << " " << i + 1;
  out << "\n";
  return out.str();
}

std::string render_decomposition_json(const Decomposition& d) {
  json j;
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(component_to_json(c));
  j["components"] = comps;
  j["height"] = d.height;
  j["assh_indices"] = assh_indices(d);
  if (d.trace) j["trace"] = json::parse(render_trace_json(*d.trace));
  return j.dump(2);
}

Decomposition parse_decomposition_json(const std::string& text) {
  return wrap_json_errors([&] {
    json j = json::parse(text);
    Decomposition d;
    for (const auto& cj : j.at("components")) d.components.push_back(component_from_json(cj));
    d.height = j.at("height").get<int>();
    return d;
  });
}

namespace {

void trace_text(const TraceNode& t, int depth, std::string label, std::string& out) {
  out += std::string(static_cast<size_t>(depth) * 2, ' ') + label;
  out += "removed=" + vertex_set(t.removed) + " edges=";
  if (t.edges.empty()) out += "none";
  for (size_t i = 0; i < t.edges.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(t.edges[i].first) + "," + std::to_string(t.edges[i].second) +
           ")";
  }
  if (t.pivot == 0) {
    out += " leaf\n";
    return;
  }
  out += " pivot=" + std::to_string(t.pivot) + "\n";
  trace_text(t.children[0], depth + 1, "remove: ", out);
  trace_text(t.children[1], depth + 1, "saturate: ", out);
}

json trace_to_json(const TraceNode& t) {
  json j;
  j["removed"] = t.removed;
  json edges = json::array();
  for (auto [a, b] : t.edges) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  j["pivot"] = t.pivot;
  json children = json::array();
  for (const auto& c : t.children) children.push_back(trace_to_json(c));
  j["children"] = children;
  return j;
}

}  // namespace

std::string render_trace_text(const TraceNode& t) {
  std::string out;
  trace_text(t, 0, "", out);
  return out;
}

std::string render_trace_json(const TraceNode& t) { return trace_to_json(t).dump(2); }

}  // namespace edgeideal
