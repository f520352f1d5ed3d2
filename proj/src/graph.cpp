#include "edgeideal/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace edgeideal {

std::vector<int> Graph::neighborhood(int v) const {
  std::vector<int> out;
  uint64_t m = neighbors_mask(v);
  while (m) {
    int b = __builtin_ctzll(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adj_[i - 1] & bit(j)) out.emplace_back(i, j);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 1; v <= n_; ++v) twice += degree(v);
  return twice / 2;
}

Graph Graph::with_vertex_isolated(int v) const {
  check_vertex(v);
  Graph g = *this;
  for (int u = 1; u <= n_; ++u) g.adj_[u - 1] &= ~bit(v);
  g.adj_[v - 1] = 0;
  return g;
}

Graph Graph::with_clique_on(uint64_t mask) const {
  if ((mask & ~vertex_mask()) != 0) throw std::out_of_range("clique mask out of range");
  Graph g = *this;
  for (int v = 1; v <= n_; ++v)
    if (mask & bit(v)) g.adj_[v - 1] |= mask & ~bit(v);
  return g;
}

namespace {

// Vertices reachable from v, as a mask.
uint64_t reach_mask(const Graph& g, int v) {
  uint64_t seen = Graph::bit(v);
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      int b = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors_mask(b + 1);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) { return reach_mask(g, 1) == g.vertex_mask(); }

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.n() - 1; }

std::optional<int> distance(const Graph& g, int a, int b) {
  g.neighbors_mask(b);  // range check; a is checked below
  if (a == b) {
    g.neighbors_mask(a);
    return 0;
  }
  uint64_t seen = Graph::bit(a);
  uint64_t frontier = seen;
  int d = 0;
  while (frontier) {
    ++d;
    uint64_t next = 0;
    while (frontier) {
      int v = __builtin_ctzll(frontier) + 1;
      frontier &= frontier - 1;
      next |= g.neighbors_mask(v);
    }
    if (next & Graph::bit(b)) return d;
    frontier = next & ~seen;
    seen |= next;
  }
  return std::nullopt;
}

bool is_complete_around(const Graph& g, int v) {
  uint64_t nbr = g.neighbors_mask(v);
  uint64_t m = nbr;
  while (m) {
    int u = __builtin_ctzll(m) + 1;
    m &= m - 1;
    if ((nbr & ~Graph::bit(u) & ~g.neighbors_mask(u)) != 0) return false;
  }
  return true;
}

int not_complete_count(const Graph& g) {
  int c = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (!is_complete_around(g, v)) ++c;
  return c;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  uint64_t left = g.vertex_mask();
  while (left) {
    int v = __builtin_ctzll(left) + 1;
    uint64_t comp = reach_mask(g, v);
    std::vector<int> verts;
    for (uint64_t m = comp; m; m &= m - 1) verts.push_back(__builtin_ctzll(m) + 1);
    comps.push_back(std::move(verts));
    left &= ~comp;
  }
  return comps;
}

bool is_disjoint_union_of_cliques(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    uint64_t mask = 0;
    for (int v : comp) mask |= Graph::bit(v);
    for (int v : comp)
      if ((mask & ~Graph::bit(v) & ~g.neighbors_mask(v)) != 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> clique_partition(const Graph& g) {
  if (!is_disjoint_union_of_cliques(g))
    throw std::invalid_argument("graph is not a disjoint union of cliques");
  return connected_components(g);
}

namespace {

// Backtracking with degree-sorted branching: low-degree vertices first.
struct HamiltonSearch {
  const Graph& g;
  std::vector<std::vector<int>> nbr_order;  // per vertex, neighbors by (degree, index)

  explicit HamiltonSearch(const Graph& graph) : g(graph) {
    nbr_order.resize(g.n() + 1);
    for (int v = 1; v <= g.n(); ++v) {
      nbr_order[v] = g.neighborhood(v);
      std::sort(nbr_order[v].begin(), nbr_order[v].end(), [&](int a, int b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
      });
    }
  }

  bool extend_path(int cur, uint64_t visited) const {
    if (visited == g.vertex_mask()) return true;
    for (int w : nbr_order[cur]) {
      if (visited & Graph::bit(w)) continue;
      if (extend_path(w, visited | Graph::bit(w))) return true;
    }
    return false;
  }

  bool extend_cycle(int cur, uint64_t visited, int home) const {
    if (visited == g.vertex_mask()) return g.has_edge(cur, home);
    for (int w : nbr_order[cur]) {
      if (visited & Graph::bit(w)) continue;
      if (extend_cycle(w, visited | Graph::bit(w), home)) return true;
    }
    return false;
  }
};

}  // namespace

bool hamilton_path_exists(const Graph& g) {
  if (g.n() == 1) return true;
  if (!is_connected(g)) return false;
  HamiltonSearch search(g);
  std::vector<int> starts(static_cast<size_t>(g.n()));
  for (int v = 1; v <= g.n(); ++v) starts[v - 1] = v;
  std::sort(starts.begin(), starts.end(), [&](int a, int b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  for (int s : starts)
    if (search.extend_path(s, Graph::bit(s))) return true;
  return false;
}

bool hamilton_cycle_exists(const Graph& g) {
  if (g.n() < 3) return false;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) < 2) return false;
  if (!is_connected(g)) return false;
  // Every hamilton cycle passes through vertex 1.
  return HamiltonSearch(g).extend_cycle(1, Graph::bit(1), 1);
}

bool ore_condition(const Graph& g) {
  if (g.n() < 3) throw std::invalid_argument("Ore condition needs at least three vertices");
  for (int a = 1; a <= g.n(); ++a)
    for (int b = a + 1; b <= g.n(); ++b)
      if (!g.has_edge(a, b) && g.degree(a) + g.degree(b) < g.n()) return false;
  return true;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::optional<Graph> g;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ls(line);
    if (!g) {
      long long n;
      if (!(ls >> n)) throw ParseError(lineno, "expected vertex count");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "unexpected token after vertex count");
      if (n < 1 || n > Graph::kMaxVertices)
        throw ParseError(lineno, "vertex count must be between 1 and 64");
      g.emplace(static_cast<int>(n));
      continue;
    }
    long long i, j;
    if (!(ls >> i >> j)) throw ParseError(lineno, "expected an edge 'i j'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "unexpected token after edge");
    if (i < 1 || i > g->n() || j < 1 || j > g->n())
      throw ParseError(lineno, "edge endpoint out of range");
    if (i == j) throw ParseError(lineno, "loop edge " + std::to_string(i));
    g->add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  if (!g) throw ParseError(lineno, "expected vertex count");
  return *g;
}

std::string render_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
  return out.str();
}

Graph graph_from_edge_mask(int n, uint64_t mask) {
  Graph g(n);
  int b = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++b)
      if (mask & (uint64_t{1} << b)) g.add_edge(i, j);
  return g;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8) throw std::invalid_argument("exhaustive enumeration supports n <= 8");
  int pairs = n * (n - 1) / 2;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g)) fn(g);
  }
}

uint64_t count_connected_graphs(int n) {
  uint64_t c = 0;
  for_each_connected_graph(n, [&](const Graph&) { ++c; });
  return c;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  if (n < 1 || n > 11) throw std::invalid_argument("random graphs support n <= 11");
  int pairs = n * (n - 1) / 2;
  for (;;) {
    uint64_t mask = rng() & ((uint64_t{1} << pairs) - 1);
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g)) return g;
  }
}

}  // namespace edgeideal
