// Simple undirected graphs on vertex set {1, ..., n}, n <= 64.
//
// Adjacency is one 64-bit mask per vertex (bit v-1 = vertex v). No loops, no
// multi-edges; add_edge is idempotent.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgeideal {

// Input error with a 1-based line number (0 when no line applies).
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg) : std::runtime_error(msg), line(line_) {}
};

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(check_order(n)), 0) {}

  int n() const { return n_; }

  void add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("loop edge " + std::to_string(i));
    adj_[i - 1] |= bit(j);
    adj_[j - 1] |= bit(i);
  }

  bool has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return i != j && (adj_[i - 1] & bit(j)) != 0;
  }

  uint64_t neighbors_mask(int v) const {
    check_vertex(v);
    return adj_[v - 1];
  }

  int degree(int v) const { return __builtin_popcountll(neighbors_mask(v)); }

  std::vector<int> neighborhood(int v) const;

  // Edges as (i, j) with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  uint64_t vertex_mask() const {
    return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
  }

  // Copy with all edges at v dropped.
  Graph with_vertex_isolated(int v) const;
  // Copy with the vertices of mask made pairwise adjacent.
  Graph with_clique_on(uint64_t mask) const;

  static uint64_t bit(int v) { return uint64_t{1} << (v - 1); }

  bool operator==(const Graph& other) const = default;

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be between 1 and 64");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int n_;
  std::vector<uint64_t> adj_;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// BFS distance; nullopt when a and b are in different components.
std::optional<int> distance(const Graph& g, int a, int b);

// True when the neighbors of v are pairwise adjacent (the closed neighborhood
// induces a complete graph).
bool is_complete_around(const Graph& g, int v);
// Number of vertices v with !is_complete_around(g, v).
int not_complete_count(const Graph& g);

// True when every connected component induces a complete graph; equivalently,
// when the graph is complete around every vertex.
bool is_disjoint_union_of_cliques(const Graph& g);

// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
// The components, which must all be cliques (throws invalid_argument else).
std::vector<std::vector<int>> clique_partition(const Graph& g);

bool hamilton_path_exists(const Graph& g);   // single vertex counts as a path
bool hamilton_cycle_exists(const Graph& g);  // false for n < 3

// deg(a) + deg(b) >= n for every non-adjacent pair a != b. Requires n >= 3.
bool ore_condition(const Graph& g);

// Text format: comments from '#' to end of line; first significant line is
// the vertex count, each following line one edge "i j".
Graph parse_graph_text(const std::string& text);
std::string render_graph_text(const Graph& g);

// Enumeration in increasing edge-mask order; the mask indexes pairs (i, j),
// i < j, lexicographically. Used by sweeps and exhaustive tests.
Graph graph_from_edge_mask(int n, uint64_t mask);
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
uint64_t count_connected_graphs(int n);

// Uniform over connected graphs on n labeled vertices (rejection sampling).
Graph random_connected_graph(int n, std::mt19937_64& rng);

}  // namespace edgeideal
