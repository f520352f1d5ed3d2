// Path calculus on graphs: minimal and irreducible paths, their binomials,
// decompositions into irreducible pieces, and sums of paths.
//
// Conventions for a path P = p_0 p_1 ... p_l (distinct vertices, consecutive
// ones adjacent): sequences are normalized so p_0 < p_l. The joints J(P) are
// the interior vertices, the ends are p_0 and p_l. P is minimal when it has
// no chord (the induced subgraph on V(P) has exactly the path edges), and
// irreducible when additionally no joint lies strictly between p_0 and p_l.
//
// The binomial of an irreducible path is g_P = M_P * [p_0, p_l] with
// M_P = prod over joints p of Z_p, where Z_p = Y_p if p < p_0 and
// Z_p = X_p if p > p_l.
#pragma once

#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/polynomial.hpp"

namespace edgeideal {

class Path {
 public:
  // At least two distinct vertices; flips the sequence if needed so that the
  // first vertex is the smaller end.
  explicit Path(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return v_; }
  int length() const { return static_cast<int>(v_.size()) - 1; }
  int lower_end() const { return v_.front(); }
  int upper_end() const { return v_.back(); }
  std::vector<int> joints() const { return {v_.begin() + 1, v_.end() - 1}; }

  bool operator==(const Path& other) const = default;
  // Lexicographic on the vertex sequence; canonical listing order.
  bool operator<(const Path& other) const { return v_ < other.v_; }

 private:
  std::vector<int> v_;
};

// Walks allow repeated interior vertices but keep distinct ends, normalized
// like paths (first vertex smaller).
class Walk {
 public:
  explicit Walk(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return v_; }
  int lower_end() const { return v_.front(); }
  int upper_end() const { return v_.back(); }

  bool operator==(const Walk& other) const = default;

 private:
  std::vector<int> v_;
};

// Consecutive vertices adjacent in g, all vertices distinct.
bool is_path_of(const Graph& g, const Path& p);

// Throws invalid_argument when p is not a path of g.
bool is_minimal(const Graph& g, const Path& p);
bool is_irreducible(const Graph& g, const Path& p);

// g_P for an irreducible path. Requires ring.n() == g.n(). Throws
// invalid_argument for paths that are not irreducible.
Polynomial g_of_path(const Ring& ring, const Graph& g, const Path& p);

// All irreducible paths of g, sorted lexicographically by vertex sequence.
std::vector<Path> enumerate_irreducible_paths(const Graph& g);

// Decomposition of a minimal path into irreducible pieces that chain
// end-to-end. Forward: repeatedly split the remaining suffix at the
// smallest-value joint lying strictly between its end values. Backward:
// mirror rule on prefixes, splitting at the largest such joint. Pieces are
// returned in positional order along p.
std::vector<Path> decompose_forward(const Graph& g, const Path& p);
std::vector<Path> decompose_backward(const Graph& g, const Path& p);

// Sum of two paths sharing exactly one end vertex: the concatenated walk,
// run from the non-shared end of one path through the shared end to the
// non-shared end of the other.
Walk path_sum(const Path& p, const Path& q);

// All minimal paths of g below the walk: subsequences of w's vertex sequence
// that keep both ends, form a path of g, and are minimal. Sorted, deduped.
std::vector<Path> minimal_paths_below(const Graph& g, const Walk& w);

}  // namespace edgeideal
