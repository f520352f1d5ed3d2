#include "edgeideal/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edgeideal {

Path::Path(std::vector<int> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 2) throw std::invalid_argument("path needs at least two vertices");
  std::vector<int> sorted = v_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("path vertices must be distinct");
  if (v_.front() > v_.back()) std::reverse(v_.begin(), v_.end());
}

Walk::Walk(std::vector<int> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 2) throw std::invalid_argument("walk needs at least two vertices");
  if (v_.front() == v_.back()) throw std::invalid_argument("walk ends must be distinct");
  if (v_.front() > v_.back()) std::reverse(v_.begin(), v_.end());
}

bool is_path_of(const Graph& g, const Path& p) {
  const auto& v = p.vertices();
  for (int u : v)
    if (u < 1 || u > g.n()) return false;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (!g.has_edge(v[i], v[i + 1])) return false;
  return true;
}

namespace {

void require_path(const Graph& g, const Path& p) {
  if (!is_path_of(g, p)) throw std::invalid_argument("not a path of the graph");
}

bool chord_free(const Graph& g, const std::vector<int>& v) {
  for (size_t i = 0; i + 2 < v.size(); ++i)
    for (size_t j = i + 2; j < v.size(); ++j)
      if (g.has_edge(v[i], v[j])) return false;
  return true;
}

bool joints_outside_span(const std::vector<int>& v) {
  int lo = v.front(), hi = v.back();
  for (size_t i = 1; i + 1 < v.size(); ++i)
    if (lo < v[i] && v[i] < hi) return false;
  return true;
}

}  // namespace

bool is_minimal(const Graph& g, const Path& p) {
  require_path(g, p);
  return chord_free(g, p.vertices());
}

bool is_irreducible(const Graph& g, const Path& p) {
  return is_minimal(g, p) && joints_outside_span(p.vertices());
}

Polynomial g_of_path(const Ring& ring, const Graph& g, const Path& p) {
  if (ring.n() != g.n()) throw std::logic_error("ring and graph sizes differ");
  if (!is_irreducible(g, p)) throw std::invalid_argument("Z_p undefined for interior joint");
  Monomial m = Monomial::one(ring);
  for (int u : p.joints())
    m = m * Monomial::of(ring, u < p.lower_end() ? var_y(u) : var_x(u));
  return minor2(ring, p.lower_end(), p.upper_end()).times(m, 1);
}

std::vector<Path> enumerate_irreducible_paths(const Graph& g) {
  std::vector<Path> out;
  std::vector<int> seq;

  // Chord-freeness is enforced during the walk: a new vertex may be adjacent
  // only to the current last vertex, so every emitted sequence is a minimal
  // path. Each one is emitted from its smaller end only.
  auto extend = [&](auto&& self, uint64_t visited, uint64_t blocked) -> void {
    int last = seq.back();
    if (seq.size() >= 2 && seq.front() < last && joints_outside_span(seq)) out.emplace_back(seq);
    uint64_t cand = g.neighbors_mask(last) & ~visited & ~blocked;
    while (cand) {
      int w = __builtin_ctzll(cand) + 1;
      cand &= cand - 1;
      seq.push_back(w);
      self(self, visited | Graph::bit(w), blocked | g.neighbors_mask(last));
      seq.pop_back();
    }
  };

  for (int s = 1; s <= g.n(); ++s) {
    seq.assign(1, s);
    extend(extend, Graph::bit(s), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Path> decompose_by(const Graph& g, const Path& p, bool forward) {
  if (!is_minimal(g, p)) throw std::invalid_argument("path is not minimal");
  const auto& v = p.vertices();
  int last = static_cast<int>(v.size()) - 1;

  std::vector<std::pair<int, int>> spans;  // positional [from, to] pieces
  if (forward) {
    int from = 0;
    for (;;) {
      // Smallest joint value of the suffix lying strictly between its ends.
      int split = -1;
      for (int q = from + 1; q < last; ++q)
        if (v[from] < v[q] && v[q] < v[last] && (split < 0 || v[q] < v[split])) split = q;
      if (split < 0) break;
      spans.emplace_back(from, split);
      from = split;
    }
    spans.emplace_back(from, last);
  } else {
    int to = last;
    for (;;) {
      // Largest joint value of the prefix lying strictly between its ends.
      int split = -1;
      for (int q = 1; q < to; ++q)
        if (v[0] < v[q] && v[q] < v[to] && (split < 0 || v[q] > v[split])) split = q;
      if (split < 0) break;
      spans.emplace_back(split, to);
      to = split;
    }
    spans.emplace_back(0, to);
    std::reverse(spans.begin(), spans.end());
  }

  std::vector<Path> pieces;
  for (auto [a, b] : spans)
    pieces.emplace_back(std::vector<int>(v.begin() + a, v.begin() + b + 1));
  return pieces;
}

}  // namespace

std::vector<Path> decompose_forward(const Graph& g, const Path& p) {
  return decompose_by(g, p, true);
}

std::vector<Path> decompose_backward(const Graph& g, const Path& p) {
  return decompose_by(g, p, false);
}

Walk path_sum(const Path& p, const Path& q) {
  bool p_at_front, q_at_front;
  if (p.lower_end() == q.lower_end() && p.upper_end() == q.upper_end())
    throw std::invalid_argument("paths share both ends");
  if (p.lower_end() == q.lower_end()) {
    p_at_front = true, q_at_front = true;
  } else if (p.lower_end() == q.upper_end()) {
    p_at_front = true, q_at_front = false;
  } else if (p.upper_end() == q.lower_end()) {
    p_at_front = false, q_at_front = true;
  } else if (p.upper_end() == q.upper_end()) {
    p_at_front = false, q_at_front = false;
  } else {
    throw std::invalid_argument("paths share no end");
  }

  // Run p from its non-shared end into the shared vertex, then q onward.
  std::vector<int> w = p.vertices();
  if (p_at_front) std::reverse(w.begin(), w.end());
  std::vector<int> qv = q.vertices();
  if (!q_at_front) std::reverse(qv.begin(), qv.end());
  w.insert(w.end(), qv.begin() + 1, qv.end());
  return Walk(std::move(w));  // normalization orients the smaller end first
}

std::vector<Path> minimal_paths_below(const Graph& g, const Walk& w) {
  const auto& v = w.vertices();
  int m = static_cast<int>(v.size()) - 1;
  if (m > 62) throw std::invalid_argument("walk too long");

  std::set<std::vector<int>> seen;
  std::vector<Path> out;
  // Subsequences keeping both ends: subsets of the interior positions.
  uint64_t interior = m - 1;
  for (uint64_t sub = 0; sub < (uint64_t{1} << interior); ++sub) {
    std::vector<int> cand;
    cand.push_back(v[0]);
    for (int q = 1; q < m; ++q)
      if (sub & (uint64_t{1} << (q - 1))) cand.push_back(v[q]);
    cand.push_back(v[m]);

    std::vector<int> sorted = cand;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    bool edges_ok = true;
    for (size_t i = 0; i + 1 < cand.size() && edges_ok; ++i)
      edges_ok = g.has_edge(cand[i], cand[i + 1]);
    if (!edges_ok || !chord_free(g, cand)) continue;
    if (seen.insert(cand).second) out.emplace_back(std::move(cand));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace edgeideal
