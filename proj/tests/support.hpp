// Shared test helpers: CLI process driving, graph fixtures, independent
// small-scale oracles, and the path-decomposition divisibility harness.
//
// Everything here is deliberately written from first principles (definitions,
// not library shortcuts) so the oracles stay independent of the code under
// test.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/io.hpp"
#include "edgeideal/paths.hpp"

namespace testsupport {

using namespace edgeideal;

// ---------------------------------------------------------------------------
// CLI process driving

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, merged
};

inline std::string require_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) throw std::runtime_error(std::string("environment variable not set: ") + name);
  return v;
}

inline std::string cli_path() { return require_env("EDGEIDEAL_CLI"); }
inline std::string graphs_dir() { return require_env("EDGEIDEAL_GRAPHS"); }

// Runs the CLI with a raw argument string; optional data is piped to stdin.
inline CliResult run_cli(const std::string& args, const std::string& input = "") {
  std::string cmd = cli_path() + " " + args;
  std::string stdin_file;
  if (!input.empty()) {
    char name[] = "/tmp/edgeideal_stdin_XXXXXX";
    int fd = mkstemp(name);
    if (fd < 0) throw std::runtime_error("mkstemp failed");
    size_t off = 0;
    while (off < input.size()) {
      ssize_t k = write(fd, input.data() + off, input.size() - off);
      if (k <= 0) throw std::runtime_error("write to temp file failed");
      off += static_cast<size_t>(k);
    }
    close(fd);
    stdin_file = name;
    cmd += " < " + stdin_file;
  }
  cmd += " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  CliResult res;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, k);
  int status = pclose(pipe);
  if (!stdin_file.empty()) std::remove(stdin_file.c_str());
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// ---------------------------------------------------------------------------
// Graph fixtures (mirroring the bundled .graph files)

inline Graph goranger_graph() {
  Graph g(5);
  g.add_edge(2, 4);
  g.add_edge(1, 4);
  g.add_edge(1, 5);
  g.add_edge(3, 5);
  return g;
}

inline Graph d5_graph() {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(1, 4);
  g.add_edge(1, 5);
  g.add_edge(2, 3);
  return g;
}

inline Graph hidora_graph() {
  Graph g(6);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  return g;
}

inline Graph countex_graph() {
  Graph g(7);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  g.add_edge(4, 7);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star_graph(int n) {
  Graph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

// ---------------------------------------------------------------------------
// Path oracles, straight from the definitions

inline bool oracle_chord_free(const Graph& g, const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 2; j < v.size(); ++j)
      if (g.has_edge(v[i], v[j])) return false;
  return true;
}

inline bool oracle_joints_outside(const std::vector<int>& v) {
  int lo = v.front(), hi = v.back();
  for (size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] > lo && v[i] < hi) return false;
  return true;
}

// Every simple path of g with at least one edge, as normalized sequences
// (first vertex below last), sorted lexicographically.
inline std::vector<std::vector<int>> oracle_simple_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  auto extend = [&](auto&& self, uint64_t used) -> void {
    if (seq.size() >= 2 && seq.front() < seq.back()) out.push_back(seq);
    int last = seq.back();
    for (int w = 1; w <= g.n(); ++w) {
      if (!g.has_edge(last, w) || (used & Graph::bit(w))) continue;
      seq.push_back(w);
      self(self, used | Graph::bit(w));
      seq.pop_back();
    }
  };
  for (int s = 1; s <= g.n(); ++s) {
    seq = {s};
    extend(extend, Graph::bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Path> oracle_irreducible_paths(const Graph& g) {
  std::vector<Path> out;
  for (const auto& v : oracle_simple_paths(g))
    if (oracle_chord_free(g, v) && oracle_joints_outside(v)) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// M_P of an irreducible path: the product of Z_p over its joints.
inline Monomial path_monomial(const Ring& ring, const Path& p) {
  Monomial m = Monomial::one(ring);
  for (int w : p.joints()) {
    if (w > p.lower_end() && w < p.upper_end())
      throw std::logic_error("path_monomial needs an irreducible path");
    m = m * Monomial::of(ring, w < p.lower_end() ? var_y(w) : var_x(w));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Height oracle: the height of an ideal equals the height of its initial
// ideal, and for a squarefree monomial ideal that is the size of a minimum
// vertex cover of the generator supports. Brute force over variable subsets.

inline int cover_height(const Ring& ring, const GroebnerBasis& gb) {
  int nv = ring.num_vars();
  if (nv > 20) throw std::invalid_argument("cover_height is a desk-scale oracle");
  std::vector<uint32_t> supports;
  for (const auto& f : gb.elements) {
    uint32_t s = 0;
    const Monomial& lm = f.leading_monomial(gb.order);
    for (int id = 0; id < nv; ++id)
      if (lm.exponent(id) > 0) s |= uint32_t{1} << id;
    if (s == 0) throw std::invalid_argument("unit ideal has no cover height");
    supports.push_back(s);
  }
  int best = nv;
  for (uint32_t mask = 0; mask < (uint32_t{1} << nv); ++mask) {
    if (__builtin_popcount(mask) >= best) continue;
    bool hits_all = true;
    for (uint32_t s : supports)
      if (!(mask & s)) {
        hits_all = false;
        break;
      }
    if (hits_all) best = __builtin_popcount(mask);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Divisibility harness for the decomposition lemmas.
//
// For every irreducible path P and joint p_a on the far side of an end, the
// forward (resp. backward) decomposition of either subpath cut at p_a has all
// piece monomials and all split variables X (resp. Y) dividing M_P. For two
// irreducible paths sharing exactly their lower (resp. upper) end, every
// minimal path below their sum decomposes forward (resp. backward) with all
// piece monomials and split variables dividing lcm(M_P, M_Q) * Y_shared
// (resp. * X_shared). Returns a description of the first violation, if any.

inline int shared_end_value(const Path& a, const Path& b) {
  bool lo = a.lower_end() == b.lower_end() || a.lower_end() == b.upper_end();
  bool hi = a.upper_end() == b.lower_end() || a.upper_end() == b.upper_end();
  if (lo == hi) throw std::logic_error("pieces should share exactly one end");
  return lo ? a.lower_end() : a.upper_end();
}

inline bool pieces_divide(const Ring& ring, const std::vector<Path>& pieces,
                          const Monomial& bound, VarKind split_kind, std::string& why) {
  for (const Path& q : pieces)
    if (!path_monomial(ring, q).divides(bound)) {
      why = "piece monomial does not divide the bound";
      return false;
    }
  for (size_t t = 0; t + 1 < pieces.size(); ++t) {
    int v = shared_end_value(pieces[t], pieces[t + 1]);
    Variable var = split_kind == VarKind::X ? var_x(v) : var_y(v);
    if (!Monomial::of(ring, var).divides(bound)) {
      why = "split variable does not divide the bound";
      return false;
    }
  }
  return true;
}

inline std::string describe_path(const Path& p) {
  std::string s;
  for (size_t i = 0; i < p.vertices().size(); ++i)
    s += (i ? "-" : "") + std::to_string(p.vertices()[i]);
  return s;
}

inline std::optional<std::string> lemma_divisibility_failure(const Graph& g) {
  Ring ring(g.n());
  std::vector<Path> paths = enumerate_irreducible_paths(g);
  std::string why;

  auto fail = [&](const std::string& what) {
    return render_graph_json(g) + " " + what + ": " + why;
  };

  // Joints beyond an end of a single irreducible path.
  for (const Path& p : paths) {
    const std::vector<int>& v = p.vertices();
    Monomial mp = path_monomial(ring, p);
    for (size_t a = 1; a + 1 < v.size(); ++a) {
      std::vector<int> front(v.begin(), v.begin() + a + 1);
      std::vector<int> back(v.begin() + a, v.end());
      for (const auto& part : {front, back}) {
        Path sub{part};
        if (v[a] > p.upper_end()) {
          if (!pieces_divide(ring, decompose_forward(g, sub), mp, VarKind::X, why))
            return fail("forward cut of " + describe_path(p) + " at " + std::to_string(v[a]));
        } else {
          if (!pieces_divide(ring, decompose_backward(g, sub), mp, VarKind::Y, why))
            return fail("backward cut of " + describe_path(p) + " at " + std::to_string(v[a]));
        }
      }
    }
  }

  // Pairs sharing one end, via minimal paths below the sum walk.
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = 0; j < paths.size(); ++j) {
      if (i == j) continue;
      const Path& p = paths[i];
      const Path& q = paths[j];
      std::string label = describe_path(p) + " + " + describe_path(q);
      if (p.lower_end() == q.lower_end() && p.upper_end() < q.upper_end()) {
        Monomial bound =
            Monomial::lcm(path_monomial(ring, p), path_monomial(ring, q)) *
            Monomial::of(ring, var_y(p.lower_end()));
        std::vector<Path> below = minimal_paths_below(g, path_sum(p, q));
        if (below.empty()) {
          why = "no minimal path below the sum";
          return fail(label);
        }
        for (const Path& r : below)
          if (!pieces_divide(ring, decompose_forward(g, r), bound, VarKind::X, why))
            return fail(label + " via " + describe_path(r));
      }
      if (p.upper_end() == q.upper_end() && p.lower_end() < q.lower_end()) {
        Monomial bound =
            Monomial::lcm(path_monomial(ring, p), path_monomial(ring, q)) *
            Monomial::of(ring, var_x(p.upper_end()));
        std::vector<Path> below = minimal_paths_below(g, path_sum(p, q));
        if (below.empty()) {
          why = "no minimal path below the sum";
          return fail(label);
        }
        for (const Path& r : below)
          if (!pieces_divide(ring, decompose_backward(g, r), bound, VarKind::Y, why))
            return fail(label + " via " + describe_path(r));
      }
    }

  return std::nullopt;
}

}  // namespace testsupport
