// Command line front end: Groebner bases, irreducible paths, minimal primes,
// heights, hamiltonicity diagnostics, verification, and randomized sweeps.
//
// Exit codes: 0 success, 1 verification failure (or internal inconsistency),
// 2 input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "edgeideal/io.hpp"
#include "edgeideal/paths.hpp"

using namespace edgeideal;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph_any(read_input(path)); }

bool json_format(const std::string& format) { return format == "json"; }

int print_report(const std::string& name, const VerifyReport& report, bool as_json) {
  if (as_json) {
    std::string out = "{\n  \"ok\": " + std::string(report.ok ? "true" : "false") +
                      ",\n  \"messages\": [";
    for (size_t i = 0; i < report.messages.size(); ++i) {
      if (i) out += ",";
      out += "\n    \"" + report.messages[i] + "\"";
    }
    out += report.messages.empty() ? "]\n}" : "\n  ]\n}";
    std::cout << out << "\n";
  } else {
    std::cout << name << ": " << (report.ok ? "PASS" : "FAIL") << "\n";
    for (const auto& m : report.messages) std::cout << "  " << m << "\n";
  }
  return report.ok ? 0 : 1;
}

struct SweepConfig {
  int max_n = 4;
  std::string checks = "gb,decomposition";
  int random_count = 0;
  int random_n = 0;  // 0: max_n + 1
  uint64_t seed = 1;
  int max_oracle_n = 5;
};

bool sweep_gb_check(const Ring& ring, const Graph& g, std::string& message) {
  GroebnerBasis comb = groebner_combinatorial(ring, g);
  if (!(comb == buchberger(edge_generators(ring, g), MonomialOrder::DEGREVLEX))) {
    message = "combinatorial basis differs from the Buchberger result";
    return false;
  }
  if (!is_squarefree_initial(comb)) {
    message = "leading monomial is not squarefree";
    return false;
  }
  return true;
}

int run_sweep(const SweepConfig& cfg, bool as_json) {
  bool check_gb = cfg.checks.find("gb") != std::string::npos;
  bool check_dec = cfg.checks.find("decomposition") != std::string::npos;
  if (!check_gb && !check_dec) throw ParseError(0, "no known checks in: " + cfg.checks);
  int random_n = cfg.random_n > 0 ? cfg.random_n : cfg.max_n + 1;
  if (check_dec && (cfg.max_n > cfg.max_oracle_n || (cfg.random_count > 0 && random_n > cfg.max_oracle_n)))
    throw ParseError(0, "decomposition sweep exceeds --max-oracle-n");

  uint64_t checked = 0;
  std::vector<std::string> failures;
  std::ostringstream lines;

  auto run_check = [&](const std::string& label, const Graph& g) {
    Ring ring(g.n());
    ++checked;
    std::string message;
    if (check_gb && !sweep_gb_check(ring, g, message))
      failures.push_back(label + " " + render_graph_json(g) + ": " + message);
    if (check_dec) {
      VerifyReport r = verify_decomposition(ring, g, cfg.max_oracle_n);
      for (const auto& m : r.messages)
        failures.push_back(label + " " + render_graph_json(g) + ": " + m);
    }
  };

  for (int n = 1; n <= cfg.max_n; ++n) {
    uint64_t before = checked;
    for_each_connected_graph(n, [&](const Graph& g) { run_check("n=" + std::to_string(n), g); });
    lines << "exhaustive n=" << n << " graphs=" << checked - before << "\n";
  }
  if (cfg.random_count > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < cfg.random_count; ++k)
      run_check("random n=" + std::to_string(random_n), random_connected_graph(random_n, rng));
    lines << "random n=" << random_n << " graphs=" << cfg.random_count << "\n";
  }

  if (as_json) {
    std::cout << "{\n  \"graphs_checked\": " << checked
              << ",\n  \"failures\": " << failures.size() << ",\n  \"ok\": "
              << (failures.empty() ? "true" : "false") << "\n}\n";
  } else {
    std::cout << lines.str();
    for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
    std::cout << "sweep " << (failures.empty() ? "PASS" : "FAIL") << " (" << checked
              << " graphs)\n";
  }
  return failures.empty() ? 0 : 1;
}

int dispatch(CLI::App& app, const std::string& format, const std::string& graph_path,
             bool trace, int max_oracle_n, const SweepConfig& sweep_cfg) {
  bool as_json = json_format(format);

  if (app.got_subcommand("gb")) {
    Graph g = load_graph(graph_path);
    Ring ring(g.n());
    GroebnerBasis gb = groebner_combinatorial(ring, g);
    std::cout << (as_json ? render_basis_json(ring, gb) + "\n" : render_basis_text(ring, gb));
    return 0;
  }
  if (app.got_subcommand("irreducible-paths")) {
    Graph g = load_graph(graph_path);
    std::vector<Path> paths = enumerate_irreducible_paths(g);
    if (as_json) {
      std::string out = "[";
      for (size_t i = 0; i < paths.size(); ++i) {
        out += i ? ",\n " : "\n ";
        out += "[";
        const auto& v = paths[i].vertices();
        for (size_t k = 0; k < v.size(); ++k)
          out += (k ? "," : "") + std::to_string(v[k]);
        out += "]";
      }
      std::cout << out << (paths.empty() ? "]\n" : "\n]\n");
    } else {
      for (const auto& p : paths) {
        const auto& v = p.vertices();
        for (size_t k = 0; k < v.size(); ++k)
          std::cout << (k ? "-" : "") << v[k];
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (app.got_subcommand("decompose")) {
    Graph g = load_graph(graph_path);
    Ring ring(g.n());
    DecomposeOptions opts;
    opts.trace = trace;
    Decomposition d = decompose(g, opts);
    std::cout << (as_json ? render_decomposition_json(d) + "\n"
                          : render_decomposition_text(ring, d));
    return 0;
  }
  if (app.got_subcommand("height")) {
    Graph g = load_graph(graph_path);
    int h = ideal_height(g);
    if (as_json)
      std::cout << "{\n  \"height\": " << h << "\n}\n";
    else
      std::cout << h << "\n";
    return 0;
  }
  if (app.got_subcommand("assh")) {
    Graph g = load_graph(graph_path);
    Ring ring(g.n());
    Decomposition d = decompose(g);
    std::vector<int> idx = assh_indices(d);
    if (as_json) {
      Decomposition assh_only;
      assh_only.height = d.height;
      for (int i : idx) assh_only.components.push_back(d.components[i]);
      std::cout << render_decomposition_json(assh_only) + "\n";
    } else {
      for (int i : idx)
        std::cout << "component " << i + 1 << ": "
                  << render_component_text(ring, d.components[i]) << "\n";
      std::cout << "height " << d.height << "\n";
    }
    return 0;
  }
  if (app.got_subcommand("hamilton")) {
    Graph g = load_graph(graph_path);
    HamiltonReport r = hamilton_diagnostics(g);
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    if (as_json) {
      std::string out = "{\n";
      out += "  \"n\": " + std::to_string(r.n) + ",\n";
      out += "  \"height\": " + std::to_string(r.height) + ",\n";
      out += std::string("  \"hamilton_path\": ") + (r.hamilton_path ? "true" : "false") + ",\n";
      out += std::string("  \"hamilton_cycle\": ") + (r.hamilton_cycle ? "true" : "false") +
             ",\n";
      out += std::string("  \"ore\": ") + (r.ore ? "true" : "false") + ",\n";
      out += std::string("  \"tree\": ") + (r.tree ? "true" : "false") + ",\n";
      out += std::string("  \"assh_full_minors\": ") +
             (r.assh_is_full_minor_ideal ? "true" : "false") + ",\n";
      out += "  \"violations\": [";
      for (size_t i = 0; i < r.violations.size(); ++i)
        out += std::string(i ? "," : "") + "\n    \"" + r.violations[i] + "\"";
      out += r.violations.empty() ? "]\n}" : "\n  ]\n}";
      std::cout << out << "\n";
    } else {
      std::cout << "n " << r.n << "\n";
      std::cout << "height " << r.height << "\n";
      std::cout << "hamilton_path " << yes(r.hamilton_path) << "\n";
      std::cout << "hamilton_cycle " << yes(r.hamilton_cycle) << "\n";
      std::cout << "ore " << yes(r.ore) << "\n";
      std::cout << "tree " << yes(r.tree) << "\n";
      std::cout << "assh_full_minors " << yes(r.assh_is_full_minor_ideal) << "\n";
      for (const auto& v : r.violations) std::cout << "violation: " << v << "\n";
    }
    return r.violations.empty() ? 0 : 1;
  }
  if (app.got_subcommand("verify-gb")) {
    Graph g = load_graph(graph_path);
    Ring ring(g.n());
    return print_report("verify-gb", verify_gb(ring, g), as_json);
  }
  if (app.got_subcommand("verify-decomposition")) {
    Graph g = load_graph(graph_path);
    Ring ring(g.n());
    return print_report("verify-decomposition", verify_decomposition(ring, g, max_oracle_n),
                        as_json);
  }
  if (app.got_subcommand("sweep")) return run_sweep(sweep_cfg, as_json);
  throw std::logic_error("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideals: Groebner bases and minimal primes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string graph_path;
  bool trace = false;
  int max_oracle_n = 5;
  SweepConfig sweep_cfg;

  const char* graph_help = "graph file (text or JSON), or - for stdin";
  for (const char* name : {"gb", "irreducible-paths", "height", "assh", "hamilton",
                           "verify-gb"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("graph", graph_path, graph_help)->required();
  }
  CLI::App* dec = app.add_subcommand("decompose");
  dec->add_option("graph", graph_path, graph_help)->required();
  dec->add_flag("--trace", trace, "print the branch tree");
  CLI::App* vdec = app.add_subcommand("verify-decomposition");
  vdec->add_option("graph", graph_path, graph_help)->required();
  vdec->add_option("--max-oracle-n", max_oracle_n, "largest n the oracle accepts");
  CLI::App* sweep = app.add_subcommand("sweep");
  sweep->add_option("--max-n", sweep_cfg.max_n, "exhaustive sweep over connected graphs up to this order");
  sweep->add_option("--checks", sweep_cfg.checks, "comma list from: gb, decomposition");
  sweep->add_option("--random", sweep_cfg.random_count, "extra random connected graphs");
  sweep->add_option("--random-n", sweep_cfg.random_n, "order of the random graphs (default max-n + 1)");
  sweep->add_option("--seed", sweep_cfg.seed, "random sweep seed");
  sweep->add_option("--max-oracle-n", sweep_cfg.max_oracle_n, "largest n the oracle accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(app, format, graph_path, trace, max_oracle_n, sweep_cfg);
  } catch (const ParseError& e) {
    if (e.line > 0)
      std::cerr << "input error: line " << e.line << ": " << e.what() << "\n";
    else
      std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
