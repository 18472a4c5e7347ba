// zf: command line front end for the zero forcing / vertex cover toolkit.
//
// Subcommands: solve, construct, gen, verify, conjecture.
// Exit codes: 0 ok, 2 usage or parse error, 3 search budget exceeded,
// 4 hypothesis/contract violation, 5 proven-theorem violation or internal
// invariant failure (implementation-bug signal), 1 unexpected error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zf/conjecture.hpp"
#include "zf/constructive.hpp"
#include "zf/enumerate.hpp"
#include "zf/families.hpp"
#include "zf/graph6.hpp"
#include "zf/invariants.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitTheoremViolation = 5;

struct CommonOpts {
  std::string input = "-";
  std::string format = "graph6";
  std::uint64_t budget = zf::SearchBudget{}.limit;
  bool csv = false;

  zf::SearchBudget search_budget() const { return {budget}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_csv = false) {
  cmd->add_option("input", opts.input,
                  "input path, or '-' for standard input");
  cmd->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--budget", opts.budget, "search budget for exact solvers")
      ->check(CLI::PositiveNumber);
  if (with_csv) cmd->add_flag("--csv", opts.csv, "CSV output");
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw zf::Error("cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

struct NamedGraph {
  zf::Graph graph;
  std::string id;
};

// graph6 streams are line-per-graph; blank lines and '#' comments (our own
// sidecar convention) are skipped
std::vector<NamedGraph> load_graphs(const CommonOpts& opts) {
  std::string text = read_input(opts.input);
  std::vector<NamedGraph> graphs;
  if (opts.format == "edgelist") {
    graphs.push_back({zf::parse_edge_list(text), "edgelist"});
    return graphs;
  }
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      graphs.push_back({zf::parse_graph6(line), line});
    } catch (const zf::ParseError& e) {
      throw zf::ParseError(std::string(e.what()) + " (line " +
                               std::to_string(line_no) + ", byte " +
                               std::to_string(e.position) + ")",
                           line_no);
    }
  }
  return graphs;
}

void require_graphs(const std::vector<NamedGraph>& graphs) {
  if (graphs.empty()) throw CLI::ValidationError("input", "empty input");
}

std::string caro_pepper_or_na(const zf::Graph& g) {
  if (!zf::is_connected(g) || g.max_degree() < 1) return "na";
  return zf::to_string(zf::caro_pepper_bound(g));
}

int cmd_solve(const CommonOpts& opts) {
  auto graphs = load_graphs(opts);
  require_graphs(graphs);
  if (opts.csv)
    std::cout << zf::invariant_csv_header() << ",caro_pepper\n";
  for (const auto& [g, id] : graphs) {
    zf::InvariantRow row = zf::compute_invariants(g, id, opts.search_budget());
    std::string cp = caro_pepper_or_na(g);
    if (opts.csv) {
      std::cout << zf::to_csv_row(row) << ',' << cp << '\n';
    } else {
      std::cout << "id=" << row.id << " n=" << row.n
                << " maxdeg=" << row.max_degree << " mindeg=" << row.min_degree
                << " alpha=" << row.alpha << " beta=" << row.beta
                << " z=" << row.z << " clawfree=" << row.claw_free
                << " caro_pepper=" << cp << '\n';
    }
  }
  return kExitOk;
}

int cmd_construct(const CommonOpts& opts, const std::string& mode) {
  auto graphs = load_graphs(opts);
  require_graphs(graphs);
  for (const auto& [g, id] : graphs) {
    zf::ConstructionReport report =
        mode == "clawfree" ? zf::clawfree_forcing_set(g, opts.search_budget())
                           : zf::delta_bound_forcing_set(g, opts.search_budget());
    std::cout << "id=" << id << '\n' << zf::format_report(report, g, mode);
  }
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

void emit_generated(const zf::Graph& g, const std::string& sidecar,
                    const zf::ExpectedInvariants& expected) {
  std::cout << zf::serialize_graph6(g) << '\n' << "# " << sidecar;
  if (expected.z) std::cout << " expected_z=" << *expected.z;
  if (expected.beta) std::cout << " expected_beta=" << *expected.beta;
  std::cout << '\n';
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& ops_text, std::uint64_t seed, int count,
            double p) {
  auto need_params = [&](std::size_t k) {
    if (params.size() != k)
      throw CLI::ValidationError(
          "gen", "family '" + family + "' takes " + std::to_string(k) +
                     " positional parameter(s)");
  };
  std::vector<int> ops = parse_int_list(ops_text);

  if (family == "construction1") {
    need_params(2);
    int n = std::stoi(params[0]), pend = std::stoi(params[1]);
    emit_generated(zf::construction1(n, pend),
                   "family=construction1 n=" + params[0] + " p=" + params[1],
                   zf::construction1_expected(n, pend));
  } else if (family == "construction2") {
    need_params(2);
    int k = std::stoi(params[0]);
    std::vector<int> sizes = parse_int_list(params[1]);
    emit_generated(zf::construction2(k, sizes),
                   "family=construction2 k=" + params[0] + " sizes=" + params[1],
                   zf::construction2_expected(k, sizes));
  } else if (family == "star") {
    need_params(1);
    int k = std::stoi(params[0]);
    emit_generated(zf::star(k), "family=star k=" + params[0],
                   zf::star_expected(k));
  } else if (family == "join") {
    need_params(2);
    int a = std::stoi(params[0]), b = std::stoi(params[1]);
    zf::Graph g = zf::join(zf::complete(a), zf::complete(b));
    emit_generated(g, "family=join a=" + params[0] + " b=" + params[1],
                   {a + b - 1, a + b - 1});
  } else if (family == "tstar") {
    need_params(1);
    int k = std::stoi(params[0]);
    emit_generated(
        zf::t_star(k, ops),
        "family=tstar k=" + params[0] + " ops=" + ops_text,
        zf::t_star_expected(k, static_cast<int>(ops.size())));
  } else if (family == "gstar") {
    need_params(0);
    emit_generated(zf::g_star(ops), "family=gstar ops=" + ops_text,
                   zf::g_star_expected(static_cast<int>(ops.size())));
  } else if (family == "lsvachain") {
    // star base, then explicit v:k applications
    need_params(1);
    int base = std::stoi(params[0]);
    zf::Graph g = zf::star(base);
    std::istringstream in(ops_text);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw CLI::ValidationError("gen", "lsvachain ops must be v:k pairs");
      g = zf::k_lsva(g, std::stoi(item.substr(0, colon)),
                     std::stoi(item.substr(colon + 1)));
    }
    emit_generated(g, "family=lsvachain base=" + params[0] + " ops=" + ops_text,
                   {std::nullopt, std::nullopt});
  } else if (family == "random") {
    need_params(1);
    int n = std::stoi(params[0]);
    std::cout << "# seed=" << seed << " n=" << n << " p=" << p
              << " count=" << count << '\n';
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i)
      std::cout << zf::serialize_graph6(zf::random_graph(n, p, rng)) << '\n';
  } else {
    throw CLI::ValidationError("gen", "unknown family '" + family + "'");
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts) {
  auto graphs = load_graphs(opts);
  require_graphs(graphs);
  std::vector<zf::InvariantRow> rows;
  int skipped = 0;
  for (const auto& [g, id] : graphs) {
    try {
      rows.push_back(zf::compute_invariants(g, id, opts.search_budget()));
    } catch (const zf::BudgetError&) {
      ++skipped;  // row unavailable, excluded from the checks
    }
  }
  std::cout << "graphs=" << graphs.size() << " rows=" << rows.size()
            << " skipped=" << skipped << '\n';
  zf::NamedStatementReport report = zf::check_named_statements(rows);
  std::cout << zf::format_report(report);
  return report.proven_theorem_violated ? kExitTheoremViolation : kExitOk;
}

int cmd_conjecture(const CommonOpts& opts, const std::string& lhs,
                   const std::string& rhs, const std::string& hypothesis) {
  if (!zf::is_invariant_name(lhs) || !zf::is_invariant_name(rhs))
    throw CLI::ValidationError("conjecture", "unknown invariant name");
  zf::Hypothesis hyp = zf::parse_hypothesis(hypothesis);
  auto graphs = load_graphs(opts);
  require_graphs(graphs);
  std::vector<zf::InvariantRow> rows;
  int skipped = 0;
  for (const auto& [g, id] : graphs) {
    try {
      rows.push_back(zf::compute_invariants(g, id, opts.search_budget()));
    } catch (const zf::BudgetError&) {
      ++skipped;
    }
  }
  auto records = zf::fit_linear_upper_bounds(rows, hyp, lhs, rhs);
  std::cout << "hypothesis=" << hypothesis << " lhs=" << lhs << " rhs=" << rhs
            << " rows=" << rows.size() << " skipped=" << skipped << '\n';
  for (std::size_t i = 0; i < records.size(); ++i)
    std::cout << "rank=" << i + 1 << ' ' << zf::format_record(records[i])
              << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing vs vertex cover toolkit"};
  app.require_subcommand(1);

  CommonOpts solve_opts;
  CLI::App* solve = app.add_subcommand(
      "solve", "exact invariants (n, degrees, alpha, beta, Z, Caro-Pepper)");
  add_common(solve, solve_opts, /*with_csv=*/true);

  CommonOpts construct_opts;
  std::string mode;
  CLI::App* construct = app.add_subcommand(
      "construct", "run a constructive zero forcing set procedure");
  add_common(construct, construct_opts);
  construct->add_option("--mode", mode, "construction to run")
      ->required()
      ->check(CLI::IsMember({"clawfree", "delta-bound"}));

  std::string family, ops_text;
  std::vector<std::string> family_params;
  std::uint64_t seed = 0;
  int count = 1;
  double prob = 0.5;
  CLI::App* gen = app.add_subcommand(
      "gen", "generate a family instance as graph6 plus a metadata sidecar");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", family_params, "family parameters");
  gen->add_option("--ops", ops_text, "LSVA application script");
  gen->add_option("--seed", seed, "random seed (random family)");
  gen->add_option("--count", count, "number of graphs (random family)")
      ->check(CLI::PositiveNumber);
  gen->add_option("--p", prob, "edge probability (random family)");

  CommonOpts verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the named statements over a corpus");
  add_common(verify, verify_opts);

  CommonOpts conj_opts;
  std::string lhs = "z", rhs = "beta", hypothesis = "connected";
  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "fit and rank linear upper bounds over a corpus");
  add_common(conjecture, conj_opts);
  conjecture->add_option("--lhs", lhs, "bounded invariant")->required();
  conjecture->add_option("--rhs", rhs, "bounding invariant")->required();
  conjecture->add_option("--hypothesis", hypothesis, "hypothesis class")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opts);
    if (construct->parsed()) return cmd_construct(construct_opts, mode);
    if (gen->parsed())
      return cmd_gen(family, family_params, ops_text, seed, count, prob);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (conjecture->parsed())
      return cmd_conjecture(conj_opts, lhs, rhs, hypothesis);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const zf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zf::BudgetError& e) {
    std::cerr << e.what() << '\n';
    return kExitBudget;
  } catch (const zf::HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const zf::ContractError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const zf::InvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kExitTheoremViolation;
  } catch (const zf::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
