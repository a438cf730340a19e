#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hopdom/dimacs.hpp"
#include "hopdom/distance.hpp"
#include "hopdom/domination.hpp"
#include "hopdom/gadgets.hpp"
#include "hopdom/generators.hpp"
#include "hopdom/harness.hpp"
#include "hopdom/rng.hpp"
#include "hopdom/serialize.hpp"

namespace hopdom::cli {

namespace {

using nlohmann::json;

// Carries an exit code through the command handlers.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void fail_input(const std::string& message) { throw Exit{1, message}; }

Graph load_graph(const std::string& path) {
  try {
    return read_dimacs_file(path);
  } catch (const DimacsError& e) {
    fail_input("--input " + path + ": " + e.what());
  } catch (const std::exception& e) {
    fail_input("--input " + path + ": " + e.what());
  }
}

void save(const std::string& flag, const std::string& path, std::string_view text) {
  try {
    write_text_file(path, text);
  } catch (const std::exception& e) {
    fail_input(flag + " " + path + ": " + e.what());
  }
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  const char* env = std::getenv("HOPDOM_SEED");
  if (env == nullptr || *env == '\0') return flag_seed;
  std::uint64_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail_input("HOPDOM_SEED: not an unsigned integer: " + std::string(text));
  return value;
}

std::string join_ids(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

std::string witness_text(const Solution& s) {
  if (!s.is_labeling()) return join_ids(s.set());
  std::string out;
  for (auto l : s.labeling().labels()) out += (out.empty() ? "" : " ") + std::to_string(static_cast<int>(l));
  return out;
}

VertexSet parse_domset(const std::string& text, int n) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int id = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      fail_input("--domset: not a vertex id: '" + item + "'");
    if (id < 1 || id > n) fail_input("--domset: vertex " + item + " outside 1.." + std::to_string(n));
    out.push_back(id - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Problem make_problem(const std::string& name, int r) {
  const auto kind = parse_problem(name);
  if (!kind) fail_input("--problem: unknown problem " + name);
  try {
    return Problem::make(*kind, r);
  } catch (const std::exception& e) {
    fail_input(std::string("--r: ") + e.what());
  }
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  int r = 0;
  std::string input;
  std::string method = "exact";
  std::optional<int> budget;
  std::string json_path;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Problem p = make_problem(a.problem, a.r);
  const Graph g = load_graph(a.input);
  out << "# solve --problem " << problem_name(p.kind);
  if (p.has_distance()) out << " --r " << p.r;
  out << " --input " << a.input << " --method " << a.method;
  if (a.budget) out << " --budget " << *a.budget;
  out << "\n";

  json j;
  if (a.method == "greedy") {
    if (p.is_roman()) fail_input("--method greedy: not available for Roman problems");
    const auto approx = greedy_approx(g, p);
    if (!approx) {
      out << "status infeasible\n";
      j = solution_to_json(p, SolveOutcome{Infeasible{}});
    } else {
      out << "status feasible\nvalue " << approx->value << "\nwitness " << witness_text(*approx) << "\n";
      j = solution_to_json(p, *approx, "feasible");
    }
  } else {
    SolveOutcome o;
    try {
      o = a.method == "brute" ? brute_force_reference(g, p) : solve_exact(g, p, a.budget);
    } catch (const CapExceeded& e) {
      fail_input(std::string("--method brute: ") + e.what());
    }
    if (a.method == "brute" && a.budget && is_optimal(o) && solution_of(o).value > *a.budget)
      o = BudgetExceeded{*a.budget};
    out << "status " << status_name(o) << "\n";
    if (is_optimal(o))
      out << "value " << solution_of(o).value << "\nwitness " << witness_text(solution_of(o)) << "\n";
    j = solution_to_json(p, o);
  }
  if (!a.json_path.empty()) save("--json", a.json_path, j.dump(2) + "\n");
  return 0;
}

// ---- transform -------------------------------------------------------------

int cmd_transform(int r, const std::string& input, const std::string& output, std::ostream& out) {
  if (r < 1) fail_input("--r: must be >= 1");
  const Graph g = load_graph(input);
  const Graph dr = exact_distance_graph(g, r);
  out << "# transform --r " << r << " --input " << input;
  if (!output.empty()) out << " --output " << output;
  out << "\n";
  if (output.empty()) {
    out << write_dimacs(dr);
  } else {
    save("--output", output, write_dimacs(dr));
    out << "vertices " << dr.order() << "\nedges " << dr.size() << "\n";
  }
  return 0;
}

// ---- gadget / certify ------------------------------------------------------

GadgetFamily family_arg(const std::string& flag, const std::string& name) {
  auto f = parse_gadget_family(name);
  if (!f) fail_input(flag + ": unknown gadget family " + name);
  return *f;
}

OddWiring wiring_arg(const std::string& name) {
  auto w = parse_wiring(name);
  if (!w) fail_input("--odd-wiring: unknown wiring " + name);
  return *w;
}

GadgetOutput build(const Graph& g1, int r, GadgetFamily family, OddWiring wiring) {
  try {
    return build_gadget(g1, r, family, wiring);
  } catch (const GadgetError& e) {
    fail_input(std::string("--input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail_input(std::string("--r: ") + e.what());
  }
}

std::string claim_text(const Claim& c) {
  return describe(c.problem) + " optimum = " + std::to_string(c.scale) + "k+" + std::to_string(c.offset);
}

int cmd_gadget(const std::string& family, int r, const std::string& input, const std::string& output,
               const std::string& roles, const std::string& wiring, std::ostream& out) {
  const GadgetFamily f = family_arg("--family", family);
  const OddWiring w = wiring_arg(wiring);
  const Graph g1 = load_graph(input);
  const GadgetOutput g = build(g1, r, f, w);
  out << "# gadget --family " << gadget_family_name(f) << " --r " << r << " --input " << input << " --output "
      << output << " --roles " << roles << " --odd-wiring " << wiring_name(w) << "\n";
  save("--output", output, write_dimacs(g.graph));
  save("--roles", roles, write_roles(g));
  out << "vertices " << g.graph.order() << "\nedges " << g.graph.size() << "\n";
  for (const Claim& c : g.claims) out << "claim " << claim_text(c) << "\n";
  return 0;
}

int cmd_certify(const std::string& family, int r, const std::string& input, const std::string& domset,
                const std::string& wiring, std::ostream& out) {
  const GadgetFamily f = family_arg("--gadget-family", family);
  const OddWiring w = wiring_arg(wiring);
  const Graph g1 = load_graph(input);
  const VertexSet d = parse_domset(domset, g1.order());
  const GadgetOutput g = build(g1, r, f, w);
  out << "# certify --gadget-family " << gadget_family_name(f) << " --r " << r << " --input " << input
      << " --domset " << domset << " --odd-wiring " << wiring_name(w) << "\n";
  if (!verify(g1, Problem::domination(), Solution::from_set(d)).passed()) {
    out << "FAIL domset does not dominate the input graph\n";
    return 2;
  }
  const Solution cert = forward_certificate(g, d);
  const int k = static_cast<int>(d.size());
  const bool roman = f == GadgetFamily::Roman;
  const std::string measure = roman ? "weight" : "size";
  const std::string formula = roman ? "2k+2r" : "k+2r";
  bool ok = true;
  std::vector<std::string> failures;
  for (const Claim& c : g.claims) {
    const Verdict v = verify(g.graph, c.problem, cert);
    if (!v.passed()) {
      ok = false;
      failures.push_back(describe(c.problem) + " violated at vertex " + std::to_string(*v.violation + 1));
    }
    if (cert.value != c.bound(k)) {
      ok = false;
      failures.push_back(describe(c.problem) + " value " + std::to_string(cert.value) + " != " +
                         std::to_string(c.bound(k)));
    }
  }
  if (ok) {
    out << "PASS " << measure << " " << cert.value << " (= " << formula << ")\n";
  } else {
    out << "FAIL " << measure << " " << cert.value << "\n";
    for (const auto& m : failures) out << "  " << m << "\n";
  }
  out << "certificate " << witness_text(cert) << "\n";
  return ok ? 0 : 2;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& config_path, const std::string& report_path, std::optional<int> parallelism,
               std::optional<std::uint64_t> seed, std::ostream& out) {
  CampaignConfig cfg;
  try {
    cfg = config_from_json(json::parse(read_text_file(config_path)));
  } catch (const std::exception& e) {
    fail_input("--config " + config_path + ": " + e.what());
  }
  if (parallelism) cfg.parallelism = *parallelism;
  if (seed) cfg.master_seed = *seed;
  cfg.master_seed = effective_seed(cfg.master_seed);
  out << "# verify --config " << config_path << " --report " << report_path << " --seed " << cfg.master_seed
      << " --parallelism " << cfg.parallelism << "\n";
  const CampaignReport report = run_campaign(cfg);
  const json j = report_to_json(report);
  save("--report", report_path, j.dump(2) + "\n");
  const json& s = j["summary"];
  out << "records " << s["records"] << " match " << s["match"] << " mismatch " << s["mismatch"] << " skipped "
      << s["skipped"] << "\n";
  out << "must-pass failures " << s["must_pass_failures"] << ", findings " << s["findings"] << "\n";
  for (const auto& d : j["discrepancies"])
    out << (d["must_pass"].get<bool>() ? "MISMATCH " : "finding ") << d["instance_id"].get<std::string>() << " "
        << d["check"].get<std::string>() << " r=" << d["r"] << ": " << d["reason"].get<std::string>() << "\n";
  return exit_status(report);
}

// ---- gen -------------------------------------------------------------------

int cmd_gen(const std::string& family, int n, double p, std::uint64_t seed, const std::string& output,
            std::ostream& out) {
  const auto f = parse_family(family);
  if (!f) fail_input("--family: unknown family " + family);
  const std::uint64_t s = effective_seed(seed);
  Graph g;
  try {
    g = generate({*f, n, p, s});
  } catch (const std::invalid_argument& e) {
    fail_input(std::string("--n/--p: ") + e.what());
  }
  out << "# gen --family " << family_name(*f) << " --n " << n << " --p " << p << " --seed " << s << " --output "
      << output << "\n";
  save("--output", output, write_dimacs(g));
  out << "vertices " << g.order() << "\nedges " << g.size() << "\n";
  return 0;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const std::string& suite, const std::string& report_path, std::uint64_t seed, std::ostream& out) {
  if (suite != "default") fail_input("--suite: unknown suite " + suite);
  const std::uint64_t s = effective_seed(seed);
  out << "# bench --suite " << suite << " --report " << report_path << " --seed " << s << "\n";
  const std::vector<Problem> problems{Problem::domination(), Problem::total_domination(), Problem::step(2),
                                      Problem::hop(2),       Problem::roman(),            Problem::hop_roman(2)};
  json entries = json::array();
  using Clock = std::chrono::steady_clock;
  for (int n : {8, 10, 12, 14}) {
    for (int idx = 0; idx < 3; ++idx) {
      const std::string key = "bench/gnp-n" + std::to_string(n) + "-p0.3-connected";
      const Graph g = generate_connected_gnp(n, 0.3, derive_seed(s, key, static_cast<std::uint64_t>(idx)));
      const std::string id = key + "#" + std::to_string(idx);
      for (const Problem& p : problems) {
        for (std::string method : {"exact", "greedy"}) {
          if (method == "greedy" && p.is_roman()) continue;
          const auto t0 = Clock::now();
          std::optional<int> value;
          std::string status;
          if (method == "exact") {
            const SolveOutcome o = solve_exact(g, p);
            value = optimum_value(o);
            status = std::string(status_name(o));
          } else {
            const auto a = greedy_approx(g, p);
            status = a ? "feasible" : "infeasible";
            if (a) value = a->value;
          }
          const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
          entries.push_back({{"instance_id", id},
                             {"n", n},
                             {"problem", std::string(problem_name(p.kind))},
                             {"r", p.has_distance() ? json(p.r) : json(nullptr)},
                             {"method", method},
                             {"status", status},
                             {"value", value ? json(*value) : json(nullptr)},
                             {"ms", ms}});
          out << id << " " << describe(p) << " " << method << " " << status << " "
              << (value ? std::to_string(*value) : "-") << " " << ms << " ms\n";
        }
      }
    }
  }
  const json report = {{"schema", "hopdom.bench-report/1"}, {"suite", suite}, {"seed", s}, {"entries", entries}};
  save("--report", report_path, report.dump(2) + "\n");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hopdom: exact-distance domination solvers, transforms and gadgets", "hopdom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hopdom 0.1.0");

  SolveArgs solve;
  int budget = 0;
  auto* s = app.add_subcommand("solve", "Solve a domination problem on a DIMACS graph");
  s->add_option("--problem", solve.problem, "dom|totaldom|step|hop|roman|hoproman")->required();
  s->add_option("--r", solve.r, "Distance for step/hop/hoproman");
  s->add_option("--input", solve.input, "Input DIMACS file")->required();
  s->add_option("--method", solve.method, "exact|greedy|brute")
      ->check(CLI::IsMember({"exact", "greedy", "brute"}));
  auto* budget_opt = s->add_option("--budget", budget, "Give up above this value")->check(CLI::NonNegativeNumber);
  s->add_option("--json", solve.json_path, "Write the solution as JSON");

  int r = 0;
  std::string input, output, roles, family, wiring = "literal", domset, config, report, suite = "default";
  double p = 0.0;
  int n = 0, parallelism = 1;
  std::uint64_t seed = 0;

  auto* t = app.add_subcommand("transform", "Write the exact-distance graph D_r(G)");
  t->add_option("--r", r)->required();
  t->add_option("--input", input)->required();
  t->add_option("--output", output, "Output DIMACS file (stdout if absent)");

  auto* g = app.add_subcommand("gadget", "Build a hardness gadget");
  g->add_option("--family", family, "step-bipartite|step-chordal|roman")->required();
  g->add_option("--r", r)->required();
  g->add_option("--input", input)->required();
  g->add_option("--output", output)->required();
  g->add_option("--roles", roles)->required();
  g->add_option("--odd-wiring", wiring, "literal|swapped (odd Roman only)");

  auto* c = app.add_subcommand("certify", "Check the forward certificate of a gadget");
  c->add_option("--gadget-family", family)->required();
  c->add_option("--r", r)->required();
  c->add_option("--input", input)->required();
  c->add_option("--domset", domset, "Comma separated 1-based vertex ids")->required();
  c->add_option("--odd-wiring", wiring);

  auto* v = app.add_subcommand("verify", "Run a verification campaign");
  v->add_option("--config", config)->required();
  v->add_option("--report", report)->required();
  auto* par_opt = v->add_option("--parallelism", parallelism)->check(CLI::PositiveNumber);
  auto* vseed_opt = v->add_option("--seed", seed, "Override the master seed");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", family, "path|cycle|complete|star|gnp")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed)->required();
  gen->add_option("--output", output)->required();

  auto* b = app.add_subcommand("bench", "Time the solvers on a fixed suite");
  b->add_option("--suite", suite)->required();
  b->add_option("--report", report)->required();
  b->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "hopdom 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hopdom: " << e.what() << "\n";
    return 1;
  }

  try {
    if (s->parsed()) {
      if (*budget_opt) solve.budget = budget;
      return cmd_solve(solve, out);
    }
    if (t->parsed()) return cmd_transform(r, input, output, out);
    if (g->parsed()) return cmd_gadget(family, r, input, output, roles, wiring, out);
    if (c->parsed()) return cmd_certify(family, r, input, domset, wiring, out);
    if (v->parsed())
      return cmd_verify(config, report, *par_opt ? std::optional<int>(parallelism) : std::nullopt,
                        *vseed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt, out);
    if (gen->parsed()) return cmd_gen(family, n, p, seed, output, out);
    if (b->parsed()) return cmd_bench(suite, report, seed, out);
  } catch (const Exit& e) {
    err << "hopdom: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "hopdom: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace hopdom::cli
