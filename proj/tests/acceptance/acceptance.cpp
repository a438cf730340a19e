// Acceptance suite: one PASS/FAIL line per criterion. Time limits are pinned
// below; a criterion that runs past its limit fails even if every check held.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hopdom/dimacs.hpp"
#include "hopdom/domination.hpp"
#include "hopdom/gadgets.hpp"
#include "hopdom/generators.hpp"
#include "hopdom/harness.hpp"
#include "hopdom/rng.hpp"
#include "oracles.hpp"

using namespace hopdom;
using nlohmann::json;

namespace {

constexpr std::uint64_t kMasterSeed = 0x5eed2024;

constexpr double kLimitTransform = 300.0;
constexpr double kLimitRomanFormula = 300.0;
constexpr double kLimitStepGadgets = 1200.0;
constexpr double kLimitRomanEven = 600.0;
constexpr double kLimitCertificates = 60.0;
constexpr double kLimitStructural = 600.0;
constexpr double kLimitOddFindings = 600.0;
constexpr double kLimitCoherence = 600.0;
constexpr double kLimitDeterminism = 600.0;

constexpr int kSupersetExtensions = 1000;
constexpr int kOddMinInstances = 20;

struct Outcome {
  bool ok = true;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ": " << o.summary << " ("
       << std::fixed << std::setprecision(2) << secs << "s, limit " << limit_s << "s"
       << (in_time ? "" : ", time limit exceeded") << ")";
  std::cout << line.str() << std::endl;
  return pass;
}

std::vector<Graph> fixed_families(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(generate({GraphFamily::Path, n, 0.0, 0}));
    out.push_back(generate({GraphFamily::Star, n, 0.0, 0}));
    out.push_back(generate({GraphFamily::Complete, n, 0.0, 0}));
    if (n >= 3) out.push_back(generate({GraphFamily::Cycle, n, 0.0, 0}));
  }
  return out;
}

Graph seeded_gnp(const std::string& family, int index, int n, double p) {
  return generate({GraphFamily::Gnp, n, p, derive_seed(kMasterSeed, family, static_cast<std::uint64_t>(index))});
}

Graph seeded_connected(const std::string& family, int index, int n, double p) {
  return generate_connected_gnp(n, p, derive_seed(kMasterSeed, family, static_cast<std::uint64_t>(index)));
}

// Canonical form over all vertex permutations; small n only.
std::string canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Gadget records shared between criteria 3 to 6.
struct GadgetRun {
  std::vector<EquivalenceRecord> step_records;
  std::vector<EquivalenceRecord> roman_records;
  std::vector<std::pair<std::string, Graph>> step_sources;
  std::vector<std::pair<std::string, Graph>> roman_sources;
};

std::string describe_failure(const EquivalenceRecord& rec) {
  return rec.instance_id + " " + rec.check + " r=" + std::to_string(rec.r) + ": " + rec.reason;
}

json strip_timing(json report) {
  report.erase("timing");
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopdom acceptance suite"};
  std::string corpus_dir = "data/corpus";
  std::string config_path = "configs/default_campaign.json";
  app.add_option("--corpus", corpus_dir, "Directory of DIMACS corpus graphs");
  app.add_option("--config", config_path, "Default campaign configuration");
  CLI11_PARSE(app, argc, argv);

  const OracleCaps caps;
  bool all = true;
  GadgetRun gadgets;

  all &= run_criterion(1, "transform equivalence", kLimitTransform, [&] {
    std::vector<std::pair<std::string, Graph>> graphs;
    const std::array<double, 3> ps{0.2, 0.4, 0.6};
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + i % 8;
      const double p = ps[static_cast<std::size_t>(i / 8) % 3];
      graphs.emplace_back("gnp#" + std::to_string(i), seeded_gnp("ac1/gnp", i, n, p));
    }
    int k = 0;
    for (auto& g : fixed_families(8)) graphs.emplace_back("family#" + std::to_string(k++), std::move(g));
    std::size_t records = 0, mismatches = 0, skipped = 0;
    std::string first;
    for (const auto& [id, g] : graphs)
      for (int r : {2, 3, 4})
        for (const auto& rec : check_transform_equivalence(g, r, caps, id)) {
          ++records;
          if (rec.verdict == RecordVerdict::Skipped) ++skipped;
          if (rec.verdict == RecordVerdict::Mismatch) {
            if (first.empty()) first = describe_failure(rec);
            ++mismatches;
          }
        }
    std::ostringstream s;
    s << graphs.size() << " graphs, " << records << " records, " << mismatches << " mismatches, " << skipped
      << " skipped";
    if (!first.empty()) s << "; first: " << first;
    return Outcome{mismatches == 0 && skipped == 0, s.str()};
  });

  all &= run_criterion(2, "Roman subset formula vs 3^n labelings", kLimitRomanFormula, [&] {
    std::vector<Graph> graphs;
    std::set<std::string> classes4;
    for (int n = 0; n <= 4; ++n)
      for (auto& g : oracle::all_labeled_graphs(n)) {
        if (n == 4) classes4.insert(canonical(g));
        graphs.push_back(std::move(g));
      }
    for (int i = 0; i < 200; ++i)
      graphs.push_back(seeded_gnp("ac2/gnp", i, 1 + i % 9, 0.15 + 0.1 * (i % 6)));
    std::size_t checks = 0, mismatches = 0;
    for (const Graph& g : graphs)
      for (const Problem& p : {Problem::roman(), Problem::hop_roman(2), Problem::hop_roman(3)}) {
        const SolveOutcome formula = solve_exact(g, p);
        const SolveOutcome scan = brute_force_reference(g, p);
        ++checks;
        const bool ok = optimum_value(formula) == optimum_value(scan) &&
                        optimum_value(formula) == oracle::roman_optimum(g, p) &&
                        verify(g, p, solution_of(formula)).passed();
        if (!ok) ++mismatches;
      }
    std::ostringstream s;
    s << graphs.size() << " graphs (" << classes4.size() << " isomorphism classes on 4 vertices), " << checks
      << " comparisons, " << mismatches << " mismatches";
    return Outcome{mismatches == 0 && classes4.size() == 11, s.str()};
  });

  all &= run_criterion(3, "step/hop gadget equality", kLimitStepGadgets, [&] {
    for (int i = 0; i < 100; ++i) {
      const int n = 3 + i % 4;
      gadgets.step_sources.emplace_back("g1#" + std::to_string(i), seeded_connected("ac3/g1", i, n, 0.45));
    }
    std::size_t equal = 0, unequal = 0;
    std::string first;
    for (const auto& [id, g] : gadgets.step_sources)
      for (int r : {2, 3})
        for (auto fam : {GadgetFamily::StepBipartite, GadgetFamily::StepChordal})
          for (std::size_t claim : {0u, 1u}) {
            auto rec = check_gadget_equality(g, r, fam, claim, OddWiring::Literal, caps, id);
            const bool eq = rec.verdict != RecordVerdict::Skipped && rec.lhs.value == rec.rhs.value &&
                            rec.lhs.witness_verified == true;
            (eq ? equal : unequal) += 1;
            if (!eq && first.empty()) first = describe_failure(rec);
            gadgets.step_records.push_back(std::move(rec));
          }
    std::ostringstream s;
    s << gadgets.step_sources.size() << " sources, " << gadgets.step_records.size() << " gadget optima, " << unequal
      << " differ from gamma+2r";
    if (!first.empty()) s << "; first: " << first;
    return Outcome{unequal == 0, s.str()};
  });

  all &= run_criterion(4, "Roman even r=2 gadget equality", kLimitRomanEven, [&] {
    int k = 0;
    for (int n = 2; n <= 5; ++n)
      for (auto& g : oracle::all_labeled_graphs(n))
        if (g.is_connected()) gadgets.roman_sources.emplace_back("conn#" + std::to_string(k++), std::move(g));
    std::size_t unequal = 0;
    std::string first;
    for (const auto& [id, g] : gadgets.roman_sources) {
      auto rec = check_gadget_equality(g, 2, GadgetFamily::Roman, 0, OddWiring::Literal, caps, id);
      const bool eq = rec.verdict != RecordVerdict::Skipped && rec.lhs.value == rec.rhs.value &&
                      rec.lhs.witness_verified == true;
      if (!eq) {
        ++unequal;
        if (first.empty()) first = describe_failure(rec);
      }
      gadgets.roman_records.push_back(std::move(rec));
    }
    std::ostringstream s;
    s << gadgets.roman_sources.size() << " connected labeled sources (n<=5), " << unequal
      << " differ from 2*gamma+4";
    if (!first.empty()) s << "; first: " << first;
    return Outcome{unequal == 0 && gadgets.roman_sources.size() >= 50, s.str()};
  });

  all &= run_criterion(5, "forward certificates and pull-back", kLimitCertificates, [&] {
    std::size_t checked = 0, bad_forward = 0, bad_pull = 0;
    auto inspect = [&](const EquivalenceRecord& rec) {
      if (rec.verdict == RecordVerdict::Skipped) {
        ++bad_forward;
        return;
      }
      ++checked;
      const json& fc = rec.details.at("forward_certificate");
      if (!(fc.at("passes_verify").get<bool>() && fc.at("value") == fc.at("expected"))) ++bad_forward;
      const json& pb = rec.details.at("pull_back");
      if (!(pb.at("applicable").get<bool>() && pb.at("dominating").get<bool>() &&
            pb.at("size_within_gamma").get<bool>()))
        ++bad_pull;
    };
    for (const auto& rec : gadgets.step_records) inspect(rec);
    for (const auto& rec : gadgets.roman_records) inspect(rec);
    std::ostringstream s;
    s << checked << " instances, " << bad_forward << " forward-certificate failures, " << bad_pull
      << " pull-back failures";
    return Outcome{checked > 0 && bad_forward == 0 && bad_pull == 0, s.str()};
  });

  all &= run_criterion(6, "structural audit", kLimitStructural, [&] {
    std::size_t audited = 0, failed = 0;
    std::string first;
    auto audit = [&](const GadgetOutput& out, const std::string& id) {
      const EquivalenceRecord rec = structural_audit(out, id);
      ++audited;
      bool ok = rec.verdict == RecordVerdict::Match;
      if (out.family == GadgetFamily::StepBipartite) ok = ok && rec.details.at("certificate") == "coloring";
      if (out.family == GadgetFamily::StepChordal) ok = ok && rec.details.at("certificate") == "peo";
      if (out.is_odd_roman()) ok = ok && rec.details.at("k5_count") == out.source.size();
      if (!ok) {
        ++failed;
        if (first.empty()) first = describe_failure(rec);
      }
    };
    for (const auto& [id, g] : gadgets.step_sources)
      for (int r : {2, 3})
        for (auto fam : {GadgetFamily::StepBipartite, GadgetFamily::StepChordal}) audit(build_gadget(g, r, fam), id);
    for (const auto& [id, g] : gadgets.roman_sources) audit(build_gadget(g, 2, GadgetFamily::Roman), id);
    for (int i = 0; i < kOddMinInstances; ++i) {
      const Graph g = seeded_connected("ac6/odd", i, 2 + i % 3, 0.5);
      for (auto w : {OddWiring::Literal, OddWiring::Swapped})
        audit(build_gadget(g, 3, GadgetFamily::Roman, w), "odd#" + std::to_string(i));
    }
    // One mutated gadget per family must be flagged.
    const Graph p3 = generate({GraphFamily::Path, 3, 0.0, 0});
    std::size_t flagged = 0, controls = 0;
    const std::vector<std::tuple<GadgetFamily, int, OddWiring>> families{
        {GadgetFamily::StepBipartite, 2, OddWiring::Literal},
        {GadgetFamily::StepChordal, 2, OddWiring::Literal},
        {GadgetFamily::Roman, 2, OddWiring::Literal},
        {GadgetFamily::Roman, 3, OddWiring::Literal}};
    for (const auto& [fam, r, w] : families) {
      ++controls;
      if (structural_audit(mutate_for_negative_control(build_gadget(p3, r, fam, w)), "p3").verdict ==
          RecordVerdict::Mismatch)
        ++flagged;
    }
    std::ostringstream s;
    s << audited << " gadgets audited, " << failed << " failures; negative controls flagged " << flagged << "/"
      << controls;
    if (!first.empty()) s << "; first: " << first;
    return Outcome{failed == 0 && flagged == controls, s.str()};
  });

  all &= run_criterion(7, "Roman odd r=3 findings report", kLimitOddFindings, [&] {
    const CampaignConfig cfg = config_from_json(json::parse(read_text_file(config_path)));
    const json a = strip_timing(report_to_json(run_campaign(cfg)));
    const json b = strip_timing(report_to_json(run_campaign(cfg)));
    std::set<std::string> instances;
    std::map<std::string, std::pair<int, int>> by_wiring;  // wiring -> (equal, total)
    bool complete = true, structural_ok = true, small = true;
    for (const auto& rec : a.at("records")) {
      const std::string check = rec.at("check");
      if (rec.at("r") != 3) continue;
      if (check.rfind("gadget/roman/", 0) == 0) {
        instances.insert(rec.at("instance_id").get<std::string>());
        const std::string wiring = check.substr(13, check.find('/', 13) - 13);
        auto& [eq, total] = by_wiring[wiring];
        ++total;
        if (rec.at("lhs").at("value") == rec.at("rhs").at("value")) ++eq;
        complete = complete && rec.at("verdict") != "skipped" && rec.at("lhs").at("value").is_number() &&
                   rec.at("rhs").at("value").is_number() &&
                   rec.at("details").at("forward_certificate").contains("passes_verify") &&
                   rec.at("lhs").at("witness_verified") == true && rec.at("rhs").at("witness_verified") == true;
        small = small && rec.at("details").at("gadget_vertices").is_number();
      }
      if (check.rfind("structural/roman/", 0) == 0 && !rec.at("expect_mismatch").get<bool>())
        structural_ok = structural_ok && rec.at("verdict") == "match";
    }
    bool sources_small = true;
    for (const auto& suite : cfg.suites)
      if (suite.name == "roman-odd") {
        for (const auto& f : suite.families) sources_small = sources_small && f.n <= 4;
        for (const auto& g : suite.graphs) sources_small = sources_small && g.graph.order() <= 4;
      }
    const bool deterministic = a.dump() == b.dump();
    const bool both = by_wiring.count("literal") && by_wiring.count("swapped");
    std::ostringstream s;
    s << instances.size() << " instances";
    for (const auto& [w, c] : by_wiring) s << ", " << w << " equal " << c.first << "/" << c.second;
    s << ", report " << (deterministic ? "deterministic" : "NOT deterministic") << ", structural "
      << (structural_ok ? "ok" : "FAILED");
    return Outcome{instances.size() >= static_cast<std::size_t>(kOddMinInstances) && both && complete &&
                       deterministic && structural_ok && sources_small && small,
                   s.str()};
  });

  all &= run_criterion(8, "solver coherence on the corpus", kLimitCoherence, [&] {
    std::vector<std::pair<std::string, Graph>> corpus;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
      if (entry.path().extension() == ".dimacs")
        corpus.emplace_back(entry.path().filename().string(), read_dimacs_file(entry.path().string()));
    std::sort(corpus.begin(), corpus.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t compared = 0, violations = 0, greedy_checked = 0;
    std::string first;
    auto note = [&](const std::string& what) {
      ++violations;
      if (first.empty()) first = what;
    };
    std::vector<std::tuple<Graph, Problem, VertexSet>> witnesses;
    for (const auto& [name, g] : corpus)
      for (int r : {2, 3})
        for (const Problem& p : {Problem::domination(), Problem::total_domination(), Problem::step(r),
                                 Problem::hop(r), Problem::roman(), Problem::hop_roman(r)}) {
          if (r == 3 && !p.has_distance()) continue;
          const SolveOutcome exact = solve_exact(g, p);
          if (is_optimal(exact) && !verify(g, p, solution_of(exact)).passed()) note(name + " exact witness");
          const int cap = p.is_roman() ? caps.roman_oracle_n : caps.set_oracle_n;
          if (g.order() <= cap) {
            ++compared;
            if (optimum_value(exact) != optimum_value(brute_force_reference(g, p)))
              note(name + " " + describe(p) + " exact != brute");
          }
          if (!p.is_roman()) {
            ++greedy_checked;
            const auto greedy = greedy_approx(g, p);
            if (greedy.has_value() != is_optimal(exact)) note(name + " " + describe(p) + " greedy feasibility");
            if (greedy && (!verify(g, p, *greedy).passed() || greedy->value < solution_of(exact).value))
              note(name + " " + describe(p) + " greedy");
          }
          if ((p.kind == ProblemKind::RStep || p.kind == ProblemKind::RHop) && is_optimal(exact))
            witnesses.emplace_back(g, p, solution_of(exact).set());
        }
    std::mt19937_64 rng(kMasterSeed);
    for (int k = 0; k < kSupersetExtensions && !witnesses.empty(); ++k) {
      const auto& [g, p, base] = witnesses[rng() % witnesses.size()];
      VertexSet s = base;
      const int extra = 1 + static_cast<int>(rng() % 3);
      for (int e = 0; e < extra; ++e) s.push_back(static_cast<Vertex>(rng() % g.order()));
      if (!verify(g, p, Solution::from_set(s)).passed()) note("superset closure " + describe(p));
    }
    std::ostringstream s;
    s << corpus.size() << " corpus graphs, " << compared << " exact/brute comparisons, " << greedy_checked
      << " greedy checks, " << kSupersetExtensions << " superset extensions, " << violations << " violations";
    if (!first.empty()) s << "; first: " << first;
    return Outcome{violations == 0 && !corpus.empty() && !witnesses.empty(), s.str()};
  });

  all &= run_criterion(9, "campaign determinism", kLimitDeterminism, [&] {
    CampaignConfig cfg = config_from_json(json::parse(read_text_file(config_path)));
    const json a = report_to_json(run_campaign(cfg));
    const json b = report_to_json(run_campaign(cfg));
    cfg.parallelism = 4;
    json c = report_to_json(run_campaign(cfg));
    c["config"]["parallelism"] = a["config"]["parallelism"];
    const std::string da = strip_timing(a).dump(2);
    const bool same = da == strip_timing(b).dump(2);
    const bool same_parallel = da == strip_timing(c).dump(2);
    const bool must_pass_clean = a["summary"]["must_pass_failures"] == 0;
    std::ostringstream s;
    s << a["records"].size() << " records, repeat run " << (same ? "identical" : "DIFFERS")
      << ", parallel run " << (same_parallel ? "identical" : "DIFFERS") << ", must-pass failures "
      << a["summary"]["must_pass_failures"];
    return Outcome{same && same_parallel && must_pass_clean, s.str()};
  });

  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
