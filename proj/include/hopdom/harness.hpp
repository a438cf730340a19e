#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopdom/gadgets.hpp"
#include "hopdom/generators.hpp"
#include "hopdom/graph.hpp"

namespace hopdom {

enum class CheckKind { Transform, GadgetStep, GadgetHop, GadgetRomanEven, GadgetRomanOdd, Structural };

std::string_view check_name(CheckKind c);
std::optional<CheckKind> parse_check(std::string_view name);

struct OracleCaps {
  int set_oracle_n = 16;    // brute force over vertex subsets
  int roman_oracle_n = 9;   // brute force over labelings
  int gadget_source_n = 8;  // largest source graph fed to a gadget check
};

struct InstanceFamily {
  GraphFamily family = GraphFamily::Gnp;
  int n = 0;
  double p = 0.0;
  int count = 1;           // gnp only; other families yield one graph
  bool connected = false;  // gnp only: resample until connected
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

struct CampaignSuite {
  std::string name;
  std::vector<InstanceFamily> families;
  std::vector<NamedGraph> graphs;
  std::vector<int> r_values;
  std::vector<CheckKind> checks;
};

struct CampaignConfig {
  std::uint64_t master_seed = 0;
  int parallelism = 1;
  OracleCaps caps;
  std::vector<CampaignSuite> suites;
};

enum class RecordVerdict { Match, Mismatch, Skipped };
std::string_view verdict_name(RecordVerdict v);

struct SideResult {
  std::string label;
  std::string status;  // optimal / infeasible / budget_exceeded / n/a
  std::optional<int> value;
  nlohmann::json witness;                // null when absent
  std::optional<bool> witness_verified;  // re-checked with verify()
};

struct EquivalenceRecord {
  std::string instance_id;
  std::string check;
  int r = 0;
  SideResult lhs;
  SideResult rhs;
  RecordVerdict verdict = RecordVerdict::Skipped;
  std::string reason;
  bool must_pass = true;
  bool expect_mismatch = false;  // negative controls
  nlohmann::json details = nlohmann::json::object();

  /// Verdict differs from what the check expects.
  bool unexpected() const {
    if (verdict == RecordVerdict::Skipped) return false;
    return (verdict == RecordVerdict::Mismatch) != expect_mismatch;
  }
};

struct CampaignReport {
  nlohmann::json config;
  std::vector<EquivalenceRecord> records;
  nlohmann::json timing = nlohmann::json::object();  // excluded from determinism
};

/// Three records (hop/dom, step/totaldom, hoproman/roman): brute force on g
/// against solve_exact on D_r(g). Over-cap sides yield skipped records.
std::vector<EquivalenceRecord> check_transform_equivalence(const Graph& g, int r,
                                                           const OracleCaps& caps = {},
                                                           std::string_view instance_id = "");

/// Gadget optimum for `claim_index` of the built gadget against the claimed
/// shift of gamma(g1); also runs forward_certificate and pull_back_normalize.
EquivalenceRecord check_gadget_equality(const Graph& g1, int r, GadgetFamily family,
                                        std::size_t claim_index = 0,
                                        OddWiring wiring = OddWiring::Literal,
                                        const OracleCaps& caps = {},
                                        std::string_view instance_id = "");

/// Count formulas, bipartite / chordal certificates (step variants), one K5
/// per source edge (odd Roman) and the step-gadget distance facts.
EquivalenceRecord structural_audit(const GadgetOutput& out, std::string_view instance_id = "");

CampaignReport run_campaign(const CampaignConfig& cfg);

/// 0 when no must-pass record is unexpected, 2 otherwise.
int exit_status(const CampaignReport& report);

CampaignConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const CampaignConfig& cfg);
nlohmann::json record_to_json(const EquivalenceRecord& rec);
nlohmann::json report_to_json(const CampaignReport& report);

}  // namespace hopdom
