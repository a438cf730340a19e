#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class ProblemKind { Domination, TotalDomination, RStep, RHop, Roman, RHopRoman };

/// A problem kind plus its distance parameter. `r` is meaningful only for
/// the distance-parameterized kinds and is 0 otherwise.
struct Problem {
  ProblemKind kind = ProblemKind::Domination;
  int r = 0;

  static Problem make(ProblemKind kind, int r = 0);

  static Problem domination() { return {ProblemKind::Domination, 0}; }
  static Problem total_domination() { return {ProblemKind::TotalDomination, 0}; }
  static Problem step(int r) { return make(ProblemKind::RStep, r); }
  static Problem hop(int r) { return make(ProblemKind::RHop, r); }
  static Problem roman() { return {ProblemKind::Roman, 0}; }
  static Problem hop_roman(int r) { return make(ProblemKind::RHopRoman, r); }

  bool is_roman() const { return kind == ProblemKind::Roman || kind == ProblemKind::RHopRoman; }
  bool has_distance() const {
    return kind == ProblemKind::RStep || kind == ProblemKind::RHop || kind == ProblemKind::RHopRoman;
  }
  /// Vertices in the set still need a dominator (total / step variants).
  bool is_total() const { return kind == ProblemKind::TotalDomination || kind == ProblemKind::RStep; }

  bool operator==(const Problem&) const = default;
};

/// Short names used by the CLI and serializations: dom, totaldom, step, hop,
/// roman, hoproman.
std::string_view problem_name(ProblemKind kind);
std::optional<ProblemKind> parse_problem(std::string_view name);
std::string describe(const Problem& p);

class RomanLabeling {
 public:
  RomanLabeling() = default;
  explicit RomanLabeling(std::vector<std::uint8_t> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  std::uint8_t operator[](Vertex v) const { return labels_[v]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  int weight() const;
  VertexSet cell(int label) const;

  bool operator==(const RomanLabeling&) const = default;

 private:
  std::vector<std::uint8_t> labels_;
};

struct Solution {
  std::variant<VertexSet, RomanLabeling> witness;
  int value = 0;

  static Solution from_set(VertexSet s);
  static Solution from_labeling(RomanLabeling f);

  bool is_labeling() const { return std::holds_alternative<RomanLabeling>(witness); }
  const VertexSet& set() const { return std::get<VertexSet>(witness); }
  const RomanLabeling& labeling() const { return std::get<RomanLabeling>(witness); }
};

struct Optimal {
  Solution solution;
};
struct Infeasible {};
struct BudgetExceeded {
  int budget = 0;
};

using SolveOutcome = std::variant<Optimal, Infeasible, BudgetExceeded>;

inline bool is_optimal(const SolveOutcome& o) { return std::holds_alternative<Optimal>(o); }
inline bool is_infeasible(const SolveOutcome& o) { return std::holds_alternative<Infeasible>(o); }
inline const Solution& solution_of(const SolveOutcome& o) { return std::get<Optimal>(o).solution; }

/// Optimum value, or nullopt for Infeasible / BudgetExceeded.
std::optional<int> optimum_value(const SolveOutcome& o);

/// "optimal", "infeasible" or "budget_exceeded".
std::string_view status_name(const SolveOutcome& o);

}  // namespace hopdom
