#include "hopdom/problem.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace hopdom {

namespace {
constexpr std::array<std::pair<ProblemKind, std::string_view>, 6> kNames{{
    {ProblemKind::Domination, "dom"},
    {ProblemKind::TotalDomination, "totaldom"},
    {ProblemKind::RStep, "step"},
    {ProblemKind::RHop, "hop"},
    {ProblemKind::Roman, "roman"},
    {ProblemKind::RHopRoman, "hoproman"},
}};
}  // namespace

Problem Problem::make(ProblemKind kind, int r) {
  Problem p{kind, r};
  if (p.has_distance()) {
    if (r < 1) throw std::invalid_argument("distance parameter r must be >= 1");
  } else {
    p.r = 0;
  }
  return p;
}

std::string_view problem_name(ProblemKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

std::optional<ProblemKind> parse_problem(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

std::string describe(const Problem& p) {
  std::string out(problem_name(p.kind));
  if (p.has_distance()) out += "(r=" + std::to_string(p.r) + ")";
  return out;
}

RomanLabeling::RomanLabeling(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  for (auto l : labels_)
    if (l > 2) throw std::invalid_argument("Roman label must be 0, 1 or 2");
}

int RomanLabeling::weight() const {
  return std::accumulate(labels_.begin(), labels_.end(), 0);
}

VertexSet RomanLabeling::cell(int label) const {
  VertexSet out;
  for (Vertex v = 0; v < size(); ++v)
    if (labels_[v] == label) out.push_back(v);
  return out;
}

Solution Solution::from_set(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Solution out;
  out.value = static_cast<int>(s.size());
  out.witness = std::move(s);
  return out;
}

Solution Solution::from_labeling(RomanLabeling f) {
  Solution out;
  out.value = f.weight();
  out.witness = std::move(f);
  return out;
}

std::optional<int> optimum_value(const SolveOutcome& o) {
  if (const auto* opt = std::get_if<Optimal>(&o)) return opt->solution.value;
  return std::nullopt;
}

std::string_view status_name(const SolveOutcome& o) {
  if (std::holds_alternative<Optimal>(o)) return "optimal";
  if (std::holds_alternative<Infeasible>(o)) return "infeasible";
  return "budget_exceeded";
}

}  // namespace hopdom
