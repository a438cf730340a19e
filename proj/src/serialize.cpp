#include "hopdom/serialize.hpp"

#include <stdexcept>

namespace hopdom {

using nlohmann::json;

json solution_to_json(const Problem& p, const Solution& s, std::string_view status) {
  json j;
  j["problem"] = std::string(problem_name(p.kind));
  j["r"] = p.has_distance() ? json(p.r) : json(nullptr);
  j["status"] = std::string(status);
  j["value"] = s.value;
  if (s.is_labeling()) {
    json labels = json::array();
    for (auto l : s.labeling().labels()) labels.push_back(static_cast<int>(l));
    j["witness"] = labels;
  } else {
    json ids = json::array();
    for (Vertex v : s.set()) ids.push_back(v + 1);
    j["witness"] = ids;
  }
  return j;
}

json solution_to_json(const Problem& p, const SolveOutcome& outcome) {
  if (const auto* opt = std::get_if<Optimal>(&outcome))
    return solution_to_json(p, opt->solution, "optimal");
  json j;
  j["problem"] = std::string(problem_name(p.kind));
  j["r"] = p.has_distance() ? json(p.r) : json(nullptr);
  j["status"] = std::string(status_name(outcome));
  j["value"] = nullptr;
  j["witness"] = nullptr;
  if (const auto* be = std::get_if<BudgetExceeded>(&outcome)) j["budget"] = be->budget;
  return j;
}

std::optional<Solution> solution_from_json(const json& j, Problem* problem) {
  auto kind = parse_problem(j.at("problem").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown problem name in solution record");
  Problem p = Problem::make(*kind, j.at("r").is_null() ? 0 : j.at("r").get<int>());
  if (problem) *problem = p;
  if (j.at("witness").is_null()) return std::nullopt;
  Solution s;
  if (p.is_roman()) {
    std::vector<std::uint8_t> labels;
    for (const auto& l : j.at("witness")) labels.push_back(static_cast<std::uint8_t>(l.get<int>()));
    s = Solution::from_labeling(RomanLabeling(std::move(labels)));
  } else {
    VertexSet vs;
    for (const auto& v : j.at("witness")) vs.push_back(v.get<int>() - 1);
    s = Solution::from_set(std::move(vs));
  }
  if (s.value != j.at("value").get<int>())
    throw std::invalid_argument("solution record value disagrees with its witness");
  return s;
}

}  // namespace hopdom
