#pragma once

#include <json.hpp>
#include <optional>

#include "hopdom/problem.hpp"

namespace hopdom {

/// Solution record: {problem, r, status, value, witness}. Set witnesses are
/// ascending 1-based vertex ids; labelings are per-vertex labels in id order.
/// `status` overrides the outcome-derived status (greedy uses "feasible").
nlohmann::json solution_to_json(const Problem& p, const SolveOutcome& outcome);
nlohmann::json solution_to_json(const Problem& p, const Solution& s, std::string_view status);

/// Inverse of solution_to_json for Optimal/feasible records; nullopt for
/// infeasible or budget_exceeded records.
std::optional<Solution> solution_from_json(const nlohmann::json& j, Problem* problem = nullptr);

}  // namespace hopdom
