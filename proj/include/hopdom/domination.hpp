#pragma once

#include <optional>
#include <vector>

#include "hopdom/distance.hpp"
#include "hopdom/graph.hpp"
#include "hopdom/problem.hpp"

namespace hopdom {

/// N_r(v) = {u : dist(u, v) == r}; never contains v for r >= 1.
VertexSet exact_r_neighborhood(const DistanceOracle& dist, Vertex v, int r);

/// Vertices whose membership in S (or label 2) satisfies v's requirement:
/// N[v] for domination, N(v) for total domination and Roman, N_r(v) for the
/// step and hop-Roman kinds, N_r(v) + v for hop. One entry per vertex.
std::vector<VertexSet> requirement_sets(const Graph& g, const Problem& p);
std::vector<VertexSet> requirement_sets(const DistanceOracle& dist, const Problem& p);

struct Verdict {
  std::optional<Vertex> violation;

  bool passed() const { return !violation.has_value(); }
  explicit operator bool() const { return passed(); }
};

/// Checks `candidate` against the definition of `p` on g. Returns the
/// lowest-id violating vertex on failure. Throws std::invalid_argument on a
/// shape mismatch (set vs labeling, wrong length, out-of-range vertex,
/// value inconsistent with witness).
Verdict verify(const Graph& g, const Problem& p, const Solution& candidate);
Verdict verify(const DistanceOracle& dist, const Problem& p, const Solution& candidate);

/// Minimum-cardinality cover of elements 0..universe_size-1 by the given
/// candidate sets. The witness lists chosen candidate indices ascending.
SolveOutcome min_set_cover(int universe_size, const std::vector<std::vector<int>>& candidates,
                           std::optional<int> budget = std::nullopt);

/// The membership target of a distance kind: hop -> dom, step -> totaldom,
/// hoproman -> roman. Non-distance kinds map to themselves.
Problem membership_target(const Problem& p);

/// Exact optimum. Distance kinds are solved on D_r(g) as their membership
/// target; set kinds run min_set_cover, Roman kinds the subset formulation
/// min_S 2|S| + |{v not in S : N(v) misses S}|.
SolveOutcome solve_exact(const Graph& g, const Problem& p, std::optional<int> budget = std::nullopt);

/// Largest n accepted by brute_force_reference.
inline constexpr int kBruteForceSetCap = 16;
inline constexpr int kBruteForceRomanCap = 9;

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive 2^n (set kinds) or 3^n (Roman kinds) scan with its own
/// distance computation. Test and harness use only.
SolveOutcome brute_force_reference(const Graph& g, const Problem& p);

/// Greedy set cover over exact-r coverage, ties to the lowest vertex id.
/// nullopt when the instance is infeasible. Roman kinds are rejected.
std::optional<Solution> greedy_approx(const Graph& g, const Problem& p);

}  // namespace hopdom
