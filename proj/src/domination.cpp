#include "hopdom/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopdom {

VertexSet exact_r_neighborhood(const DistanceOracle& dist, Vertex v, int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  return dist.exact_neighborhood(v, r);
}

std::vector<VertexSet> requirement_sets(const DistanceOracle& dist, const Problem& p) {
  const int n = dist.order();
  const int r = p.has_distance() ? p.r : 1;
  std::vector<VertexSet> req(n);
  for (Vertex v = 0; v < n; ++v) {
    req[v] = dist.exact_neighborhood(v, r);
    if (p.kind == ProblemKind::Domination || p.kind == ProblemKind::RHop) {
      req[v].insert(std::lower_bound(req[v].begin(), req[v].end(), v), v);
    }
  }
  return req;
}

std::vector<VertexSet> requirement_sets(const Graph& g, const Problem& p) {
  return requirement_sets(DistanceOracle(g), p);
}

Verdict verify(const DistanceOracle& dist, const Problem& p, const Solution& candidate) {
  const int n = dist.order();
  const auto req = requirement_sets(dist, p);
  if (p.is_roman()) {
    if (!candidate.is_labeling()) throw std::invalid_argument("verify: Roman kind needs a labeling");
    const RomanLabeling& f = candidate.labeling();
    if (f.size() != n) throw std::invalid_argument("verify: labeling length differs from vertex count");
    if (candidate.value != f.weight()) throw std::invalid_argument("verify: value differs from weight");
    for (Vertex v = 0; v < n; ++v) {
      if (f[v] != 0) continue;
      bool ok = std::any_of(req[v].begin(), req[v].end(), [&](Vertex u) { return f[u] == 2; });
      if (!ok) return {v};
    }
    return {};
  }
  if (candidate.is_labeling()) throw std::invalid_argument("verify: set kind needs a vertex set");
  const VertexSet& s = candidate.set();
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw std::invalid_argument("verify: vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  if (candidate.value != static_cast<int>(s.size()))
    throw std::invalid_argument("verify: value differs from set size");
  for (Vertex v = 0; v < n; ++v) {
    // Hop kinds exempt S members; step and total kinds do not.
    if (p.kind == ProblemKind::RHop && in[v]) continue;
    bool ok = std::any_of(req[v].begin(), req[v].end(), [&](Vertex u) { return in[u] != 0; });
    if (!ok) return {v};
  }
  return {};
}

Verdict verify(const Graph& g, const Problem& p, const Solution& candidate) {
  return verify(DistanceOracle(g), p, candidate);
}

Problem membership_target(const Problem& p) {
  switch (p.kind) {
    case ProblemKind::RHop:
      return Problem::domination();
    case ProblemKind::RStep:
      return Problem::total_domination();
    case ProblemKind::RHopRoman:
      return Problem::roman();
    default:
      return p;
  }
}

SolveOutcome solve_roman_subsets(const Graph& g, std::optional<int> budget);  // roman_search.cpp

SolveOutcome solve_exact(const Graph& g, const Problem& p, std::optional<int> budget) {
  if (p.has_distance()) return solve_exact(exact_distance_graph(g, p.r), membership_target(p), budget);
  if (p.kind == ProblemKind::Roman) return solve_roman_subsets(g, budget);

  // Candidate u covers N[u] (domination) or N(u) (total domination).
  const int n = g.order();
  std::vector<std::vector<int>> covers(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    covers[u].assign(nb.begin(), nb.end());
    if (p.kind == ProblemKind::Domination)
      covers[u].insert(std::lower_bound(covers[u].begin(), covers[u].end(), u), u);
  }
  return min_set_cover(n, covers, budget);
}

std::optional<Solution> greedy_approx(const Graph& g, const Problem& p) {
  if (p.is_roman()) throw std::invalid_argument("greedy_approx: Roman kinds are not supported");
  const int n = g.order();
  const auto req = requirement_sets(g, p);
  for (Vertex v = 0; v < n; ++v)
    if (req[v].empty()) return std::nullopt;

  // covers[u] = elements satisfied when u joins S.
  std::vector<VertexSet> covers(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : req[v]) covers[u].push_back(v);
  std::vector<char> covered(n, 0);
  int remaining = n;
  VertexSet chosen;
  std::vector<char> in(n, 0);
  while (remaining > 0) {
    Vertex best = -1;
    int best_gain = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (in[u]) continue;
      int gain = 0;
      for (Vertex v : covers[u]) gain += covered[v] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    in[best] = 1;
    chosen.push_back(best);
    for (Vertex v : covers[best])
      if (!covered[v]) {
        covered[v] = 1;
        --remaining;
      }
  }
  return Solution::from_set(std::move(chosen));
}

}  // namespace hopdom
