#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hopdom/domination.hpp"

namespace hopdom {

namespace {

// Floyd-Warshall on an adjacency matrix; kept separate from the BFS oracle.
std::vector<std::vector<int>> relax_all_pairs(const Graph& g) {
  const int n = g.order();
  const int inf = std::numeric_limits<int>::max() / 2;  // never equals a requested r
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

}  // namespace

SolveOutcome brute_force_reference(const Graph& g, const Problem& p) {
  const int n = g.order();
  const int cap = p.is_roman() ? kBruteForceRomanCap : kBruteForceSetCap;
  if (n > cap)
    throw CapExceeded("brute_force_reference: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap) + " for " + describe(p));
  const auto d = relax_all_pairs(g);
  const int r = p.has_distance() ? p.r : 1;

  // dominators[v]: bitmask of vertices whose selection satisfies v.
  std::vector<std::uint32_t> dominators(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      if (d[v][u] == r) dominators[v] |= 1u << u;

  if (!p.is_roman()) {
    const bool self_ok = p.kind == ProblemKind::Domination || p.kind == ProblemKind::RHop;
    int best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const int size = __builtin_popcount(mask);
      if (best != -1 && size >= best) continue;
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        if (self_ok && (mask >> v & 1u)) continue;
        ok = (dominators[v] & mask) != 0;
      }
      if (ok) {
        best = size;
        best_mask = mask;
      }
    }
    if (best == -1) return Infeasible{};
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (best_mask >> v & 1u) s.push_back(v);
    return Optimal{Solution::from_set(std::move(s))};
  }

  std::vector<std::uint8_t> labels(n, 0);
  std::vector<std::uint8_t> best_labels(n, 1);
  int best = n + 1;
  while (true) {
    std::uint32_t twos = 0;
    int weight = 0;
    for (Vertex v = 0; v < n; ++v) {
      weight += labels[v];
      if (labels[v] == 2) twos |= 1u << v;
    }
    if (weight < best) {
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v)
        if (labels[v] == 0) ok = (dominators[v] & twos) != 0;
      if (ok) {
        best = weight;
        best_labels = labels;
      }
    }
    int pos = 0;
    while (pos < n && labels[pos] == 2) labels[pos++] = 0;
    if (pos == n) break;
    ++labels[pos];
  }
  return Optimal{Solution::from_labeling(RomanLabeling(std::move(best_labels)))};
}

}  // namespace hopdom
