#pragma once

// Test-side reference computations. Each one is written straight from the
// definition and shares no code with the library beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hopdom/graph.hpp"
#include "hopdom/problem.hpp"

namespace oracle {

using hopdom::Graph;
using hopdom::Problem;
using hopdom::ProblemKind;

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (g.is_connected()) return g;
  }
}

// Tries every 2-coloring.
inline bool bipartite_exhaustive(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1u) == ((mask >> e.v) & 1u)) ok = false;
    if (ok) return true;
  }
  return n == 0;
}

// Distance-parity test: bipartite iff no edge joins two vertices at equal
// distance from some vertex of their component.
inline bool bipartite_by_distances(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (const auto& e : g.edges())
    for (int w = 0; w < g.order(); ++w)
      if (d[w][e.u] < kInf && d[w][e.u] == d[w][e.v]) return false;
  return true;
}

// Repeatedly deletes any simplicial vertex; chordal iff the graph empties.
inline bool chordal_by_elimination(const Graph& g) {
  const int n = g.order();
  std::vector<bool> alive(n, true);
  for (int removed = 0; removed < n; ++removed) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      std::vector<int> nb;
      for (int u : g.neighbors(v))
        if (alive[u]) nb.push_back(u);
      bool clique = true;
      for (std::size_t a = 0; a < nb.size() && clique; ++a)
        for (std::size_t b = a + 1; b < nb.size() && clique; ++b)
          if (!g.adjacent(nb[a], nb[b])) clique = false;
      if (clique) pick = v;
    }
    if (pick < 0) return false;
    alive[pick] = false;
  }
  return true;
}

inline std::optional<int> set_cover_exhaustive(int universe, const std::vector<std::vector<int>>& candidates) {
  const int c = static_cast<int>(candidates.size());
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    std::vector<bool> hit(universe, false);
    for (int k = 0; k < c; ++k)
      if ((mask >> k) & 1u)
        for (int e : candidates[k]) hit[e] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      const int size = __builtin_popcount(mask);
      if (!best || size < *best) best = size;
    }
  }
  return best;
}

// Set kinds, straight from the glossary definitions.
inline bool set_dominates(const std::vector<std::vector<int>>& d, const Problem& p, std::uint32_t mask) {
  const int n = static_cast<int>(d.size());
  for (int v = 0; v < n; ++v) {
    const bool in_s = (mask >> v) & 1u;
    if (in_s && (p.kind == ProblemKind::Domination || p.kind == ProblemKind::RHop)) continue;
    const int want = (p.kind == ProblemKind::Domination || p.kind == ProblemKind::TotalDomination) ? 1 : p.r;
    bool found = false;
    for (int u = 0; u < n && !found; ++u)
      if (((mask >> u) & 1u) && d[v][u] == want) found = true;
    if (!found) return false;
  }
  return true;
}

inline std::optional<int> set_optimum(const Graph& g, const Problem& p) {
  const auto d = floyd_warshall(g);
  const int n = g.order();
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best && size >= *best) continue;
    if (set_dominates(d, p, mask)) best = size;
  }
  return best;
}

// Roman kinds over all 3^n labelings.
inline int roman_optimum(const Graph& g, const Problem& p) {
  const auto d = floyd_warshall(g);
  const int n = g.order();
  const int want = p.kind == ProblemKind::Roman ? 1 : p.r;
  std::vector<int> f(n, 0);
  int best = 2 * n + 1;
  for (;;) {
    int weight = 0;
    for (int x : f) weight += x;
    if (weight < best) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        if (f[v] != 0) continue;
        bool found = false;
        for (int u = 0; u < n && !found; ++u)
          if (f[u] == 2 && d[v][u] == want) found = true;
        ok = found;
      }
      if (ok) best = weight;
    }
    int k = 0;
    while (k < n && f[k] == 2) f[k++] = 0;
    if (k == n) break;
    ++f[k];
  }
  return best;
}

inline std::optional<int> optimum(const Graph& g, const Problem& p) {
  if (p.is_roman()) return roman_optimum(g, p);
  return set_optimum(g, p);
}

// Every labeled graph on n vertices, as edge-subset masks over pairs i<j.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
