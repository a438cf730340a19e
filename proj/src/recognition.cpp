#include "hopdom/recognition.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hopdom {

namespace {

bool is_cycle_in(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) return false;
  return true;
}

// Shortest path from `from` to `to` using only vertices with allowed[v].
std::vector<Vertex> bfs_path(const Graph& g, Vertex from, Vertex to,
                             const std::vector<char>& allowed) {
  std::vector<Vertex> parent(g.order(), -1);
  std::queue<Vertex> q;
  parent[from] = from;
  q.push(from);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (v == to) break;
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] == -1 && (allowed[w] || w == to)) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  if (parent[to] == -1) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// Maximum cardinality search; returns the visit order (highest label first).
std::vector<Vertex> mcs_visit_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    done[pick] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!done[w]) ++weight[w];
  }
  return order;
}

}  // namespace

BipartiteCertificate is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (depth[w] == -1) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if ((depth[w] & 1) == (depth[v] & 1)) {
          // Same BFS parity: close the cycle through the tree paths to the LCA.
          std::vector<Vertex> left{v};
          std::vector<Vertex> right{w};
          Vertex a = v;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // LCA already in left
          std::vector<Vertex> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          // cycle now runs LCA .. v, then w .. child of LCA
          return OddCycle{std::move(cycle)};
        }
      }
    }
  }
  TwoColoring coloring;
  coloring.side.resize(n);
  for (Vertex v = 0; v < n; ++v) coloring.side[v] = static_cast<std::uint8_t>(depth[v] & 1);
  return coloring;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n || pos[v] != -1) return false;
    pos[v] = i;
  }
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

ChordalCertificate is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> visit = mcs_visit_order(g);
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  // Tarjan-Yannakakis test: each vertex's earliest later neighbor must be
  // adjacent to all its other later neighbors.
  for (Vertex v : peo) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent])) parent = w;
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] <= pos[v] || w == parent || g.adjacent(parent, w)) continue;
      // parent and w are non-adjacent later neighbors of v. A shortest
      // parent-w path avoiding N[v] closes a chordless cycle through v.
      std::vector<char> allowed(n, 1);
      allowed[v] = 0;
      for (Vertex x : g.neighbors(v)) allowed[x] = 0;
      std::vector<char> later_only = allowed;
      for (Vertex x = 0; x < n; ++x)
        if (pos[x] < pos[v]) later_only[x] = 0;
      std::vector<Vertex> path = bfs_path(g, parent, w, later_only);
      if (path.empty()) path = bfs_path(g, parent, w, allowed);
      if (path.empty()) throw std::logic_error("chordality: no hole found after MCS failure");
      path.push_back(v);
      return ChordlessCycle{std::move(path)};
    }
  }
  return EliminationOrdering{std::move(peo)};
}

bool check_certificate(const Graph& g, const BipartiteCertificate& cert) {
  if (const auto* col = std::get_if<TwoColoring>(&cert)) {
    if (static_cast<int>(col->side.size()) != g.order()) return false;
    for (const Edge& e : g.edges())
      if (col->side[e.u] == col->side[e.v] || col->side[e.u] > 1) return false;
    return true;
  }
  const auto& odd = std::get<OddCycle>(cert).cycle;
  return odd.size() % 2 == 1 && is_cycle_in(g, odd);
}

bool check_certificate(const Graph& g, const ChordalCertificate& cert) {
  if (const auto* peo = std::get_if<EliminationOrdering>(&cert))
    return is_perfect_elimination_ordering(g, peo->order);
  const auto& hole = std::get<ChordlessCycle>(cert).cycle;
  if (hole.size() < 4 || !is_cycle_in(g, hole)) return false;
  const std::size_t len = hole.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(hole[i], hole[j])) return false;
    }
  return true;
}

}  // namespace hopdom
