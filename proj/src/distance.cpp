#include "hopdom/distance.hpp"

#include <queue>
#include <stdexcept>

namespace hopdom {

DistanceOracle::DistanceOracle(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_, n_) {
  std::queue<Vertex> q;
  for (Vertex src = 0; src < n_; ++src) {
    int* row = dist_.data() + static_cast<std::size_t>(src) * n_;
    row[src] = 0;
    q.push(src);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (row[w] == n_) {
          row[w] = row[v] + 1;
          q.push(w);
        }
      }
    }
  }
}

VertexSet DistanceOracle::exact_neighborhood(Vertex v, int r) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  VertexSet out;
  if (r >= n_) return out;
  for (Vertex u = 0; u < n_; ++u)
    if ((*this)(v, u) == r) out.push_back(u);
  return out;
}

DistanceOracle all_pairs_distances(const Graph& g) { return DistanceOracle(g); }

Graph exact_distance_graph(const DistanceOracle& dist, int r) {
  if (r < 1) throw std::invalid_argument("distance r must be >= 1");
  const int n = dist.order();
  Graph out(n);
  if (r >= n) return out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (dist(u, v) == r) out.add_edge(u, v);
  return out;
}

Graph exact_distance_graph(const Graph& g, int r) {
  return exact_distance_graph(DistanceOracle(g), r);
}

}  // namespace hopdom
