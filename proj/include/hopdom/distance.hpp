#pragma once

#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

/// All-pairs hop distances. Unreachable pairs hold unreachable(), which is
/// the vertex count and therefore larger than any shortest-path length.
class DistanceOracle {
 public:
  DistanceOracle() = default;
  explicit DistanceOracle(const Graph& g);

  int order() const { return n_; }
  int unreachable() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

  /// N_r(v): vertices at distance exactly r from v, ascending.
  VertexSet exact_neighborhood(Vertex v, int r) const;

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

DistanceOracle all_pairs_distances(const Graph& g);

/// D_r(g): same vertex ids, u~v iff dist_g(u,v) == r exactly.
Graph exact_distance_graph(const Graph& g, int r);
Graph exact_distance_graph(const DistanceOracle& dist, int r);

}  // namespace hopdom
