#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopdom {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted so neighborhoods can be compared and
/// searched directly. Construction rejects self-loops, duplicate edges and
/// out-of-range endpoints with GraphError.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_isolated_vertex() const;
  bool is_connected() const;

  /// Edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

}  // namespace hopdom
