#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

struct TwoColoring {
  std::vector<std::uint8_t> side;  // 0 or 1 per vertex
};

struct OddCycle {
  std::vector<Vertex> cycle;  // consecutive vertices, closing edge back to front
};

using BipartiteCertificate = std::variant<TwoColoring, OddCycle>;

struct EliminationOrdering {
  std::vector<Vertex> order;  // perfect elimination ordering, first eliminated first
};

struct ChordlessCycle {
  std::vector<Vertex> cycle;  // length >= 4
};

using ChordalCertificate = std::variant<EliminationOrdering, ChordlessCycle>;

BipartiteCertificate is_bipartite(const Graph& g);
ChordalCertificate is_chordal(const Graph& g);

inline bool holds_coloring(const BipartiteCertificate& c) {
  return std::holds_alternative<TwoColoring>(c);
}
inline bool holds_peo(const ChordalCertificate& c) {
  return std::holds_alternative<EliminationOrdering>(c);
}

// Linear-time checks of either certificate branch against g.
bool check_certificate(const Graph& g, const BipartiteCertificate& cert);
bool check_certificate(const Graph& g, const ChordalCertificate& cert);

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order);

}  // namespace hopdom
