#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class GraphFamily { Path, Cycle, Complete, Star, Gnp };

std::string_view family_name(GraphFamily f);
std::optional<GraphFamily> parse_family(std::string_view name);

struct GraphFamilySpec {
  GraphFamily family = GraphFamily::Path;
  int n = 0;
  double p = 0.0;  // gnp only
  std::uint64_t seed = 0;
};

/// Deterministic for a fixed spec. gnp draws one SplitMix64 uniform per pair
/// (i, j), i < j, in lexicographic order and keeps the edge when it is < p.
/// Star: vertex 0 is the center. Throws GraphError on invalid parameters.
Graph generate(const GraphFamilySpec& spec);

/// Resamples gnp (seed stream derived from `seed`) until the graph is
/// connected; n >= 2 also guarantees no isolated vertex.
Graph generate_connected_gnp(int n, double p, std::uint64_t seed, int max_attempts = 10000);

}  // namespace hopdom
