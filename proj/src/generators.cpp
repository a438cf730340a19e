#include "hopdom/generators.hpp"

#include <array>

#include "hopdom/rng.hpp"

namespace hopdom {

namespace {
constexpr std::array<std::pair<GraphFamily, std::string_view>, 5> kFamilies{{
    {GraphFamily::Path, "path"},
    {GraphFamily::Cycle, "cycle"},
    {GraphFamily::Complete, "complete"},
    {GraphFamily::Star, "star"},
    {GraphFamily::Gnp, "gnp"},
}};
}  // namespace

std::string_view family_name(GraphFamily f) {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return name;
  return "?";
}

std::optional<GraphFamily> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilies)
    if (n == name) return fam;
  return std::nullopt;
}

Graph generate(const GraphFamilySpec& spec) {
  const int n = spec.n;
  if (n < 0) throw GraphError("generate: n must be non-negative");
  Graph g(n);
  switch (spec.family) {
    case GraphFamily::Path:
      for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      break;
    case GraphFamily::Cycle:
      if (n < 3) throw GraphError("generate: cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      break;
    case GraphFamily::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    case GraphFamily::Star:
      for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case GraphFamily::Gnp: {
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw GraphError("generate: gnp needs 0 <= p <= 1");
      SplitMix64 rng(spec.seed);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.uniform() < spec.p) g.add_edge(u, v);
      break;
    }
  }
  return g;
}

Graph generate_connected_gnp(int n, double p, std::uint64_t seed, int max_attempts) {
  SplitMix64 stream(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = generate({GraphFamily::Gnp, n, p, stream.next()});
    if (g.is_connected()) return g;
  }
  throw GraphError("generate_connected_gnp: no connected sample within attempt limit");
}

}  // namespace hopdom
