#include "hopdom/gadgets.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

#include "hopdom/distance.hpp"
#include "hopdom/domination.hpp"

namespace hopdom {

namespace {

constexpr std::array<std::string_view, 13> kRoleNames{
    "EdgePath", "K5Aux", "P", "PTail", "S", "SBranch", "SPoke",
    "STail", "SubdivA", "Tail", "U", "UPrime", "UPrimePath"};

constexpr std::array<std::string_view, 3> kSlotNames{"a0", "a1_ij", "a1_ji"};

// Number of indices printed for each role kind, and which are vertex ids.
struct RoleShape {
  int arity;
  bool first_is_vertex;
  bool second_is_vertex;
};

RoleShape shape(RoleKind k) {
  switch (k) {
    case RoleKind::EdgePath:
    case RoleKind::SPoke:
    case RoleKind::UPrimePath:
    case RoleKind::K5Aux:
      return {3, true, true};
    case RoleKind::SubdivA:
      return {2, true, true};
    case RoleKind::Tail:
      return {2, true, false};
    case RoleKind::PTail:
    case RoleKind::SBranch:
      return {2, false, false};
    case RoleKind::U:
    case RoleKind::UPrime:
      return {1, true, false};
    case RoleKind::P:
    case RoleKind::STail:
      return {1, false, false};
    case RoleKind::S:
      return {0, false, false};
  }
  return {0, false, false};
}

// Collects roles and edges, then numbers vertices in sorted role order.
class GadgetBuilder {
 public:
  void add_vertex(const Role& r) { roles_.insert(r); }

  void add_edge(const Role& a, const Role& b) {
    add_vertex(a);
    add_vertex(b);
    edges_.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  }

  void add_path(const std::vector<Role>& path) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) add_edge(path[k], path[k + 1]);
  }

  GadgetOutput finish(GadgetOutput out) {
    out.roles.assign(roles_.begin(), roles_.end());
    for (std::size_t v = 0; v < out.roles.size(); ++v)
      out.index.emplace(out.roles[v], static_cast<Vertex>(v));
    out.graph = Graph(static_cast<int>(out.roles.size()));
    for (const auto& [a, b] : edges_) out.graph.add_edge(out.index.at(a), out.index.at(b));
    return out;
  }

 private:
  std::set<Role> roles_;
  std::set<std::pair<Role, Role>> edges_;
};

void add_s_part(GadgetBuilder& b, int r) {
  std::vector<Role> chain{Role::s()};
  for (int t = 1; t <= r - 1; ++t) chain.push_back(Role::s_tail(t));
  b.add_path(chain);
  const Role top = chain.back();
  for (int br = 1; br <= 2; ++br) {
    std::vector<Role> branch{top};
    for (int t = 1; t <= r; ++t) branch.push_back(Role::s_branch(br, t));
    b.add_path(branch);
  }
}

void add_u_prime_path(GadgetBuilder& b, int x, int y, int interior, const Role& target) {
  std::vector<Role> path{Role::u_prime(x)};
  for (int t = 1; t <= interior; ++t) path.push_back(Role::u_prime_path(x, y, t));
  path.push_back(target);
  b.add_path(path);
}

Role k5_a1(int x, int y, bool towards_x) {
  // a1_xy belongs to x. With i < j stored, a1_ij is A1Forward.
  const int i = std::min(x, y);
  const int j = std::max(x, y);
  const bool forward = (towards_x == (x == i));
  return Role::k5(i, j, forward ? K5Slot::A1Forward : K5Slot::A1Backward);
}

bool is_dominating(const Graph& g, const std::vector<char>& in) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    bool ok = false;
    for (Vertex w : g.neighbors(v)) ok = ok || in[w];
    if (!ok) return false;
  }
  return true;
}

// Adds source vertices covering the most undominated vertices while budget lasts.
void greedy_repair(const Graph& g, std::vector<char>& in, int budget) {
  const int n = g.order();
  while (budget > 0 && !is_dominating(g, in)) {
    std::vector<char> dominated(n, 0);
    for (Vertex v = 0; v < n; ++v)
      if (in[v]) {
        dominated[v] = 1;
        for (Vertex w : g.neighbors(v)) dominated[w] = 1;
      }
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v]) continue;
      int gain = dominated[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += dominated[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    in[best] = 1;
    --budget;
  }
}

VertexSet to_set(const std::vector<char>& in) {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(in.size()); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

std::string to_string(const Role& role) {
  std::string out(kRoleNames[static_cast<int>(role.kind)]);
  const RoleShape sh = shape(role.kind);
  if (sh.arity == 0) return out;
  out += '(';
  out += std::to_string(role.i + (sh.first_is_vertex ? 1 : 0));
  if (sh.arity >= 2) out += ',' + std::to_string(role.j + (sh.second_is_vertex ? 1 : 0));
  if (sh.arity >= 3) {
    out += ',';
    if (role.kind == RoleKind::K5Aux) out += kSlotNames.at(role.t);
    else out += std::to_string(role.t);
  }
  out += ')';
  return out;
}

std::optional<Role> parse_role(std::string_view text) {
  const auto open = text.find('(');
  const std::string_view name = text.substr(0, open);
  auto it = std::find(kRoleNames.begin(), kRoleNames.end(), name);
  if (it == kRoleNames.end()) return std::nullopt;
  Role role;
  role.kind = static_cast<RoleKind>(it - kRoleNames.begin());
  const RoleShape sh = shape(role.kind);
  if (open == std::string_view::npos) {
    if (sh.arity != 0) return std::nullopt;
    return role;
  }
  if (text.back() != ')') return std::nullopt;
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    auto comma = inner.find(',', pos);
    parts.push_back(inner.substr(pos, comma == std::string_view::npos ? inner.npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(parts.size()) != sh.arity) return std::nullopt;
  std::array<int, 3> vals{};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == 2 && role.kind == RoleKind::K5Aux) {
      auto s = std::find(kSlotNames.begin(), kSlotNames.end(), parts[k]);
      if (s == kSlotNames.end()) return std::nullopt;
      vals[k] = static_cast<int>(s - kSlotNames.begin());
      continue;
    }
    auto [ptr, ec] = std::from_chars(parts[k].data(), parts[k].data() + parts[k].size(), vals[k]);
    if (ec != std::errc() || ptr != parts[k].data() + parts[k].size()) return std::nullopt;
  }
  role.i = vals[0] - (sh.first_is_vertex ? 1 : 0);
  role.j = vals[1] - (sh.second_is_vertex ? 1 : 0);
  role.t = vals[2];
  return role;
}

std::string_view gadget_family_name(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::StepBipartite:
      return "step-bipartite";
    case GadgetFamily::StepChordal:
      return "step-chordal";
    case GadgetFamily::Roman:
      return "roman";
  }
  return "?";
}

std::optional<GadgetFamily> parse_gadget_family(std::string_view name) {
  for (auto f : {GadgetFamily::StepBipartite, GadgetFamily::StepChordal, GadgetFamily::Roman})
    if (gadget_family_name(f) == name) return f;
  return std::nullopt;
}

std::string_view wiring_name(OddWiring w) { return w == OddWiring::Literal ? "literal" : "swapped"; }

std::optional<OddWiring> parse_wiring(std::string_view name) {
  if (name == "literal") return OddWiring::Literal;
  if (name == "swapped") return OddWiring::Swapped;
  return std::nullopt;
}

Vertex GadgetOutput::vertex(const Role& role) const {
  auto it = index.find(role);
  if (it == index.end()) throw GadgetError("gadget has no vertex with role " + to_string(role));
  return it->second;
}

std::optional<Vertex> GadgetOutput::find(const Role& role) const {
  auto it = index.find(role);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

GadgetOutput build_step_gadget(const Graph& g1, int r, GadgetFamily variant) {
  if (variant == GadgetFamily::Roman) throw GadgetError("build_step_gadget: not a step variant");
  if (r < 2) throw GadgetError("step gadget needs r >= 2");
  if (g1.has_isolated_vertex()) throw GadgetError("step gadget: source graph has an isolated vertex");
  const int n = g1.order();
  const bool chordal = variant == GadgetFamily::StepChordal;

  GadgetBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(Role::u(i));
  for (const Edge& e : g1.edges()) {
    if (!chordal) b.add_path({Role::u(e.u), Role::subdiv(e.u, e.v), Role::u(e.v)});
  }
  if (chordal)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b.add_edge(Role::u(i), Role::u(j));
  for (int i = 0; i < n; ++i) {
    std::vector<Role> tail{Role::u(i)};
    for (int t = 1; t <= r; ++t) tail.push_back(Role::tail(i, t));
    b.add_path(tail);
  }
  for (const Edge& e : g1.edges()) {
    b.add_edge(Role::tail(e.u, 1), Role::u(e.v));
    b.add_edge(Role::u(e.u), Role::tail(e.v, 1));
  }
  for (int i = 0; i < n; ++i) b.add_edge(Role::u(i), Role::p(1));
  for (int t = 1; t < 2 * r; ++t) b.add_edge(Role::p(t), Role::p(t + 1));
  for (int t = 1; t <= 2 * r; ++t) {
    std::vector<Role> pend{Role::p(t)};
    for (int s = 1; s <= r; ++s) pend.push_back(Role::p_tail(t, s));
    b.add_path(pend);
  }

  GadgetOutput out;
  out.family = variant;
  out.r = r;
  out.source = g1;
  out.claims = {{Problem::step(r), 1, 2 * r}, {Problem::hop(r), 1, 2 * r}};
  return b.finish(std::move(out));
}

GadgetOutput build_roman_gadget(const Graph& g1, int r, OddWiring wiring) {
  if (r < 2) throw GadgetError("Roman gadget needs r >= 2");
  if (g1.has_isolated_vertex()) throw GadgetError("Roman gadget: source graph has an isolated vertex");
  if (!g1.is_connected()) throw GadgetError("Roman gadget: source graph is disconnected");
  const int n = g1.order();
  GadgetBuilder b;
  for (int i = 0; i < n; ++i) {
    b.add_vertex(Role::u(i));
    b.add_vertex(Role::u_prime(i));
  }

  if (r % 2 == 0) {
    const int h = r / 2;
    for (const Edge& e : g1.edges()) {
      const int i = e.u;
      const int j = e.v;
      std::vector<Role> path{Role::u(i)};
      for (int t = 1; t <= r - 1; ++t) path.push_back(Role::edge_path(i, j, t));
      for (int t = h - 1; t >= 1; --t) path.push_back(Role::edge_path(j, i, t));
      path.push_back(Role::u(j));
      b.add_path(path);

      std::vector<Role> spoke{Role::edge_path(i, j, h)};
      for (int t = 1; t <= h; ++t) spoke.push_back(Role::spoke(i, j, t));
      spoke.push_back(Role::s());
      b.add_path(spoke);

      // u'_x hangs off the vertex h steps from u_x along this edge path.
      const std::size_t last = path.size() - 1;
      add_u_prime_path(b, i, j, h - 1, path[h]);
      add_u_prime_path(b, j, i, h - 1, path[last - h]);
    }
  } else {
    const int h = (r - 1) / 2;
    for (const Edge& e : g1.edges()) {
      const int i = e.u;
      const int j = e.v;
      std::vector<Role> path{Role::u(i)};
      for (int t = 1; t <= h; ++t) path.push_back(Role::edge_path(i, j, t));
      for (int t = h + 1; t >= 1; --t) path.push_back(Role::edge_path(j, i, t));
      path.push_back(Role::u(j));
      b.add_path(path);

      const std::array<Role, 5> block{Role::edge_path(i, j, h), Role::edge_path(j, i, h + 1),
                                      Role::k5(i, j, K5Slot::A1Forward),
                                      Role::k5(i, j, K5Slot::A1Backward), Role::k5(i, j, K5Slot::A0)};
      for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t c = a + 1; c < block.size(); ++c) b.add_edge(block[a], block[c]);

      std::vector<Role> spoke{Role::k5(i, j, K5Slot::A0)};
      for (int t = 1; t <= h; ++t) spoke.push_back(Role::spoke(i, j, t));
      spoke.push_back(Role::s());
      b.add_path(spoke);

      const bool literal = wiring == OddWiring::Literal;
      add_u_prime_path(b, i, j, h - 1, k5_a1(i, j, literal));
      add_u_prime_path(b, j, i, h - 1, k5_a1(j, i, literal));
    }
  }
  add_s_part(b, r);

  GadgetOutput out;
  out.family = GadgetFamily::Roman;
  out.wiring = wiring;
  out.r = r;
  out.source = g1;
  out.claims = {{Problem::hop_roman(r), 2, 2 * r}};
  return b.finish(std::move(out));
}

GadgetOutput build_gadget(const Graph& g1, int r, GadgetFamily family, OddWiring wiring) {
  if (family == GadgetFamily::Roman) return build_roman_gadget(g1, r, wiring);
  return build_step_gadget(g1, r, family);
}

std::pair<std::size_t, std::size_t> expected_counts(GadgetFamily family, int r, int n, int m) {
  using S = std::size_t;
  const S N = n, M = m, R = r;
  switch (family) {
    case GadgetFamily::StepBipartite:
      return {N + M + N * R + 2 * R + 2 * R * R, 4 * M + N * R + N + (2 * R - 1) + 2 * R * R};
    case GadgetFamily::StepChordal:
      return {N + N * R + 2 * R + 2 * R * R,
              N * (N - (N > 0 ? 1 : 0)) / 2 + 2 * M + N * R + N + (2 * R - 1) + 2 * R * R};
    case GadgetFamily::Roman:
      break;
  }
  const S s_part_vertices = 1 + (R - 1) + 2 * R;
  const S s_part_edges = (R - 1) + 2 * R;
  if (r % 2 == 0) {
    const S h = R / 2;
    return {2 * N + M * (3 * h - 2) + M * h + 2 * M * (h - 1) + s_part_vertices,
            M * (3 * h - 1) + M * (h + 1) + 2 * M * h + s_part_edges};
  }
  const S h = (R - 1) / 2;
  return {2 * N + M * R + 3 * M + M * h + 2 * M * (h - 1) + s_part_vertices,
          M * (R + 1) + 9 * M + M * (h + 1) + 2 * M * h + s_part_edges};
}

std::size_t count_k5(const Graph& g) {
  std::size_t count = 0;
  const int n = g.order();
  std::vector<Vertex> clique;
  // Extend cliques in increasing vertex order.
  auto extend = [&](auto&& self, Vertex from) -> void {
    if (clique.size() == 5) {
      ++count;
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, v); });
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  extend(extend, 0);
  return count;
}

std::pair<Graph, Problem> to_membership_instance(const Graph& g, const Problem& p) {
  if (!p.has_distance())
    throw std::invalid_argument("to_membership_instance: " + describe(p) + " has no distance parameter");
  return {exact_distance_graph(g, p.r), membership_target(p)};
}

Solution forward_certificate(const GadgetOutput& out, const VertexSet& domset) {
  Solution as_set = Solution::from_set(domset);
  for (Vertex v : as_set.set())
    if (v < 0 || v >= out.source.order()) throw GadgetError("forward_certificate: vertex out of range");
  if (!verify(out.source, Problem::domination(), as_set))
    throw GadgetError("forward_certificate: not a dominating set of the source graph");

  if (out.is_step()) {
    VertexSet s;
    for (Vertex v : as_set.set()) s.push_back(out.vertex(Role::u(v)));
    for (int t = 1; t <= 2 * out.r; ++t) s.push_back(out.vertex(Role::p(t)));
    return Solution::from_set(std::move(s));
  }
  std::vector<std::uint8_t> labels(out.graph.order(), 0);
  for (Vertex v : as_set.set()) labels[out.vertex(Role::u(v))] = 2;
  labels[out.vertex(Role::s())] = 2;
  for (int t = 1; t <= out.r - 1; ++t) labels[out.vertex(Role::s_tail(t))] = 2;
  return Solution::from_labeling(RomanLabeling(std::move(labels)));
}

VertexSet pull_back_normalize(const GadgetOutput& out, const Solution& sol) {
  const int n = out.source.order();
  const int r = out.r;
  std::vector<char> in(n, 0);

  if (out.is_step()) {
    if (sol.is_labeling()) throw std::invalid_argument("pull_back_normalize: step gadget needs a vertex set");
    if (!verify(out.graph, Problem::hop(r), sol))
      throw std::invalid_argument("pull_back_normalize: solution does not verify on the gadget");
    std::vector<char> p_slot(2 * r + 1, 0);
    int other = 0;
    for (Vertex x : sol.set()) {
      const Role& role = out.roles[x];
      switch (role.kind) {
        case RoleKind::P:
          p_slot[role.i] = 1;
          break;
        case RoleKind::PTail:
          if (role.j == r && !p_slot[role.i]) {
            p_slot[role.i] = 1;  // p_t^r stands in for p_t
          } else {
            ++other;
          }
          break;
        case RoleKind::U:
        case RoleKind::Tail:
          in[role.i] = 1;
          ++other;
          break;
        case RoleKind::SubdivA:
          in[role.i] = 1;
          ++other;
          break;
        default:
          ++other;
          break;
      }
    }
    const int used = static_cast<int>(to_set(in).size());
    greedy_repair(out.source, in, other - used);
    return to_set(in);
  }

  if (!sol.is_labeling()) throw std::invalid_argument("pull_back_normalize: Roman gadget needs a labeling");
  if (!verify(out.graph, Problem::hop_roman(r), sol))
    throw std::invalid_argument("pull_back_normalize: labeling does not verify on the gadget");
  const RomanLabeling& f = sol.labeling();
  const DistanceOracle dist(out.graph);

  // Owner of a non-u vertex: the nearer u-endpoint of its source edge.
  auto owner = [&](Vertex x) -> int {
    const Role& role = out.roles[x];
    switch (role.kind) {
      case RoleKind::U:
      case RoleKind::UPrime:
      case RoleKind::UPrimePath:
      case RoleKind::SPoke:
      case RoleKind::K5Aux:
        return role.i;
      case RoleKind::EdgePath: {
        const int a = role.i;
        const int c = role.j;
        const int da = dist(x, out.vertex(Role::u(a)));
        const int dc = dist(x, out.vertex(Role::u(c)));
        return (da < dc || (da == dc && a < c)) ? a : c;
      }
      default:
        return -1;
    }
  };

  int rest_weight = 0;
  std::vector<int> ones_owned(n, 0);
  for (Vertex x = 0; x < out.graph.order(); ++x) {
    const RoleKind k = out.roles[x].kind;
    if (k == RoleKind::S || k == RoleKind::STail || k == RoleKind::SBranch) continue;
    rest_weight += f[x];
    const int o = owner(x);
    if (o < 0) continue;
    if (f[x] == 2) in[o] = 1;
    else if (f[x] == 1 && k != RoleKind::U) ++ones_owned[o];
  }
  // u_i = 1 together with another 1 owned by i (u'_i, its path, a spoke) becomes u_i = 2.
  for (int i = 0; i < n; ++i)
    if (!in[i] && f[out.vertex(Role::u(i))] == 1 && ones_owned[i] > 0) in[i] = 1;

  const int used = 2 * static_cast<int>(to_set(in).size());
  greedy_repair(out.source, in, (rest_weight - used) / 2);
  return to_set(in);
}

GadgetOutput mutate_for_negative_control(const GadgetOutput& out) {
  GadgetOutput copy = out;
  if (out.is_step()) copy.graph.add_edge(out.vertex(Role::u(0)), out.vertex(Role::tail(0, 2)));
  else copy.graph.add_edge(out.vertex(Role::s_tail(out.r - 1)), out.vertex(Role::s_branch(1, 2)));
  return copy;
}

std::string write_roles(const GadgetOutput& out) {
  std::ostringstream os;
  for (std::size_t v = 0; v < out.roles.size(); ++v) os << v + 1 << ' ' << to_string(out.roles[v]) << '\n';
  return os.str();
}

std::vector<Role> read_roles(std::string_view text) {
  std::vector<Role> roles;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    int id = 0;
    std::string tag;
    if (!(ls >> id >> tag) || id != static_cast<int>(roles.size()) + 1)
      throw std::invalid_argument("roles line " + std::to_string(lineno) + ": expected '<id> <role>'");
    auto role = parse_role(tag);
    if (!role) throw std::invalid_argument("roles line " + std::to_string(lineno) + ": bad role tag " + tag);
    roles.push_back(*role);
  }
  return roles;
}

}  // namespace hopdom
