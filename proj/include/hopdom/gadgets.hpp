#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopdom/graph.hpp"
#include "hopdom/problem.hpp"

namespace hopdom {

/// Vertex roles in the hardness gadgets. Enumerators are listed in the
/// lexicographic order of their tag names, so sorting roles by
/// (kind, i, j, t) is the canonical vertex numbering.
enum class RoleKind {
  EdgePath,    // (i, j, t): t-th vertex on the subdivided edge path, named from i
  K5Aux,       // (i, j, slot) with i < j; slot is a K5Slot
  P,           // (t)
  PTail,       // (t, s)
  S,
  SBranch,     // (b, t)
  SPoke,       // (i, j, t) with i < j
  STail,       // (t)
  SubdivA,     // (i, j) with i < j
  Tail,        // (i, t)
  U,           // (i)
  UPrime,      // (i)
  UPrimePath,  // (i, j, t): t-th interior vertex from u'_i towards edge {i, j}
};

enum class K5Slot { A0 = 0, A1Forward = 1, A1Backward = 2 };  // a0_ij, a1_ij, a1_ji

/// i and j index source-graph vertices (0-based internally, printed 1-based);
/// t, s and b are 1-based positions as in the construction.
struct Role {
  RoleKind kind = RoleKind::U;
  int i = 0;
  int j = 0;
  int t = 0;

  auto operator<=>(const Role&) const = default;

  static Role u(int i) { return {RoleKind::U, i}; }
  static Role u_prime(int i) { return {RoleKind::UPrime, i}; }
  static Role tail(int i, int t) { return {RoleKind::Tail, i, t}; }
  static Role subdiv(int i, int j) { return {RoleKind::SubdivA, i, j}; }
  static Role edge_path(int i, int j, int t) { return {RoleKind::EdgePath, i, j, t}; }
  static Role spoke(int i, int j, int t) { return {RoleKind::SPoke, i, j, t}; }
  static Role p(int t) { return {RoleKind::P, t}; }
  static Role p_tail(int t, int s) { return {RoleKind::PTail, t, s}; }
  static Role s() { return {RoleKind::S}; }
  static Role s_tail(int t) { return {RoleKind::STail, t}; }
  static Role s_branch(int b, int t) { return {RoleKind::SBranch, b, t}; }
  static Role k5(int i, int j, K5Slot slot) { return {RoleKind::K5Aux, i, j, static_cast<int>(slot)}; }
  static Role u_prime_path(int i, int j, int t) { return {RoleKind::UPrimePath, i, j, t}; }
};

/// "U(1)", "PTail(3,2)", "K5Aux(1,2,a1_ij)", "S", ...
std::string to_string(const Role& role);
std::optional<Role> parse_role(std::string_view text);

enum class GadgetFamily { StepBipartite, StepChordal, Roman };
enum class OddWiring { Literal, Swapped };

std::string_view gadget_family_name(GadgetFamily f);
std::optional<GadgetFamily> parse_gadget_family(std::string_view name);
std::string_view wiring_name(OddWiring w);
std::optional<OddWiring> parse_wiring(std::string_view name);

/// Claimed optimum shift: gadget optimum for `problem` equals scale*k+offset
/// where k is the domination number of the source graph.
struct Claim {
  Problem problem;
  int scale = 1;
  int offset = 0;

  int bound(int k) const { return scale * k + offset; }
};

class GadgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GadgetOutput {
  GadgetFamily family = GadgetFamily::StepBipartite;
  OddWiring wiring = OddWiring::Literal;  // meaningful for odd-r Roman gadgets
  int r = 0;
  Graph source;
  Graph graph;
  std::vector<Role> roles;  // vertex -> role
  std::map<Role, Vertex> index;
  std::vector<Claim> claims;

  Vertex vertex(const Role& role) const;
  std::optional<Vertex> find(const Role& role) const;
  bool is_step() const { return family != GadgetFamily::Roman; }
  bool is_odd_roman() const { return family == GadgetFamily::Roman && r % 2 == 1; }
};

/// Step/hop gadget. Bipartite: each source edge subdivided by a_ij; chordal:
/// a clique on the u-vertices instead. Both add tails u_i..u_i^r, cross edges
/// (u_i^1, u_j), (u_i, u_j^1), p_1 joined to every u_i, the chain p_1..p_2r
/// and a pendant path of length r at every p_t. Requires r >= 2 and no
/// isolated source vertex.
GadgetOutput build_step_gadget(const Graph& g1, int r, GadgetFamily variant);

/// Roman gadget for r >= 2 (even or odd construction by parity). Requires a
/// connected source graph without isolated vertices.
GadgetOutput build_roman_gadget(const Graph& g1, int r, OddWiring wiring = OddWiring::Literal);

GadgetOutput build_gadget(const Graph& g1, int r, GadgetFamily family,
                          OddWiring wiring = OddWiring::Literal);

/// Closed-form |V| and |E| for a gadget built from n vertices and m edges.
std::pair<std::size_t, std::size_t> expected_counts(GadgetFamily family, int r, int n, int m);

/// Number of K5 subgraphs (exhaustive; small gadgets only).
std::size_t count_k5(const Graph& g);

/// (D_r(g), membership target). Rejects non-distance kinds.
std::pair<Graph, Problem> to_membership_instance(const Graph& g, const Problem& p);

/// Witness from a dominating set D of the source graph: step gadgets get
/// {u_i : v_i in D} + {p_1..p_2r}; Roman gadgets get label 2 on those u_i and
/// on s, s^1..s^{r-1}. The result is not verified here.
Solution forward_certificate(const GadgetOutput& out, const VertexSet& domset);

/// Maps a valid gadget solution back to a source vertex set: weight and
/// membership on u'_i, spoke, path and tail vertices move onto the owning
/// u-vertex, p_t^r moves to p_t, then remaining budget (value minus the
/// p-chain or s-part share) repairs undominated vertices greedily.
VertexSet pull_back_normalize(const GadgetOutput& out, const Solution& sol);

/// Copy of `out` with one extra edge inside a tail path (negative control).
GadgetOutput mutate_for_negative_control(const GadgetOutput& out);

/// Sidecar role file: one "<id> <role-tag>" line per vertex, 1-based ids.
std::string write_roles(const GadgetOutput& out);
std::vector<Role> read_roles(std::string_view text);

}  // namespace hopdom
