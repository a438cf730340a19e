#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "hopdom/dimacs.hpp"
#include "hopdom/distance.hpp"
#include "hopdom/domination.hpp"
#include "hopdom/gadgets.hpp"
#include "hopdom/harness.hpp"
#include "hopdom/recognition.hpp"
#include "hopdom/serialize.hpp"

namespace py = pybind11;
using namespace hopdom;
using nlohmann::json;

namespace {

Problem problem_arg(const std::string& name, int r) {
  auto kind = parse_problem(name);
  if (!kind) throw std::invalid_argument("unknown problem: " + name);
  return Problem::make(*kind, r);
}

GadgetFamily family_arg(const std::string& name) {
  auto f = parse_gadget_family(name);
  if (!f) throw std::invalid_argument("unknown gadget family: " + name);
  return *f;
}

OddWiring wiring_arg(const std::string& name) {
  auto w = parse_wiring(name);
  if (!w) throw std::invalid_argument("unknown wiring: " + name);
  return *w;
}

VertexSet from_ids(const std::vector<int>& ids) {
  VertexSet out;
  for (int id : ids) out.push_back(id - 1);
  return out;
}

// Results cross the boundary as JSON text in the library's own schema.
std::string solve(const Graph& g, const std::string& problem, int r, const std::string& method,
                  std::optional<int> budget) {
  const Problem p = problem_arg(problem, r);
  if (method == "exact") return solution_to_json(p, solve_exact(g, p, budget)).dump();
  if (method == "brute") return solution_to_json(p, brute_force_reference(g, p)).dump();
  if (method == "greedy") {
    auto s = greedy_approx(g, p);
    return (s ? solution_to_json(p, *s, "feasible") : solution_to_json(p, SolveOutcome{Infeasible{}})).dump();
  }
  throw std::invalid_argument("unknown method: " + method);
}

bool verify_json(const Graph& g, const std::string& solution_json) {
  Problem p = Problem::domination();
  auto s = solution_from_json(json::parse(solution_json), &p);
  if (!s) throw std::invalid_argument("solution record carries no witness");
  return verify(g, p, *s).passed();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-distance domination solvers, transforms and hardness gadgets";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<DimacsError>(m, "DimacsError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             Graph g(n);
             for (auto [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("n"), py::arg("edges"), "Vertices are 0-based inside Python.")
      .def("add_edge", &Graph::add_edge)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           })
      .def("adjacent", &Graph::adjacent)
      .def("is_connected", &Graph::is_connected)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<hopdom.Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("read_dimacs", [](const std::string& text) { return read_dimacs(text); });
  m.def("write_dimacs", &write_dimacs);
  m.def("exact_distance_graph", py::overload_cast<const Graph&, int>(&exact_distance_graph), py::arg("g"),
        py::arg("r"));
  m.def("is_bipartite", [](const Graph& g) { return holds_coloring(is_bipartite(g)); });
  m.def("is_chordal", [](const Graph& g) { return holds_peo(is_chordal(g)); });

  m.def("_solve", &solve, py::arg("g"), py::arg("problem"), py::arg("r") = 0, py::arg("method") = "exact",
        py::arg("budget") = py::none());
  m.def("_verify", &verify_json, py::arg("g"), py::arg("solution"));

  m.def(
      "build_gadget",
      [](const Graph& g1, int r, const std::string& family, const std::string& wiring) {
        const GadgetOutput out = build_gadget(g1, r, family_arg(family), wiring_arg(wiring));
        std::vector<std::string> roles;
        for (const Role& role : out.roles) roles.push_back(to_string(role));
        std::vector<std::tuple<std::string, int, int, int>> claims;
        for (const Claim& c : out.claims)
          claims.emplace_back(std::string(problem_name(c.problem.kind)), c.problem.r, c.scale, c.offset);
        return py::make_tuple(out.graph, roles, claims);
      },
      py::arg("g1"), py::arg("r"), py::arg("family"), py::arg("wiring") = "literal");
  m.def(
      "_forward_certificate",
      [](const Graph& g1, int r, const std::string& family, const std::vector<int>& domset,
         const std::string& wiring) {
        const GadgetOutput out = build_gadget(g1, r, family_arg(family), wiring_arg(wiring));
        const Solution cert = forward_certificate(out, from_ids(domset));
        return solution_to_json(out.claims.front().problem, cert, "feasible").dump();
      },
      py::arg("g1"), py::arg("r"), py::arg("family"), py::arg("domset"), py::arg("wiring") = "literal");
  m.def(
      "_run_campaign",
      [](const std::string& config_json) {
        const CampaignConfig cfg = config_from_json(json::parse(config_json));
        CampaignReport report;
        {
          py::gil_scoped_release release;
          report = run_campaign(cfg);
        }
        return report_to_json(report).dump();
      },
      py::arg("config"));
}
