#include <doctest.h>

#include <random>

#include "hopdom/distance.hpp"
#include "hopdom/domination.hpp"
#include "hopdom/generators.hpp"
#include "hopdom/serialize.hpp"
#include "oracles.hpp"

using namespace hopdom;

namespace {

Graph path(int n) { return generate({GraphFamily::Path, n, 0.0, 0}); }
Graph cycle(int n) { return generate({GraphFamily::Cycle, n, 0.0, 0}); }
Graph complete(int n) { return generate({GraphFamily::Complete, n, 0.0, 0}); }
Graph star(int n) { return generate({GraphFamily::Star, n, 0.0, 0}); }

Solution labeling(std::vector<std::uint8_t> f) { return Solution::from_labeling(RomanLabeling(std::move(f))); }

std::vector<Problem> all_kinds(int r) {
  return {Problem::domination(), Problem::total_domination(), Problem::step(r),
          Problem::hop(r),       Problem::roman(),            Problem::hop_roman(r)};
}

}  // namespace

TEST_SUITE("problem") {
  TEST_CASE("names round trip and r validation") {
    for (auto p : all_kinds(2)) CHECK(parse_problem(problem_name(p.kind)) == p.kind);
    CHECK_FALSE(parse_problem("nope"));
    CHECK_THROWS(Problem::hop(0));
    CHECK_THROWS(Problem::step(-1));
    CHECK(Problem::make(ProblemKind::Roman, 5).r == 0);
    CHECK(membership_target(Problem::hop(3)) == Problem::domination());
    CHECK(membership_target(Problem::step(3)) == Problem::total_domination());
    CHECK(membership_target(Problem::hop_roman(3)) == Problem::roman());
  }

  TEST_CASE("solutions normalise witnesses") {
    const Solution s = Solution::from_set({3, 1, 3});
    CHECK(s.set() == VertexSet{1, 3});
    CHECK(s.value == 2);
    CHECK(labeling({2, 1, 0}).value == 3);
    CHECK_THROWS(RomanLabeling({3}));
  }

  TEST_CASE("JSON round trip uses 1-based ids") {
    const Problem p = Problem::hop(2);
    const auto j = solution_to_json(p, SolveOutcome{Optimal{Solution::from_set({0, 3})}});
    CHECK(j["status"] == "optimal");
    CHECK(j["r"] == 2);
    CHECK(j["witness"] == nlohmann::json::array({1, 4}));
    Problem back = Problem::domination();
    const auto s = solution_from_json(j, &back);
    REQUIRE(s);
    CHECK(s->set() == VertexSet{0, 3});
    CHECK(back == p);

    const auto jr = solution_to_json(Problem::roman(), SolveOutcome{Optimal{labeling({2, 0, 1})}});
    CHECK(jr["witness"] == nlohmann::json::array({2, 0, 1}));
    CHECK(jr["r"].is_null());
    CHECK(solution_from_json(jr)->labeling().labels() == std::vector<std::uint8_t>{2, 0, 1});

    const auto ji = solution_to_json(Problem::step(2), SolveOutcome{Infeasible{}});
    CHECK(ji["status"] == "infeasible");
    CHECK_FALSE(solution_from_json(ji));
    const auto jb = solution_to_json(Problem::domination(), SolveOutcome{BudgetExceeded{3}});
    CHECK(jb["status"] == "budget_exceeded");
    CHECK(jb["budget"] == 3);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("exact neighborhoods") {
    CHECK(exact_r_neighborhood(DistanceOracle(path(4)), 0, 2) == VertexSet{2});
    CHECK(exact_r_neighborhood(DistanceOracle(complete(3)), 0, 2).empty());
    const DistanceOracle s(star(4));
    CHECK(exact_r_neighborhood(s, 0, 2).empty());
    CHECK(exact_r_neighborhood(s, 1, 2) == VertexSet{2, 3});
  }

  TEST_CASE("worked examples") {
    CHECK(verify(path(4), Problem::step(2), Solution::from_set({0, 1, 2, 3})).passed());
    CHECK(verify(path(4), Problem::hop(2), Solution::from_set({0, 3})).passed());
    CHECK(verify(path(4), Problem::hop(2), Solution::from_set({0})).violation == 1);
    CHECK(verify(cycle(5), Problem::hop_roman(2), labeling({2, 1, 0, 0, 0})).violation == 4);
    CHECK(verify(cycle(5), Problem::roman(), labeling({2, 0, 0, 2, 0})).passed());
    CHECK(verify(path(3), Problem::domination(), Solution::from_set({1})).passed());
    CHECK(verify(path(3), Problem::total_domination(), Solution::from_set({1})).violation == 1);
  }

  TEST_CASE("shape errors throw") {
    CHECK_THROWS(verify(path(3), Problem::roman(), Solution::from_set({1})));
    CHECK_THROWS(verify(path(3), Problem::domination(), labeling({1, 1, 1})));
    CHECK_THROWS(verify(path(3), Problem::roman(), labeling({1, 1})));
    CHECK_THROWS(verify(path(3), Problem::domination(), Solution::from_set({5})));
    Solution bad = Solution::from_set({1});
    bad.value = 4;
    CHECK_THROWS(verify(path(3), Problem::domination(), bad));
  }
}

TEST_SUITE("set-cover") {
  TEST_CASE("trivial instances") {
    const auto one = min_set_cover(1, {{0}});
    REQUIRE(is_optimal(one));
    CHECK(solution_of(one).value == 1);
    CHECK(is_infeasible(min_set_cover(1, {{}})));
    CHECK(solution_of(min_set_cover(0, {})).value == 0);
    CHECK(std::holds_alternative<BudgetExceeded>(min_set_cover(3, {{0}, {1}, {2}}, 2)));
  }

  TEST_CASE("matches exhaustive search on seeded instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const int universe = 1 + trial % 12;
      const int c = 1 + static_cast<int>(rng() % 14);
      std::vector<std::vector<int>> cands(c);
      for (auto& s : cands)
        for (int e = 0; e < universe; ++e)
          if (rng() % 3 == 0) s.push_back(e);
      const auto expect = oracle::set_cover_exhaustive(universe, cands);
      const auto got = min_set_cover(universe, cands);
      REQUIRE(optimum_value(got) == expect);
      if (is_optimal(got)) {
        std::vector<bool> hit(universe, false);
        for (int k : solution_of(got).set())
          for (int e : cands[k]) hit[e] = true;
        REQUIRE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      }
    }
  }
}

TEST_SUITE("solve") {
  TEST_CASE("worked examples") {
    CHECK(optimum_value(solve_exact(path(4), Problem::hop(2))) == 2);
    CHECK(optimum_value(solve_exact(path(4), Problem::step(2))) == 4);
    CHECK(is_infeasible(solve_exact(complete(3), Problem::step(2))));
    CHECK(optimum_value(solve_exact(cycle(5), Problem::hop_roman(2))) == 4);
    CHECK(optimum_value(solve_exact(star(4), Problem::hop(2))) == 2);
    CHECK(optimum_value(brute_force_reference(path(4), Problem::hop(2))) == 2);
    CHECK(optimum_value(brute_force_reference(path(2), Problem::domination())) == 1);
    CHECK(optimum_value(brute_force_reference(cycle(5), Problem::roman())) == 4);
    CHECK(optimum_value(solve_exact(Graph(0), Problem::roman())) == 0);
  }

  TEST_CASE("budgets") {
    CHECK(std::holds_alternative<BudgetExceeded>(solve_exact(path(9), Problem::domination(), 2)));
    CHECK(optimum_value(solve_exact(path(9), Problem::domination(), 3)) == 3);
    CHECK(std::holds_alternative<BudgetExceeded>(solve_exact(path(6), Problem::roman(), 3)));
    CHECK(optimum_value(solve_exact(path(6), Problem::roman(), 4)) == 4);
  }

  TEST_CASE("brute force caps") {
    CHECK_THROWS_AS(brute_force_reference(path(17), Problem::domination()), CapExceeded);
    CHECK_THROWS_AS(brute_force_reference(path(10), Problem::roman()), CapExceeded);
  }

  TEST_CASE("exact, brute force and the test oracle agree") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 240; ++trial) {
      const int n = 1 + trial % 8;
      const Graph g = oracle::random_graph(n, 0.2 + 0.2 * (trial % 3), rng);
      for (int r : {2, 3}) {
        for (const Problem& p : all_kinds(r)) {
          const SolveOutcome exact = solve_exact(g, p);
          const SolveOutcome brute = brute_force_reference(g, p);
          const auto expect = oracle::optimum(g, p);
          INFO("n=", n, " problem=", describe(p));
          REQUIRE(optimum_value(exact) == expect);
          REQUIRE(optimum_value(brute) == expect);
          if (is_optimal(exact)) REQUIRE(verify(g, p, solution_of(exact)).passed());
          if (is_optimal(brute)) REQUIRE(verify(g, p, solution_of(brute)).passed());
        }
      }
    }
  }

  TEST_CASE("empty exact neighborhoods") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 120; ++trial) {
      const Graph g = oracle::random_graph(2 + trial % 7, 0.4, rng);
      const DistanceOracle d(g);
      for (int r : {2, 3}) {
        VertexSet lonely;
        for (int v = 0; v < g.order(); ++v)
          if (d.exact_neighborhood(v, r).empty()) lonely.push_back(v);
        REQUIRE(is_infeasible(solve_exact(g, Problem::step(r))) == !lonely.empty());
        const Solution hop = solution_of(solve_exact(g, Problem::hop(r)));
        for (Vertex v : lonely) REQUIRE(std::binary_search(hop.set().begin(), hop.set().end(), v));
        const Solution rom = solution_of(solve_exact(g, Problem::hop_roman(r)));
        for (Vertex v : lonely) REQUIRE(rom.labeling()[v] >= 1);
      }
    }
  }

  TEST_CASE("superset closure for step and hop witnesses") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = oracle::random_graph(3 + trial % 7, 0.35, rng);
      const int r = 2 + trial % 2;
      for (const Problem& p : {Problem::step(r), Problem::hop(r)}) {
        const SolveOutcome o = solve_exact(g, p);
        if (!is_optimal(o)) continue;
        VertexSet s = solution_of(o).set();
        const Vertex extra = static_cast<Vertex>(rng() % g.order());
        s.push_back(extra);
        REQUIRE(verify(g, p, Solution::from_set(s)).passed());
      }
    }
  }

  TEST_CASE("greedy is feasible and never below the optimum") {
    CHECK_FALSE(greedy_approx(complete(3), Problem::step(2)));
    const auto p4 = greedy_approx(path(4), Problem::hop(2));
    REQUIRE(p4);
    CHECK(p4->value >= 2);
    CHECK(verify(path(4), Problem::hop(2), *p4).passed());
    CHECK_THROWS(greedy_approx(path(4), Problem::roman()));
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
      const Graph g = oracle::random_graph(2 + trial % 9, 0.3, rng);
      for (const Problem& p : {Problem::domination(), Problem::total_domination(), Problem::step(2), Problem::hop(3)}) {
        const auto approx = greedy_approx(g, p);
        const auto exact = solve_exact(g, p);
        REQUIRE(approx.has_value() == is_optimal(exact));
        if (!approx) continue;
        REQUIRE(verify(g, p, *approx).passed());
        REQUIRE(approx->value >= solution_of(exact).value);
      }
    }
  }

  TEST_CASE("requirement sets by kind") {
    const Graph g = path(4);
    CHECK(requirement_sets(g, Problem::domination())[1] == VertexSet{0, 1, 2});
    CHECK(requirement_sets(g, Problem::total_domination())[1] == VertexSet{0, 2});
    CHECK(requirement_sets(g, Problem::step(2))[1] == VertexSet{3});
    CHECK(requirement_sets(g, Problem::hop(2))[1] == VertexSet{1, 3});
    CHECK(requirement_sets(g, Problem::hop_roman(2))[0] == VertexSet{2});
  }
}
