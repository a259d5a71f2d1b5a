#include "doctest.h"

#include "proprep/generators.hpp"
#include "proprep/hardness.hpp"
#include "proprep/solvers.hpp"

using namespace proprep;

namespace {

HittingSetInstance two_sets() { return {3, {{0, 1}, {1, 2}}}; }

}  // namespace

TEST_CASE("hitting set approval construction sizes") {
  auto one = gen_hs_approval(two_sets(), 1, Rule::Monroe, Objective::Sum);
  CHECK(one.m() == 3);
  CHECK(one.n() == 2);
  CHECK(one.R == 0);
  auto s = solve_subset_enum(one);
  CHECK(s.value == 0);
  CHECK(s.assignment.winners == std::vector<int>{1});

  auto two = gen_hs_approval(two_sets(), 2, Rule::CC, Objective::Sum);
  CHECK(two.m() == 3);
  CHECK(two.n() == 4);
}

TEST_CASE("unused element only serves dummies") {
  HittingSetInstance hs{3, {{0}, {1}}};
  auto inst = gen_hs_approval(hs, 2, Rule::CC, Objective::Sum);
  for (int v = 0; v < 2; ++v) CHECK(inst.matrix.at(v, 2) == 1);
  for (int v = 2; v < inst.n(); ++v) CHECK(inst.matrix.at(v, 2) == 0);
}

TEST_CASE("hitting set borda construction sizes") {
  HittingSetInstance hs{2, {{0}, {1}}};
  auto inst = gen_hs_borda(hs, 2, Rule::CC, Objective::Sum);
  CHECK(inst.m() == 2 + 4 * 8);  // z = nmk = 8 blockers for each of nk = 4 indices
  CHECK(inst.n() == 4);
  CHECK(inst.R == 2 * 2 * 2);
  CHECK(gen_hs_borda(hs, 2, Rule::CC, Objective::Minimax).R == 1);
  HittingSetInstance big{5, {{0}, {1}}};
  CHECK_THROWS_AS(gen_hs_borda(big, 1, Rule::CC, Objective::Sum), BudgetExceeded);
}

TEST_CASE("hitting set borda equivalence on tiny instances") {
  SolverBudget b;
  b.subset_max_m = 70;
  HittingSetInstance yes{2, {{0}, {1}}};
  CHECK(brute_hitting_set(yes, 2));
  CHECK(solve_subset_enum(gen_hs_borda(yes, 2, Rule::CC, Objective::Sum), b).value <= 8);
  CHECK_FALSE(brute_hitting_set(yes, 1));
  auto no = gen_hs_borda(yes, 1, Rule::CC, Objective::Sum);
  CHECK(solve_subset_enum(no, b).value > no.R);
}

TEST_CASE("vertex cover construction") {
  std::vector<std::pair<int, int>> tri{{0, 1}, {1, 2}, {0, 2}};
  auto inst = gen_vc_minimax(3, tri, 2, 1);
  CHECK(brute_vertex_cover(3, tri, 2));
  CHECK(solve_subset_enum(inst).value <= 1);
  auto padded = gen_vc_minimax(3, tri, 2, 2);
  CHECK(padded.m() == 3 + 3);
  CHECK(solve_subset_enum(padded).value <= 2);
  auto edge = gen_vc_minimax(2, {{0, 1}}, 1, 1);
  CHECK(solve_subset_enum(edge).value <= 1);
  CHECK_THROWS_AS(gen_vc_minimax(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 1, 1), InvalidInput);
}

TEST_CASE("exact cover construction") {
  RX3CInstance x{3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  CHECK(brute_exact_3_cover(x));
  auto g = gen_rx3c_monroe(x);
  CHECK(g.instance.m() == 6);
  CHECK(g.instance.n() == 12);
  CHECK(g.instance.k == 4);
  CHECK(g.instance.R == 18);
  CHECK(check_single_troughed(g.instance.matrix, g.axis));
  CHECK(is_single_peaked(g.instance.election, g.axis));
  CHECK(solve_subset_enum(g.instance).value == 18);
}

TEST_CASE("element voters are uniquely closest to their element") {
  gen::Rng rng(4);
  auto g = gen_rx3c_monroe(gen::random_rx3c(6, rng));
  const auto& r = g.instance.matrix;
  const int n = 6;
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < 3; ++x) {
      int v = 4 * i + x;
      for (int y = 0; y < g.instance.n(); ++y)
        if (y / 4 != i && y % 4 < 3) CHECK(r.at(v, i) < r.at(y, i));
    }
}

TEST_CASE("brute oracles") {
  CHECK(brute_hitting_set(two_sets(), 1));
  CHECK_FALSE(brute_hitting_set({2, {{0}, {1}}}, 1));
  CHECK_THROWS_AS(brute_hitting_set({13, {{0}}}, 1), BudgetExceeded);
  CHECK_THROWS_AS(RX3CInstance({3, {{0, 1, 2}, {0, 1, 2}}}).validate(), InvalidInput);
  CHECK_FALSE(brute_vertex_cover(3, {{0, 1}, {1, 2}, {0, 2}}, 1));
}

TEST_CASE("random exact cover instances are valid") {
  gen::Rng rng(12);
  for (int t = 0; t < 20; ++t) CHECK_NOTHROW(gen::random_rx3c(6, rng).validate());
  CHECK_THROWS_AS(gen::random_rx3c(4, rng), InvalidInput);
}
