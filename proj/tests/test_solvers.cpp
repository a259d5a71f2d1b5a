#include "doctest.h"
#include "fixtures.hpp"

#include <cmath>

#include "proprep/generators.hpp"
#include "proprep/solvers.hpp"

using namespace proprep;
using fixtures::three_voter;
using fixtures::six_voter;

TEST_CASE("subset enumeration on the three-voter profile") {
  auto s1 = solve_subset_enum(three_voter(Rule::CC, Objective::Sum, 1));
  CHECK(s1.value == 2);
  CHECK(s1.assignment.winners == std::vector<int>{1});
  auto s2 = solve_subset_enum(three_voter(Rule::CC, Objective::Sum, 2));
  CHECK(s2.value == 1);
  CHECK(s2.assignment.winners == std::vector<int>{0, 1});
  CHECK(solve_subset_enum(three_voter(Rule::CC, Objective::Sum, 3)).value == 0);
}

TEST_CASE("monroe on the six-voter profile selects a b c") {
  auto s = solve_subset_enum(six_voter(Rule::Monroe, Objective::Sum, 3));
  CHECK(s.value == 2);
  CHECK(s.assignment.winners == std::vector<int>{0, 1, 2});
  CHECK(s.m_criterion);
  CHECK(solve_partition_enum(six_voter(Rule::Monroe, Objective::Sum, 3)).value == 2);
}

TEST_CASE("partition enumeration agrees on every rule, objective and k") {
  for (Rule rule : {Rule::CC, Rule::Monroe})
    for (Objective obj : {Objective::Sum, Objective::Minimax})
      for (int k = 1; k <= 3; ++k) {
        auto inst = three_voter(rule, obj, k);
        CHECK(solve_partition_enum(inst).value == solve_subset_enum(inst).value);
      }
}

TEST_CASE("budgets are enforced") {
  SolverBudget b;
  b.subset_max_m = 3;
  CHECK_THROWS_AS(solve_subset_enum(three_voter(Rule::CC, Objective::Sum, 1), b), BudgetExceeded);
  b.partition_max_n = 2;
  CHECK_THROWS_AS(solve_partition_enum(three_voter(Rule::CC, Objective::Sum, 1), b), BudgetExceeded);
}

TEST_CASE("cc branching") {
  auto w = solve_cc_branch_rk(three_voter(Rule::CC, Objective::Sum, 1, 2));
  REQUIRE(w);
  CHECK(w->assignment.winners == std::vector<int>{1});
  CHECK(w->value == 2);
  auto z = solve_cc_branch_rk(three_voter(Rule::CC, Objective::Sum, 3, 0));
  REQUIRE(z);
  CHECK(z->assignment.winners == std::vector<int>{0, 1, 2});
  CHECK_FALSE(solve_cc_branch_rk(three_voter(Rule::CC, Objective::Sum, 1, 1)));
  CHECK_THROWS_AS(solve_cc_branch_rk(three_voter(Rule::CC, Objective::Minimax, 1, 1)), PreconditionError);
}

TEST_CASE("cc branching rejects dense matrices") {
  auto e = fixtures::three_voter_election();
  auto inst = ProblemInstance::make(e, MisrepSpec::approval({{0, 1, 2}, {1, 2}, {2}}), Rule::CC,
                                    Objective::Sum, 1, 0);
  CHECK_THROWS_AS(solve_cc_branch_rk(inst), PreconditionError);
}

TEST_CASE("minimax cc branching") {
  auto w = solve_minimax_cc_branch_rk(three_voter(Rule::CC, Objective::Minimax, 1, 1));
  REQUIRE(w);
  CHECK(w->assignment.winners == std::vector<int>{1});
  CHECK_FALSE(solve_minimax_cc_branch_rk(three_voter(Rule::CC, Objective::Minimax, 2, 0)));
  CHECK(solve_minimax_cc_branch_rk(three_voter(Rule::CC, Objective::Minimax, 1, 3)));
}

TEST_CASE("constant-R solver") {
  auto z = solve_constantR(three_voter(Rule::CC, Objective::Sum, 3, 0));
  REQUIRE(z);
  CHECK(z->assignment.winners == std::vector<int>{0, 1, 2});
  auto one = solve_constantR(three_voter(Rule::CC, Objective::Sum, 2, 1));
  REQUIRE(one);
  CHECK(one->value == 1);
  CHECK_FALSE(solve_constantR(three_voter(Rule::CC, Objective::Sum, 1, 1)));
  SolverBudget b;
  b.constant_r_max_R = 1;
  CHECK_THROWS_AS(solve_constantR(three_voter(Rule::CC, Objective::Sum, 1, 2), b), BudgetExceeded);
}

TEST_CASE("monroe fpt solvers") {
  auto s = solve_m_mw_rk(six_voter(Rule::Monroe, Objective::Sum, 3, 2));
  REQUIRE(s);
  CHECK(s->value == 2);
  CHECK(s->assignment.winners == std::vector<int>{0, 1, 2});

  // Seven voters with distinct tops, k = 1, R = 1: more than R + k zero-candidates.
  std::vector<std::string> names;
  std::vector<std::vector<int>> votes;
  for (int c = 0; c < 7; ++c) names.push_back("c" + std::to_string(c + 1));
  for (int v = 0; v < 7; ++v) {
    std::vector<int> vote{v};
    for (int c = 0; c < 7; ++c)
      if (c != v) vote.push_back(c);
    votes.push_back(vote);
  }
  auto spread = ProblemInstance::make(Election(names, votes), MisrepSpec::borda(), Rule::Monroe,
                                      Objective::Sum, 1, 1);
  CHECK_FALSE(solve_m_mw_rk(spread));

  auto mm = solve_minimax_m_mw_rk(three_voter(Rule::Monroe, Objective::Minimax, 3, 0));
  REQUIRE(mm);
  CHECK(mm->assignment.winners == std::vector<int>{0, 1, 2});
  auto six_mm = six_voter(Rule::Monroe, Objective::Minimax, 3, 1);
  auto oracle = solve_subset_enum(six_mm);
  CHECK(solve_minimax_m_mw_rk(six_mm).has_value() == (oracle.value <= 1));
  CHECK(solve_minimax_m_mw_rk(six_voter(Rule::Monroe, Objective::Minimax, 3, 3)));
}

TEST_CASE("zero bound minimax") {
  CHECK(solve_minimax_R0(three_voter(Rule::CC, Objective::Minimax, 3, 0)));
  CHECK_FALSE(solve_minimax_R0(three_voter(Rule::CC, Objective::Minimax, 2, 0)));
  CHECK_FALSE(solve_minimax_R0(six_voter(Rule::Monroe, Objective::Minimax, 3, 0)));
}

TEST_CASE("optimize through decision solvers") {
  CHECK(optimize(three_voter(Rule::CC, Objective::Minimax, 1), SolverKind::Branch).value == 1);
  CHECK(optimize(three_voter(Rule::CC, Objective::Sum, 2), SolverKind::Branch).value == 1);
  CHECK(optimize(three_voter(Rule::CC, Objective::Sum, 3), SolverKind::Subset).value == 0);
  CHECK(optimize(six_voter(Rule::Monroe, Objective::Sum, 3), SolverKind::FptRk).value == 2);
}

TEST_CASE("solver names round-trip") {
  for (SolverKind k : {SolverKind::Subset, SolverKind::Partition, SolverKind::Branch,
                       SolverKind::ConstantR, SolverKind::FptRk, SolverKind::R0,
                       SolverKind::SinglePeaked})
    CHECK(parse_solver_kind(to_string(k)) == k);
  CHECK_FALSE(parse_solver_kind("nope"));
}

TEST_CASE("parallel subset enumeration keeps the tie-break") {
  gen::Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    auto e = gen::random_election(gen::uniform(rng, 3, 8), gen::uniform(rng, 3, 8), rng);
    int k = gen::uniform(rng, 1, 3);
    auto inst = ProblemInstance::make(e, MisrepSpec::borda(), Rule::CC, Objective::Sum, k, 0);
    SolverBudget b;
    b.threads = 3;
    auto a = solve_subset_enum(inst), p = solve_subset_enum(inst, b);
    CHECK(a.value == p.value);
    CHECK(a.assignment.winners == p.assignment.winners);
  }
}

TEST_CASE("branching tree stays within the leaf bound") {
  gen::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    int n = gen::uniform(rng, 1, 7), m = gen::uniform(rng, 1, 7);
    int k = gen::uniform(rng, 1, std::min({3, n, m}));
    Value R = gen::uniform(rng, 0, 4);
    auto inst = ProblemInstance::make(gen::random_election(n, m, rng), MisrepSpec::borda(),
                                      Rule::CC, Objective::Sum, k, R);
    auto oracle = solve_subset_enum(inst);
    SolverStats stats;
    auto w = solve_cc_branch_rk(inst, {}, &stats);
    CHECK(w.has_value() == (oracle.value <= R));
    if (w) CHECK(verify_solution(inst, *w).ok());
    CHECK(static_cast<double>(stats.leaves) <= std::pow(R + 1.0, static_cast<double>(R + k)));
  }
}
