#include "doctest.h"
#include "fixtures.hpp"

#include "proprep/generators.hpp"
#include "proprep/single_peaked.hpp"
#include "proprep/solvers.hpp"

using namespace proprep;
using fixtures::three_voter;
using fixtures::identity_axis;

TEST_CASE("compatibility with an axis") {
  Axis axis = identity_axis(4);
  CHECK(check_compatible({1, 2, 3, 0}, axis));
  CHECK_FALSE(check_compatible({0, 2, 1, 3}, axis));
  CHECK(check_compatible({1, 0}, {0, 1}));
  CHECK(check_compatible({0}, {0}));
}

TEST_CASE("axis detection on the three-voter profile") {
  auto axis = detect_axis(fixtures::three_voter_election());
  REQUIRE(axis);
  CHECK(*axis == Axis{0, 1, 2, 3});
}

TEST_CASE("cyclic profile is not single-peaked") {
  Election cyc({"a", "b", "c"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK_FALSE(detect_axis(cyc));
  CHECK_FALSE(detect_axis_brute(cyc));
}

TEST_CASE("trivial axes") {
  CHECK(detect_axis(Election({"x"}, {{0}})).value() == Axis{0});
  Election one({"a", "b", "c", "d"}, {{2, 0, 3, 1}});
  auto axis = detect_axis(one);
  REQUIRE(axis);
  CHECK(is_single_peaked(one, *axis));
}

TEST_CASE("detect_axis agrees with exhaustive search") {
  gen::Rng rng(17);
  for (int t = 0; t < 400; ++t) {
    int m = gen::uniform(rng, 1, 6), n = gen::uniform(rng, 1, 5);
    Election e = t % 2 ? gen::random_election(n, m, rng) : gen::random_sp_election(n, m, rng).first;
    auto fast = detect_axis(e);
    auto slow = detect_axis_brute(e);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(is_single_peaked(e, *fast));
      CHECK(fast->front() <= fast->back());
    }
  }
}

TEST_CASE("single-troughed matrices") {
  auto inst = three_voter(Rule::CC, Objective::Sum, 1);
  CHECK(check_single_troughed(inst.matrix, identity_axis(4)));
  MisrepMatrix bad(1, 4, {1, 0, 1, 0});
  CHECK_FALSE(check_single_troughed(bad, identity_axis(4)));
  MisrepMatrix block(1, 5, {1, 0, 0, 1, 1});
  CHECK(check_single_troughed(block, identity_axis(5)));
}

TEST_CASE("representation intervals") {
  auto inst = three_voter(Rule::CC, Objective::Sum, 1);
  Axis axis = identity_axis(4);
  CHECK(representation_interval(0, inst.matrix, axis, 1) == std::pair{1, 2});
  CHECK(representation_interval(1, inst.matrix, axis, 3) == std::pair{1, 4});
  MisrepMatrix none(1, 3, {1, 1, 1});
  CHECK_FALSE(representation_interval(0, none, identity_axis(3), 0));
  MisrepMatrix split(1, 3, {0, 1, 0});
  CHECK_THROWS_AS(representation_interval(0, split, identity_axis(3), 0), PreconditionError);
}

TEST_CASE("cc sum dynamic program on the three-voter profile") {
  Axis axis = identity_axis(4);
  auto s1 = solve_cc_sum_sp(three_voter(Rule::CC, Objective::Sum, 1), axis);
  CHECK(s1.value == 2);
  CHECK(s1.assignment.winners == std::vector<int>{1});
  CHECK(solve_cc_sum_sp(three_voter(Rule::CC, Objective::Sum, 2), axis).value == 1);
  CHECK(solve_cc_sum_sp(three_voter(Rule::CC, Objective::Sum, 3), axis).value == 0);
}

TEST_CASE("cc minimax greedy on the three-voter profile") {
  Axis axis = identity_axis(4);
  auto w = solve_cc_minimax_sp(three_voter(Rule::CC, Objective::Minimax, 1), axis, 1);
  REQUIRE(w);
  CHECK(w->assignment.winners == std::vector<int>{1});
  CHECK_FALSE(solve_cc_minimax_sp(three_voter(Rule::CC, Objective::Minimax, 2), axis, 0));
  CHECK(solve_cc_minimax_sp(three_voter(Rule::CC, Objective::Minimax, 1), axis, 3));
}

TEST_CASE("single-peaked CC solvers match the oracle, on both axis orientations") {
  gen::Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    int n = gen::uniform(rng, 1, 8), m = gen::uniform(rng, 1, 8);
    int k = gen::uniform(rng, 1, std::min({3, n, m}));
    auto [e, axis] = gen::random_sp_election(n, m, rng);
    MisrepSpec spec = t % 2 ? MisrepSpec::borda()
                            : MisrepSpec::approval(gen::random_prefix_approvals(e, rng));
    auto sum = ProblemInstance::make(e, spec, Rule::CC, Objective::Sum, k, 0);
    auto oracle = solve_subset_enum(sum);
    Axis rev(axis.rbegin(), axis.rend());
    CHECK(check_single_troughed(sum.matrix, axis));
    CHECK(solve_cc_sum_sp(sum, axis).value == oracle.value);
    CHECK(solve_cc_sum_sp(sum, rev).value == oracle.value);

    auto mm = sum.with(Rule::CC, Objective::Minimax, k, 0);
    Value best = solve_subset_enum(mm).value;
    for (Value R : sum.matrix.distinct_values()) {
      auto g = solve_cc_minimax_sp(mm.with(Rule::CC, Objective::Minimax, k, R), axis, R);
      CHECK(g.has_value() == (best <= R));
      if (g) CHECK(verify_solution(mm.with(Rule::CC, Objective::Minimax, k, R), *g).ok());
      CHECK(solve_cc_minimax_sp(mm, rev, R).has_value() == (best <= R));
    }
  }
}

TEST_CASE("dynamic program work stays within n m^2") {
  gen::Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    int n = gen::uniform(rng, 1, 30), m = gen::uniform(rng, 1, 30);
    int k = gen::uniform(rng, 1, std::min(n, m));
    auto [e, axis] = gen::random_sp_election(n, m, rng);
    auto inst = ProblemInstance::make(e, MisrepSpec::borda(), Rule::CC, Objective::Sum, k, 0);
    auto s = solve_cc_sum_sp(inst, axis);
    CHECK(s.stats.work <= 2 * static_cast<std::int64_t>(n) * m * m);
  }
}

TEST_CASE("vote_from_row gives a compatible monotone ranking") {
  MisrepMatrix r(1, 5, {3, 1, 0, 0, 2});
  Axis axis = identity_axis(5);
  auto vote = vote_from_row(r.row(0), axis);
  CHECK(check_compatible(vote, axis));
  for (size_t i = 1; i < vote.size(); ++i) CHECK(r.at(0, vote[i - 1]) <= r.at(0, vote[i]));
}
