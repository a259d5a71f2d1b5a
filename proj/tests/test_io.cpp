#include "doctest.h"
#include "fixtures.hpp"

#include "proprep/generators.hpp"
#include "proprep/io.hpp"
#include "proprep/solvers.hpp"

using namespace proprep;

namespace {

const char* kThreeVoter =
    "proprep v1\n"
    "4 3 1 2 cc sum borda\n"
    "c1\nc2\nc3\nc4\n"
    "c1 c2 c3 c4\n"
    "c2 c3 c4 c1\n"
    "c3 c2 c1 c4\n";

int error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("parse the three-voter file") {
  auto inst = parse_instance(std::string(kThreeVoter));
  CHECK(inst.election == fixtures::three_voter_election());
  CHECK(inst.k == 1);
  CHECK(inst.R == 2);
  CHECK(render_instance(inst) == kThreeVoter);
}

TEST_CASE("parse errors carry line numbers") {
  std::string bad_vote = kThreeVoter;
  bad_vote.replace(bad_vote.find("c2 c3 c4 c1"), 11, "c2 c3 c9 c1");
  CHECK(error_line(bad_vote) == 8);
  CHECK(error_line("proprep v2\n") == 1);
  CHECK(error_line("proprep v1\n4 3 1 2 cc sum borda\nc1\n") == 4);
  CHECK(error_line("proprep v1\n1 1 1 0 cc best borda\nx\nx\n") == 2);
  std::string short_vote = kThreeVoter;
  short_vote.replace(short_vote.find("c3 c2 c1 c4"), 11, "c3 c2 c1");
  CHECK(error_line(short_vote) == 9);
}

TEST_CASE("approval and explicit blocks") {
  std::string text =
      "proprep v1\n2 2 1 0 monroe minimax approval\na\nb\na b\nb a\n#approve\na\n-\n";
  auto inst = parse_instance(text);
  CHECK(inst.matrix.at(0, 0) == 0);
  CHECK(inst.matrix.at(1, 0) == 1);
  CHECK(inst.matrix.at(1, 1) == 1);
  CHECK(render_instance(inst) == text);

  std::string frac = "proprep v1\n2 1 1 0 cc sum explicit\na\nb\na b\n#matrix\n1/2 3/4\n";
  auto f = parse_instance(frac);
  CHECK(f.matrix.at(0, 0) == 2);
  CHECK(f.matrix.at(0, 1) == 3);
  CHECK(render_instance(f) == "proprep v1\n2 1 1 0 cc sum explicit\na\nb\na b\n#matrix\n2 3\n");

  CHECK(error_line("proprep v1\n2 1 1 0 cc sum explicit\na\nb\na b\n#matrix\n2 1\n") > 0);
  CHECK(error_line("proprep v1\n2 1 1 0 cc sum approval\na\nb\na b\n") > 0);
}

TEST_CASE("render and parse round-trip on generated instances") {
  gen::Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    int n = gen::uniform(rng, 1, 8), m = gen::uniform(rng, 1, 8);
    int k = gen::uniform(rng, 1, std::min(n, m));
    auto e = gen::random_election(n, m, rng);
    MisrepSpec spec = t % 2 ? MisrepSpec::borda()
                            : MisrepSpec::approval(gen::random_prefix_approvals(e, rng));
    auto inst = ProblemInstance::make(e, spec, t % 3 ? Rule::CC : Rule::Monroe,
                                      t % 5 ? Objective::Sum : Objective::Minimax, k,
                                      gen::uniform(rng, 0, 9));
    std::string text = render_instance(inst);
    auto back = parse_instance(text);
    CHECK(back.election == inst.election);
    CHECK(back.matrix == inst.matrix);
    CHECK(back.rule == inst.rule);
    CHECK(back.objective == inst.objective);
    CHECK(back.k == inst.k);
    CHECK(back.R == inst.R);
    CHECK(render_instance(back) == text);
  }
}

TEST_CASE("solution records round-trip") {
  auto inst = fixtures::six_voter(Rule::Monroe, Objective::Sum, 3, 2);
  Solution s = solve_subset_enum(inst);
  std::string text = render_solution(inst, s);
  CHECK(text.find("winners: [a, b, c]") != std::string::npos);
  CHECK(text.find("loads: [2, 2, 2]") != std::string::npos);
  Solution back = parse_solution(text, inst);
  CHECK(back.value == s.value);
  CHECK(back.assignment.winners == s.assignment.winners);
  CHECK(back.assignment.map == s.assignment.map);
  CHECK(back.m_criterion);
  CHECK_THROWS_AS(parse_solution("value: 2\n", inst), ParseError);
}
