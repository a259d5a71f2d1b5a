#pragma once

#include "proprep/core.hpp"
#include "proprep/single_peaked.hpp"

namespace fixtures {

using namespace proprep;

// Three voters on four candidates, single-peaked on c1 c2 c3 c4.
inline Election three_voter_election() {
  return Election({"c1", "c2", "c3", "c4"}, {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 1, 0, 3}});
}

inline ProblemInstance three_voter(Rule rule, Objective obj, int k, Value R = 0) {
  return ProblemInstance::make(three_voter_election(), MisrepSpec::borda(), rule, obj, k, R);
}

// 4 x (a b c d), 2 x (c b a d).
inline Election six_voter_election() {
  std::vector<std::vector<int>> votes(4, {0, 1, 2, 3});
  votes.push_back({2, 1, 0, 3});
  votes.push_back({2, 1, 0, 3});
  return Election({"a", "b", "c", "d"}, votes);
}

inline ProblemInstance six_voter(Rule rule, Objective obj, int k, Value R = 0) {
  return ProblemInstance::make(six_voter_election(), MisrepSpec::borda(), rule, obj, k, R);
}

inline Axis identity_axis(int m) {
  Axis a(m);
  for (int i = 0; i < m; ++i) a[i] = i;
  return a;
}

}  // namespace fixtures
