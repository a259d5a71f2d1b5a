#pragma once

#include <array>
#include <vector>

#include "proprep/core.hpp"
#include "proprep/single_peaked.hpp"

namespace proprep {

struct HittingSetInstance {
  int universe = 0;                   // elements 0..universe-1
  std::vector<std::vector<int>> sets;
  void validate() const;
};

// Elements 0..n-1; every element lies in exactly three of the n triples.
struct RX3CInstance {
  int n = 0;
  std::vector<std::array<int, 3>> sets;
  void validate() const;
};

// Candidates are elements; one voter per set plus n(k-1) dummies approving
// everything; R = 0.
ProblemInstance gen_hs_approval(const HittingSetInstance& hs, int k, Rule rule, Objective obj);

struct HsBordaCaps {
  int max_sets = 4, max_universe = 4, max_k = 4;
};
// Borda construction with nk*z blocker candidates, z = nmk. R is nmk for the
// sum objective and m-1 for minimax.
ProblemInstance gen_hs_borda(const HittingSetInstance& hs, int k, Rule rule, Objective obj,
                             const HsBordaCaps& caps = {});

// Edges of a graph with maximum degree 3 over vertices 0..vertices-1; one
// voter per edge, R-1 private padding candidates per voter.
ProblemInstance gen_vc_minimax(int vertices, const std::vector<std::pair<int, int>>& edges, int k,
                               Value R, Rule rule = Rule::CC);

struct RX3CElection {
  ProblemInstance instance;
  Axis axis;
};
// Candidates e1..en then s1..sn; voters v_i^1, v_i^2, v_i^3, f_i per element.
RX3CElection gen_rx3c_monroe(const RX3CInstance& x);

constexpr int kBruteHsMaxU = 12;
constexpr int kBruteX3cMaxN = 9;
bool brute_hitting_set(const HittingSetInstance& hs, int k, int max_u = kBruteHsMaxU);
bool brute_exact_3_cover(const RX3CInstance& x, int max_n = kBruteX3cMaxN);

// Cover of every edge by at most k vertices.
bool brute_vertex_cover(int vertices, const std::vector<std::pair<int, int>>& edges, int k);

}  // namespace proprep
