#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proprep/core.hpp"

namespace proprep {

struct SolverBudget {
  int subset_max_m = 20;
  int partition_max_n = 9;
  int constant_r_max_R = 3;
  std::int64_t max_nodes = 50'000'000;
  double max_seconds = 0;  // 0 = unlimited
  int threads = 1;         // subset enumeration only
};

// Optimal solution over all committees. Ties go to the lexicographically
// smallest committee.
Solution solve_subset_enum(const ProblemInstance& inst, const SolverBudget& b = {});
// Same, restricted to committees drawn from `allowed`; nullopt if
// |allowed| < k.
std::optional<Solution> solve_subset_enum_over(const ProblemInstance& inst,
                                               const std::vector<int>& allowed,
                                               const SolverBudget& b = {});

// Optimal solution by enumerating voter partitions.
Solution solve_partition_enum(const ProblemInstance& inst, const SolverBudget& b = {});

// Decision solvers: a witness with value <= inst.R, or nullopt.
// `stats` receives the search counters on both outcomes.
std::optional<Solution> solve_cc_branch_rk(const ProblemInstance& inst,
                                           const SolverBudget& b = {},
                                           SolverStats* stats = nullptr);
std::optional<Solution> solve_minimax_cc_branch_rk(const ProblemInstance& inst,
                                                   const SolverBudget& b = {});
std::optional<Solution> solve_constantR(const ProblemInstance& inst, const SolverBudget& b = {});
std::optional<Solution> solve_m_mw_rk(const ProblemInstance& inst, const SolverBudget& b = {});
std::optional<Solution> solve_minimax_m_mw_rk(const ProblemInstance& inst,
                                              const SolverBudget& b = {});
std::optional<Solution> solve_minimax_R0(const ProblemInstance& inst);

// Candidates representing some voter at cost 0.
std::vector<int> zero_candidates(const MisrepMatrix& r);
// max_v |{c : r(v,c) <= R}|
int max_sublevel_size(const MisrepMatrix& r, Value R);

enum class SolverKind {
  Subset,
  Partition,
  Branch,        // CC, both objectives
  ConstantR,
  FptRk,         // Monroe, both objectives
  R0,
  SinglePeaked,  // DP / greedy / stabbing pipeline by rule and objective
};

const char* to_string(SolverKind k);
std::optional<SolverKind> parse_solver_kind(const std::string& s);

// Whether the solver accepts this rule/objective/matrix class at all,
// ignoring R. Does not check single-peakedness.
bool supports(SolverKind k, const ProblemInstance& inst);

// Decision at inst.R with the chosen solver.
std::optional<Solution> decide(const ProblemInstance& inst, SolverKind kind,
                               const SolverBudget& b = {});

// Optimal value via decision queries (galloping then binary search over R,
// or over the distinct matrix values for minimax).
Solution optimize(const ProblemInstance& inst, SolverKind kind, const SolverBudget& b = {});

}  // namespace proprep
