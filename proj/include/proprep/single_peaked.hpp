#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "proprep/core.hpp"

namespace proprep {

// Candidate indices from left to right.
using Axis = std::vector<int>;

bool check_compatible(const std::vector<int>& vote, const Axis& axis);
bool is_single_peaked(const Election& e, const Axis& axis);

// Some axis making every vote compatible, oriented so that the first element
// has the smaller index of the two ends; nullopt if none exists.
std::optional<Axis> detect_axis(const Election& e);
// Exhaustive search over all permutations; reference for small m.
std::optional<Axis> detect_axis_brute(const Election& e);

bool check_single_troughed(const MisrepMatrix& r, const Axis& axis);

// 1-based axis positions [left, right] of {c : r(v,c) <= R}. Throws
// PreconditionError if that set is not contiguous on the axis.
std::optional<std::pair<int, int>> representation_interval(int voter, const MisrepMatrix& r,
                                                           const Axis& axis, Value R);

// A ranking compatible with the axis and monotone in the row: grow an
// interval from the leftmost minimum, taking the cheaper neighbour (left on
// ties). The row must be single-troughed on the axis.
std::vector<int> vote_from_row(std::span<const Value> row, const Axis& axis);

// Optimal CC sum for single-troughed matrices. stats->work counts table
// updates (n per improvement term plus one per z candidate).
Solution solve_cc_sum_sp(const ProblemInstance& inst, const Axis& axis);

// CC minimax decision at bound R by greedy interval stabbing.
std::optional<Solution> solve_cc_minimax_sp(const ProblemInstance& inst, const Axis& axis,
                                            Value R);

}  // namespace proprep
