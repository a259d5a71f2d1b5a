#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "proprep/core.hpp"

namespace proprep {

// Min-cost flow with lower bounds on arcs. Lower bounds are removed by the
// usual excess/deficit transform, then successive shortest paths with
// Dijkstra potentials. Costs must be nonnegative.
class FlowNetwork {
 public:
  static constexpr Value kInf = std::numeric_limits<Value>::max() / 4;

  explicit FlowNetwork(int vertices);
  int add_vertex();
  // Returns the arc id.
  int add_arc(int from, int to, Value lower, Value cap, Value cost);

  // Minimum-cost flow from s to t that satisfies all bounds, with any flow
  // value. Returns nullopt when the bounds cannot be met.
  std::optional<Value> min_cost_feasible(int s, int t);
  Value flow(int arc) const;

 private:
  struct Edge {
    int to;
    Value cap;
    Value cost;
  };
  struct Arc {
    int edge;
    Value lower;
  };
  int add_edge(int from, int to, Value cap, Value cost);
  Value ssp(int s, int t, Value need, Value& cost);

  int nv_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<Value> balance_;
};

// Per-voter argmin over the committee, lowest candidate index on ties.
Assignment assign_cc(const std::vector<int>& winners, const MisrepMatrix& r);

// Minimum-sum assignment respecting the M-criterion.
Assignment assign_monroe_sum(const std::vector<int>& winners, const MisrepMatrix& r);

// M-criterion assignment using only pairs with r(v,c) <= R, minimum sum among
// those; nullopt when none exists.
std::optional<Assignment> assign_monroe_minimax(const std::vector<int>& winners,
                                                const MisrepMatrix& r, Value R);

// Smallest achievable maximum under the M-criterion, with its assignment.
Assignment assign_monroe_bottleneck(const std::vector<int>& winners, const MisrepMatrix& r);

// Best assignment of the committee for the rule and objective.
Assignment assign_best(const std::vector<int>& winners, const MisrepMatrix& r, Rule rule,
                       Objective obj);

// Rectangular min-cost assignment: rows (<= cols) to distinct columns.
// Returns column per row.
std::vector<int> hungarian(const std::vector<std::vector<Value>>& cost);

// Does a row-perfect matching exist using only allowed[row][col]?
std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<char>>& allowed);

// Row-perfect matching minimizing the largest used cost.
std::vector<int> bottleneck_matching(const std::vector<std::vector<Value>>& cost);

constexpr int kBalancedEnumMaxN = 10;

// Calls visit for every voter map onto the winners whose block sizes satisfy
// the M-criterion. Throws BudgetExceeded for n above the guard.
void enumerate_balanced_assignments(const std::vector<int>& winners, int n,
                                    const std::function<void(const Assignment&)>& visit,
                                    int max_n = kBalancedEnumMaxN);

}  // namespace proprep
