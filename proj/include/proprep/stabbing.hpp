#pragma once

#include <optional>
#include <vector>

#include "proprep/core.hpp"
#include "proprep/single_peaked.hpp"

namespace proprep {

struct Interval {
  int l = 1;
  int r = 1;
  bool operator==(const Interval&) const = default;
};

// Lines are the coordinates 1..m. Capacities come from n and k: kc = n mod k
// lines may take ceil(n/k) intervals, the rest floor(n/k). n defaults to the
// number of intervals; the Monroe reduction sets it to the voter count.
struct StabbingInstance {
  int m = 1;
  int k = 1;
  int n = 0;
  std::vector<Interval> intervals;

  static StabbingInstance make(int m, int k, std::vector<Interval> intervals, int n = -1);
  int kc() const { return k > 0 ? n % k : 0; }
  int kf() const { return k - kc(); }
  int cap_c() const { return k > 0 ? (n + k - 1) / k : 0; }
  int cap_f() const { return k > 0 ? n / k : 0; }
  void validate() const;
};

struct StabbingCover {
  int covered = 0;
  std::vector<int> lines;                  // coordinates, increasing
  std::vector<std::vector<int>> assigned;  // interval indices per line
};

// Checks that the cover respects containment and the balanced capacities and
// that `covered` matches. Returns an empty string when valid.
std::string check_cover(const StabbingInstance& s, const StabbingCover& c);

struct StabbingStats {
  std::int64_t entries = 0;
};

StabbingCover solve_max_bal_1rs(const StabbingInstance& s, StabbingStats* stats = nullptr);

constexpr int kBruteStabMaxU = 8;
constexpr int kBruteStabMaxM = 6;
int brute_force_stabbing(const StabbingInstance& s, int max_u = kBruteStabMaxU,
                         int max_m = kBruteStabMaxM);

struct MonroeReduction {
  StabbingInstance stab;
  Axis axis;
  std::vector<int> interval_voter;  // stabbing interval index -> voter
  std::vector<int> no_interval;     // voters with an empty zero set
};

// One line per axis position, one interval per voter spanning the candidates
// with r(v,c) = 0. The matrix must be 0/1 with contiguous zero sets.
MonroeReduction reduce_m_mw_sp(const ProblemInstance& inst, const Axis& axis);
MonroeReduction reduce_m_mw_sp(const MisrepMatrix& zero_one, int k, const Axis& axis);

// Pads the cover to k winners and places the remaining voters so that the
// M-criterion holds. Value and flag are recomputed on inst.
Solution complete_assignment(const ProblemInstance& inst, const MonroeReduction& red,
                             const StabbingCover& cover);

// Monroe sum optimum for 0/1 matrices on a single-peaked profile.
Solution solve_m_mw_sp(const ProblemInstance& inst, const Axis& axis);

// Monroe minimax decision at bound R for single-troughed matrices.
std::optional<Solution> solve_minimax_m_mw_sp(const ProblemInstance& inst, const Axis& axis,
                                              Value R);

}  // namespace proprep
