#include "proprep/stabbing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "proprep/assignment.hpp"

namespace proprep {

StabbingInstance StabbingInstance::make(int m, int k, std::vector<Interval> intervals, int n) {
  StabbingInstance s;
  s.m = m;
  s.k = k;
  s.n = n < 0 ? static_cast<int>(intervals.size()) : n;
  s.intervals = std::move(intervals);
  s.validate();
  return s;
}

void StabbingInstance::validate() const {
  if (m < 1) throw InvalidInput("stabbing instance needs m >= 1");
  if (k < 1) throw InvalidInput("stabbing instance needs k >= 1");
  if (n < static_cast<int>(intervals.size()))
    throw InvalidInput("capacity basis n smaller than the number of intervals");
  for (const Interval& u : intervals)
    if (u.l < 1 || u.r > m || u.l > u.r) throw InvalidInput("interval outside [1, m]");
}

std::string check_cover(const StabbingInstance& s, const StabbingCover& c) {
  if (c.lines.size() != c.assigned.size()) return "lines and assignment lists differ in length";
  if (static_cast<int>(c.lines.size()) > s.k) return "more than k lines";
  std::vector<char> seen(s.intervals.size(), 0);
  int covered = 0, full = 0;
  for (size_t i = 0; i < c.lines.size(); ++i) {
    const int x = c.lines[i];
    if (x < 1 || x > s.m) return "line outside [1, m]";
    if (i > 0 && c.lines[i - 1] >= x) return "lines not strictly increasing";
    const int load = static_cast<int>(c.assigned[i].size());
    if (load > s.cap_c()) return "line " + std::to_string(x) + " over capacity";
    if (load > s.cap_f()) ++full;
    for (int u : c.assigned[i]) {
      if (u < 0 || u >= static_cast<int>(s.intervals.size())) return "bad interval index";
      if (seen[u]) return "interval assigned twice";
      seen[u] = 1;
      if (s.intervals[u].l > x || s.intervals[u].r < x) return "interval does not contain its line";
      ++covered;
    }
  }
  if (full > s.kc()) return "too many lines at the larger capacity";
  if (covered != c.covered) return "covered count mismatch";
  return {};
}

namespace {

enum Kind : std::uint8_t { kNone, kInit, kAlone, kMonoA, kMonoF, kMonoB, kReduce, kNewLine, kSplit };

struct Choice {
  Kind kind = kNone;
  std::int16_t x = 0;    // new line (kNewLine) or split point (kSplit)
  std::int8_t la = 0, lf = 0;
  std::int8_t c_type = 0;  // type of the new line: 1 = larger capacity
  bool left = false;       // split: left part nonempty
};

class MaxBalDP {
 public:
  explicit MaxBalDP(const StabbingInstance& s) : s_(s) {
    N_ = static_cast<int>(s.intervals.size());
    order_.resize(N_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return s.intervals[a].l < s.intervals[b].l; });
    for (int i = 0; i < N_; ++i) U_.push_back(s.intervals[order_[i]]);
    m_ = s.m;
    capc_ = s.cap_c();
    capf_ = s.cap_f();
    KC_ = s.kc();
    KF_ = capf_ > 0 ? s.kf() : 0;  // zero-capacity lines are useless
    A_ = KC_ + 1;
    F_ = KF_ + 1;
    B_ = std::max(capc_, 1);
    const size_t total = static_cast<size_t>(N_ + 1) * (m_ + 1) * (m_ + 1) * A_ * F_ * B_;
    val_.assign(total, -1);
    sm_.assign(total, -1);
    sm_arg_.assign(total, -1);
    choice_.assign(total, Choice{});
  }

  StabbingCover run(StabbingStats* stats) {
    StabbingCover cover;
    if (N_ == 0 || capc_ == 0) return cover;
    for (int len = 0; len < m_; ++len)
      for (int x1 = 1; x1 + len <= m_; ++x1) {
        const int x2 = x1 + len;
        for (int a = 0; a <= KC_; ++a)
          for (int f = 0; f <= KF_; ++f)
            for (int b = 1; b <= capc_; ++b) {
              for (int i = 0; i < N_; ++i)
                if (U_[i].l <= x1 && x1 <= U_[i].r && U_[i].r <= x2) {
                  fill(i, x1, x2, a, f, b);
                  if (stats) ++stats->entries;
                }
              for (int i = N_ - 1; i >= 0; --i) {
                size_t e = idx(i, x1, x2, a, f, b), nx = idx(i + 1, x1, x2, a, f, b);
                sm_[e] = sm_[nx];
                sm_arg_[e] = sm_arg_[nx];
                if (val_[e] > sm_[e]) {
                  sm_[e] = val_[e];
                  sm_arg_[e] = i;
                }
              }
            }
      }
    // Best over every first interval and leftmost line, with the leftmost
    // line of either capacity type.
    int best = 0;
    struct Top { int i, x1, a, f, b; } top{-1, 0, 0, 0, 0};
    for (int x1 = 1; x1 <= m_; ++x1) {
      if (KC_ > 0) {
        size_t e = idx(0, x1, m_, KC_ - 1, KF_, capc_);
        if (sm_[e] > best) best = sm_[e], top = {sm_arg_[e], x1, KC_ - 1, KF_, capc_};
      }
      if (KF_ > 0) {
        size_t e = idx(0, x1, m_, KC_, KF_ - 1, capf_);
        if (sm_[e] > best) best = sm_[e], top = {sm_arg_[e], x1, KC_, KF_ - 1, capf_};
      }
    }
    cover.covered = best;
    if (best == 0) return cover;
    std::vector<std::pair<int, int>> pairs;  // (line, sorted interval index)
    collect(top.i, top.x1, m_, top.a, top.f, top.b, pairs);
    std::sort(pairs.begin(), pairs.end());
    for (auto [x, i] : pairs) {
      if (cover.lines.empty() || cover.lines.back() != x) {
        cover.lines.push_back(x);
        cover.assigned.emplace_back();
      }
      cover.assigned.back().push_back(order_[i]);
    }
    for (auto& a : cover.assigned) std::sort(a.begin(), a.end());
    return cover;
  }

 private:
  size_t idx(int i, int x1, int x2, int a, int f, int b) const {
    return ((((static_cast<size_t>(i) * (m_ + 1) + x1) * (m_ + 1) + x2) * A_ + a) * F_ + f) * B_ +
           (b - 1);
  }
  int get(int i, int x1, int x2, int a, int f, int b) const {
    if (x1 > x2 || b < 1) return -1;
    return val_[idx(i, x1, x2, a, f, b)];
  }
  // Max over intervals j >= i of the entry, with the index attaining it.
  std::pair<int, int> suffix(int i, int x1, int x2, int a, int f, int b) const {
    if (i >= N_ || x1 > x2 || b < 1) return {-1, -1};
    size_t e = idx(i, x1, x2, a, f, b);
    return {sm_[e], sm_arg_[e]};
  }

  void fill(int i, int x1, int x2, int a, int f, int b) {
    const size_t e = idx(i, x1, x2, a, f, b);
    if (a == 0 && f == 0) {
      int cnt = 0;
      for (int j = i; j < N_; ++j)
        if (U_[j].l <= x1 && x1 <= U_[j].r && U_[j].r <= x2) ++cnt;
      val_[e] = std::min(b, cnt);
      choice_[e] = {kInit};
      return;
    }
    int best = 1;
    Choice ch{kAlone};
    auto take = [&](int v, Choice c) {
      if (v > best) best = v, ch = c;
    };
    if (a > 0) take(get(i, x1, x2, a - 1, f, b), {kMonoA});
    if (f > 0) take(get(i, x1, x2, a, f - 1, b), {kMonoF});
    if (b > 1) {
      take(get(i, x1, x2, a, f, b - 1), {kMonoB});
      auto [v, j] = suffix(i + 1, x1, x2, a, f, b - 1);
      if (v >= 0) take(1 + v, {kReduce});
    }
    // u_i alone on x1; the rest starts at a new leftmost line x.
    for (int x = x1 + 1; x <= x2; ++x) {
      if (a > 0) {
        auto [v, j] = suffix(i + 1, x, x2, a - 1, f, capc_);
        if (v >= 0) take(1 + v, {kNewLine, static_cast<std::int16_t>(x), 0, 0, 1});
      }
      if (f > 0) {
        auto [v, j] = suffix(i + 1, x, x2, a, f - 1, capf_);
        if (v >= 0) take(1 + v, {kNewLine, static_cast<std::int16_t>(x), 0, 0, 0});
      }
    }
    // u_i on a line x > x1; lines left of x only see intervals ending before x.
    for (int x = std::max(x1 + 1, U_[i].l); x <= U_[i].r; ++x)
      for (int la = 0; la <= a; ++la)
        for (int lf = 0; lf <= f; ++lf) {
          const int ra = a - la, rf = f - lf;
          int right = -1, ctype = 0;
          if (ra > 0) {
            int v = get(i, x, x2, ra - 1, rf, capc_);
            if (v > right) right = v, ctype = 1;
          }
          if (rf > 0) {
            int v = get(i, x, x2, ra, rf - 1, capf_);
            if (v > right) right = v, ctype = 0;
          }
          if (right < 0) continue;
          auto [lv, l] = suffix(i + 1, x1, x - 1, la, lf, b);
          take(std::max(lv, 0) + right,
               {kSplit, static_cast<std::int16_t>(x), static_cast<std::int8_t>(la),
                static_cast<std::int8_t>(lf), static_cast<std::int8_t>(ctype), lv > 0});
        }
    val_[e] = best;
    choice_[e] = ch;
  }

  void collect(int i, int x1, int x2, int a, int f, int b, std::vector<std::pair<int, int>>& out) {
    const Choice ch = choice_[idx(i, x1, x2, a, f, b)];
    switch (ch.kind) {
      case kNone: throw std::logic_error("stabbing DP reached an unfilled entry");
      case kInit: {
        int left = val_[idx(i, x1, x2, a, f, b)];
        for (int j = i; j < N_ && left > 0; ++j)
          if (U_[j].l <= x1 && x1 <= U_[j].r && U_[j].r <= x2) out.push_back({x1, j}), --left;
        return;
      }
      case kAlone: out.push_back({x1, i}); return;
      case kMonoA: collect(i, x1, x2, a - 1, f, b, out); return;
      case kMonoF: collect(i, x1, x2, a, f - 1, b, out); return;
      case kMonoB: collect(i, x1, x2, a, f, b - 1, out); return;
      case kReduce: {
        out.push_back({x1, i});
        int j = suffix(i + 1, x1, x2, a, f, b - 1).second;
        collect(j, x1, x2, a, f, b - 1, out);
        return;
      }
      case kNewLine: {
        out.push_back({x1, i});
        const int x = ch.x;
        if (ch.c_type) {
          collect(suffix(i + 1, x, x2, a - 1, f, capc_).second, x, x2, a - 1, f, capc_, out);
        } else {
          collect(suffix(i + 1, x, x2, a, f - 1, capf_).second, x, x2, a, f - 1, capf_, out);
        }
        return;
      }
      case kSplit: {
        const int x = ch.x, la = ch.la, lf = ch.lf, ra = a - la, rf = f - lf;
        if (ch.left) collect(suffix(i + 1, x1, x - 1, la, lf, b).second, x1, x - 1, la, lf, b, out);
        if (ch.c_type)
          collect(i, x, x2, ra - 1, rf, capc_, out);
        else
          collect(i, x, x2, ra, rf - 1, capf_, out);
        return;
      }
    }
  }

  const StabbingInstance& s_;
  int N_, m_, capc_, capf_, KC_, KF_, A_, F_, B_;
  std::vector<int> order_;
  std::vector<Interval> U_;
  std::vector<int> val_, sm_, sm_arg_;
  std::vector<Choice> choice_;
};

}  // namespace

StabbingCover solve_max_bal_1rs(const StabbingInstance& s, StabbingStats* stats) {
  s.validate();
  MaxBalDP dp(s);
  StabbingCover c = dp.run(stats);
  std::string err = check_cover(s, c);
  if (!err.empty()) throw std::logic_error("stabbing DP produced an invalid cover: " + err);
  return c;
}

namespace {

// Max number of intervals matched into lines with the given capacities.
int capacitated_matching(const StabbingInstance& s, const std::vector<int>& lines,
                         const std::vector<int>& cap) {
  const int N = static_cast<int>(s.intervals.size()), L = static_cast<int>(lines.size());
  std::vector<std::vector<int>> held(L);
  std::function<bool(int, std::vector<char>&)> augment = [&](int u, std::vector<char>& seen) {
    for (int j = 0; j < L; ++j) {
      if (seen[j] || s.intervals[u].l > lines[j] || s.intervals[u].r < lines[j]) continue;
      seen[j] = 1;
      if (static_cast<int>(held[j].size()) < cap[j]) {
        held[j].push_back(u);
        return true;
      }
      for (int& w : held[j])
        if (augment(w, seen)) {
          w = u;
          return true;
        }
    }
    return false;
  };
  int got = 0;
  for (int u = 0; u < N; ++u) {
    std::vector<char> seen(L, 0);
    got += augment(u, seen);
  }
  return got;
}

}  // namespace

int brute_force_stabbing(const StabbingInstance& s, int max_u, int max_m) {
  s.validate();
  if (static_cast<int>(s.intervals.size()) > max_u || s.m > max_m)
    throw BudgetExceeded("brute-force stabbing limited to |U| <= " + std::to_string(max_u) +
                         " and m <= " + std::to_string(max_m));
  int best = 0;
  // Every line set of size <= k and every split into large/small lines.
  for (int mask = 1; mask < (1 << s.m); ++mask) {
    std::vector<int> lines;
    for (int x = 0; x < s.m; ++x)
      if (mask >> x & 1) lines.push_back(x + 1);
    const int L = static_cast<int>(lines.size());
    if (L > s.k) continue;
    for (int big = 0; big < (1 << L); ++big) {
      int nbig = __builtin_popcount(big);
      if (nbig > s.kc() || L - nbig > s.kf()) continue;
      std::vector<int> cap(L);
      for (int j = 0; j < L; ++j) cap[j] = (big >> j & 1) ? s.cap_c() : s.cap_f();
      best = std::max(best, capacitated_matching(s, lines, cap));
    }
  }
  return best;
}

MonroeReduction reduce_m_mw_sp(const MisrepMatrix& z, int k, const Axis& axis) {
  if (z.max_entry() > 1) throw PreconditionError("stabbing reduction needs a 0/1 matrix");
  MonroeReduction red;
  red.axis = axis;
  std::vector<Interval> iv;
  for (int v = 0; v < z.n(); ++v) {
    auto I = representation_interval(v, z, axis, 0);
    if (!I) {
      red.no_interval.push_back(v);
      continue;
    }
    iv.push_back({I->first, I->second});
    red.interval_voter.push_back(v);
  }
  red.stab = StabbingInstance::make(static_cast<int>(axis.size()), k, std::move(iv), z.n());
  return red;
}

MonroeReduction reduce_m_mw_sp(const ProblemInstance& inst, const Axis& axis) {
  if (inst.rule != Rule::Monroe) throw PreconditionError("stabbing reduction is for Monroe");
  return reduce_m_mw_sp(inst.matrix, inst.k, axis);
}

Solution complete_assignment(const ProblemInstance& inst, const MonroeReduction& red,
                             const StabbingCover& cover) {
  const int n = inst.n(), m = inst.m(), k = inst.k;
  const int hi = (n + k - 1) / k, lo = n / k, kc = n % k;
  std::vector<int> map(n, -1);
  std::vector<int> winners;
  for (size_t i = 0; i < cover.lines.size(); ++i) {
    const int c = red.axis[cover.lines[i] - 1];
    winners.push_back(c);
    for (int u : cover.assigned[i]) map[red.interval_voter[u]] = c;
  }
  std::vector<char> used(m, 0);
  for (int c : winners) used[c] = 1;
  for (int c = 0; c < m && static_cast<int>(winners.size()) < k; ++c)
    if (!used[c]) winners.push_back(c), used[c] = 1;
  std::sort(winners.begin(), winners.end());

  std::vector<int> load(m, 0);
  for (int v = 0; v < n; ++v)
    if (map[v] >= 0) ++load[map[v]];
  // Larger targets go to the most loaded winners first.
  std::vector<int> by_load = winners;
  std::stable_sort(by_load.begin(), by_load.end(),
                   [&](int a, int b) { return load[a] > load[b]; });
  std::vector<int> target(m, 0);
  for (int i = 0; i < k; ++i) target[by_load[i]] = i < kc ? hi : lo;

  auto place = [&](bool zero_only) {
    for (int v = 0; v < n; ++v) {
      if (map[v] >= 0) continue;
      for (int c : winners)
        if (load[c] < target[c] && (!zero_only || inst.matrix.at(v, c) == 0)) {
          map[v] = c;
          ++load[c];
          break;
        }
    }
  };
  place(true);
  place(false);
  return make_solution(inst, Assignment{winners, map}, "sp-stab");
}

Solution solve_m_mw_sp(const ProblemInstance& inst, const Axis& axis) {
  if (inst.rule != Rule::Monroe || inst.objective != Objective::Sum)
    throw PreconditionError("stabbing pipeline solves Monroe with the sum objective");
  MonroeReduction red = reduce_m_mw_sp(inst, axis);
  StabbingCover cover = solve_max_bal_1rs(red.stab);
  return complete_assignment(inst, red, cover);
}

std::optional<Solution> solve_minimax_m_mw_sp(const ProblemInstance& inst, const Axis& axis,
                                              Value R) {
  if (inst.rule != Rule::Monroe) throw PreconditionError("stabbing pipeline is for Monroe");
  MonroeReduction red = reduce_m_mw_sp(inst.matrix.threshold(R), inst.k, axis);
  if (!red.no_interval.empty()) return std::nullopt;
  StabbingCover cover = solve_max_bal_1rs(red.stab);
  if (cover.covered < inst.n()) return std::nullopt;
  return complete_assignment(inst, red, cover);
}

}  // namespace proprep
