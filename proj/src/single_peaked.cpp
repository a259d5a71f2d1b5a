#include "proprep/single_peaked.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "proprep/assignment.hpp"
#include "proprep/kernels.hpp"

namespace proprep {

bool check_compatible(const std::vector<int>& vote, const Axis& axis) {
  const int m = static_cast<int>(axis.size());
  if (static_cast<int>(vote.size()) != m) return false;
  std::vector<int> rank(m);
  for (int p = 0; p < m; ++p) rank[vote[p]] = p;
  int peak = static_cast<int>(std::find(axis.begin(), axis.end(), vote[0]) - axis.begin());
  if (peak == m) return false;
  for (int i = peak; i > 0; --i)
    if (rank[axis[i - 1]] <= rank[axis[i]]) return false;
  for (int i = peak; i + 1 < m; ++i)
    if (rank[axis[i + 1]] <= rank[axis[i]]) return false;
  return true;
}

bool is_single_peaked(const Election& e, const Axis& axis) {
  for (int v = 0; v < e.n(); ++v)
    if (!check_compatible(e.vote(v), axis)) return false;
  return true;
}

namespace {

Axis canonical(Axis a) {
  if (!a.empty() && a.front() > a.back()) std::reverse(a.begin(), a.end());
  return a;
}

// Ranks along [left..., best remaining rank, reversed right...] must fall
// strictly to a single minimum and rise strictly after it.
bool partial_ok(const Election& e, const std::vector<int>& left, const std::vector<int>& right,
                const std::vector<char>& placed) {
  std::vector<int> seq;
  for (int v = 0; v < e.n(); ++v) {
    seq.clear();
    for (int c : left) seq.push_back(e.position(v, c));
    int best = e.m();
    for (int c = 0; c < e.m(); ++c)
      if (!placed[c]) best = std::min(best, e.position(v, c));
    if (best < e.m()) seq.push_back(best);
    for (auto it = right.rbegin(); it != right.rend(); ++it) seq.push_back(e.position(v, *it));
    size_t lo = std::min_element(seq.begin(), seq.end()) - seq.begin();
    for (size_t i = 0; i < lo; ++i)
      if (seq[i] <= seq[i + 1]) return false;
    for (size_t i = lo; i + 1 < seq.size(); ++i)
      if (seq[i] >= seq[i + 1]) return false;
  }
  return true;
}

}  // namespace

std::optional<Axis> detect_axis(const Election& e) {
  const int m = e.m();
  std::vector<int> left, right;  // right is stored outermost first
  std::vector<char> placed(m, 0);
  int n_placed = 0;
  std::optional<Axis> result;

  std::function<bool()> rec = [&]() -> bool {
    if (n_placed == m) {
      Axis a = left;
      a.insert(a.end(), right.rbegin(), right.rend());
      if (!is_single_peaked(e, a)) return false;
      result = canonical(a);
      return true;
    }
    std::vector<int> last;
    for (int v = 0; v < e.n(); ++v) {
      const auto& vote = e.vote(v);
      for (int p = m - 1; p >= 0; --p)
        if (!placed[vote[p]]) {
          if (std::find(last.begin(), last.end(), vote[p]) == last.end()) last.push_back(vote[p]);
          break;
        }
    }
    if (last.size() > 2) return false;
    std::sort(last.begin(), last.end());
    const bool first = n_placed == 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> options;  // (to left, to right)
    if (last.size() == 2) {
      options.push_back({{last[0]}, {last[1]}});
      if (!first) options.push_back({{last[1]}, {last[0]}});
    } else {
      options.push_back({{last[0]}, {}});
      if (!first && n_placed + 1 < m) options.push_back({{}, {last[0]}});
    }
    for (auto& [l, r] : options) {
      for (int c : l) left.push_back(c), placed[c] = 1;
      for (int c : r) right.push_back(c), placed[c] = 1;
      n_placed += static_cast<int>(l.size() + r.size());
      bool ok = partial_ok(e, left, right, placed) && rec();
      n_placed -= static_cast<int>(l.size() + r.size());
      for (int c : l) left.pop_back(), placed[c] = 0;
      for (int c : r) right.pop_back(), placed[c] = 0;
      if (ok) return true;
    }
    return false;
  };
  rec();
  return result;
}

std::optional<Axis> detect_axis_brute(const Election& e) {
  Axis a(e.m());
  for (int i = 0; i < e.m(); ++i) a[i] = i;
  do {
    if (is_single_peaked(e, a)) return canonical(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return std::nullopt;
}

bool check_single_troughed(const MisrepMatrix& r, const Axis& axis) {
  const int m = static_cast<int>(axis.size());
  if (m != r.m()) return false;
  std::vector<Value> row(m), suf(m + 1);
  for (int v = 0; v < r.n(); ++v) {
    for (int i = 0; i < m; ++i) row[i] = r.at(v, axis[i]);
    suf[m] = FlowNetwork::kInf;
    for (int i = m - 1; i >= 0; --i) suf[i] = std::min(suf[i + 1], row[i]);
    Value pre = FlowNetwork::kInf;
    // A strict interior peak means a triple that is not single-troughed.
    for (int i = 0; i < m; ++i) {
      if (pre < row[i] && suf[i + 1] < row[i]) return false;
      pre = std::min(pre, row[i]);
    }
  }
  return true;
}

std::optional<std::pair<int, int>> representation_interval(int voter, const MisrepMatrix& r,
                                                           const Axis& axis, Value R) {
  const int m = static_cast<int>(axis.size());
  int lo = -1, hi = -1, count = 0;
  for (int i = 0; i < m; ++i)
    if (r.at(voter, axis[i]) <= R) {
      if (lo < 0) lo = i;
      hi = i;
      ++count;
    }
  if (lo < 0) return std::nullopt;
  if (count != hi - lo + 1)
    throw PreconditionError("representation set of voter " + std::to_string(voter) +
                            " is not contiguous on the axis");
  return std::make_pair(lo + 1, hi + 1);
}

std::vector<int> vote_from_row(std::span<const Value> row, const Axis& axis) {
  const int m = static_cast<int>(axis.size());
  int start = 0;
  for (int i = 1; i < m; ++i)
    if (row[axis[i]] < row[axis[start]]) start = i;
  std::vector<int> vote{axis[start]};
  int a = start - 1, b = start + 1;
  while (a >= 0 || b < m) {
    if (b >= m || (a >= 0 && row[axis[a]] <= row[axis[b]]))
      vote.push_back(axis[a--]);
    else
      vote.push_back(axis[b++]);
  }
  return vote;
}

Solution solve_cc_sum_sp(const ProblemInstance& inst, const Axis& axis) {
  if (inst.rule != Rule::CC) throw PreconditionError("DP solver is for CC");
  if (!check_single_troughed(inst.matrix, axis))
    throw PreconditionError("misrepresentation is not single-troughed on the axis");
  const int n = inst.n(), m = inst.m(), k = inst.k;
  const auto& K = kernels::active();
  std::vector<const Value*> col(m);
  for (int i = 0; i < m; ++i) col[i] = inst.matrix.col(axis[i]).data();

  SolverStats st;
  // d[p][i]: improvement from adding axis position i after position p.
  std::vector<std::vector<Value>> d(m, std::vector<Value>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int i = p + 1; i < m; ++i) {
      d[p][i] = K.sum_pos_diff(col[p], col[i], n);
      st.work += n;
    }
  const Value INF = FlowNetwork::kInf;
  // z[j][i]: best value with j+1 winners whose rightmost is axis position i.
  std::vector<std::vector<Value>> z(k, std::vector<Value>(m, INF));
  std::vector<std::vector<int>> from(k, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    z[0][i] = K.sum(col[i], n);
    st.work += n;
  }
  for (int j = 1; j < k; ++j)
    for (int i = j; i < m; ++i)
      for (int p = j - 1; p < i; ++p) {
        ++st.work;
        Value cand = z[j - 1][p] - d[p][i];
        if (cand < z[j][i]) {
          z[j][i] = cand;
          from[j][i] = p;
        }
      }
  int end = k - 1;
  for (int i = k - 1; i < m; ++i)
    if (z[k - 1][i] < z[k - 1][end]) end = i;
  std::vector<int> committee;
  for (int j = k - 1, i = end; j >= 0; i = from[j][i], --j) committee.push_back(axis[i]);
  std::sort(committee.begin(), committee.end());

  Solution s = make_solution(inst, assign_cc(committee, inst.matrix), "sp-dp");
  if (inst.objective == Objective::Sum && s.value != z[k - 1][end])
    throw std::logic_error("DP value disagrees with its reconstructed committee");
  s.stats = st;
  return s;
}

std::optional<Solution> solve_cc_minimax_sp(const ProblemInstance& inst, const Axis& axis,
                                            Value R) {
  if (inst.rule != Rule::CC) throw PreconditionError("greedy solver is for CC");
  const int n = inst.n(), m = inst.m();
  std::vector<std::pair<int, int>> iv;  // (right, left)
  for (int v = 0; v < n; ++v) {
    auto I = representation_interval(v, inst.matrix, axis, R);
    if (!I) return std::nullopt;
    iv.push_back({I->second, I->first});
  }
  std::sort(iv.begin(), iv.end());
  std::vector<int> stabs;
  int last = 0;
  for (auto [r, l] : iv)
    if (l > last) {
      last = r;
      stabs.push_back(r);
    }
  if (static_cast<int>(stabs.size()) > inst.k) return std::nullopt;
  std::vector<int> committee;
  for (int p : stabs) committee.push_back(axis[p - 1]);
  std::vector<char> used(m, 0);
  for (int c : committee) used[c] = 1;
  for (int c = 0; c < m && static_cast<int>(committee.size()) < inst.k; ++c)
    if (!used[c]) committee.push_back(c);
  std::sort(committee.begin(), committee.end());
  Solution s = make_solution(inst, assign_cc(committee, inst.matrix), "sp-greedy");
  s.stats.work = static_cast<std::int64_t>(stabs.size());
  return s;
}

}  // namespace proprep
