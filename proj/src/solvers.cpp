#include "proprep/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "proprep/assignment.hpp"
#include "proprep/kernels.hpp"
#include "proprep/single_peaked.hpp"
#include "proprep/stabbing.hpp"

namespace proprep {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds) : limit_(seconds), start_(Clock::now()) {}
  void check() const {
    if (limit_ <= 0) return;
    std::chrono::duration<double> el = Clock::now() - start_;
    if (el.count() > limit_) throw BudgetExceeded("wall-clock budget exhausted");
  }

 private:
  double limit_;
  Clock::time_point start_;
};

// Smallest unused candidates appended until the committee has k members.
std::vector<int> pad_committee(std::vector<int> committee, int k, int m) {
  std::sort(committee.begin(), committee.end());
  committee.erase(std::unique(committee.begin(), committee.end()), committee.end());
  std::vector<char> used(m, 0);
  for (int c : committee) used[c] = 1;
  for (int c = 0; c < m && static_cast<int>(committee.size()) < k; ++c)
    if (!used[c]) committee.push_back(c);
  std::sort(committee.begin(), committee.end());
  return committee;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic combination of rank `idx` among C(n, k).
std::vector<int> unrank_combination(std::int64_t idx, int n, int k) {
  std::vector<int> out;
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::int64_t cnt = binom(n - x - 1, k - i - 1);
      if (idx < cnt) break;
      idx -= cnt;
      ++x;
    }
    out.push_back(x++);
  }
  return out;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

class CommitteeScorer {
 public:
  CommitteeScorer(const ProblemInstance& inst) : inst_(inst), buf_(inst.n()) {}

  // Value of the best assignment, or nullopt when it cannot beat `bound`.
  std::optional<Value> score(const std::vector<int>& w, Value bound) {
    const MisrepMatrix& r = inst_.matrix;
    if (inst_.rule == Rule::CC) {
      const auto& K = kernels::active();
      auto c0 = r.col(w[0]);
      std::copy(c0.begin(), c0.end(), buf_.begin());
      for (size_t i = 1; i < w.size(); ++i) K.min_into(buf_.data(), r.col(w[i]).data(), buf_.size());
      Value v = inst_.objective == Objective::Sum ? K.sum(buf_.data(), buf_.size())
                                                  : K.max(buf_.data(), buf_.size());
      return v;
    }
    if (inst_.objective == Objective::Sum) return evaluate(assign_monroe_sum(w, r), r, Objective::Sum);
    if (bound <= 0 || !assign_monroe_minimax(w, r, bound - 1)) return std::nullopt;
    return evaluate(assign_monroe_bottleneck(w, r), r, Objective::Minimax);
  }

 private:
  const ProblemInstance& inst_;
  std::vector<Value> buf_;
};

struct Best {
  Value value = FlowNetwork::kInf;
  std::int64_t rank = -1;
  std::vector<int> committee;
};

Best scan_range(const ProblemInstance& inst, const std::vector<int>& allowed, std::int64_t from,
                std::int64_t to, const Deadline& dl) {
  const int a = static_cast<int>(allowed.size());
  Best best;
  CommitteeScorer scorer(inst);
  std::vector<int> idx = unrank_combination(from, a, inst.k);
  std::vector<int> w(inst.k);
  for (std::int64_t rank = from; rank < to; ++rank) {
    if ((rank & 1023) == 0) dl.check();
    for (int i = 0; i < inst.k; ++i) w[i] = allowed[idx[i]];
    auto v = scorer.score(w, best.value);
    if (v && *v < best.value) best = {*v, rank, w};
    next_combination(idx, a);
  }
  return best;
}

}  // namespace

std::optional<Solution> solve_subset_enum_over(const ProblemInstance& inst,
                                               const std::vector<int>& allowed_in,
                                               const SolverBudget& b) {
  std::vector<int> allowed = allowed_in;
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  const int a = static_cast<int>(allowed.size());
  if (a > b.subset_max_m)
    throw BudgetExceeded("subset enumeration limited to m <= " + std::to_string(b.subset_max_m) +
                         " (got " + std::to_string(a) + ")");
  if (a < inst.k) return std::nullopt;
  const std::int64_t total = binom(a, inst.k);
  Deadline dl(b.max_seconds);
  const int T = std::max(1, std::min<int>(b.threads, static_cast<int>(std::min<std::int64_t>(total, 64))));
  std::vector<Best> part(T);
  if (T == 1) {
    part[0] = scan_range(inst, allowed, 0, total, dl);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(T);
    for (int t = 0; t < T; ++t)
      pool.emplace_back([&, t] {
        try {
          part[t] = scan_range(inst, allowed, total * t / T, total * (t + 1) / T, dl);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  // Chunks are in rank order, so the first strict improvement keeps the
  // lexicographically smallest optimum.
  Best best;
  for (const Best& p : part)
    if (p.rank >= 0 && p.value < best.value) best = p;
  Solution s = make_solution(inst, assign_best(best.committee, inst.matrix, inst.rule, inst.objective),
                             "subset");
  s.stats.enumerated = total;
  return s;
}

Solution solve_subset_enum(const ProblemInstance& inst, const SolverBudget& b) {
  std::vector<int> all(inst.m());
  for (int c = 0; c < inst.m(); ++c) all[c] = c;
  return *solve_subset_enum_over(inst, all, b);
}

Solution solve_partition_enum(const ProblemInstance& inst, const SolverBudget& b) {
  const int n = inst.n(), m = inst.m(), k = inst.k;
  if (n > b.partition_max_n)
    throw BudgetExceeded("partition enumeration limited to n <= " +
                         std::to_string(b.partition_max_n));
  const bool monroe = inst.rule == Rule::Monroe;
  const bool sum = inst.objective == Objective::Sum;
  const int lo = n / k, hi = (n + k - 1) / k;
  const MisrepMatrix& r = inst.matrix;
  Deadline dl(b.max_seconds);

  std::vector<int> block(n, -1), size(k, 0);
  Value best = FlowNetwork::kInf;
  std::vector<int> best_committee;
  std::int64_t visited = 0;

  auto evaluate_partition = [&](int nb) {
    if ((++visited & 1023) == 0) dl.check();
    std::vector<std::vector<Value>> cost(nb, std::vector<Value>(m, 0));
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < m; ++c) {
        Value& x = cost[block[v]][c];
        x = sum ? x + r.at(v, c) : std::max(x, r.at(v, c));
      }
    std::vector<int> col = sum ? hungarian(cost) : bottleneck_matching(cost);
    Value val = 0;
    for (int i = 0; i < nb; ++i) val = sum ? val + cost[i][col[i]] : std::max(val, cost[i][col[i]]);
    if (val > best) return;
    std::vector<int> committee = pad_committee(col, k, m);
    if (val < best || committee_less(committee, best_committee)) {
      best = val;
      best_committee = committee;
    }
  };

  // Restricted growth strings; blocks are opened in order of first voter.
  std::function<void(int, int)> rec = [&](int v, int nb) {
    if (v == n) {
      if (monroe) {
        if (nb != k) return;
        for (int i = 0; i < k; ++i)
          if (size[i] < lo) return;
      }
      evaluate_partition(nb);
      return;
    }
    if (monroe && nb + (n - v) < k) return;
    for (int i = 0; i <= nb && i < k; ++i) {
      if (monroe && size[i] == hi) continue;
      block[v] = i;
      ++size[i];
      rec(v + 1, std::max(nb, i + 1));
      --size[i];
    }
  };
  rec(0, 0);

  Solution s = make_solution(inst, assign_best(best_committee, r, inst.rule, inst.objective),
                             "partition");
  s.stats.enumerated = visited;
  return s;
}

std::vector<int> zero_candidates(const MisrepMatrix& r) {
  std::vector<int> out;
  for (int c = 0; c < r.m(); ++c)
    if (kernels::active().count_le(r.col(c).data(), r.n(), 0) > 0) out.push_back(c);
  return out;
}

int max_sublevel_size(const MisrepMatrix& r, Value R) {
  int best = 0;
  for (int v = 0; v < r.n(); ++v) {
    auto row = r.row(v);
    best = std::max(best, static_cast<int>(kernels::active().count_le(row.data(), row.size(), R)));
  }
  return best;
}

namespace {

void require_sparse(const ProblemInstance& inst) {
  if (max_sublevel_size(inst.matrix, inst.R) > inst.R + 1)
    throw PreconditionError(
        "some voter has more than R+1 candidates within R; use subset enumeration");
}

Solution witness(const ProblemInstance& inst, std::vector<int> committee, const char* name) {
  committee = pad_committee(std::move(committee), inst.k, inst.m());
  return make_solution(inst, assign_cc(committee, inst.matrix), name);
}

}  // namespace

std::optional<Solution> solve_cc_branch_rk(const ProblemInstance& inst, const SolverBudget& b,
                                           SolverStats* stats) {
  if (inst.rule != Rule::CC || inst.objective != Objective::Sum)
    throw PreconditionError("branching solver needs CC with the sum objective");
  require_sparse(inst);
  const MisrepMatrix& r = inst.matrix;
  const int k = inst.k;
  SolverStats st;
  std::vector<int> found;

  std::function<bool(const std::vector<int>&, Value, std::vector<int>&)> branch =
      [&](const std::vector<int>& V, Value Rp, std::vector<int>& C) -> bool {
    if (++st.nodes > b.max_nodes) throw BudgetExceeded("branching node budget exhausted");
    if (Rp < 0 || static_cast<int>(C.size()) > k) {
      ++st.leaves;
      return false;
    }
    if (!C.empty()) {
      Value s = 0;
      for (int w : V) {
        Value best = FlowNetwork::kInf;
        for (int d : C) best = std::min(best, r.at(w, d));
        s += best;
      }
      if (s <= Rp) {
        ++st.leaves;
        found = C;
        return true;
      }
    } else if (V.empty()) {
      ++st.leaves;
      found = C;
      return true;
    }
    const int v = V.front();
    std::vector<int> rest(V.begin() + 1, V.end());
    bool recursed = false;
    for (int c = 0; c < r.m(); ++c) {
      Value x = r.at(v, c);
      if (x > Rp) continue;
      const bool fresh = std::find(C.begin(), C.end(), c) == C.end();
      // Committee-size cut applied before the call, so refused branches add no leaves.
      if (fresh && static_cast<int>(C.size()) + 1 > k) continue;
      std::vector<int> V2;
      for (int w : rest)
        if (r.at(w, c) != 0) V2.push_back(w);
      if (fresh) C.push_back(c);
      recursed = true;
      bool ok = branch(V2, Rp - x, C);
      if (fresh) C.pop_back();
      if (ok) return true;
    }
    if (!recursed) ++st.leaves;
    return false;
  };

  std::vector<int> V(inst.n());
  for (int v = 0; v < inst.n(); ++v) V[v] = v;
  std::vector<int> C;
  bool ok = branch(V, inst.R, C);
  if (stats) *stats = st;
  if (!ok) return std::nullopt;
  Solution s = witness(inst, found, "branch");
  s.stats = st;
  return s;
}

std::optional<Solution> solve_minimax_cc_branch_rk(const ProblemInstance& inst,
                                                   const SolverBudget& b) {
  if (inst.rule != Rule::CC || inst.objective != Objective::Minimax)
    throw PreconditionError("minimax branching solver needs CC with the minimax objective");
  require_sparse(inst);
  const MisrepMatrix& r = inst.matrix;
  const Value R = inst.R;
  SolverStats st;
  std::vector<int> C;

  std::function<bool(const std::vector<int>&, int)> branch = [&](const std::vector<int>& V,
                                                                 int kleft) -> bool {
    if (++st.nodes > b.max_nodes) throw BudgetExceeded("branching node budget exhausted");
    if (V.empty()) {
      ++st.leaves;
      return true;
    }
    if (kleft == 0) {
      ++st.leaves;
      return false;
    }
    const int v = V.front();
    for (int c = 0; c < r.m(); ++c) {
      if (r.at(v, c) > R) continue;
      std::vector<int> V2;
      for (int w : V)
        if (r.at(w, c) > R) V2.push_back(w);
      C.push_back(c);
      if (branch(V2, kleft - 1)) return true;
      C.pop_back();
    }
    return false;
  };

  std::vector<int> V(inst.n());
  for (int v = 0; v < inst.n(); ++v) V[v] = v;
  if (!branch(V, inst.k)) return std::nullopt;
  Solution s = witness(inst, C, "branch");
  s.stats = st;
  return s;
}

std::optional<Solution> solve_constantR(const ProblemInstance& inst, const SolverBudget& b) {
  if (inst.objective != Objective::Sum)
    throw PreconditionError("constant-R solver needs the sum objective");
  if (inst.R > b.constant_r_max_R)
    throw BudgetExceeded("constant-R solver limited to R <= " + std::to_string(b.constant_r_max_R));
  const int n = inst.n(), m = inst.m(), k = inst.k;
  const Value R = inst.R;
  const MisrepMatrix& r = inst.matrix;
  // at[v][t]: the unique candidate with r(v, .) = t, or -1.
  std::vector<std::vector<int>> at(n, std::vector<int>(R + 1, -1));
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < m; ++c) {
      Value x = r.at(v, c);
      if (x > R) continue;
      if (at[v][x] >= 0)
        throw PreconditionError("constant-R solver needs at most one candidate per value per voter");
      at[v][x] = c;
    }
  const bool monroe = inst.rule == Rule::Monroe;
  const int lo = n / k, hi = (n + k - 1) / k;
  Deadline dl(b.max_seconds);
  SolverStats st;

  std::vector<int> load(m, 0), map(n, -1);
  int distinct = 0;
  Value best = FlowNetwork::kInf;
  std::vector<int> best_map, best_committee;

  std::function<void(int, Value)> rec = [&](int v, Value total) {
    if ((++st.nodes & 4095) == 0) dl.check();
    if (st.nodes > b.max_nodes) throw BudgetExceeded("constant-R node budget exhausted");
    if (v == n) {
      ++st.leaves;
      if (monroe) {
        if (distinct != k) return;
        for (int c = 0; c < m; ++c)
          if (load[c] > 0 && load[c] < lo) return;
      }
      std::vector<int> committee;
      for (int c = 0; c < m; ++c)
        if (load[c] > 0) committee.push_back(c);
      committee = pad_committee(committee, k, m);
      if (total < best || (total == best && committee_less(committee, best_committee))) {
        best = total;
        best_map = map;
        best_committee = committee;
      }
      return;
    }
    for (Value t = 0; t <= R - total; ++t) {
      int c = at[v][t];
      if (c < 0) continue;
      bool fresh = load[c] == 0;
      if (fresh && distinct == k) continue;
      if (monroe && load[c] == hi) continue;
      ++load[c];
      distinct += fresh;
      map[v] = c;
      rec(v + 1, total + t);
      --load[c];
      distinct -= fresh;
    }
  };
  rec(0, 0);
  if (best_map.empty()) return std::nullopt;
  Solution s = make_solution(inst, Assignment{best_committee, best_map}, "constant-r");
  s.stats = st;
  return s;
}

std::optional<Solution> solve_m_mw_rk(const ProblemInstance& inst, const SolverBudget& b) {
  if (inst.rule != Rule::Monroe || inst.objective != Objective::Sum || !inst.is_borda())
    throw PreconditionError("FPT Monroe solver needs Monroe sum with Borda misrepresentation");
  std::optional<Solution> s;
  if (inst.n() <= (inst.R + 1) * inst.k) {
    s = solve_partition_enum(inst, b);
  } else {
    std::vector<int> zc = zero_candidates(inst.matrix);
    if (static_cast<int>(zc.size()) > inst.R + inst.k) return std::nullopt;
    s = solve_subset_enum_over(inst, zc, b);
  }
  if (!s || s->value > inst.R) return std::nullopt;
  s->solver = "fpt-rk";
  return s;
}

std::optional<Solution> solve_minimax_m_mw_rk(const ProblemInstance& inst, const SolverBudget& b) {
  if (inst.rule != Rule::Monroe || inst.objective != Objective::Minimax || !inst.is_borda())
    throw PreconditionError("FPT minimax Monroe solver needs Monroe minimax with Borda misrepresentation");
  const int n = inst.n(), k = inst.k;
  std::optional<Solution> s;
  if (n <= (inst.R + 1) * k) {
    s = solve_partition_enum(inst, b);
  } else {
    std::vector<int> keep;
    for (int c = 0; c < inst.m(); ++c) {
      auto col = inst.matrix.col(c);
      if (static_cast<int>(kernels::active().count_le(col.data(), col.size(), inst.R)) >= n / k)
        keep.push_back(c);
    }
    s = solve_subset_enum_over(inst, keep, b);
  }
  if (!s || s->value > inst.R) return std::nullopt;
  s->solver = "fpt-rk";
  return s;
}

std::optional<Solution> solve_minimax_R0(const ProblemInstance& inst) {
  if (inst.objective != Objective::Minimax || inst.R != 0)
    throw PreconditionError("R = 0 solver needs the minimax objective and R = 0");
  const int n = inst.n(), m = inst.m(), k = inst.k;
  std::vector<int> top(n, -1);
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < m; ++c)
      if (inst.matrix.at(v, c) == 0) {
        if (top[v] >= 0) throw PreconditionError("R = 0 solver needs a unique zero per voter");
        top[v] = c;
      }
  std::vector<int> tops;
  for (int v = 0; v < n; ++v) {
    if (top[v] < 0) return std::nullopt;
    tops.push_back(top[v]);
  }
  std::sort(tops.begin(), tops.end());
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  if (static_cast<int>(tops.size()) > k) return std::nullopt;
  Assignment a;
  if (inst.rule == Rule::CC) {
    a.winners = pad_committee(tops, k, m);
    a.map = top;
  } else {
    if (static_cast<int>(tops.size()) != k) return std::nullopt;
    a.winners = tops;
    a.map = top;
    if (!check_m_criterion(a, k, n)) return std::nullopt;
  }
  return make_solution(inst, std::move(a), "r0");
}

const char* to_string(SolverKind k) {
  switch (k) {
    case SolverKind::Subset: return "subset";
    case SolverKind::Partition: return "partition";
    case SolverKind::Branch: return "branch";
    case SolverKind::ConstantR: return "constant-r";
    case SolverKind::FptRk: return "fpt-rk";
    case SolverKind::R0: return "r0";
    case SolverKind::SinglePeaked: return "sp";
  }
  return "?";
}

std::optional<SolverKind> parse_solver_kind(const std::string& s) {
  for (SolverKind k : {SolverKind::Subset, SolverKind::Partition, SolverKind::Branch,
                       SolverKind::ConstantR, SolverKind::FptRk, SolverKind::R0,
                       SolverKind::SinglePeaked})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

namespace {

bool zero_one(const MisrepMatrix& r) { return r.max_entry() <= 1; }

}  // namespace

bool supports(SolverKind k, const ProblemInstance& inst) {
  const bool sum = inst.objective == Objective::Sum;
  switch (k) {
    case SolverKind::Subset:
    case SolverKind::Partition: return true;
    case SolverKind::Branch: return inst.rule == Rule::CC;
    case SolverKind::ConstantR: return sum;
    case SolverKind::FptRk: return inst.rule == Rule::Monroe && inst.is_borda();
    case SolverKind::R0: return !sum;
    case SolverKind::SinglePeaked:
      return !(inst.rule == Rule::Monroe && sum && !zero_one(inst.matrix));
  }
  return false;
}

namespace {

Axis require_axis(const ProblemInstance& inst) {
  auto axis = detect_axis(inst.election);
  if (!axis) throw PreconditionError("profile is not single-peaked");
  if (!check_single_troughed(inst.matrix, *axis))
    throw PreconditionError("misrepresentation is not single-troughed on the detected axis");
  return *axis;
}

std::optional<Solution> decide_sp(const ProblemInstance& inst) {
  Axis axis = require_axis(inst);
  std::optional<Solution> s;
  if (inst.rule == Rule::CC) {
    if (inst.objective == Objective::Sum)
      s = solve_cc_sum_sp(inst, axis);
    else
      return solve_cc_minimax_sp(inst, axis, inst.R);
  } else if (inst.objective == Objective::Minimax) {
    return solve_minimax_m_mw_sp(inst, axis, inst.R);
  } else if (zero_one(inst.matrix)) {
    s = solve_m_mw_sp(inst, axis);
  } else if (inst.R == 0) {
    // Sum and minimax agree at bound 0.
    auto mm = solve_minimax_m_mw_sp(inst, axis, 0);
    if (!mm) return std::nullopt;
    return make_solution(inst, mm->assignment, "sp-stab");
  } else {
    throw PreconditionError("Monroe sum on single-peaked profiles needs 0/1 misrepresentation");
  }
  if (s->value > inst.R) return std::nullopt;
  return s;
}

}  // namespace

std::optional<Solution> decide(const ProblemInstance& inst, SolverKind kind, const SolverBudget& b) {
  const bool sum = inst.objective == Objective::Sum;
  switch (kind) {
    case SolverKind::Subset: {
      Solution s = solve_subset_enum(inst, b);
      if (s.value > inst.R) return std::nullopt;
      return s;
    }
    case SolverKind::Partition: {
      Solution s = solve_partition_enum(inst, b);
      if (s.value > inst.R) return std::nullopt;
      return s;
    }
    case SolverKind::Branch:
      return sum ? solve_cc_branch_rk(inst, b) : solve_minimax_cc_branch_rk(inst, b);
    case SolverKind::ConstantR: return solve_constantR(inst, b);
    case SolverKind::FptRk: return sum ? solve_m_mw_rk(inst, b) : solve_minimax_m_mw_rk(inst, b);
    case SolverKind::R0: return solve_minimax_R0(inst);
    case SolverKind::SinglePeaked: return decide_sp(inst);
  }
  return std::nullopt;
}

Solution optimize(const ProblemInstance& inst, SolverKind kind, const SolverBudget& b) {
  if (kind == SolverKind::Subset) return solve_subset_enum(inst, b);
  if (kind == SolverKind::Partition) return solve_partition_enum(inst, b);
  if (kind == SolverKind::SinglePeaked && inst.objective == Objective::Sum) {
    Axis axis = require_axis(inst);
    if (inst.rule == Rule::CC) return solve_cc_sum_sp(inst, axis);
    if (zero_one(inst.matrix)) return solve_m_mw_sp(inst, axis);
  }
  if (kind == SolverKind::R0) {
    auto s = decide(inst.with(inst.rule, inst.objective, inst.k, 0), kind, b);
    if (!s) throw PreconditionError("R = 0 solver decides only bound 0 and the answer is no");
    return *s;
  }

  // Candidate bounds in increasing order; the answer is the first success.
  std::vector<Value> grid;
  if (inst.objective == Objective::Minimax) {
    grid = inst.matrix.distinct_values();
  } else {
    grid.resize(static_cast<size_t>(inst.n() * inst.matrix.max_entry() + 1));
    for (size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<Value>(i);
  }
  auto probe = [&](size_t i) { return decide(inst.with(inst.rule, inst.objective, inst.k, grid[i]), kind, b); };

  // Galloping keeps the exponential-in-R solvers on small bounds.
  std::optional<Solution> hit;
  size_t lo = 0, hi = 0;  // answer index in [lo, hi]
  for (size_t step = 1, i = 0;; step *= 2) {
    if (i >= grid.size() - 1) {
      hi = grid.size() - 1;
      hit = probe(hi);
      break;
    }
    hit = probe(i);
    if (hit) {
      hi = i;
      break;
    }
    lo = i + 1;
    i += step;
  }
  if (!hit) throw InvalidInput("no feasible bound found; solver inconsistent");
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    auto s = probe(mid);
    if (s) {
      hit = s;
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return *hit;
}

}  // namespace proprep
