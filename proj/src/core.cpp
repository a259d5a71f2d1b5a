#include "proprep/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "proprep/kernels.hpp"

namespace proprep {

const char* to_string(Rule r) { return r == Rule::CC ? "cc" : "monroe"; }
const char* to_string(Objective o) { return o == Objective::Sum ? "sum" : "minimax"; }
const char* to_string(MisrepKind k) {
  switch (k) {
    case MisrepKind::Borda: return "borda";
    case MisrepKind::Approval: return "approval";
    case MisrepKind::Explicit: return "explicit";
  }
  return "?";
}

Election::Election(std::vector<std::string> names, std::vector<std::vector<int>> votes)
    : m_(static_cast<int>(names.size())),
      n_(static_cast<int>(votes.size())),
      names_(std::move(names)),
      votes_(std::move(votes)) {
  if (m_ < 1) throw InvalidInput("election needs at least one candidate");
  if (n_ < 1) throw InvalidInput("election needs at least one voter");
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (names_[i] == names_[j]) throw InvalidInput("duplicate candidate name " + names_[i]);
  pos_.assign(static_cast<size_t>(n_) * m_, -1);
  for (int v = 0; v < n_; ++v) {
    if (static_cast<int>(votes_[v].size()) != m_)
      throw InvalidInput("vote " + std::to_string(v + 1) + " is not a complete order");
    for (int p = 0; p < m_; ++p) {
      int c = votes_[v][p];
      if (c < 0 || c >= m_ || pos_[static_cast<size_t>(v) * m_ + c] != -1)
        throw InvalidInput("vote " + std::to_string(v + 1) + " is not a permutation");
      pos_[static_cast<size_t>(v) * m_ + c] = p;
    }
  }
}

int Election::find_candidate(const std::string& name) const {
  for (int c = 0; c < m_; ++c)
    if (names_[c] == name) return c;
  return -1;
}

MisrepMatrix::MisrepMatrix(int n, int m, std::vector<Value> row_major)
    : n_(n), m_(m), rows_(std::move(row_major)) {
  if (rows_.size() != static_cast<size_t>(n) * m)
    throw InvalidInput("matrix size does not match n x m");
  for (Value x : rows_)
    if (x < 0) throw InvalidInput("misrepresentation values must be nonnegative");
  cols_.resize(rows_.size());
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < m; ++c) cols_[static_cast<size_t>(c) * n + v] = at(v, c);
}

Value MisrepMatrix::max_entry() const {
  return kernels::active().max(rows_.data(), rows_.size());
}

std::vector<Value> MisrepMatrix::distinct_values() const {
  std::vector<Value> v = rows_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

MisrepMatrix MisrepMatrix::threshold(Value t) const {
  std::vector<Value> out(rows_.size());
  kernels::active().threshold(rows_.data(), out.data(), rows_.size(), t);
  return MisrepMatrix(n_, m_, std::move(out));
}

MisrepMatrix build_misrep(const Election& e, const MisrepSpec& spec) {
  const int n = e.n(), m = e.m();
  std::vector<Value> rows(static_cast<size_t>(n) * m);
  switch (spec.kind) {
    case MisrepKind::Borda:
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c) rows[static_cast<size_t>(v) * m + c] = e.position(v, c);
      break;
    case MisrepKind::Approval:
      if (static_cast<int>(spec.approvals.size()) != n)
        throw InvalidInput("approval block needs one line per voter");
      std::fill(rows.begin(), rows.end(), 1);
      for (int v = 0; v < n; ++v)
        for (int c : spec.approvals[v]) {
          if (c < 0 || c >= m) throw InvalidInput("approval set names unknown candidate");
          rows[static_cast<size_t>(v) * m + c] = 0;
        }
      break;
    case MisrepKind::Explicit:
      if (static_cast<int>(spec.matrix.size()) != n)
        throw InvalidInput("explicit matrix needs one row per voter");
      for (int v = 0; v < n; ++v) {
        if (static_cast<int>(spec.matrix[v].size()) != m)
          throw InvalidInput("explicit matrix row " + std::to_string(v + 1) + " has wrong length");
        std::copy(spec.matrix[v].begin(), spec.matrix[v].end(),
                  rows.begin() + static_cast<std::ptrdiff_t>(v) * m);
      }
      break;
  }
  MisrepMatrix r(n, m, std::move(rows));
  check_monotone(e, r);
  return r;
}

namespace {

// First (voter, better, worse) breaking monotonicity, or voter = -1.
struct Violation {
  int v = -1, better = -1, worse = -1;
};

Violation find_violation(const Election& e, const MisrepMatrix& r) {
  for (int v = 0; v < e.n(); ++v) {
    const auto& vote = e.vote(v);
    for (int p = 0; p + 1 < e.m(); ++p)
      if (r.at(v, vote[p]) > r.at(v, vote[p + 1])) return {v, vote[p], vote[p + 1]};
  }
  return {};
}

}  // namespace

void check_monotone(const Election& e, const MisrepMatrix& r) {
  if (r.n() != e.n() || r.m() != e.m()) throw InvalidInput("matrix shape does not match election");
  Violation x = find_violation(e, r);
  if (x.v >= 0) {
    std::ostringstream os;
    os << "misrepresentation not monotone for voter " << x.v + 1 << ": " << e.names()[x.better]
       << " ranked above " << e.names()[x.worse] << " but r = " << r.at(x.v, x.better) << " > "
       << r.at(x.v, x.worse);
    throw InvalidInput(os.str());
  }
}

bool is_monotone(const Election& e, const MisrepMatrix& r) {
  return r.n() == e.n() && r.m() == e.m() && find_violation(e, r).v < 0;
}

Value scale_rationals(const std::vector<std::vector<Rational>>& rows,
                      std::vector<std::vector<Value>>& out) {
  Value l = 1;
  for (const auto& row : rows)
    for (const Rational& q : row) {
      if (q.den <= 0 || q.num < 0) throw InvalidInput("rational entries must be nonnegative");
      l = std::lcm(l, q.den);
    }
  out.clear();
  for (const auto& row : rows) {
    std::vector<Value> r;
    for (const Rational& q : row) r.push_back(q.num * (l / q.den));
    out.push_back(std::move(r));
  }
  return l;
}

ProblemInstance ProblemInstance::make(Election e, MisrepSpec spec, Rule rule, Objective obj,
                                      int k, Value R) {
  ProblemInstance p;
  p.matrix = build_misrep(e, spec);
  p.election = std::move(e);
  p.spec = std::move(spec);
  p.rule = rule;
  p.objective = obj;
  p.k = k;
  p.R = R;
  p.validate();
  return p;
}

ProblemInstance ProblemInstance::with(Rule rule_, Objective obj, int k_, Value R_) const {
  ProblemInstance p = *this;
  p.rule = rule_;
  p.objective = obj;
  p.k = k_;
  p.R = R_;
  p.validate();
  return p;
}

void ProblemInstance::validate() const {
  if (k < 1 || k > std::min(m(), n()))
    throw InvalidInput("committee size k=" + std::to_string(k) + " outside [1, min(m, n)]");
  if (R < 0) throw InvalidInput("bound R must be nonnegative");
  if (matrix.n() != n() || matrix.m() != m()) throw InvalidInput("matrix shape mismatch");
}

Value evaluate(const Assignment& a, const MisrepMatrix& r, Objective obj) {
  Value s = 0;
  for (int v = 0; v < static_cast<int>(a.map.size()); ++v) {
    Value x = r.at(v, a.map[v]);
    s = obj == Objective::Sum ? s + x : std::max(s, x);
  }
  return s;
}

std::vector<int> winner_loads(const Assignment& a) {
  std::vector<int> loads(a.winners.size(), 0);
  for (int c : a.map) {
    auto it = std::lower_bound(a.winners.begin(), a.winners.end(), c);
    if (it != a.winners.end() && *it == c) ++loads[it - a.winners.begin()];
  }
  return loads;
}

bool check_m_criterion(const Assignment& a, int k, int n) {
  if (k < 1 || static_cast<int>(a.winners.size()) != k) return false;
  if (static_cast<int>(a.map.size()) != n) return false;
  for (int c : a.map)
    if (!std::binary_search(a.winners.begin(), a.winners.end(), c)) return false;
  const int lo = n / k, hi = (n + k - 1) / k;
  for (int load : winner_loads(a))
    if (load < lo || load > hi) return false;
  return true;
}

Solution make_solution(const ProblemInstance& inst, Assignment a, std::string solver) {
  Solution s;
  s.value = evaluate(a, inst.matrix, inst.objective);
  s.m_criterion = check_m_criterion(a, inst.k, inst.n());
  s.assignment = std::move(a);
  s.solver = std::move(solver);
  return s;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string VerificationReport::render() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << c.name << (c.ok ? " check passed" : " check failed");
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

VerificationReport verify_solution(const ProblemInstance& inst, const Solution& s,
                                   bool check_bound) {
  VerificationReport rep;
  const Assignment& a = s.assignment;
  const int n = inst.n(), m = inst.m();

  Check shape{"shape", true, {}};
  if (static_cast<int>(a.map.size()) != n) {
    shape.ok = false;
    shape.detail = "assignment covers " + std::to_string(a.map.size()) + " voters, expected " +
                   std::to_string(n);
  }
  for (int c : a.winners)
    if (c < 0 || c >= m) {
      shape.ok = false;
      shape.detail = "winner index out of range";
    }
  if (!std::is_sorted(a.winners.begin(), a.winners.end()) ||
      std::adjacent_find(a.winners.begin(), a.winners.end()) != a.winners.end()) {
    shape.ok = false;
    shape.detail = "winner list not a sorted set";
  }
  for (int c : a.map)
    if (!std::binary_search(a.winners.begin(), a.winners.end(), c)) {
      shape.ok = false;
      shape.detail = "voter mapped outside the winner set";
      break;
    }
  rep.checks.push_back(shape);
  if (!shape.ok) return rep;

  Check size{"committee size", true, {}};
  if (static_cast<int>(a.winners.size()) != inst.k) {
    size.ok = false;
    size.detail = std::to_string(a.winners.size()) + " winners, expected " + std::to_string(inst.k);
  }
  rep.checks.push_back(size);

  const Value actual = evaluate(a, inst.matrix, inst.objective);
  Check value{"value", true, {}};
  if (actual != s.value) {
    value.ok = false;
    value.detail = "claimed " + std::to_string(s.value) + ", recomputed " + std::to_string(actual);
  }
  rep.checks.push_back(value);

  if (inst.rule == Rule::Monroe) {
    Check mc{"m-criterion", true, {}};
    const int lo = n / inst.k, hi = (n + inst.k - 1) / inst.k;
    std::vector<int> loads = winner_loads(a);
    for (size_t i = 0; i < loads.size(); ++i)
      if (loads[i] < lo || loads[i] > hi) {
        mc.ok = false;
        mc.detail = "winner " + inst.election.names()[a.winners[i]] + " has load " +
                    std::to_string(loads[i]) + ", allowed [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]";
        break;
      }
    rep.checks.push_back(mc);
  }

  if (check_bound) {
    Check b{"bound", true, {}};
    if (actual > inst.R) {
      b.ok = false;
      b.detail = "value " + std::to_string(actual) + " exceeds R = " + std::to_string(inst.R);
    }
    rep.checks.push_back(b);
  }
  return rep;
}

bool committee_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace proprep
