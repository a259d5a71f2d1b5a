#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace proprep {

using Value = std::int64_t;

enum class Rule { CC, Monroe };
enum class Objective { Sum, Minimax };
enum class MisrepKind { Borda, Approval, Explicit };

const char* to_string(Rule r);
const char* to_string(Objective o);
const char* to_string(MisrepKind k);

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver called outside the input class it supports.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Election {
 public:
  Election() = default;
  Election(std::vector<std::string> names, std::vector<std::vector<int>> votes);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& votes() const { return votes_; }
  const std::vector<int>& vote(int v) const { return votes_[v]; }
  // 0-based rank of candidate c in vote v.
  int position(int v, int c) const { return pos_[static_cast<size_t>(v) * m_ + c]; }
  int top(int v) const { return votes_[v][0]; }
  int find_candidate(const std::string& name) const;

  bool operator==(const Election&) const = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> votes_;
  std::vector<int> pos_;
};

// Dense n x m integer table. A transposed copy is kept so that per-candidate
// columns are contiguous for the vector kernels.
class MisrepMatrix {
 public:
  MisrepMatrix() = default;
  MisrepMatrix(int n, int m, std::vector<Value> row_major);

  int n() const { return n_; }
  int m() const { return m_; }
  Value at(int v, int c) const { return rows_[static_cast<size_t>(v) * m_ + c]; }
  std::span<const Value> row(int v) const {
    return {rows_.data() + static_cast<size_t>(v) * m_, static_cast<size_t>(m_)};
  }
  std::span<const Value> col(int c) const {
    return {cols_.data() + static_cast<size_t>(c) * n_, static_cast<size_t>(n_)};
  }
  const std::vector<Value>& data() const { return rows_; }
  Value max_entry() const;
  // Sorted distinct entries.
  std::vector<Value> distinct_values() const;
  // 0 where r(v,c) <= t, 1 elsewhere.
  MisrepMatrix threshold(Value t) const;

  bool operator==(const MisrepMatrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && rows_ == o.rows_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Value> rows_;
  std::vector<Value> cols_;
};

struct MisrepSpec {
  MisrepKind kind = MisrepKind::Borda;
  std::vector<std::vector<int>> approvals;   // Approval
  std::vector<std::vector<Value>> matrix;    // Explicit, n rows of m

  static MisrepSpec borda() { return {}; }
  static MisrepSpec approval(std::vector<std::vector<int>> sets) {
    return {MisrepKind::Approval, std::move(sets), {}};
  }
  static MisrepSpec explicit_matrix(std::vector<std::vector<Value>> rows) {
    return {MisrepKind::Explicit, {}, std::move(rows)};
  }
};

MisrepMatrix build_misrep(const Election& e, const MisrepSpec& spec);

// Throws InvalidInput naming the first (voter, pair) that breaks monotonicity
// with respect to the voter's ranking.
void check_monotone(const Election& e, const MisrepMatrix& r);
bool is_monotone(const Election& e, const MisrepMatrix& r);

struct Rational {
  Value num = 0;
  Value den = 1;
};
// Scales every row by the lcm of all denominators. Returns the scale factor.
Value scale_rationals(const std::vector<std::vector<Rational>>& rows,
                      std::vector<std::vector<Value>>& out);

struct ProblemInstance {
  Election election;
  MisrepSpec spec;
  MisrepMatrix matrix;
  Rule rule = Rule::CC;
  Objective objective = Objective::Sum;
  int k = 1;
  Value R = 0;

  int n() const { return election.n(); }
  int m() const { return election.m(); }
  bool is_borda() const { return spec.kind == MisrepKind::Borda; }

  static ProblemInstance make(Election e, MisrepSpec spec, Rule rule, Objective obj,
                              int k, Value R);
  // Same instance with a different committee size, bound, rule or objective.
  ProblemInstance with(Rule rule, Objective obj, int k, Value R) const;
  void validate() const;
};

struct Assignment {
  std::vector<int> winners;  // sorted candidate indices
  std::vector<int> map;      // voter -> candidate index
};

struct SolverStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
  std::int64_t work = 0;
  std::int64_t enumerated = 0;
};

struct Solution {
  Assignment assignment;
  Value value = 0;
  bool m_criterion = false;
  std::string solver;
  SolverStats stats;
};

Value evaluate(const Assignment& a, const MisrepMatrix& r, Objective obj);
bool check_m_criterion(const Assignment& a, int k, int n);
// Voters represented by each winner, aligned with a.winners.
std::vector<int> winner_loads(const Assignment& a);

// Builds a Solution from an assignment, recomputing value and the flag.
Solution make_solution(const ProblemInstance& inst, Assignment a, std::string solver);

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok() const;
  std::string render() const;
};

VerificationReport verify_solution(const ProblemInstance& inst, const Solution& s,
                                   bool check_bound = true);

// Lexicographic order on sorted candidate index sequences.
bool committee_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace proprep
