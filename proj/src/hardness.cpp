#include "proprep/hardness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace proprep {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

}  // namespace

void HittingSetInstance::validate() const {
  if (universe < 1) throw InvalidInput("hitting set universe must be nonempty");
  if (sets.empty()) throw InvalidInput("hitting set family must be nonempty");
  for (const auto& s : sets) {
    if (s.empty()) throw InvalidInput("hitting set family contains an empty set");
    std::set<int> seen;
    for (int u : s)
      if (u < 0 || u >= universe || !seen.insert(u).second)
        throw InvalidInput("set element outside universe or repeated");
  }
}

void RX3CInstance::validate() const {
  if (n < 3 || n % 3 != 0) throw InvalidInput("RX3C needs |E| divisible by 3");
  if (static_cast<int>(sets.size()) != n) throw InvalidInput("RX3C needs |S| = |E|");
  std::vector<int> deg(n, 0);
  for (const auto& s : sets) {
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) throw InvalidInput("RX3C set repeats an element");
    for (int e : s) {
      if (e < 0 || e >= n) throw InvalidInput("RX3C element out of range");
      ++deg[e];
    }
  }
  for (int d : deg)
    if (d != 3) throw InvalidInput("RX3C element does not occur in exactly three sets");
}

ProblemInstance gen_hs_approval(const HittingSetInstance& hs, int k, Rule rule, Objective obj) {
  hs.validate();
  const int m = hs.universe, n = static_cast<int>(hs.sets.size());
  std::vector<std::vector<int>> votes, approvals;
  for (const auto& F : hs.sets) {
    std::vector<int> a(F.begin(), F.end());
    std::sort(a.begin(), a.end());
    std::vector<int> vote = a;
    for (int c = 0; c < m; ++c)
      if (!std::binary_search(a.begin(), a.end(), c)) vote.push_back(c);
    votes.push_back(vote);
    approvals.push_back(a);
  }
  std::vector<int> all(m);
  for (int c = 0; c < m; ++c) all[c] = c;
  for (int d = 0; d < n * (k - 1); ++d) {
    votes.push_back(all);
    approvals.push_back(all);
  }
  return ProblemInstance::make(Election(numbered("c", m), votes), MisrepSpec::approval(approvals),
                               rule, obj, k, 0);
}

ProblemInstance gen_hs_borda(const HittingSetInstance& hs, int k, Rule rule, Objective obj,
                             const HsBordaCaps& caps) {
  hs.validate();
  const int m = hs.universe, n = static_cast<int>(hs.sets.size());
  if (n > caps.max_sets || m > caps.max_universe || k > caps.max_k)
    throw BudgetExceeded("hs-borda generator capped at n, m, k <= " +
                         std::to_string(caps.max_sets) + ", " + std::to_string(caps.max_universe) +
                         ", " + std::to_string(caps.max_k) + " (it adds n^2 m k^2 candidates)");
  const int z = n * m * k;
  const int blocks = n * k;
  std::vector<std::string> names = numbered("c", m);
  for (int i = 1; i <= blocks; ++i)
    for (int j = 1; j <= z; ++j) names.push_back("b" + std::to_string(i) + "_" + std::to_string(j));
  auto blocker = [&](int i, int j) { return m + (i - 1) * z + (j - 1); };  // 1-based i, j
  auto other_blocks = [&](std::vector<int>& vote, int skip) {
    for (int i = 1; i <= blocks; ++i)
      if (i != skip)
        for (int j = 1; j <= z; ++j) vote.push_back(blocker(i, j));
  };
  std::vector<std::vector<int>> votes;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> F = hs.sets[i - 1];
    std::sort(F.begin(), F.end());
    std::vector<int> vote = F;
    for (int j = 1; j <= z; ++j) vote.push_back(blocker(i, j));
    for (int c = 0; c < m; ++c)
      if (!std::binary_search(F.begin(), F.end(), c)) vote.push_back(c);
    other_blocks(vote, i);
    votes.push_back(vote);
  }
  for (int d = 1; d <= n * (k - 1); ++d) {
    std::vector<int> vote;
    for (int c = 0; c < m; ++c) vote.push_back(c);
    for (int j = 1; j <= z; ++j) vote.push_back(blocker(n + d, j));
    other_blocks(vote, n + d);
    votes.push_back(vote);
  }
  const Value R = obj == Objective::Sum ? static_cast<Value>(n) * m * k : m - 1;
  return ProblemInstance::make(Election(std::move(names), votes), MisrepSpec::borda(), rule, obj, k,
                               R);
}

ProblemInstance gen_vc_minimax(int vertices, const std::vector<std::pair<int, int>>& edges, int k,
                               Value R, Rule rule) {
  if (R < 1) throw InvalidInput("vertex cover construction needs R >= 1");
  if (edges.empty()) throw InvalidInput("vertex cover construction needs an edge");
  std::vector<int> deg(vertices, 0);
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InvalidInput("bad edge in vertex cover instance");
    if (++deg[u] > 3 || ++deg[v] > 3) throw InvalidInput("vertex degree exceeds 3");
  }
  const int E = static_cast<int>(edges.size());
  const int pads = static_cast<int>(R - 1);
  std::vector<std::string> names = numbered("u", vertices);
  for (int e = 0; e < E; ++e)
    for (int t = 1; t <= pads; ++t) names.push_back("p" + std::to_string(e + 1) + "_" + std::to_string(t));
  const int m = static_cast<int>(names.size());
  std::vector<std::vector<int>> votes;
  for (int e = 0; e < E; ++e) {
    std::vector<int> vote;
    std::vector<char> used(m, 0);
    auto put = [&](int c) {
      vote.push_back(c);
      used[c] = 1;
    };
    for (int t = 0; t < pads; ++t) put(vertices + e * pads + t);
    put(edges[e].first);
    put(edges[e].second);
    for (int c = 0; c < m; ++c)
      if (!used[c]) put(c);
    votes.push_back(vote);
  }
  return ProblemInstance::make(Election(std::move(names), votes), MisrepSpec::borda(), rule,
                               Objective::Minimax, k, R);
}

RX3CElection gen_rx3c_monroe(const RX3CInstance& x) {
  x.validate();
  const int n = x.n;
  const Value big = 2 * static_cast<Value>(n) * n + 1;
  // occ[i][t]: index of the set holding the (t+1)-th occurrence of element i.
  std::vector<std::vector<int>> occ(n);
  for (int j = 0; j < n; ++j)
    for (int e : x.sets[j]) occ[e].push_back(j);
  std::vector<std::string> names = numbered("e", n);
  for (const auto& s : numbered("s", n)) names.push_back(s);
  Axis axis;
  for (int j = 0; j < n; ++j) axis.push_back(n + j);
  for (int i = 0; i < n; ++i) axis.push_back(i);

  std::vector<std::vector<Value>> rows;
  for (int i = 1; i <= n; ++i) {
    for (int t = 0; t < 3; ++t) {
      std::vector<Value> row(2 * n);
      for (int z = 1; z <= n; ++z) row[z - 1] = z <= i ? i + z - 1 : big;
      for (int j = 0; j < n; ++j) row[n + j] = occ[i - 1][t] == j ? 0 : 1;
      rows.push_back(row);
    }
    std::vector<Value> f(2 * n, big);
    f[i - 1] = 0;
    rows.push_back(f);
  }
  std::vector<std::vector<int>> votes;
  for (const auto& row : rows) votes.push_back(vote_from_row(row, axis));
  ProblemInstance inst =
      ProblemInstance::make(Election(std::move(names), votes), MisrepSpec::explicit_matrix(rows),
                            Rule::Monroe, Objective::Sum, n / 3 + n, 2 * static_cast<Value>(n) * n);
  return {std::move(inst), axis};
}

bool brute_hitting_set(const HittingSetInstance& hs, int k, int max_u) {
  hs.validate();
  if (hs.universe > max_u)
    throw BudgetExceeded("brute hitting set limited to |U| <= " + std::to_string(max_u));
  for (int mask = 0; mask < (1 << hs.universe); ++mask) {
    if (__builtin_popcount(mask) > k) continue;
    bool ok = true;
    for (const auto& F : hs.sets) {
      bool hit = false;
      for (int u : F) hit = hit || (mask >> u & 1);
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool brute_exact_3_cover(const RX3CInstance& x, int max_n) {
  x.validate();
  if (x.n > max_n) throw BudgetExceeded("brute exact cover limited to n <= " + std::to_string(max_n));
  std::vector<char> covered(x.n, 0);
  std::function<bool()> rec = [&]() -> bool {
    int e = static_cast<int>(std::find(covered.begin(), covered.end(), 0) - covered.begin());
    if (e == x.n) return true;
    for (const auto& s : x.sets) {
      if (std::find(s.begin(), s.end(), e) == s.end()) continue;
      if (covered[s[0]] || covered[s[1]] || covered[s[2]]) continue;
      for (int u : s) covered[u] = 1;
      bool ok = rec();
      for (int u : s) covered[u] = 0;
      if (ok) return true;
    }
    return false;
  };
  return rec();
}

bool brute_vertex_cover(int vertices, const std::vector<std::pair<int, int>>& edges, int k) {
  if (vertices > 20) throw BudgetExceeded("brute vertex cover limited to 20 vertices");
  for (int mask = 0; mask < (1 << vertices); ++mask) {
    if (__builtin_popcount(mask) > k) continue;
    bool ok = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace proprep
