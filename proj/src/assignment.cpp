#include "proprep/assignment.hpp"

#include <algorithm>
#include <queue>

namespace proprep {

FlowNetwork::FlowNetwork(int vertices) : nv_(vertices), adj_(vertices), balance_(vertices, 0) {}

int FlowNetwork::add_vertex() {
  adj_.emplace_back();
  balance_.push_back(0);
  return nv_++;
}

int FlowNetwork::add_edge(int from, int to, Value cap, Value cost) {
  int id = static_cast<int>(edges_.size());
  edges_.push_back({to, cap, cost});
  edges_.push_back({from, 0, -cost});
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

int FlowNetwork::add_arc(int from, int to, Value lower, Value cap, Value cost) {
  if (lower < 0 || lower > cap) throw InvalidInput("arc bounds out of order");
  if (cost < 0) throw InvalidInput("negative arc cost");
  int e = add_edge(from, to, cap - lower, cost);
  balance_[to] += lower;
  balance_[from] -= lower;
  arcs_.push_back({e, lower});
  return static_cast<int>(arcs_.size()) - 1;
}

Value FlowNetwork::flow(int arc) const {
  const Arc& a = arcs_[arc];
  return a.lower + edges_[a.edge ^ 1].cap;
}

Value FlowNetwork::ssp(int s, int t, Value need, Value& cost) {
  const int N = static_cast<int>(adj_.size());
  std::vector<Value> pot(N, 0), dist(N);
  std::vector<int> prev(N);
  Value sent = 0;
  using Item = std::pair<Value, int>;
  while (sent < need) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(prev.begin(), prev.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d != dist[u]) continue;
      for (int id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.cap <= 0) continue;
        Value nd = d + e.cost + pot[u] - pot[e.to];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          prev[e.to] = id;
          pq.push({nd, e.to});
        }
      }
    }
    if (dist[t] >= kInf) break;
    for (int v = 0; v < N; ++v)
      if (dist[v] < kInf) pot[v] += dist[v];
    Value push = need - sent;
    for (int v = t; v != s; v = edges_[prev[v] ^ 1].to) push = std::min(push, edges_[prev[v]].cap);
    for (int v = t; v != s; v = edges_[prev[v] ^ 1].to) {
      edges_[prev[v]].cap -= push;
      edges_[prev[v] ^ 1].cap += push;
      cost += push * edges_[prev[v]].cost;
    }
    sent += push;
  }
  return sent;
}

std::optional<Value> FlowNetwork::min_cost_feasible(int s, int t) {
  Value base = 0;
  for (const Arc& a : arcs_) base += a.lower * edges_[a.edge].cost;
  // Close the circulation, then route excesses from a super source.
  add_edge(t, s, kInf, 0);
  const int ss = add_vertex(), tt = add_vertex();
  Value need = 0;
  for (int v = 0; v < ss; ++v) {
    if (balance_[v] > 0) {
      add_edge(ss, v, balance_[v], 0);
      need += balance_[v];
    } else if (balance_[v] < 0) {
      add_edge(v, tt, -balance_[v], 0);
    }
  }
  Value cost = 0;
  if (ssp(ss, tt, need, cost) < need) return std::nullopt;
  return base + cost;
}

Assignment assign_cc(const std::vector<int>& winners, const MisrepMatrix& r) {
  if (winners.empty()) throw InvalidInput("empty committee");
  Assignment a;
  a.winners = winners;
  std::sort(a.winners.begin(), a.winners.end());
  a.map.resize(r.n());
  for (int v = 0; v < r.n(); ++v) {
    int best = a.winners[0];
    for (int c : a.winners)
      if (r.at(v, c) < r.at(v, best)) best = c;
    a.map[v] = best;
  }
  return a;
}

namespace {

// Source -> winner [floor, ceil], winner -> voter unit arcs, voter -> sink [1, 1].
std::optional<Assignment> monroe_flow(const std::vector<int>& winners, const MisrepMatrix& r,
                                      Value R) {
  const int n = r.n(), k = static_cast<int>(winners.size());
  if (k < 1 || k > n) throw InvalidInput("Monroe committee size must be in [1, n]");
  std::vector<int> w = winners;
  std::sort(w.begin(), w.end());
  const int s = 0, t = 1;
  FlowNetwork net(2 + k + n);
  for (int i = 0; i < k; ++i) net.add_arc(s, 2 + i, n / k, (n + k - 1) / k, 0);
  std::vector<std::pair<int, std::pair<int, int>>> pairs;
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < n; ++v)
      if (r.at(v, w[i]) <= R)
        pairs.push_back({net.add_arc(2 + i, 2 + k + v, 0, 1, r.at(v, w[i])), {i, v}});
  for (int v = 0; v < n; ++v) net.add_arc(2 + k + v, t, 1, 1, 0);
  if (!net.min_cost_feasible(s, t)) return std::nullopt;
  Assignment a;
  a.winners = w;
  a.map.assign(n, -1);
  for (auto& [arc, iv] : pairs)
    if (net.flow(arc) > 0) a.map[iv.second] = w[iv.first];
  return a;
}

}  // namespace

Assignment assign_monroe_sum(const std::vector<int>& winners, const MisrepMatrix& r) {
  return *monroe_flow(winners, r, FlowNetwork::kInf);
}

std::optional<Assignment> assign_monroe_minimax(const std::vector<int>& winners,
                                                const MisrepMatrix& r, Value R) {
  return monroe_flow(winners, r, R);
}

Assignment assign_monroe_bottleneck(const std::vector<int>& winners, const MisrepMatrix& r) {
  std::vector<Value> vals;
  for (int c : winners)
    for (Value x : r.col(c)) vals.push_back(x);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  size_t lo = 0, hi = vals.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (monroe_flow(winners, r, vals[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return *monroe_flow(winners, r, vals[lo]);
}

Assignment assign_best(const std::vector<int>& winners, const MisrepMatrix& r, Rule rule,
                       Objective obj) {
  if (rule == Rule::CC) return assign_cc(winners, r);
  return obj == Objective::Sum ? assign_monroe_sum(winners, r)
                               : assign_monroe_bottleneck(winners, r);
}

std::vector<int> hungarian(const std::vector<std::vector<Value>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  const int m = static_cast<int>(cost[0].size());
  if (n > m) throw InvalidInput("hungarian needs rows <= columns");
  const Value INF = FlowNetwork::kInf;
  // 1-based potentials; p[j] is the row matched to column j.
  std::vector<Value> u(n + 1, 0), v(m + 1, 0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Value> minv(m + 1, INF);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      Value delta = INF;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Value cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> col(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j]) col[p[j] - 1] = j - 1;
  return col;
}

namespace {

bool kuhn(int row, const std::vector<std::vector<char>>& allowed, std::vector<int>& match_col,
          std::vector<char>& seen) {
  const int m = static_cast<int>(allowed[row].size());
  for (int c = 0; c < m; ++c) {
    if (!allowed[row][c] || seen[c]) continue;
    seen[c] = 1;
    if (match_col[c] < 0 || kuhn(match_col[c], allowed, match_col, seen)) {
      match_col[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<char>>& allowed) {
  const int n = static_cast<int>(allowed.size());
  if (n == 0) return std::vector<int>{};
  const int m = static_cast<int>(allowed[0].size());
  std::vector<int> match_col(m, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(m, 0);
    if (!kuhn(i, allowed, match_col, seen)) return std::nullopt;
  }
  std::vector<int> col(n, -1);
  for (int c = 0; c < m; ++c)
    if (match_col[c] >= 0) col[match_col[c]] = c;
  return col;
}

std::vector<int> bottleneck_matching(const std::vector<std::vector<Value>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  std::vector<Value> vals;
  for (const auto& row : cost) vals.insert(vals.end(), row.begin(), row.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  auto feasible = [&](Value t) {
    std::vector<std::vector<char>> allowed(n);
    for (int i = 0; i < n; ++i)
      for (Value x : cost[i]) allowed[i].push_back(x <= t);
    return perfect_matching(allowed);
  };
  size_t lo = 0, hi = vals.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (feasible(vals[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto res = feasible(vals[lo]);
  if (!res) throw InvalidInput("no row-perfect matching exists");
  return *res;
}

void enumerate_balanced_assignments(const std::vector<int>& winners, int n,
                                    const std::function<void(const Assignment&)>& visit,
                                    int max_n) {
  if (n > max_n)
    throw BudgetExceeded("balanced enumeration limited to n <= " + std::to_string(max_n));
  const int k = static_cast<int>(winners.size());
  if (k < 1 || k > n) return;
  const int lo = n / k, hi = (n + k - 1) / k, big = n % k;
  Assignment a;
  a.winners = winners;
  std::sort(a.winners.begin(), a.winners.end());
  a.map.assign(n, -1);
  std::vector<int> load(k, 0);
  int full = 0;  // winners at load hi when hi > lo
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      for (int i = 0; i < k; ++i)
        if (load[i] < lo) return;
      visit(a);
      return;
    }
    for (int i = 0; i < k; ++i) {
      if (load[i] == hi) continue;
      bool becomes_full = hi > lo && load[i] + 1 == hi;
      if (becomes_full && full == big) continue;
      ++load[i];
      full += becomes_full;
      a.map[v] = a.winners[i];
      rec(v + 1);
      --load[i];
      full -= becomes_full;
    }
  };
  rec(0);
}

}  // namespace proprep
