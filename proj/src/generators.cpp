#include "proprep/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace proprep::gen {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::string> candidate_names(int m) {
  std::vector<std::string> names;
  for (int c = 1; c <= m; ++c) names.push_back("c" + std::to_string(c));
  return names;
}

Election random_election(int n, int m, Rng& rng) {
  std::vector<std::vector<int>> votes(n, std::vector<int>(m));
  for (auto& v : votes) {
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
  }
  return Election(candidate_names(m), votes);
}

std::pair<Election, Axis> random_sp_election(int n, int m, Rng& rng) {
  Axis axis(m);
  std::iota(axis.begin(), axis.end(), 0);
  std::shuffle(axis.begin(), axis.end(), rng);
  std::vector<std::vector<int>> votes;
  for (int v = 0; v < n; ++v) {
    int peak = uniform(rng, 0, m - 1);
    std::vector<int> vote{axis[peak]};
    int a = peak - 1, b = peak + 1;
    while (a >= 0 || b < m) {
      bool go_left = b >= m || (a >= 0 && uniform(rng, 0, 1) == 0);
      vote.push_back(go_left ? axis[a--] : axis[b++]);
    }
    votes.push_back(vote);
  }
  return {Election(candidate_names(m), votes), axis};
}

std::vector<std::vector<int>> random_prefix_approvals(const Election& e, Rng& rng) {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < e.n(); ++v) {
    int t = uniform(rng, 0, e.m());
    std::vector<int> a(e.vote(v).begin(), e.vote(v).begin() + t);
    std::sort(a.begin(), a.end());
    out.push_back(a);
  }
  return out;
}

HittingSetInstance random_hitting_set(int universe, int sets, Rng& rng) {
  HittingSetInstance hs;
  hs.universe = universe;
  for (int i = 0; i < sets; ++i) {
    std::vector<int> F;
    while (F.empty())
      for (int u = 0; u < universe; ++u)
        if (uniform(rng, 0, 2) == 0) F.push_back(u);
    hs.sets.push_back(F);
  }
  return hs;
}

RX3CInstance random_rx3c(int n, Rng& rng) {
  if (n < 3 || n % 3 != 0) throw InvalidInput("RX3C needs n divisible by 3");
  std::vector<int> slots;
  for (int e = 0; e < n; ++e)
    for (int t = 0; t < 3; ++t) slots.push_back(e);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(slots.begin(), slots.end(), rng);
    RX3CInstance x;
    x.n = n;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      std::array<int, 3> s{slots[3 * j], slots[3 * j + 1], slots[3 * j + 2]};
      std::sort(s.begin(), s.end());
      ok = s[0] != s[1] && s[1] != s[2];
      x.sets.push_back(s);
    }
    if (ok) return x;
  }
  throw InvalidInput("could not sample an RX3C instance");
}

std::vector<std::pair<int, int>> random_subcubic_graph(int vertices, int edges, Rng& rng) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> deg(vertices, 0);
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : all) {
    if (static_cast<int>(out.size()) == edges) break;
    if (deg[u] == 3 || deg[v] == 3) continue;
    ++deg[u];
    ++deg[v];
    out.push_back({u, v});
  }
  return out;
}

StabbingInstance random_stabbing(int max_u, int m, int k, Rng& rng) {
  int count = uniform(rng, 0, max_u);
  std::vector<Interval> iv;
  for (int i = 0; i < count; ++i) {
    int a = uniform(rng, 1, m), b = uniform(rng, 1, m);
    iv.push_back({std::min(a, b), std::max(a, b)});
  }
  return StabbingInstance::make(m, k, std::move(iv));
}

}  // namespace proprep::gen
