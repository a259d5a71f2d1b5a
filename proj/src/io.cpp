#include "proprep/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace proprep {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct Lines {
  std::vector<std::pair<int, std::string>> items;  // (line number, text)
  size_t at = 0;

  explicit Lines(std::istream& in) {
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
      ++no;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (s.find_first_not_of(" \t") == std::string::npos) continue;
      items.push_back({no, s});
    }
  }
  bool done() const { return at >= items.size(); }
  int line() const { return done() ? (items.empty() ? 1 : items.back().first + 1) : items[at].first; }
  const std::string& next(const char* what) {
    if (done()) throw ParseError(line(), std::string("unexpected end of file, expected ") + what);
    return items[at++].second;
  }
};

long long to_int(const std::string& s, int line, const char* what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + s + "'");
  }
}

int candidate(const std::vector<std::string>& names, const std::string& tok, int line) {
  for (size_t c = 0; c < names.size(); ++c)
    if (names[c] == tok) return static_cast<int>(c);
  throw ParseError(line, "unknown candidate '" + tok + "'");
}

}  // namespace

ProblemInstance parse_instance(std::istream& in) {
  Lines L(in);
  {
    int no = L.line();
    auto t = split_ws(L.next("header"));
    if (t.size() != 2 || t[0] != "proprep" || t[1] != "v1")
      throw ParseError(no, "expected 'proprep v1'");
  }
  int no = L.line();
  auto h = split_ws(L.next("parameter line"));
  if (h.size() != 7) throw ParseError(no, "expected 'm n k R rule objective misrep'");
  const int m = static_cast<int>(to_int(h[0], no, "m"));
  const int n = static_cast<int>(to_int(h[1], no, "n"));
  const int k = static_cast<int>(to_int(h[2], no, "k"));
  const Value R = to_int(h[3], no, "R");
  if (m < 1 || n < 1) throw ParseError(no, "m and n must be positive");
  Rule rule;
  if (h[4] == "cc") rule = Rule::CC;
  else if (h[4] == "monroe") rule = Rule::Monroe;
  else throw ParseError(no, "rule must be cc or monroe");
  Objective obj;
  if (h[5] == "sum") obj = Objective::Sum;
  else if (h[5] == "minimax") obj = Objective::Minimax;
  else throw ParseError(no, "objective must be sum or minimax");
  MisrepSpec spec;
  if (h[6] == "borda") spec.kind = MisrepKind::Borda;
  else if (h[6] == "approval") spec.kind = MisrepKind::Approval;
  else if (h[6] == "explicit") spec.kind = MisrepKind::Explicit;
  else throw ParseError(no, "misrep must be borda, approval or explicit");

  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) {
    int ln = L.line();
    auto t = split_ws(L.next("candidate name"));
    if (t.size() != 1 || t[0][0] == '#') throw ParseError(ln, "expected a single candidate name");
    for (const auto& prev : names)
      if (prev == t[0]) throw ParseError(ln, "duplicate candidate '" + t[0] + "'");
    names.push_back(t[0]);
  }
  std::vector<std::vector<int>> votes;
  for (int v = 0; v < n; ++v) {
    int ln = L.line();
    auto t = split_ws(L.next("vote"));
    if (static_cast<int>(t.size()) != m)
      throw ParseError(ln, "vote must list all " + std::to_string(m) + " candidates");
    std::vector<int> vote;
    std::vector<char> seen(m, 0);
    for (const auto& tok : t) {
      int c = candidate(names, tok, ln);
      if (seen[c]) throw ParseError(ln, "candidate '" + tok + "' repeated in vote");
      seen[c] = 1;
      vote.push_back(c);
    }
    votes.push_back(vote);
  }
  while (!L.done()) {
    int ln = L.line();
    std::string marker = split_ws(L.next("block"))[0];
    if (marker == "#approve") {
      if (spec.kind != MisrepKind::Approval) throw ParseError(ln, "#approve needs misrep approval");
      for (int v = 0; v < n; ++v) {
        int vl = L.line();
        auto t = split_ws(L.next("approval line"));
        std::vector<int> a;
        if (!(t.size() == 1 && t[0] == "-"))
          for (const auto& tok : t) a.push_back(candidate(names, tok, vl));
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
          throw ParseError(vl, "approval set repeats a candidate");
        spec.approvals.push_back(a);
      }
    } else if (marker == "#matrix") {
      if (spec.kind != MisrepKind::Explicit) throw ParseError(ln, "#matrix needs misrep explicit");
      std::vector<std::vector<Rational>> q;
      for (int v = 0; v < n; ++v) {
        int vl = L.line();
        auto t = split_ws(L.next("matrix row"));
        if (static_cast<int>(t.size()) != m)
          throw ParseError(vl, "matrix row needs " + std::to_string(m) + " entries");
        std::vector<Rational> row;
        for (const auto& tok : t) {
          auto slash = tok.find('/');
          Rational r;
          if (slash == std::string::npos) {
            r.num = to_int(tok, vl, "matrix entry");
          } else {
            r.num = to_int(tok.substr(0, slash), vl, "numerator");
            r.den = to_int(tok.substr(slash + 1), vl, "denominator");
          }
          if (r.num < 0 || r.den <= 0) throw ParseError(vl, "matrix entries must be nonnegative");
          row.push_back(r);
        }
        q.push_back(row);
      }
      scale_rationals(q, spec.matrix);
    } else {
      throw ParseError(ln, "unknown block '" + marker + "'");
    }
  }
  if (spec.kind == MisrepKind::Approval && spec.approvals.empty())
    throw ParseError(L.line(), "missing #approve block");
  if (spec.kind == MisrepKind::Explicit && spec.matrix.empty())
    throw ParseError(L.line(), "missing #matrix block");
  try {
    return ProblemInstance::make(Election(names, votes), spec, rule, obj, k, R);
  } catch (const InvalidInput& e) {
    throw ParseError(L.line(), e.what());
  }
}

ProblemInstance parse_instance(const std::string& text) {
  std::istringstream is(text);
  return parse_instance(is);
}

ProblemInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_instance(in);
}

std::string render_instance(const ProblemInstance& inst) {
  std::ostringstream os;
  const Election& e = inst.election;
  os << "proprep v1\n";
  os << e.m() << ' ' << e.n() << ' ' << inst.k << ' ' << inst.R << ' ' << to_string(inst.rule) << ' '
     << to_string(inst.objective) << ' ' << to_string(inst.spec.kind) << '\n';
  for (const auto& name : e.names()) os << name << '\n';
  for (int v = 0; v < e.n(); ++v) {
    for (int p = 0; p < e.m(); ++p) os << (p ? " " : "") << e.names()[e.vote(v)[p]];
    os << '\n';
  }
  if (inst.spec.kind == MisrepKind::Approval) {
    os << "#approve\n";
    for (int v = 0; v < e.n(); ++v) {
      std::vector<int> a;
      for (int c = 0; c < e.m(); ++c)
        if (inst.matrix.at(v, c) == 0) a.push_back(c);
      if (a.empty()) os << '-';
      for (size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << e.names()[a[i]];
      os << '\n';
    }
  } else if (inst.spec.kind == MisrepKind::Explicit) {
    os << "#matrix\n";
    for (int v = 0; v < e.n(); ++v) {
      for (int c = 0; c < e.m(); ++c) os << (c ? " " : "") << inst.matrix.at(v, c);
      os << '\n';
    }
  }
  return os.str();
}

std::string render_solution(const ProblemInstance& inst, const Solution& s,
                            std::optional<double> seconds) {
  const auto& names = inst.election.names();
  std::ostringstream os;
  os << "solver: " << s.solver << '\n';
  os << "rule: " << to_string(inst.rule) << '\n';
  os << "objective: " << to_string(inst.objective) << '\n';
  os << "k: " << inst.k << '\n';
  os << "value: " << s.value << '\n';
  os << "m_criterion: " << (s.m_criterion ? "true" : "false") << '\n';
  os << "winners: [";
  for (size_t i = 0; i < s.assignment.winners.size(); ++i)
    os << (i ? ", " : "") << names[s.assignment.winners[i]];
  os << "]\nloads: [";
  auto loads = winner_loads(s.assignment);
  for (size_t i = 0; i < loads.size(); ++i) os << (i ? ", " : "") << loads[i];
  os << "]\nassignment: [";
  for (size_t v = 0; v < s.assignment.map.size(); ++v)
    os << (v ? ", " : "") << names[s.assignment.map[v]];
  os << "]\n";
  if (seconds) os << "seconds: " << std::fixed << std::setprecision(6) << *seconds << '\n';
  return os.str();
}

Solution parse_solution(const std::string& text, const ProblemInstance& inst) {
  std::istringstream is(text);
  std::string line;
  int no = 0;
  Solution s;
  bool have_value = false, have_winners = false, have_map = false;
  auto list = [&](const std::string& body) {
    auto l = body.find('['), r = body.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l)
      throw ParseError(no, "expected a bracketed list");
    std::string inner = body.substr(l + 1, r - l - 1);
    for (char& ch : inner)
      if (ch == ',') ch = ' ';
    return split_ws(inner);
  };
  while (std::getline(is, line)) {
    ++no;
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon), body = line.substr(colon + 1);
    if (key == "value") {
      auto t = split_ws(body);
      if (t.size() != 1) throw ParseError(no, "expected a value");
      s.value = to_int(t[0], no, "value");
      have_value = true;
    } else if (key == "solver") {
      auto t = split_ws(body);
      if (!t.empty()) s.solver = t[0];
    } else if (key == "winners") {
      for (const auto& tok : list(body))
        s.assignment.winners.push_back(candidate(inst.election.names(), tok, no));
      std::sort(s.assignment.winners.begin(), s.assignment.winners.end());
      have_winners = true;
    } else if (key == "assignment") {
      for (const auto& tok : list(body))
        s.assignment.map.push_back(candidate(inst.election.names(), tok, no));
      have_map = true;
    }
  }
  if (!have_value || !have_winners || !have_map)
    throw ParseError(no, "solution needs value, winners and assignment");
  s.m_criterion = check_m_criterion(s.assignment, inst.k, inst.n());
  return s;
}

}  // namespace proprep
