#include "proprep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "proprep/generators.hpp"
#include "proprep/hardness.hpp"
#include "proprep/io.hpp"
#include "proprep/single_peaked.hpp"

namespace proprep::cli {

namespace {

namespace fs = std::filesystem;

bool sp_applicable(const ProblemInstance& inst) {
  if (!supports(SolverKind::SinglePeaked, inst)) return false;
  auto axis = detect_axis(inst.election);
  return axis && check_single_troughed(inst.matrix, *axis);
}

// Upper bound on the branching tree, saturating.
double branch_tree_size(Value R, int k) {
  return std::pow(static_cast<double>(R) + 1, static_cast<double>(R + k));
}

Rule parse_rule(const std::string& s) {
  if (s == "cc") return Rule::CC;
  if (s == "monroe") return Rule::Monroe;
  throw CLI::ValidationError("--rule", "expected cc or monroe");
}

Objective parse_objective(const std::string& s) {
  if (s == "sum") return Objective::Sum;
  if (s == "minimax") return Objective::Minimax;
  throw CLI::ValidationError("--objective", "expected sum or minimax");
}

// "1,2;2,3" -> {{0,1},{1,2}} (input is 1-based).
std::vector<std::vector<int>> parse_groups(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::vector<int> g;
    std::stringstream gs(group);
    std::string tok;
    while (std::getline(gs, tok, ',')) {
      if (tok.find_first_not_of(" ") == std::string::npos) continue;
      int x = std::stoi(tok);
      if (x < 1) throw InvalidInput("elements are numbered from 1");
      g.push_back(x - 1);
    }
    out.push_back(g);
  }
  return out;
}

// "1-2,2-3" -> {{0,1},{1,2}}.
std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw InvalidInput("edge '" + tok + "' is not of the form u-v");
    int u = std::stoi(tok.substr(0, dash)), v = std::stoi(tok.substr(dash + 1));
    if (u < 1 || v < 1) throw InvalidInput("vertices are numbered from 1");
    out.push_back({u - 1, v - 1});
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct BudgetFlags {
  SolverBudget b;
  void add(CLI::App* app) {
    app->add_option("--budget-subset-m", b.subset_max_m, "largest m for subset enumeration");
    app->add_option("--budget-partition-n", b.partition_max_n, "largest n for partition enumeration");
    app->add_option("--budget-constant-r", b.constant_r_max_R, "largest R for the constant-R solver");
    app->add_option("--budget-nodes", b.max_nodes, "search node limit");
    app->add_option("--budget-seconds", b.max_seconds, "wall-clock limit per solve (0 = none)");
    app->add_option("--threads", b.threads, "threads for subset enumeration");
  }
};

}  // namespace

SolverKind auto_route(const ProblemInstance& inst, const SolverBudget& b, bool decision) {
  if (sp_applicable(inst)) return SolverKind::SinglePeaked;
  if (decision) {
    const bool sparse = max_sublevel_size(inst.matrix, inst.R) <= inst.R + 1;
    const bool small = branch_tree_size(inst.R, inst.k) <= static_cast<double>(b.max_nodes);
    if (inst.rule == Rule::CC && sparse && small) return SolverKind::Branch;
    if (inst.rule == Rule::Monroe && inst.is_borda() && small) return SolverKind::FptRk;
  }
  if (inst.m() <= b.subset_max_m) return SolverKind::Subset;
  if (inst.n() <= b.partition_max_n) return SolverKind::Partition;
  if (inst.rule == Rule::Monroe && inst.is_borda()) return SolverKind::FptRk;
  if (inst.rule == Rule::CC) return SolverKind::Branch;
  throw BudgetExceeded("no solver within budget; raise --budget-subset-m or --budget-partition-n");
}

namespace {

int cmd_solve(const std::string& path, const std::string& solver, std::optional<std::string> rule,
              std::optional<std::string> obj, std::optional<int> k, std::optional<Value> R,
              bool decision, bool timing, const SolverBudget& b, std::ostream& out,
              std::ostream& err) {
  ProblemInstance inst = read_instance_file(path);
  if (rule || obj || k || R) {
    inst = inst.with(rule ? parse_rule(*rule) : inst.rule, obj ? parse_objective(*obj) : inst.objective,
                     k ? *k : inst.k, R ? *R : inst.R);
  }
  SolverKind kind;
  if (solver == "auto") {
    kind = auto_route(inst, b, decision);
  } else {
    auto parsed = parse_solver_kind(solver);
    if (!parsed) {
      err << "unknown solver '" << solver << "'\n";
      return kUsage;
    }
    kind = *parsed;
    if (!supports(kind, inst)) {
      err << "solver " << solver << " does not handle " << to_string(inst.rule) << ' '
          << to_string(inst.objective) << " with " << to_string(inst.spec.kind) << " misrepresentation\n";
      return kUsage;
    }
  }
  Timer t;
  std::optional<Solution> s;
  if (decision)
    s = decide(inst, kind, b);
  else
    s = optimize(inst, kind, b);
  const double secs = t.seconds();
  if (!s) {
    out << "solver: " << to_string(kind) << "\nfeasible: false\nR: " << inst.R << '\n';
    if (timing) out << "seconds: " << std::fixed << std::setprecision(6) << secs << '\n';
    return kFail;
  }
  out << render_solution(inst, *s, timing ? std::optional<double>(secs) : std::nullopt);
  if (!timing) err << "wall time: " << std::fixed << std::setprecision(6) << secs << " s\n";
  return kOk;
}

int cmd_detect_axis(const std::string& path, std::ostream& out) {
  ProblemInstance inst = read_instance_file(path);
  auto axis = detect_axis(inst.election);
  if (!axis) {
    out << "not single-peaked\n";
    return kOk;
  }
  for (size_t i = 0; i < axis->size(); ++i)
    out << (i ? " " : "") << inst.election.names()[(*axis)[i]];
  out << '\n';
  return kOk;
}

struct GenFlags {
  std::string family;
  int n = 6, m = 5, k = 2, vertices = 4, universe = 0, count = 3;
  Value R = 0;
  std::uint64_t seed = 1;
  std::string rule = "cc", objective = "sum", misrep = "borda", sets, edges, out;
};

ProblemInstance generate(const GenFlags& g, std::ostream& err) {
  gen::Rng rng(g.seed);
  const Rule rule = parse_rule(g.rule);
  const Objective obj = parse_objective(g.objective);
  auto with_misrep = [&](Election e) {
    MisrepSpec spec;
    if (g.misrep == "approval")
      spec = MisrepSpec::approval(gen::random_prefix_approvals(e, rng));
    else if (g.misrep != "borda")
      throw CLI::ValidationError("--misrep", "expected borda or approval");
    return ProblemInstance::make(std::move(e), spec, rule, obj, g.k, g.R);
  };
  if (g.family == "random") return with_misrep(gen::random_election(g.n, g.m, rng));
  if (g.family == "single-peaked") return with_misrep(gen::random_sp_election(g.n, g.m, rng).first);
  if (g.family == "hs-approval" || g.family == "hs-borda") {
    HittingSetInstance hs;
    if (!g.sets.empty()) {
      hs.sets = parse_groups(g.sets);
      int top = 0;
      for (const auto& s : hs.sets)
        for (int u : s) top = std::max(top, u + 1);
      hs.universe = std::max(g.universe, top);
    } else {
      hs = gen::random_hitting_set(g.universe > 0 ? g.universe : 3, g.count, rng);
    }
    hs.validate();
    return g.family == "hs-approval" ? gen_hs_approval(hs, g.k, rule, obj)
                                     : gen_hs_borda(hs, g.k, rule, obj);
  }
  if (g.family == "vc-minimax") {
    auto edges = g.edges.empty() ? gen::random_subcubic_graph(g.vertices, g.count, rng)
                                 : parse_edges(g.edges);
    return gen_vc_minimax(g.vertices, edges, g.k, g.R > 0 ? g.R : 1, rule);
  }
  if (g.family == "rx3c-monroe") {
    RX3CInstance x;
    if (!g.sets.empty()) {
      x.n = g.n;
      for (const auto& s : parse_groups(g.sets)) {
        if (s.size() != 3) throw InvalidInput("RX3C sets have three elements");
        x.sets.push_back({s[0], s[1], s[2]});
      }
    } else {
      x = gen::random_rx3c(g.n, rng);
    }
    auto e = gen_rx3c_monroe(x);
    err << "axis:";
    for (int c : e.axis) err << ' ' << e.instance.election.names()[c];
    err << '\n';
    return e.instance;
  }
  throw CLI::ValidationError("family", "unknown family '" + g.family + "'");
}

int cmd_gen(const GenFlags& g, std::ostream& out, std::ostream& err) {
  std::string text = render_instance(generate(g, err));
  if (g.out.empty()) {
    out << text;
  } else {
    std::ofstream f(g.out);
    if (!f) throw InvalidInput("cannot write " + g.out);
    f << text;
  }
  return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path, bool no_bound,
               std::ostream& out) {
  ProblemInstance inst = read_instance_file(inst_path);
  std::ifstream f(sol_path);
  if (!f) throw InvalidInput("cannot open " + sol_path);
  std::stringstream ss;
  ss << f.rdbuf();
  Solution s = parse_solution(ss.str(), inst);
  VerificationReport rep = verify_solution(inst, s, !no_bound);
  out << rep.render();
  out << (rep.ok() ? "verified\n" : "verification failed\n");
  return rep.ok() ? kOk : kFail;
}

int cmd_bench(const std::string& dir, const SolverBudget& b, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  const SolverKind kinds[] = {SolverKind::Subset,    SolverKind::Partition, SolverKind::Branch,
                              SolverKind::ConstantR, SolverKind::FptRk,     SolverKind::SinglePeaked};
  out << std::left << std::setw(28) << "instance" << std::setw(12) << "solver" << std::setw(14)
      << "value" << "seconds\n";
  int disagreements = 0;
  for (const auto& path : files) {
    ProblemInstance inst = read_instance_file(path.string());
    std::optional<Value> ref;
    std::string ref_solver;
    for (SolverKind kind : kinds) {
      if (!supports(kind, inst)) continue;
      if (kind == SolverKind::SinglePeaked && !sp_applicable(inst)) continue;
      std::string cell;
      Timer t;
      try {
        Solution s = optimize(inst, kind, b);
        cell = std::to_string(s.value);
        if (!ref) {
          ref = s.value;
          ref_solver = to_string(kind);
        } else if (*ref != s.value) {
          ++disagreements;
          err << "disagreement on " << path.filename().string() << ": " << ref_solver << " = "
              << *ref << ", " << to_string(kind) << " = " << s.value << '\n';
        }
      } catch (const BudgetExceeded&) {
        cell = "skipped";
      } catch (const PreconditionError&) {
        cell = "n/a";
      }
      out << std::setw(28) << path.filename().string() << std::setw(12) << to_string(kind)
          << std::setw(14) << cell << std::fixed << std::setprecision(6) << t.seconds() << '\n';
    }
  }
  if (disagreements) {
    err << disagreements << " disagreement(s)\n";
    return kFail;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact winner determination for proportional representation rules"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  std::string solve_path, solver = "auto";
  std::optional<std::string> rule, objective;
  std::optional<int> k;
  std::optional<Value> R;
  bool decision = false, timing = false;
  BudgetFlags budget;
  solve->add_option("file", solve_path)->required();
  solve->add_option("--solver", solver, "auto, subset, partition, branch, constant-r, fpt-rk, r0, sp");
  solve->add_option("--rule", rule, "override: cc or monroe");
  solve->add_option("--objective", objective, "override: sum or minimax");
  solve->add_option("--k", k, "override committee size");
  solve->add_option("--R", R, "override bound");
  solve->add_flag("--decide", decision, "decide at R instead of optimizing");
  solve->add_flag("--timing", timing, "include wall time in the record");
  budget.add(solve);

  auto* axis = app.add_subcommand("detect-axis", "print a societal axis or 'not single-peaked'");
  std::string axis_path;
  axis->add_option("file", axis_path)->required();

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  GenFlags g;
  gen->add_option("family", g.family,
                  "random, single-peaked, hs-approval, hs-borda, vc-minimax, rx3c-monroe")
      ->required();
  gen->add_option("--n", g.n, "voters (elements for rx3c-monroe)");
  gen->add_option("--m", g.m, "candidates");
  gen->add_option("--k", g.k, "committee size");
  gen->add_option("--R", g.R, "bound");
  gen->add_option("--rule", g.rule);
  gen->add_option("--objective", g.objective);
  gen->add_option("--misrep", g.misrep, "borda or approval");
  gen->add_option("--seed", g.seed);
  gen->add_option("--universe", g.universe, "hitting set universe size");
  gen->add_option("--count", g.count, "number of random sets or edges");
  gen->add_option("--vertices", g.vertices);
  gen->add_option("--sets", g.sets, "explicit sets, e.g. \"1,2;2,3\"");
  gen->add_option("--edges", g.edges, "explicit edges, e.g. \"1-2,2-3\"");
  gen->add_option("--out", g.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a solution record against an instance");
  std::string ver_inst, ver_sol;
  bool no_bound = false;
  verify->add_option("instance", ver_inst)->required();
  verify->add_option("solution", ver_sol)->required();
  verify->add_flag("--no-bound", no_bound, "skip the value <= R check");

  auto* bench = app.add_subcommand("bench", "run every applicable solver on a directory");
  std::string bench_dir;
  BudgetFlags bench_budget;
  bench->add_option("dir", bench_dir)->required()->check(CLI::ExistingDirectory);
  bench_budget.add(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve)
      return cmd_solve(solve_path, solver, rule, objective, k, R, decision, timing, budget.b, out, err);
    if (*axis) return cmd_detect_axis(axis_path, out);
    if (*gen) return cmd_gen(g, out, err);
    if (*verify) return cmd_verify(ver_inst, ver_sol, no_bound, out);
    if (*bench) return cmd_bench(bench_dir, bench_budget.b, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what()
        << "\nraise the matching --budget-* flag or pick another --solver\n";
    return kBudget;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace proprep::cli
