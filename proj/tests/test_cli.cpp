#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "proprep/cli.hpp"
#include "proprep/io.hpp"

using namespace proprep;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "proprep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("proprep_cli_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

const char* kThreeVoter =
    "proprep v1\n4 3 1 2 cc sum borda\nc1\nc2\nc3\nc4\n"
    "c1 c2 c3 c4\nc2 c3 c4 c1\nc3 c2 c1 c4\n";
const char* kSixVoter =
    "proprep v1\n4 6 3 2 monroe sum borda\na\nb\nc\nd\n"
    "a b c d\na b c d\na b c d\na b c d\nc b a d\nc b a d\n";

}  // namespace

TEST_CASE("solve routes single-peaked cc sum to the dynamic program") {
  TempDir d;
  auto r = run({"solve", d.write("three_voter.txt", kThreeVoter)});
  CHECK(r.code == 0);
  CHECK(r.out.find("solver: sp-dp") != std::string::npos);
  CHECK(r.out.find("value: 2") != std::string::npos);
  CHECK(r.out.find("winners: [c2]") != std::string::npos);
}

TEST_CASE("solve the six-voter monroe instance") {
  TempDir d;
  auto path = d.write("six_voter.txt", kSixVoter);
  auto r = run({"solve", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("winners: [a, b, c]") != std::string::npos);
  CHECK(r.out.find("value: 2") != std::string::npos);
  CHECK(run({"solve", path}).out == r.out);

  auto no = run({"solve", path, "--decide", "--R", "1"});
  CHECK(no.code == 1);
  CHECK(no.out.find("feasible: false") != std::string::npos);
}

TEST_CASE("solve reports parse errors and budget exhaustion") {
  TempDir d;
  std::string bad = kThreeVoter;
  bad.replace(bad.find("c2 c3 c4 c1"), 11, "c2 c3 c4");
  auto r = run({"solve", d.write("bad.txt", bad)});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 8") != std::string::npos);

  auto b = run({"solve", d.write("six_voter.txt", kSixVoter), "--solver", "subset", "--budget-subset-m", "2"});
  CHECK(b.code == 3);
  CHECK(b.err.find("budget") != std::string::npos);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", d.write("three_b.txt", kThreeVoter), "--solver", "fpt-rk"}).code == 2);
}

TEST_CASE("forced solvers agree with auto routing") {
  TempDir d;
  auto path = d.write("three_voter.txt", kThreeVoter);
  for (const char* solver : {"subset", "partition", "branch", "constant-r", "sp"}) {
    auto r = run({"solve", path, "--solver", solver, "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value: 1") != std::string::npos);
  }
}

TEST_CASE("detect-axis") {
  TempDir d;
  CHECK(run({"detect-axis", d.write("three_voter.txt", kThreeVoter)}).out == "c1 c2 c3 c4\n");
  auto cyc = d.write("cyc.txt",
                     "proprep v1\n3 3 1 0 cc sum borda\na\nb\nc\na b c\nb c a\nc a b\n");
  CHECK(run({"detect-axis", cyc}).out == "not single-peaked\n");
  auto one = d.write("one.txt", "proprep v1\n1 2 1 0 cc sum borda\nx\nx\nx\n");
  CHECK(run({"detect-axis", one}).out == "x\n");
}

TEST_CASE("gen is deterministic and builds the reductions") {
  auto a = run({"gen", "single-peaked", "--n", "6", "--m", "5", "--seed", "7"});
  auto b = run({"gen", "single-peaked", "--n", "6", "--m", "5", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_instance(a.out).n() == 6);

  auto x = parse_instance(run({"gen", "rx3c-monroe", "--n", "3"}).out);
  CHECK(x.m() == 6);
  CHECK(x.n() == 12);
  CHECK(x.k == 4);
  CHECK(x.R == 18);

  auto hs = parse_instance(run({"gen", "hs-approval", "--sets", "1,2;2,3", "--k", "1"}).out);
  CHECK(hs.m() == 3);
  CHECK(hs.n() == 2);

  auto vc = parse_instance(run({"gen", "vc-minimax", "--vertices", "3", "--edges", "1-2,2-3,1-3",
                                "--k", "2", "--R", "2"})
                               .out);
  CHECK(vc.m() == 6);
  CHECK(run({"gen", "nonsense"}).code == 2);
}

TEST_CASE("verify accepts good records and names failures") {
  TempDir d;
  auto inst = d.write("six_voter.txt", kSixVoter);
  auto good = run({"solve", inst});
  auto sol = d.write("sol.txt", good.out);
  CHECK(run({"verify", inst, sol}).code == 0);

  std::string tampered = good.out;
  tampered.replace(tampered.find("value: 2"), 8, "value: 1");
  auto v = run({"verify", inst, d.write("bad.txt", tampered)});
  CHECK(v.code == 1);
  CHECK(v.out.find("value check failed") != std::string::npos);

  std::string lumped = good.out;
  lumped.replace(lumped.find("assignment: ["), std::string::npos, "assignment: [a, a, a, b, c, c]\n");
  lumped.replace(lumped.find("value: 2"), 8, "value: 3");
  auto m = run({"verify", inst, d.write("lumped.txt", lumped)});
  CHECK(m.code == 1);
  CHECK(m.out.find("winner a has load 3") != std::string::npos);
  CHECK(run({"verify", inst, d.write("lumped2.txt", lumped), "--no-bound"}).code == 1);
}

TEST_CASE("bench over a small corpus") {
  TempDir d;
  fs::create_directories(d.path / "empty");
  auto e = run({"bench", (d.path / "empty").string()});
  CHECK(e.code == 0);
  d.write("a.txt", kThreeVoter);
  d.write("b.txt", kSixVoter);
  auto r = run({"bench", d.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("a.txt") < r.out.find("b.txt"));
  CHECK(r.err.find("disagreement") == std::string::npos);
}

TEST_CASE("installed binary exit codes") {
  const char* bin = std::getenv("PROPREP_CLI");
  if (!bin) {
    MESSAGE("PROPREP_CLI not set; skipping binary check");
    return;
  }
  TempDir d;
  auto path = d.write("three_voter.txt", kThreeVoter);
  std::string cmd = std::string(bin) + " solve " + path + " > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  cmd = std::string(bin) + " solve " + path + " --decide --R 1 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 1);
  cmd = std::string(bin) + " bogus > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 2);
}
