#pragma once

#include <iosfwd>

#include "proprep/core.hpp"
#include "proprep/solvers.hpp"

namespace proprep::cli {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

// Solver picked by `--solver auto`. `decision` selects the routing for a
// single query at inst.R rather than for the optimum.
SolverKind auto_route(const ProblemInstance& inst, const SolverBudget& b, bool decision);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace proprep::cli
