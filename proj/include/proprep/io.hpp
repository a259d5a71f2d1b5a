#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "proprep/core.hpp"

namespace proprep {

struct ParseError : InvalidInput {
  ParseError(int line, const std::string& msg)
      : InvalidInput("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// Text format:
//   proprep v1
//   m n k R rule objective misrep
//   m candidate names, one per line
//   n votes, names in decreasing preference
//   #approve block (n lines, "-" for none) when misrep = approval
//   #matrix block (n rows of m entries, integers or a/b) when misrep = explicit
ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance(const std::string& text);
ProblemInstance read_instance_file(const std::string& path);
std::string render_instance(const ProblemInstance& inst);

// Key/value record with bracketed lists.
std::string render_solution(const ProblemInstance& inst, const Solution& s,
                            std::optional<double> seconds = std::nullopt);
Solution parse_solution(const std::string& text, const ProblemInstance& inst);

}  // namespace proprep
