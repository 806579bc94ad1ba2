#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covkit::cli {

enum ExitCode : int { kOk = 0, kNotCovariant = 1, kUsage = 2, kPrecondition = 3 };

struct SymmetrySpec {
  std::string group;  // symmetric | symmetric_plus | suq2 | weyl | fermionic | perm_gens
  int n = 0;
  double q = 0.0;
  int k = 0;
  int l = 0;
  std::vector<int> orders;
  int modes = 0;
  std::vector<std::vector<int>> gens;  // 1-based image lists
};

// Parses and checks a JSON spec ({"group": ...} or {"type": ...}).
SymmetrySpec parse_spec_json(const std::string& text);
std::string spec_to_json(const SymmetrySpec& spec);

// args[0] is the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covkit::cli
