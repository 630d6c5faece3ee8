#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taylorbound::cli {

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSyntax = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNoResult = 4;

// Runs one command line (without the program name). The output document goes
// to `out`, human-readable diagnostics to `err`.
//
//   eval  --func F --center A --order N --at X [--format json|csv]
//   table --func F --center A --order N --domain LO:HI --steps K [--format]
//   order --func F --center A --domain LO:HI --tol T [--max N] [--format]
//   xi    --func F --center A --end B --order N --tol T [--format]
//   parse --func F
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest text with 17 significant digits as used in every output document.
std::string format_real(double v);

/// Strict decimal literal: optional sign, digits, optional fraction and
/// exponent. No hex, inf or nan.
bool parse_decimal(const std::string& text, double& value);

}  // namespace taylorbound::cli
