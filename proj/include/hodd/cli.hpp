#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hodd/function_spec.hpp"

namespace hodd {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitExprParse = 65;

// Resolves "corpus:NAME", "expr:SRC" or "@path" (file holding DSL text).
// dim <= 0 means "take it from the corpus entry"; expressions need dim > 0.
FunctionSpec resolve_function(const std::string& source, int dim);

// Parses "p1,...,pd".
Point parse_point(const std::string& text);

// Runs one command line (args exclude the program name). Artifacts go to
// `out` unless redirected to a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodd
