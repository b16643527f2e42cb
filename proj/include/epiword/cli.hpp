#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "epiword/generators.hpp"

namespace epiword::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int { kOk = 0, kRejected = 1, kUsageError = 2, kInconclusive = 3 };

/// Runs one invocation. `args` excludes the program name. Words missing from
/// the command line are read from `in`, one per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// Parses a word source: a JSON object is an episkew spec, "U,V" a skew word
/// U V^omega, "A:R" a mechanical word, anything else a directive.
WordSource parse_source(std::string_view text, bool ceiling = false);

}  // namespace epiword::cli
