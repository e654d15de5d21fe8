#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghzcert::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kStrongestNonlocal = 0,
    kNotStrongestNonlocal = 1,
    kInconclusive = 2,
    kInvalidInput = 3,
};

/// Runs one command line. `args` excludes the program name. Documents and
/// DOT text go to `out` unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace ghzcert::cli
