#pragma once

#include <iosfwd>

#include "multisieve/numeric.hpp"

namespace multisieve::cli {

// Exit codes: 0 success, 2 integrity/divisibility failure,
// 3 input validation failure, 4 oracle mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIntegrity = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitMismatch = 4;

/// Prints both counts and MATCH/MISMATCH; returns kExitOk or kExitMismatch.
int report_comparison(const Int& sieve_value, const Int& brute_value, std::ostream& out);

/// Full command-line entry point; streams results to out and diagnostics
/// to err, returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace multisieve::cli
