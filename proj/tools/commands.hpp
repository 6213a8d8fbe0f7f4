#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace lcs::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kCompareFailed = 3 };

/// Executes one configured run and writes its CSV to cfg.out. Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& err);

/// parse_config + echo + run, mapping every failure to its exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& err);

/// Worker count for parameter sweeps: LCS_THREADS if set and positive, else
/// the hardware concurrency (at least 1).
std::size_t sweep_threads();

}  // namespace lcs::cli
