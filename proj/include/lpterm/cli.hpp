#pragma once

#include <iosfwd>
#include <string>

#include "lpterm/prove.hpp"

namespace lpterm {

// Exit codes: 0 = TERMINATING, 1 = UNKNOWN, 2 = error.
// Directories get a per-file table and exit 0 (2 on I/O errors).
int run(const std::string& path, const Config& config, std::ostream& out, std::ostream& err);

// Oracle cross-validation: samples queries from the analyzed class and runs
// bounded SLD resolution against the prover's verdict.
// Exit codes: 0 = consistent, 1 = mismatch, 2 = error.
int run_check(const std::string& path, const Config& config, int samples, int depth_bound,
              unsigned seed, std::ostream& out, std::ostream& err);

}  // namespace lpterm
