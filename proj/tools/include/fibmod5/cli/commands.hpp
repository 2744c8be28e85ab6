#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fibmod5/cli/config.hpp"

namespace fibmod5::cli {

/// Families, numeric checks and series whose id matches any glob (all when
/// `globs` is empty), sorted by id.
int cmd_list(const std::vector<std::string>& globs, OutputFormat format, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_eval(const std::string& id, Index n, Index t, const std::vector<GibonacciParams>& seeds, OutputFormat format,
             std::ostream& out);
int cmd_series(const std::string& id, Index m, Index terms, double tol, OutputFormat format, std::ostream& out,
               std::ostream& err);

/// Full command-line entry point; args excludes the program name. Returns
/// the process exit code (0 pass, 1 counterexample or convergence failure,
/// 2 usage error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibmod5::cli
