#pragma once

#include <ostream>

#include "ptweyl/cli/config.hpp"

namespace ptweyl::cli {

enum ExitCode { kPass = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

int run_potential(const RunConfig &cfg, std::ostream &os);
int run_spectrum(const RunConfig &cfg, std::ostream &os);
int run_verify(const RunConfig &cfg, std::ostream &os);
int run_constraints(const RunConfig &cfg, std::ostream &os);
int run_pdfv(const RunConfig &cfg, std::ostream &os);

// Parses, dispatches, writes to --out (or `out`), maps errors to exit codes.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ptweyl::cli
