#pragma once

#include <ostream>
#include <span>
#include <string>

#include "lcmq/sweep.hpp"

namespace lcmq::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// kExitViolation if any row carries a violation, else kExitOk.
int sweep_exit_code(std::span<const SweepRow> rows);

int cmd_verify(const Integer& c, long m, long n, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_bezout(const Integer& c, long k, std::ostream& out, std::ostream& err);
int cmd_table(const Integer& c, long n_max, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lcmq::cli
