#pragma once

#include "artin/algebra_file.hpp"
#include "artin/truncated.hpp"

#include <optional>
#include <string>

namespace artin {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInvariantViolated = 3,
  kExitBudget = 4,
};

struct RunOptions {
  unsigned nmax = 12;
  std::size_t budget = 500;
  std::uint64_t seed = 1;
  std::vector<SearchStrategy> strategies{SearchStrategy::Monomial, SearchStrategy::DenseRandom};
  std::optional<std::string> witness;
  /// `;`-separated images in t, one per variable (user strategy).
  std::optional<std::string> images;
  std::optional<unsigned> r;
};

struct RunReport {
  std::string command;
  /// Structured document; byte-identical for identical inputs.
  std::string json;
  /// Human summary.
  std::string text;
  int exit_code = kExitOk;
};

/// Commands: analyze, homs, critdeg, tau, socle-kill. Library errors are
/// captured into the report (exit code 2, or 4 for budget exhaustion).
RunReport run_command(const std::string &command, const AlgebraFile &file, const RunOptions &options);

} // namespace artin
