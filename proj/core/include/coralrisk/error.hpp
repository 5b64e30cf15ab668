#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coralrisk {

/// Dimension mismatch between operands (matmul, loss, optimizer step, ...).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid numeric content: non-finite input, non-binary or non-monotone
/// labels, percentile outside [0, 100].
struct ValueError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid configuration value (negative noise level, infeasible prevalence,
/// too many PCA components, k larger than the cohort, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// API misuse, e.g. backward() before forward().
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Data-dependent failure: empty cohort after filtering, degenerate batch,
/// imputation with no eligible neighbour, insufficient training rows.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// CSV / artifact parse failure. `line` is 1-based; 0 when not applicable.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line_no = 0)
      : std::runtime_error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
        line(line_no) {}
  std::size_t line;
};

/// Filesystem-level failure while reading or writing artifacts.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coralrisk
