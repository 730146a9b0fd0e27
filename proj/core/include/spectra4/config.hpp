#pragma once

#include <iosfwd>
#include <string>

#include "spectra4/coefficients.hpp"
#include "spectra4/spectrum.hpp"

namespace spectra4 {

/// Output serialization choice for the CLI.
enum class OutputFormat { kCsv, kJson };

/// A full problem description as read from a JSON config file.
struct ProblemConfig {
  PeriodicCoefficient p;
  PeriodicCoefficient q;
  int n_lo = 0;
  int n_hi = 9;
  SearchPlan plan;
  OutputFormat format = OutputFormat::kCsv;
};

/// Parses and validates a config document. Throws ConfigError on malformed
/// JSON, unknown fields, degree > 64 harmonics, bad ranges, or non-positive
/// tolerances.
ProblemConfig parse_config(const std::string& json_text);

ProblemConfig load_config_file(const std::string& path);

}  // namespace spectra4
