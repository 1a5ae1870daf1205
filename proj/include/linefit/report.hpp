#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linefit/diagnostics.hpp"
#include "linefit/error.hpp"
#include "linefit/fitters.hpp"
#include "linefit/stats.hpp"

namespace linefit {

/// Result of one requested method: a report, or the precondition failure.
struct MethodOutcome {
  Method method = Method::kY;
  std::optional<FitReport> report;
  ErrorKind error_kind = ErrorKind::kInvalidArgument;
  std::string error;
};

/// Closed form minus brute-force grid, per method.
struct OracleDelta {
  Method method = Method::kY;
  double first_delta = 0.0;   // slope, inverse slope, or angle (mod pi)
  double second_delta = 0.0;  // intercept, x-intercept, or offset
  /// closed-form objective minus grid objective; <= 0 up to rounding.
  double objective_gap = 0.0;
  std::optional<double> coarse_spread;  // D only
};

struct RunResult {
  PairedSample sample;
  SummaryStats stats;
  std::vector<MethodOutcome> outcomes;
  ComparisonReport comparison;
  std::vector<OracleDelta> oracle;
};

std::vector<MethodOutcome> run_methods(const PairedSample& p, const std::vector<Method>& methods);
std::vector<OracleDelta> oracle_deltas(const PairedSample& p,
                                       const std::vector<MethodOutcome>& outcomes);

nlohmann::json to_json(const RunResult& result);
std::string render_table(const RunResult& result);
std::string render_svg(const RunResult& result);

/// %.10g, with values below 1e-12 of `scale` printed as 0.
std::string format_number(double value, double scale = 1.0);

}  // namespace linefit
