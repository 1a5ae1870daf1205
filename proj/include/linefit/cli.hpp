#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linefit/fitters.hpp"
#include "linefit/generators.hpp"

namespace linefit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitMethodFailed = 3;

using GeneratorRequest = std::variant<CircleSpec, ParallelSpec, NoisyLineSpec>;

struct RunConfig {
  /// A CSV path ("-" reads standard input) or a generator.
  std::variant<std::string, GeneratorRequest> input = std::string("-");
  std::vector<Method> methods{Method::kY, Method::kX, Method::kD};
  std::optional<std::string> output_json;
  std::optional<std::string> output_svg;
  bool oracle_check = false;
};

/// Fits, prints the table to `out`, writes the requested files.
/// Exit status: 0 when at least one method succeeded, 2 on input errors,
/// 3 when every requested method failed its precondition.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Full command line: `fit`, `generate circle|parallel|noisy-line`, `transform`.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace linefit
