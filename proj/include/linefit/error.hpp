#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linefit {

enum class ErrorKind {
  kInvalidSample,     // n < 2 or a non-finite coordinate
  kLengthMismatch,    // xs and ys differ in length
  kInvalidLine,       // (a, b) == (0, 0) or non-finite coefficients
  kNotRepresentable,  // a line cannot be written in the requested form
  kVerticalData,      // var(x) == 0, the Y fit does not exist
  kHorizontalData,    // var(y) == 0, the X fit does not exist
  kDegenerateCase,    // isotropic statistics reached an angle formula
  kInvalidArgument,
  kInvalidSpec,       // generator or grid parameters out of range
  kParse,
  kInsufficientData,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linefit
