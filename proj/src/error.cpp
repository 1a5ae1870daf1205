#include "linefit/error.hpp"

namespace linefit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSample: return "invalid-sample";
    case ErrorKind::kLengthMismatch: return "length-mismatch";
    case ErrorKind::kInvalidLine: return "invalid-line";
    case ErrorKind::kNotRepresentable: return "not-representable";
    case ErrorKind::kVerticalData: return "vertical-data";
    case ErrorKind::kHorizontalData: return "horizontal-data";
    case ErrorKind::kDegenerateCase: return "degenerate-case";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kInsufficientData: return "insufficient-data";
  }
  return "unknown";
}

}  // namespace linefit
