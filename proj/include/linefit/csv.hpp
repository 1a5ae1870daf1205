#pragma once

#include <string>
#include <string_view>

#include "linefit/stats.hpp"

namespace linefit {

/// Parses `x,y` rows separated by "\n" or "\r\n". An optional first
/// non-blank line `x,y` is a header; blank lines are skipped. Fields must be
/// plain decimal floats with no surrounding whitespace.
PairedSample parse_csv(std::string_view text);

/// Header plus one `x,y` row per point, 17 significant digits.
std::string write_csv(const PairedSample& p);

}  // namespace linefit
