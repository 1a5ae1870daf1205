#include "linefit/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "linefit/error.hpp"

namespace linefit {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + what);
}

double parse_field(std::string_view field, std::size_t line_no) {
  if (field.empty()) fail(line_no, "empty field");
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    fail(line_no, "'" + std::string(field) + "' is not a decimal number");
  }
  if (!std::isfinite(value)) fail(line_no, "non-finite value '" + std::string(field) + "'");
  return value;
}

}  // namespace

PairedSample parse_csv(std::string_view text) {
  std::vector<double> xs;
  std::vector<double> ys;
  bool seen_content = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const bool first = !seen_content;
    seen_content = true;
    if (first && line == "x,y") continue;

    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) fail(line_no, "expected 'x,y', found no ','");
    if (line.find(',', comma + 1) != std::string_view::npos) {
      fail(line_no, "expected exactly two fields");
    }
    xs.push_back(parse_field(line.substr(0, comma), line_no));
    ys.push_back(parse_field(line.substr(comma + 1), line_no));
  }

  if (xs.size() < 2) {
    throw Error(ErrorKind::kInsufficientData,
                "need at least 2 points, found " + std::to_string(xs.size()));
  }
  return PairedSample(std::move(xs), std::move(ys));
}

std::string write_csv(const PairedSample& p) {
  std::string out = "x,y\n";
  char buf[64];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.xs()[i], p.ys()[i]);
    out += buf;
  }
  return out;
}

}  // namespace linefit
