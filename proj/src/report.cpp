#include "linefit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "linefit/oracle.hpp"
#include "linefit/overloaded.hpp"

namespace linefit {
namespace {

using nlohmann::json;

double coordinate_scale(const PairedSample& p) {
  double scale = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    scale = std::max({scale, std::abs(p.xs()[i]), std::abs(p.ys()[i])});
  }
  return scale > 0.0 ? scale : 1.0;
}

json normal_json(const NormalLine& line) {
  return {{"theta", line.theta()}, {"c", line.offset()}};
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json fit_json(const MethodOutcome& o) {
  if (!o.report) {
    return {{"status", "precondition_failed"},
            {"error_kind", std::string(to_string(o.error_kind))},
            {"message", o.error}};
  }
  const FitReport& r = *o.report;
  return std::visit(
      Overloaded{
          [&](const SlopeInterceptLine& l) -> json {
            return {{"status", "ok"},
                    {"slope", l.slope},
                    {"intercept", l.intercept},
                    {"normal_form", normal_json(slope_to_normal(l))},
                    {"objective_min", r.objective_min}};
          },
          [&](const InverseSlopeLine& l) -> json {
            return {{"status", "ok"},
                    {"inverse_slope", l.inverse_slope},
                    {"x_intercept", l.x_intercept},
                    {"normal_form", normal_json(inverse_to_normal(l))},
                    {"objective_min", r.objective_min}};
          },
          [&](const OrthogonalFit& f) -> json {
            if (const auto* all = std::get_if<AllLinesThroughCentroid>(&f)) {
              return {{"status", "all_lines_through_centroid"},
                      {"centroid", {all->centroid.x, all->centroid.y}},
                      {"objective", all->objective}};
            }
            const auto& u = std::get<UniqueLine>(f);
            json j = {{"status", "ok"},
                      {"theta", u.line.theta()},
                      {"c", u.line.offset()},
                      {"case", std::string(to_string(u.fit_case.tag))},
                      {"E", optional_json(u.fit_case.e_ratio)},
                      {"normal_form", normal_json(u.line)},
                      {"objective_min", r.objective_min}};
            if (std::abs(u.line.cos_theta()) > kVerticalThreshold) {
              const SlopeInterceptLine l = normal_to_slope(u.line);
              j["slope"] = l.slope;
              j["intercept"] = l.intercept;
            }
            return j;
          },
      },
      r.line);
}

json comparison_json(const ComparisonReport& c) {
  json slope_d;
  switch (c.slope_d.kind) {
    case DSlope::Kind::kValue: slope_d = c.slope_d.value; break;
    case DSlope::Kind::kVertical: slope_d = "vertical"; break;
    case DSlope::Kind::kAllLines: slope_d = "all"; break;
  }
  json j = {{"slope_y", optional_json(c.slope_y)},
            {"slope_x", optional_json(c.slope_x)},
            {"slope_d", slope_d},
            {"ratio_bound", optional_json(c.ratio_bound)},
            {"ordering_e", std::string(to_string(c.ordering_e))},
            {"ordering_f", std::string(to_string(c.ordering_f))},
            {"case", std::string(to_string(c.d_case))},
            {"cs_gap", c.cs_gap},
            {"collinear", c.collinear}};
  j["ordering_f_observed"] = c.ordering_f_observed ? json(*c.ordering_f_observed) : json(nullptr);
  return j;
}

std::string describe_line(const MethodOutcome& o, double pos_scale) {
  const FitReport& r = *o.report;
  const double obj_scale = pos_scale * pos_scale;
  auto signed_term = [&](double v) {
    std::string s = format_number(v, pos_scale);
    return s.front() == '-' ? " - " + s.substr(1) : " + " + s;
  };
  return std::visit(
      Overloaded{
          [&](const SlopeInterceptLine& l) {
            const NormalLine n = slope_to_normal(l);
            return "y = " + format_number(l.slope) + " x" + signed_term(l.intercept) +
                   "   theta = " + format_number(n.theta()) +
                   "   c = " + format_number(n.offset(), pos_scale) +
                   "   objective_min = " + format_number(r.objective_min, obj_scale);
          },
          [&](const InverseSlopeLine& l) {
            const NormalLine n = inverse_to_normal(l);
            return "x = " + format_number(l.inverse_slope) + " y" + signed_term(l.x_intercept) +
                   "   theta = " + format_number(n.theta()) +
                   "   c = " + format_number(n.offset(), pos_scale) +
                   "   objective_min = " + format_number(r.objective_min, obj_scale);
          },
          [&](const OrthogonalFit& f) {
            if (const auto* all = std::get_if<AllLinesThroughCentroid>(&f)) {
              return "degenerate: every line through centroid (" +
                     format_number(all->centroid.x, pos_scale) + "," +
                     format_number(all->centroid.y, pos_scale) + "), objective " +
                     format_number(all->objective, obj_scale);
            }
            const auto& u = std::get<UniqueLine>(f);
            std::string text;
            if (std::abs(u.line.cos_theta()) > kVerticalThreshold) {
              const SlopeInterceptLine l = normal_to_slope(u.line);
              text = "y = " + format_number(l.slope) + " x" + signed_term(l.intercept);
            } else {
              text = "x = " + format_number(u.line.offset() / u.line.sin_theta(), pos_scale) +
                     " (vertical)";
            }
            text += "   theta = " + format_number(u.line.theta()) +
                    "   c = " + format_number(u.line.offset(), pos_scale) +
                    "   tan_theta = " +
                    (std::abs(u.line.cos_theta()) > kVerticalThreshold
                         ? format_number(u.line.sin_theta() / u.line.cos_theta())
                         : std::string("inf")) +
                    "   objective_min = " + format_number(r.objective_min, obj_scale) +
                    "   case " + std::string(to_string(u.fit_case.tag));
            if (u.fit_case.e_ratio) text += ", E = " + format_number(*u.fit_case.e_ratio);
            return text;
          },
      },
      r.line);
}

// Liang-Barsky clip of the line through `origin` with direction `dir` to the
// rectangle [x0, x1] x [y0, y1].
std::optional<std::pair<Point, Point>> clip_line(Point origin, Point dir, double x0, double x1,
                                                 double y0, double y1) {
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  auto clip = [&](double d, double lo, double hi, double o) {
    if (std::abs(d) < 1e-300) return o >= lo && o <= hi;
    double a = (lo - o) / d;
    double b = (hi - o) / d;
    if (a > b) std::swap(a, b);
    t_lo = std::max(t_lo, a);
    t_hi = std::min(t_hi, b);
    return t_lo <= t_hi;
  };
  if (!clip(dir.x, x0, x1, origin.x) || !clip(dir.y, y0, y1, origin.y)) return std::nullopt;
  return std::make_pair(Point{origin.x + t_lo * dir.x, origin.y + t_lo * dir.y},
                        Point{origin.x + t_hi * dir.x, origin.y + t_hi * dir.y});
}

}  // namespace

std::string format_number(double value, double scale) {
  if (std::abs(value) <= 1e-12 * scale) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::vector<MethodOutcome> run_methods(const PairedSample& p, const std::vector<Method>& methods) {
  std::vector<MethodOutcome> out;
  for (Method m : methods) {
    MethodOutcome o;
    o.method = m;
    try {
      o.report = fit(p, m);
    } catch (const Error& e) {
      o.error_kind = e.kind();
      o.error = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<OracleDelta> oracle_deltas(const PairedSample& p,
                                       const std::vector<MethodOutcome>& outcomes) {
  std::vector<OracleDelta> out;
  for (const MethodOutcome& o : outcomes) {
    if (!o.report) continue;
    OracleDelta d;
    d.method = o.method;
    const FitReport& r = *o.report;
    if (const auto* l = std::get_if<SlopeInterceptLine>(&r.line)) {
      const GridLineResult g = grid_min_y(p);
      d.first_delta = l->slope - g.slope;
      d.second_delta = l->intercept - g.intercept;
      d.objective_gap = r.objective_min - g.objective;
    } else if (const auto* l = std::get_if<InverseSlopeLine>(&r.line)) {
      const GridLineResult g = grid_min_x(p);
      d.first_delta = l->inverse_slope - g.slope;
      d.second_delta = l->x_intercept - g.intercept;
      d.objective_gap = r.objective_min - g.objective;
    } else {
      const GridAngleResult g = grid_min_d(p);
      d.coarse_spread = g.coarse_spread;
      d.objective_gap = r.objective_min - g.objective;
      if (const auto* u = std::get_if<UniqueLine>(&std::get<OrthogonalFit>(r.line))) {
        const double dtheta = u->line.theta() - g.theta;
        const double grid_offset = std::cos(dtheta) < 0.0 ? -g.offset : g.offset;
        d.first_delta = canonical_angle(dtheta);
        d.second_delta = u->line.offset() - grid_offset;
      }
    }
    out.push_back(d);
  }
  return out;
}

nlohmann::json to_json(const RunResult& result) {
  json points = json::array();
  for (std::size_t i = 0; i < result.sample.size(); ++i) {
    points.push_back({result.sample.xs()[i], result.sample.ys()[i]});
  }
  const SummaryStats& s = result.stats;
  json j = {{"points", points},
            {"stats",
             {{"n", s.n},
              {"mean_x", s.mean_x},
              {"mean_y", s.mean_y},
              {"var_x", s.var_x},
              {"var_y", s.var_y},
              {"cov_xy", s.cov_xy},
              {"mean_xx", s.mean_xx},
              {"mean_yy", s.mean_yy},
              {"mean_xy", s.mean_xy}}},
            {"comparison", comparison_json(result.comparison)}};
  json fits = json::object();
  for (const MethodOutcome& o : result.outcomes) {
    fits[std::string(to_string(o.method))] = fit_json(o);
  }
  j["fits"] = fits;
  if (!result.oracle.empty()) {
    json oracle = json::object();
    for (const OracleDelta& d : result.oracle) {
      json entry = {{"first_delta", d.first_delta},
                    {"second_delta", d.second_delta},
                    {"objective_gap", d.objective_gap}};
      if (d.coarse_spread) entry["coarse_spread"] = *d.coarse_spread;
      oracle[std::string(to_string(d.method))] = entry;
    }
    j["oracle"] = oracle;
  }
  return j;
}

std::string render_table(const RunResult& result) {
  const SummaryStats& s = result.stats;
  const double pos = coordinate_scale(result.sample);
  const double sq = pos * pos;
  std::ostringstream out;
  out << "n = " << s.n << "   centroid = (" << format_number(s.mean_x, pos) << ","
      << format_number(s.mean_y, pos) << ")\n";
  out << "var_x = " << format_number(s.var_x, sq) << "   var_y = " << format_number(s.var_y, sq)
      << "   cov_xy = " << format_number(s.cov_xy, sq) << "\n\n";

  for (const MethodOutcome& o : result.outcomes) {
    out << to_string(o.method) << ": ";
    if (o.report) {
      out << describe_line(o, pos) << "\n";
    } else {
      out << "precondition failed (" << to_string(o.error_kind) << "): " << o.error << "\n";
    }
  }

  const ComparisonReport& c = result.comparison;
  auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("none");
  };
  std::string slope_d;
  switch (c.slope_d.kind) {
    case DSlope::Kind::kValue: slope_d = format_number(c.slope_d.value); break;
    case DSlope::Kind::kVertical: slope_d = "vertical"; break;
    case DSlope::Kind::kAllLines: slope_d = "all"; break;
  }
  out << "\ncomparison: m = " << opt(c.slope_y) << "   sqrt(var_y/var_x) = " << opt(c.ratio_bound)
      << "   m_X = " << opt(c.slope_x) << "   tan_theta = " << slope_d << "\n";
  out << "ordering_e = " << to_string(c.ordering_e) << "   ordering_f = " << to_string(c.ordering_f);
  if (c.ordering_f_observed) out << " (observed " << (*c.ordering_f_observed ? "true" : "false") << ")";
  out << "   cs_gap = " << format_number(c.cs_gap, sq * sq)
      << "   collinear = " << (c.collinear ? "true" : "false") << "\n";

  if (!result.oracle.empty()) out << "\n";
  for (const OracleDelta& d : result.oracle) {
    out << "oracle " << to_string(d.method) << ": delta1 = " << format_number(d.first_delta, 0.0)
        << "   delta2 = " << format_number(d.second_delta, 0.0)
        << "   closed - grid objective = " << format_number(d.objective_gap, 0.0);
    if (d.coarse_spread) out << "   coarse spread = " << format_number(*d.coarse_spread, 0.0);
    out << "\n";
  }
  return out.str();
}

std::string render_svg(const RunResult& result) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 600.0;
  constexpr double kMargin = 0.05;

  const PairedSample& p = result.sample;
  double x0 = p.xs()[0], x1 = x0, y0 = p.ys()[0], y1 = y0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    x0 = std::min(x0, p.xs()[i]);
    x1 = std::max(x1, p.xs()[i]);
    y0 = std::min(y0, p.ys()[i]);
    y1 = std::max(y1, p.ys()[i]);
  }
  const double inner_w = kWidth * (1.0 - 2.0 * kMargin);
  const double inner_h = kHeight * (1.0 - 2.0 * kMargin);
  double scale = std::numeric_limits<double>::infinity();
  if (x1 > x0) scale = std::min(scale, inner_w / (x1 - x0));
  if (y1 > y0) scale = std::min(scale, inner_h / (y1 - y0));
  if (!std::isfinite(scale)) scale = 1.0;

  // Equal scaling on both axes, data box centered in the viewport.
  const double cx = 0.5 * (x0 + x1);
  const double cy = 0.5 * (y0 + y1);
  const double view_x0 = cx - 0.5 * kWidth / scale;
  const double view_x1 = cx + 0.5 * kWidth / scale;
  const double view_y0 = cy - 0.5 * kHeight / scale;
  const double view_y1 = cy + 0.5 * kHeight / scale;
  auto sx = [&](double x) { return 0.5 * kWidth + (x - cx) * scale; };
  auto sy = [&](double y) { return 0.5 * kHeight - (y - cy) * scale; };

  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << "  <g class=\"points\" fill=\"black\">\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "    <circle class=\"point\" cx=\"" << sx(p.xs()[i]) << "\" cy=\"" << sy(p.ys()[i])
        << "\" r=\"3\"/>\n";
  }
  out << "  </g>\n";

  int legend_row = 0;
  auto legend = [&](const std::string& text) {
    out << "  <text class=\"legend\" x=\"12\" y=\"" << 20 + 16 * legend_row++
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << text << "</text>\n";
  };

  for (const MethodOutcome& o : result.outcomes) {
    if (!o.report) continue;
    const std::optional<NormalLine> line = normal_form(o.report->line);
    const char* dash = "";
    std::string label;
    switch (o.method) {
      case Method::kY:
        dash = " stroke-dasharray=\"2,4\"";
        label = "Y (dotted)";
        break;
      case Method::kX:
        dash = " stroke-dasharray=\"10,6\"";
        label = "X (dashed)";
        break;
      case Method::kD:
        label = "D (solid)";
        break;
    }
    if (!line) {
      const auto& all =
          std::get<AllLinesThroughCentroid>(std::get<OrthogonalFit>(o.report->line));
      out << "  <circle class=\"centroid\" cx=\"" << sx(all.centroid.x) << "\" cy=\""
          << sy(all.centroid.y) << "\" r=\"7\" fill=\"none\" stroke=\"crimson\" "
          << "stroke-width=\"2\"/>\n";
      out << "  <text class=\"annotation\" x=\"" << sx(all.centroid.x) + 10 << "\" y=\""
          << sy(all.centroid.y) - 10 << "\" font-family=\"sans-serif\" font-size=\"13\">"
          << "D: every line through the centroid</text>\n";
      legend("D: every line through the centroid (marked)");
      continue;
    }
    // A point on the line, then its direction (cos, sin).
    const Point anchor{line->offset() * line->sin_theta(), -line->offset() * line->cos_theta()};
    const Point dir{line->cos_theta(), line->sin_theta()};
    const auto seg = clip_line(anchor, dir, view_x0, view_x1, view_y0, view_y1);
    if (!seg) continue;
    out << "  <line class=\"fit fit-" << (o.method == Method::kY   ? "y"
                                          : o.method == Method::kX ? "x"
                                                                   : "d")
        << "\" x1=\"" << sx(seg->first.x) << "\" y1=\"" << sy(seg->first.y) << "\" x2=\""
        << sx(seg->second.x) << "\" y2=\"" << sy(seg->second.y)
        << "\" stroke=\"black\" stroke-width=\"1.5\"" << dash << "/>\n";
    legend(label);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace linefit
