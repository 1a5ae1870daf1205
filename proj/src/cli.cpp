#include "linefit/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "linefit/csv.hpp"
#include "linefit/diagnostics.hpp"
#include "linefit/error.hpp"
#include "linefit/overloaded.hpp"
#include "linefit/report.hpp"
#include "linefit/transforms.hpp"

namespace linefit {
namespace {

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot open input file '" + path + "'");
  return read_all(file);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  file << content;
  if (!file) throw Error(ErrorKind::kInvalidArgument, "failed writing '" + path + "'");
}

PairedSample generate(const GeneratorRequest& request) {
  return std::visit(Overloaded{
                        [](const CircleSpec& c) { return gen_circle(c); },
                        [](const ParallelSpec& p) { return gen_parallel(p); },
                        [](const NoisyLineSpec& n) { return gen_noisy_line(n); },
                    },
                    request);
}

PairedSample load(const RunConfig& config, std::istream& in) {
  return std::visit(Overloaded{
                        [&](const std::string& path) { return parse_csv(read_source(path, in)); },
                        [](const GeneratorRequest& g) { return generate(g); },
                    },
                    config.input);
}

Point parse_pair(const std::vector<double>& v) { return {v.at(0), v.at(1)}; }

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (config.methods.empty()) {
    err << "error: no fitting method selected\n";
    return kExitInputError;
  }

  std::optional<PairedSample> sample;
  try {
    sample = load(config, in);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitInputError;
  }

  RunResult result{*sample, summarize(*sample), run_methods(*sample, config.methods),
                   compare(*sample), {}};
  if (config.oracle_check) result.oracle = oracle_deltas(*sample, result.outcomes);

  out << render_table(result);

  try {
    if (config.output_json) write_file(*config.output_json, to_json(result).dump(2) + "\n");
    if (config.output_svg) write_file(*config.output_svg, render_svg(result));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  for (const MethodOutcome& o : result.outcomes) {
    if (o.report) return kExitOk;
  }
  return kExitMethodFailed;
}

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Fit lines by vertical, horizontal and perpendicular least squares"};
  app.require_subcommand(1);

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Fit a CSV point set (x,y per line)");
  std::string input = "-";
  std::vector<std::string> method_names{"all"};
  std::string json_path;
  std::string svg_path;
  bool oracle = false;
  fit_cmd->add_option("--input", input, "CSV file, '-' for standard input");
  fit_cmd->add_option("--method", method_names, "y, x, d or all (repeatable, comma separated)")
      ->delimiter(',');
  fit_cmd->add_option("--json", json_path, "Write the JSON report here");
  fit_cmd->add_option("--svg", svg_path, "Write an SVG figure here");
  fit_cmd->add_flag("--oracle", oracle, "Cross-check against brute-force grid search");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Write a benchmark point set as CSV");
  gen_cmd->require_subcommand(1);

  auto* circle_cmd = gen_cmd->add_subcommand("circle", "Evenly spaced points on a circle");
  CircleSpec circle;
  std::vector<double> circle_center;
  circle_cmd->add_option("--n", circle.n, "Number of points (>= 3)")->capture_default_str();
  circle_cmd->add_option("--alpha", circle.phase, "Phase in [0, 2*pi)")->capture_default_str();
  circle_cmd->add_option("--radius", circle.radius)->capture_default_str();
  circle_cmd->add_option("--center", circle_center, "X,Y")->delimiter(',')->expected(2);

  auto* parallel_cmd =
      gen_cmd->add_subcommand("parallel", "Points mirrored across two parallel lines");
  double ladder_slope = 2.0;
  double ladder_offset = 40.0;
  std::optional<double> ladder_half_width;
  std::uint64_t ladder_seed = 1;
  int ladder_count = 20;
  double ladder_spread = 50.0;
  parallel_cmd->add_option("--M", ladder_slope, "Slope of the lines y = M x +/- B")
      ->capture_default_str();
  parallel_cmd->add_option("--B", ladder_offset, "Offset B > 0")->capture_default_str();
  parallel_cmd->add_option("--A", ladder_half_width, "Vertical lines x = +/- A instead");
  parallel_cmd->add_option("--seed", ladder_seed)->capture_default_str();
  parallel_cmd->add_option("--count", ladder_count, "Points per line")->capture_default_str();
  parallel_cmd->add_option("--spread", ladder_spread, "t drawn uniformly from [-spread, spread]")
      ->capture_default_str();

  auto* noisy_cmd = gen_cmd->add_subcommand("noisy-line", "Points near y = slope x + intercept");
  NoisyLineSpec noisy;
  noisy.n = 20;
  noisy.x_min = -10.0;
  noisy.x_max = 10.0;
  noisy.noise = 0.1;
  noisy.seed = 1;
  noisy_cmd->add_option("--slope", noisy.slope)->capture_default_str();
  noisy_cmd->add_option("--intercept", noisy.intercept)->capture_default_str();
  noisy_cmd->add_option("--n", noisy.n)->capture_default_str();
  noisy_cmd->add_option("--x-min", noisy.x_min)->capture_default_str();
  noisy_cmd->add_option("--x-max", noisy.x_max)->capture_default_str();
  noisy_cmd->add_option("--noise", noisy.noise)->capture_default_str();
  noisy_cmd->add_option("--seed", noisy.seed)->capture_default_str();

  // transform
  auto* transform_cmd =
      app.add_subcommand("transform", "Rotate and/or translate a CSV point set");
  std::string transform_input = "-";
  std::optional<double> rotate;
  std::vector<double> rotate_center;
  std::vector<double> translate;
  transform_cmd->add_option("--input", transform_input, "CSV file, '-' for standard input");
  transform_cmd->add_option("--rotate", rotate, "Counter-clockwise angle in radians");
  transform_cmd->add_option("--center", rotate_center, "Rotation center X,Y (default: centroid)")
      ->delimiter(',')
      ->expected(2);
  transform_cmd->add_option("--translate", translate, "U,V")->delimiter(',')->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*fit_cmd) {
    RunConfig config;
    config.input = input;
    config.methods.clear();
    for (const std::string& name : method_names) {
      if (name == "all") {
        config.methods = {Method::kY, Method::kX, Method::kD};
        break;
      }
      const auto m = parse_method(name);
      if (!m) {
        err << "error: unknown method '" << name << "' (use y, x, d or all)\n";
        return kExitInputError;
      }
      if (std::find(config.methods.begin(), config.methods.end(), *m) == config.methods.end()) {
        config.methods.push_back(*m);
      }
    }
    if (!json_path.empty()) config.output_json = json_path;
    if (!svg_path.empty()) config.output_svg = svg_path;
    config.oracle_check = oracle;
    return run(config, in, out, err);
  }

  try {
    if (*gen_cmd) {
      PairedSample sample = [&] {
        if (*circle_cmd) {
          if (!circle_center.empty()) circle.center = parse_pair(circle_center);
          return gen_circle(circle);
        }
        if (*parallel_cmd) {
          Sample t = random_ladder_parameters(ladder_count, ladder_spread, ladder_seed);
          if (ladder_half_width) return gen_parallel(VerticalLadder{*ladder_half_width, t});
          return gen_parallel(SlantedLadder{ladder_slope, ladder_offset, t});
        }
        return gen_noisy_line(noisy);
      }();
      out << write_csv(sample);
      return kExitOk;
    }

    if (*transform_cmd) {
      PairedSample sample = parse_csv(read_source(transform_input, in));
      if (rotate) {
        Rotation r{*rotate, std::nullopt};
        if (!rotate_center.empty()) r.center = parse_pair(rotate_center);
        sample = apply_motion_points(sample, r);
      }
      if (!translate.empty()) {
        sample = apply_motion_points(sample, Translation{translate.at(0), translate.at(1)});
      }
      out << write_csv(sample);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace linefit
