#include <gtest/gtest.h>

#include <regex>

#include <json.hpp>

#include "cli_support.hpp"
#include "linefit/csv.hpp"
#include "linefit/error.hpp"
#include "linefit/report.hpp"
#include "linefit/transforms.hpp"
#include "test_support.hpp"

namespace linefit {
namespace {

using testing::run_cli;
using testing::TempDir;
using nlohmann::json;

const char* const kThreeCsv = "0,0\n1,0\n2,1\n";

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_csv(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorKind::kInvalidArgument;
}

TEST(ParseCsv, Examples) {
  const PairedSample p = parse_csv(kThreeCsv);
  EXPECT_EQ(testing::to_vector(p.xs()), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(testing::to_vector(p.ys()), (std::vector<double>{0, 0, 1}));

  const PairedSample h = parse_csv("x,y\n5,5\n6,7\n");
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.point(1).y, 7.0);

  try {
    parse_csv("1,2\n3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(ParseCsv, Grammar) {
  const PairedSample p = parse_csv("x,y\r\n-1.5,2e3\r\n\r\n\n0.25,-7\r\n");
  EXPECT_EQ(testing::to_vector(p.xs()), (std::vector<double>{-1.5, 0.25}));
  EXPECT_EQ(testing::to_vector(p.ys()), (std::vector<double>{2000, -7}));
  EXPECT_EQ(parse_csv("1,2\n3,4").size(), 2u);  // no trailing newline

  EXPECT_EQ(parse_error_kind("1,nan\n2,3\n"), ErrorKind::kParse);
  EXPECT_EQ(parse_error_kind("1,inf\n2,3\n"), ErrorKind::kParse);
  EXPECT_EQ(parse_error_kind("1,2x\n2,3\n"), ErrorKind::kParse);
  EXPECT_EQ(parse_error_kind("1;2\n2,3\n"), ErrorKind::kParse);
  EXPECT_EQ(parse_error_kind("1,2,3\n2,3\n"), ErrorKind::kParse);
  EXPECT_EQ(parse_error_kind("1,2\nx,y\n3,4\n"), ErrorKind::kParse);  // header only first
  EXPECT_EQ(parse_error_kind("1, 2\n2,3\n"), ErrorKind::kParse);
  EXPECT_EQ(parse_error_kind("1,2\n"), ErrorKind::kInsufficientData);
  EXPECT_EQ(parse_error_kind("x,y\n"), ErrorKind::kInsufficientData);
  EXPECT_EQ(parse_error_kind(""), ErrorKind::kInsufficientData);
}

TEST(WriteCsv, RoundTripsBitExact) {
  UniformStream rng(91);
  const PairedSample p = testing::random_cloud(rng, 25);
  const PairedSample q = parse_csv(write_csv(p));
  EXPECT_EQ(testing::to_vector(q.xs()), testing::to_vector(p.xs()));
  EXPECT_EQ(testing::to_vector(q.ys()), testing::to_vector(p.ys()));
  EXPECT_EQ(write_csv(PairedSample({0.5, 2}, {1, -3})), "x,y\n0.5,1\n2,-3\n");
}

TEST(FormatNumber, SnapsTinyValues) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(-1.0 / 6.0), "-0.1666666667");
  EXPECT_EQ(format_number(1e-17), "0");
  EXPECT_EQ(format_number(1e-17, 0.0), "1e-17");
  EXPECT_EQ(format_number(1e-9, 1e6), "0");
}

TEST(Fit, TableForThreePoints) {
  TempDir dir;
  const auto r = run_cli({"fit", "--input", dir.write("three.csv", kThreeCsv)});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Y: y = 0.5 x - 0.1666666667"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("X: x = 1.5 y + 0.5"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("D: y = 0.5351837585 x - 0.2018504252"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ordering_e = holds"), std::string::npos);
  EXPECT_NE(r.out.find("ordering_f = holds"), std::string::npos);
}

TEST(Fit, StdinAndMethodSelection) {
  const auto r = run_cli({"fit", "--method", "d,y"}, kThreeCsv);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Y: "), std::string::npos);
  EXPECT_NE(r.out.find("D: "), std::string::npos);
  EXPECT_EQ(r.out.find("X: "), std::string::npos);
  const auto bad = run_cli({"fit", "--method", "z"}, kThreeCsv);
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("unknown method"), std::string::npos);
}

TEST(Fit, CircleIsDegenerate) {
  const auto gen = run_cli({"generate", "circle", "--n", "12"});
  ASSERT_EQ(gen.code, kExitOk);
  const auto r = run_cli({"fit", "--method", "d"}, gen.out);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("degenerate: every line through centroid (0,0), objective 0.5"),
            std::string::npos)
      << r.out;
}

TEST(Fit, ExitCodes) {
  TempDir dir;
  const std::string vertical = dir.write("vertical.csv", "1,0\n1,1\n1,5\n");
  EXPECT_EQ(run_cli({"fit", "--input", dir.write("bad.csv", "1,2\n3\n")}).code, kExitInputError);
  EXPECT_EQ(run_cli({"fit", "--input", dir.file("missing.csv")}).code, kExitInputError);
  EXPECT_EQ(run_cli({"fit", "--bogus"}).code, kExitInputError);
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);

  const auto y_only = run_cli({"fit", "--input", vertical, "--method", "y"});
  EXPECT_EQ(y_only.code, kExitMethodFailed);
  EXPECT_NE(y_only.out.find("vertical-data"), std::string::npos) << y_only.out;

  // One failing method does not fail the run; the failure is in the JSON.
  const std::string json_path = dir.file("vertical.json");
  EXPECT_EQ(run_cli({"fit", "--input", vertical, "--json", json_path}).code, kExitOk);
  const json j = json::parse(testing::read_file(json_path));
  EXPECT_EQ(j["fits"]["Y"]["status"], "precondition_failed");
  EXPECT_EQ(j["fits"]["Y"]["error_kind"], "vertical-data");
  EXPECT_EQ(j["fits"]["X"]["status"], "ok");
  EXPECT_EQ(j["fits"]["D"]["status"], "ok");
  EXPECT_NEAR(j["fits"]["D"]["normal_form"]["theta"].get<double>(), kPi / 2, 1e-15);
}

TEST(Fit, JsonRoundTrip) {
  TempDir dir;
  UniformStream rng(92);
  const PairedSample p = testing::random_cloud(rng, 17);
  const std::string json_path = dir.file("out.json");
  ASSERT_EQ(run_cli({"fit", "--input", dir.write("in.csv", write_csv(p)), "--json", json_path})
                .code,
            kExitOk);
  const json j = json::parse(testing::read_file(json_path));

  std::vector<double> xs, ys;
  for (const auto& pt : j["points"]) {
    xs.push_back(pt[0].get<double>());
    ys.push_back(pt[1].get<double>());
  }
  const PairedSample echoed(xs, ys);
  EXPECT_EQ(testing::to_vector(echoed.xs()), testing::to_vector(p.xs()));

  const auto y = std::get<SlopeInterceptLine>(fit_y(echoed).line);
  const auto x = std::get<InverseSlopeLine>(fit_x(echoed).line);
  const auto d = std::get<UniqueLine>(fit_d(echoed)).line;
  const json& fits = j["fits"];
  EXPECT_NEAR(fits["Y"]["slope"].get<double>(), y.slope, 1e-12);
  EXPECT_NEAR(fits["Y"]["intercept"].get<double>(), y.intercept, 1e-12);
  EXPECT_NEAR(fits["X"]["inverse_slope"].get<double>(), x.inverse_slope, 1e-12);
  EXPECT_NEAR(fits["X"]["x_intercept"].get<double>(), x.x_intercept, 1e-12);
  EXPECT_NEAR(fits["D"]["theta"].get<double>(), d.theta(), 1e-12);
  EXPECT_NEAR(fits["D"]["c"].get<double>(), d.offset(), 1e-12);
  EXPECT_NEAR(j["stats"]["var_x"].get<double>(), summarize(echoed).var_x, 1e-12);
}

TEST(Fit, DegenerateJsonShape) {
  TempDir dir;
  const std::string json_path = dir.file("circle.json");
  const auto gen = run_cli({"generate", "circle", "--n", "9", "--alpha", "0.4"});
  ASSERT_EQ(run_cli({"fit", "--json", json_path}, gen.out).code, kExitOk);
  const json d = json::parse(testing::read_file(json_path))["fits"]["D"];
  EXPECT_EQ(d["status"], "all_lines_through_centroid");
  ASSERT_EQ(d["centroid"].size(), 2u);
  EXPECT_NEAR(d["centroid"][0].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(d["objective"].get<double>(), 0.5, 1e-12);
}

// Pulls "theta = ...", "c = ..." and "objective_min = ..." off the table line
// for one method and checks them against the JSON values.
TEST(Fit, TableAgreesWithJson) {
  TempDir dir;
  UniformStream rng(93);
  for (int trial = 0; trial < 10; ++trial) {
    const PairedSample p = testing::random_cloud(rng, 5 + trial);
    const std::string json_path = dir.file("t.json");
    const auto r =
        run_cli({"fit", "--input", dir.write("t.csv", write_csv(p)), "--json", json_path});
    ASSERT_EQ(r.code, kExitOk);
    const json fits = json::parse(testing::read_file(json_path))["fits"];
    for (const char* m : {"Y", "X", "D"}) {
      const std::regex line_re(std::string("\n") + m +
                               R"(: .*theta = (\S+)   c = (\S+) .*objective_min = (\S+))");
      std::smatch match;
      ASSERT_TRUE(std::regex_search(r.out, match, line_re)) << r.out;
      const double table[] = {std::stod(match[1]), std::stod(match[2]), std::stod(match[3])};
      const double want[] = {fits[m]["normal_form"]["theta"].get<double>(),
                             fits[m]["normal_form"]["c"].get<double>(),
                             fits[m]["objective_min"].get<double>()};
      for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(table[k], want[k], 1e-9 * std::abs(want[k]) + 1e-10) << m << " " << k;
      }
    }
    const std::regex y_re(R"(\nY: y = (\S+) x ([+-]) (\S+))");
    std::smatch match;
    ASSERT_TRUE(std::regex_search(r.out, match, y_re));
    const double slope = fits["Y"]["slope"].get<double>();
    const double intercept = fits["Y"]["intercept"].get<double>();
    EXPECT_NEAR(std::stod(match[1]), slope, 1e-9 * std::abs(slope));
    const double b = (match[2] == "-" ? -1 : 1) * std::stod(match[3]);
    EXPECT_NEAR(b, intercept, 1e-9 * std::abs(intercept) + 1e-10);
  }
}

TEST(Fit, OracleDeltasAreSmall) {
  TempDir dir;
  const std::string json_path = dir.file("o.json");
  ASSERT_EQ(run_cli({"fit", "--oracle", "--json", json_path}, kThreeCsv).code, kExitOk);
  const json oracle = json::parse(testing::read_file(json_path))["oracle"];
  for (const char* m : {"Y", "X", "D"}) {
    EXPECT_LT(std::abs(oracle[m]["first_delta"].get<double>()), 1e-4) << m;
    EXPECT_LT(std::abs(oracle[m]["second_delta"].get<double>()), 1e-4) << m;
    EXPECT_LE(oracle[m]["objective_gap"].get<double>(), 1e-12) << m;
  }
}

TEST(Svg, ThreeLinesAndPoints) {
  TempDir dir;
  const std::string svg_path = dir.file("out.svg");
  const auto gen = run_cli({"generate", "parallel", "--M", "2", "--B", "40", "--seed", "7"});
  ASSERT_EQ(gen.code, kExitOk);
  const std::string json_path = dir.file("out.json");
  ASSERT_EQ(run_cli({"fit", "--svg", svg_path, "--json", json_path}, gen.out).code, kExitOk);
  const auto counts = testing::svg_element_counts(testing::read_file(svg_path));
  EXPECT_EQ(counts.at("circle.point"), 40);
  EXPECT_EQ(counts.at("line.fit fit-y"), 1);
  EXPECT_EQ(counts.at("line.fit fit-x"), 1);
  EXPECT_EQ(counts.at("line.fit fit-d"), 1);
  EXPECT_EQ(counts.count("circle.centroid"), 0u);

  // Three distinct lines through one point, the centroid.
  const json j = json::parse(testing::read_file(json_path));
  const Point centroid{j["stats"]["mean_x"].get<double>(), j["stats"]["mean_y"].get<double>()};
  std::vector<NormalLine> lines;
  for (const char* m : {"Y", "X", "D"}) {
    lines.emplace_back(j["fits"][m]["normal_form"]["theta"].get<double>(),
                       j["fits"][m]["normal_form"]["c"].get<double>());
    EXPECT_NEAR(lines.back().residual(centroid), 0.0, 1e-9);
  }
  EXPECT_GT(line_discrepancy(lines[0], lines[1]), 1e-3);
  EXPECT_GT(line_discrepancy(lines[0], lines[2]), 1e-3);
  EXPECT_GT(line_discrepancy(lines[1], lines[2]), 1e-3);
}

TEST(Svg, DegenerateDIsAMarker) {
  TempDir dir;
  const std::string svg_path = dir.file("circle.svg");
  const auto gen = run_cli({"generate", "circle", "--n", "7", "--radius", "3", "--center", "1,2"});
  ASSERT_EQ(run_cli({"fit", "--method", "d", "--svg", svg_path}, gen.out).code, kExitOk);
  const auto counts = testing::svg_element_counts(testing::read_file(svg_path));
  EXPECT_EQ(counts.at("circle.point"), 7);
  EXPECT_EQ(counts.at("circle.centroid"), 1);
  EXPECT_EQ(counts.at("text.annotation"), 1);
  EXPECT_EQ(counts.count("line.fit fit-d"), 0u);
}

TEST(Svg, FailedMethodIsOmitted) {
  TempDir dir;
  const std::string svg_path = dir.file("v.svg");
  ASSERT_EQ(run_cli({"fit", "--svg", svg_path}, "2,0\n2,1\n2,3\n").code, kExitOk);
  const auto counts = testing::svg_element_counts(testing::read_file(svg_path));
  EXPECT_EQ(counts.count("line.fit fit-y"), 0u);
  EXPECT_EQ(counts.at("line.fit fit-x"), 1);
  EXPECT_EQ(counts.at("line.fit fit-d"), 1);
}

TEST(Generate, Deterministic) {
  const auto a = run_cli({"generate", "noisy-line", "--slope", "2", "--noise", "0.5", "--seed", "4"});
  const auto b = run_cli({"generate", "noisy-line", "--slope", "2", "--noise", "0.5", "--seed", "4"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_csv(a.out).size(), 20u);

  const auto ladder = run_cli({"generate", "parallel", "--A", "3", "--count", "5"});
  ASSERT_EQ(ladder.code, kExitOk);
  const PairedSample p = parse_csv(ladder.out);
  ASSERT_EQ(p.size(), 10u);
  for (double x : p.xs().values()) EXPECT_EQ(std::abs(x), 3.0);

  EXPECT_EQ(run_cli({"generate", "circle", "--n", "2"}).code, kExitInputError);
}

TEST(Transform, MatchesLibrary) {
  TempDir dir;
  const std::string path = dir.write("three.csv", kThreeCsv);
  const auto r = run_cli({"transform", "--input", path, "--rotate", "1.5707963267948966",
                          "--center", "0,0"});
  ASSERT_EQ(r.code, kExitOk);
  const PairedSample want =
      apply_motion_points(parse_csv(kThreeCsv), Rotation{kPi / 2, Point{0, 0}});
  EXPECT_EQ(r.out, write_csv(want));

  const auto shifted = run_cli({"transform", "--translate", "1,-2"}, kThreeCsv);
  ASSERT_EQ(shifted.code, kExitOk);
  EXPECT_EQ(testing::to_vector(parse_csv(shifted.out).ys()), (std::vector<double>{-2, -2, -1}));

  // Default center is the centroid, which stays put.
  const auto spun = run_cli({"transform", "--rotate", "0.8"}, kThreeCsv);
  const SummaryStats s = summarize(parse_csv(spun.out));
  EXPECT_NEAR(s.mean_x, 1.0, 1e-15);
  EXPECT_NEAR(s.mean_y, 1.0 / 3.0, 1e-15);

  EXPECT_EQ(run_cli({"transform", "--rotate", "1"}, "oops\n").code, kExitInputError);
}

}  // namespace
}  // namespace linefit
