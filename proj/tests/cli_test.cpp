#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "rangeassign/instance_io.hpp"

namespace rangeassign::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(TEST_TMP_DIR) + "/" + name; }

std::string write_instance(const std::string& name, const Instance& inst) {
  const std::string path = tmp(name);
  write_instance_file(inst, path);
  return path;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

TEST(CliTest, GenerateIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"generate", "nn-lb-2d", "--epsilon", "0.01"},
           {"generate", "random", "--seed", "7", "--n", "12", "--space", "metric"},
           {"generate", "universal-1d", "--alpha", "3", "--branch", "F2"},
           {"generate", "recursive-squares", "--rounds", "2"}}) {
    const auto a = call(args);
    const auto b = call(args);
    ASSERT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(parse_instance(a.out));
  }
  const auto lb = call({"generate", "nn-lb-1d", "--delta", "0.25", "--x", "2"});
  EXPECT_EQ(parse_instance(lb.out), Instance::line({0.0, 0.5, 2.0, -2.0}));
}

TEST(CliTest, GenerateRejectsBadParameters) {
  const auto eps = call({"generate", "nn-lb-2d", "--epsilon", "0.5"});
  EXPECT_EQ(eps.code, kUsage);
  EXPECT_NE(eps.err.find("--epsilon"), std::string::npos);
  EXPECT_EQ(call({"generate", "nope"}).code, kUsage);
  EXPECT_EQ(call({"generate", "universal-1d", "--branch", "F3"}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
}

TEST(CliTest, SimulatePrintsCsvAndSummary) {
  const auto path = write_instance("cli_three.json", Instance::line({0.0, 1.0, 2.0}));
  const auto r = call({"simulate", path, "--strategy", "dual", "--gamma", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("j,action,center,old_range,new_range,cost_delta,y_j\n"), std::string::npos);
  EXPECT_NE(r.out.find("# strategy=dual(gamma=4) alpha=2 n=3 total_cost=32 sum_y=2\n"),
            std::string::npos);

  const auto csv = tmp("cli_three.csv");
  const auto to_file = call({"simulate", path, "--strategy", "knn", "--out", csv});
  ASSERT_EQ(to_file.code, kOk);
  EXPECT_EQ(to_file.out.rfind("# strategy=knn(k=2)", 0), 0u);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "j,action,center,old_range,new_range,cost_delta,y_j");
}

TEST(CliTest, SimulateUsageErrors) {
  const auto path = write_instance("cli_two.json", Instance::line({0.0, 1.0}));
  EXPECT_EQ(call({"simulate", path}).code, kUsage);
  EXPECT_EQ(call({"simulate", path, "--strategy", "greedy"}).code, kUsage);
  EXPECT_EQ(call({"simulate", path, "--strategy", "nn", "--alpha", "1"}).code, kUsage);
  EXPECT_EQ(call({"simulate", path, "--strategy", "knn", "--k", "0.5"}).code, kUsage);
  EXPECT_EQ(call({"simulate", tmp("missing.json"), "--strategy", "nn"}).code, kUsage);
  write_text(tmp("cli_bad.json"), "{\"space\": \"line\"}");
  EXPECT_EQ(call({"simulate", tmp("cli_bad.json"), "--strategy", "nn"}).code, kUsage);
}

TEST(CliTest, OracleExactAndApprox) {
  const auto path = write_instance("cli_pair.json", Instance::line({0.0, 2.0}));
  const auto exact = call({"oracle", path});
  ASSERT_EQ(exact.code, kOk);
  EXPECT_NE(exact.out.find("mode=exact\ncost=4\nranges=2,0\n"), std::string::npos);
  const auto approx = call({"oracle", path, "--approx"});
  ASSERT_EQ(approx.code, kOk);
  EXPECT_NE(approx.out.find("cost=100\n"), std::string::npos);
  EXPECT_NE(approx.out.find("sum_y=4\n"), std::string::npos);
  EXPECT_NE(approx.out.find("certificate=pass\n"), std::string::npos);
}

TEST(CliTest, OracleSizeLimit) {
  std::vector<double> xs;
  for (int i = 0; i < 21; ++i) xs.push_back(i);
  const auto path = write_instance("cli_big.json", Instance::line(xs));
  const auto r = call({"oracle", path});
  EXPECT_EQ(r.code, kSizeLimit);
  EXPECT_NE(r.err.find("n=21"), std::string::npos);
  EXPECT_EQ(call({"oracle", path, "--approx"}).code, kOk);
  EXPECT_EQ(call({"simulate", path, "--strategy", "ci"}).code, kOk);
}

TEST(CliTest, Bounds) {
  const auto c = call({"bounds", "--alpha", "2"});
  ASSERT_EQ(c.code, kOk);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(c.out, m, std::regex("c=([0-9.]+)")));
  const double root = std::sqrt(183.0);
  EXPECT_NEAR(std::stod(m[1]),
              (4.0 + std::cbrt(496.0 - 24.0 * root) + 2.0 * std::cbrt(62.0 + 3.0 * root)) / 12.0,
              1e-4);
  EXPECT_NE(call({"bounds", "--alpha", "3", "--fstar"}).out.find("f_star=15\n"), std::string::npos);
  EXPECT_EQ(call({"bounds", "--alpha", "2", "--fstar"}).code, kUsage);
  const auto star = call({"bounds", "--alpha-star"});
  ASSERT_TRUE(std::regex_search(star.out, m, std::regex("alpha_star=([0-9.]+)\nf_star=([0-9.]+)")));
  EXPECT_NEAR(std::stod(m[1]), 4.3, 0.05);
  EXPECT_NEAR(std::stod(m[2]), 12.94, 0.01);
}

TEST(CliTest, ExportLp) {
  const auto path = write_instance("cli_lp.json", Instance::line({0.0, 1.0, 2.0}));
  const auto primal = call({"export-lp", path});
  ASSERT_EQ(primal.code, kOk);
  EXPECT_NE(primal.out.find("Minimize"), std::string::npos);
  EXPECT_NE(call({"export-lp", path, "--form", "dual"}).out.find("Maximize"), std::string::npos);
  EXPECT_EQ(call({"export-lp", path, "--form", "both"}).code, kUsage);
}

std::string strip_wall_clock(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, kept;
  while (std::getline(in, line)) kept += line.substr(0, line.rfind(',')) + "\n";
  return kept;
}

TEST(CliTest, SweepIsDeterministic) {
  write_instance("sweep_pair.json", Instance::line({0.0, 2.0}));
  const auto spec = tmp("sweep.json");
  write_text(spec, R"({
    "instances": [{"file": "sweep_pair.json"}, {"generator": "nn-lb-1d", "delta": 0.01},
                  {"random": {"space": "plane", "n": 8, "count": 3, "seed": 5}},
                  {"generator": "recursive-squares", "rounds": 2}],
    "strategies": [{"strategy": "nn"}, {"strategy": "knn", "k": 2}, {"strategy": "dual", "gamma": 4}],
    "alphas": [2, 3]
  })");
  const auto a = call({"sweep", spec});
  const auto b = call({"sweep", spec});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(strip_wall_clock(a.out), strip_wall_clock(b.out));
  EXPECT_EQ(a.out.rfind("instance,n,strategy,alpha,cost,oracle_cost,ratio,status,wall_ms_nondet\n", 0), 0u);
  std::istringstream rows(a.out);
  std::string line;
  std::size_t count = 0, too_large = 0;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    ++count;
    if (line.find("instance too large") != std::string::npos) ++too_large;
  }
  EXPECT_EQ(count, 6u * 3u * 2u);
  EXPECT_EQ(too_large, 6u);  // 21 recursive-square points
  EXPECT_NE(a.out.find("nn-lb-1d,4,nn,2,1.9801"), std::string::npos);
}

TEST(CliTest, SweepRejectsEmptyStrategies) {
  const auto spec = tmp("sweep_empty.json");
  write_text(spec, R"({"instances": [{"generator": "nn-lb-2d"}], "strategies": []})");
  const auto r = call({"sweep", spec});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("strategies"), std::string::npos);
  write_text(spec, "{not json");
  EXPECT_EQ(call({"sweep", spec}).code, kUsage);
}

}  // namespace
}  // namespace rangeassign::cli
