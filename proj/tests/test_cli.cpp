#include "support.hpp"

#include "teich/cli.hpp"
#include "teich/io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing_support;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "teich");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = teich::runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "teich_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("validate") {
  auto r = run({"validate", dataPath("torus.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("V=1 E=3 F=2 g=1 n=1\n", 0) == 0);
  CHECK(r.out.find("vertex 1 faces=2 bound=6.28318530718") != std::string::npos);

  r = run({"validate", dataPath("genus2.json")});
  CHECK(r.out.find("E=9 F=6") != std::string::npos);

  r = run({"validate", dataPath("nonorientable.json")});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("ERROR OrientabilityError: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  r = run({"validate", dataPath("missing.json")});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("ERROR FormatError: ", 0) == 0);

  r = run({"nonsense"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("ERROR ", 0) == 0);
}

TEST_CASE("coords") {
  auto r = run({"coords", dataPath("torus.json"), dataPath("torus_223.json"), "--from", "edges", "--to", "sr"});
  REQUIRE(r.code == 0);
  const auto sr = teich::io::Json::parse(r.out);
  CHECK(sr["radii"][0].get<double>() == 0.5);

  r = run({"coords", dataPath("torus.json"), dataPath("torus_sr_unit.json"), "--from", "sr", "--to", "edges"});
  REQUIRE(r.code == 0);
  CHECK(teich::io::Json::parse(r.out)["edge_weights"] == teich::io::Json({2.0, 2.0, 2.0}));

  r = run({"coords", dataPath("torus.json"), dataPath("torus_sr_unbalanced.json"), "--from", "sr", "--to", "edges"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("ERROR BalanceError", 0) == 0);

  // Roundtrip through files.
  const auto srFile = scratch("sr.json"), edgeFile = scratch("edges.json");
  CHECK(run({"coords", dataPath("torus.json"), dataPath("genus2_metric.json"), "--from", "edges", "--to", "sr"}).code == 2);
  CHECK(run({"coords", dataPath("genus2.json"), dataPath("genus2_metric.json"), "--to", "sr", "--out", srFile}).code == 0);
  CHECK(run({"coords", dataPath("genus2.json"), srFile, "--from", "sr", "--to", "edges", "--out", edgeFile}).code == 0);
  const auto in = teich::io::readJsonFile(dataPath("genus2_metric.json"))["edge_lengths"];
  const auto back = teich::io::readJsonFile(edgeFile)["edge_weights"];
  REQUIRE(back.size() == in.size());
  for (size_t e = 0; e < in.size(); ++e)
    CHECK(teich::formatNumber(back[e].get<double>()) == teich::formatNumber(in[e].get<double>()));
}

TEST_CASE("angles and stretch") {
  auto r = run({"angles", dataPath("torus.json"), dataPath("torus_223.json"), "--curves", dataPath("torus_curves.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("theta_1=3.91504814766") != std::string::npos);
  CHECK(r.out.find("warning") != std::string::npos);
  CHECK(r.out.find("len_c23=") != std::string::npos);

  r = run({"stretch", dataPath("torus.json"), dataPath("torus_223.json"), "--mode", "per", "--t", "0.69314718055994530942"});
  CHECK(r.code == 0);
  const auto w = teich::io::Json::parse(r.out)["edge_lengths"];
  CHECK(w[0].get<double>() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(w[2].get<double>() == doctest::Approx(4.0).epsilon(1e-15));

  r = run({"stretch", dataPath("torus.json"), dataPath("torus_223.json"), "--mode", "up", "--t", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("ray") {
  auto r = run({"ray", dataPath("torus.json"), dataPath("torus_223.json"), "--mode", "per", "--t0", "0", "--t1", "1",
                "--steps", "2", "--curves", dataPath("torus_curves.json")});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  CHECK(r.out.rfind("t,L_1,L_2,L_3,theta_1,s_1,s_2,s_3,r_1,len_c23,flags\n", 0) == 0);
  CHECK(run({"ray", dataPath("torus.json"), dataPath("torus_223.json"), "--mode", "per", "--t0", "0", "--t1", "1",
             "--steps", "2", "--curves", dataPath("torus_curves.json")})
            .out == r.out);

  const auto csv = scratch("ray.csv");
  r = run({"ray", dataPath("torus.json"), dataPath("torus_223.json"), "--mode", "int", "--t0", "-20", "--t1", "0",
           "--steps", "3", "--out", csv});
  REQUIRE(r.code == 0);
  std::istringstream rows(slurp(csv));
  std::string header, last;
  std::getline(rows, header);
  std::getline(rows, last);
  // First data row is t = -20: edge lengths within e^-20 * 2 of the packing.
  std::istringstream cells(last);
  std::string cell;
  std::getline(cells, cell, ',');
  CHECK(cell == "-20");
  for (int e = 0; e < 3; ++e) {
    std::getline(cells, cell, ',');
    CHECK(std::abs(std::stod(cell) - 1.0) < 1e-8);
  }

  r = run({"ray", dataPath("torus.json"), dataPath("torus_223.json"), "--t0", "1", "--t1", "0"});
  CHECK(r.code == 2);
}

TEST_CASE("cusped, flip and maxangle") {
  auto r = run({"cusped", dataPath("torus.json"), dataPath("torus_zero_shears.json"), "--curves",
                dataPath("torus_curves.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("len_c23=1.92484730024", 0) == 0);

  r = run({"cusped", dataPath("torus.json"), dataPath("torus_223.json"), "--from-metric", "--curves",
           dataPath("torus_curves.json")});
  CHECK(r.code == 0);

  r = run({"cusped", dataPath("torus.json"), dataPath("torus_zero_shears.json"), "--curves",
           dataPath("torus_link.json")});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("ERROR ParabolicClassError", 0) == 0);

  r = run({"flip", dataPath("torus.json"), dataPath("torus_equilateral.json"), "--edge", "3"});
  REQUIRE(r.code == 0);
  const auto j = teich::io::Json::parse(r.out);
  CHECK(std::abs(j["edge_lengths"][2].get<double>() - std::acosh(8.0)) < 1e-10);
  CHECK(j["faces"].size() == 2);

  r = run({"flip", dataPath("sphere3.json"), dataPath("sphere3_obtuse.json"), "--edge", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("ERROR GeodesicFlipError: angle sum", 0) == 0);

  r = run({"flip", dataPath("torus.json"), dataPath("torus_equilateral.json"), "--edge", "4"});
  CHECK(r.code == 2);

  r = run({"maxangle", dataPath("torus.json"), "--vertex", "1", "--n", "10000"});
  CHECK(r.code == 0);
  const auto pos = r.out.find("deficit=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 8)) < 0.1);
  CHECK(r.out.find("bound=6.28318530718") != std::string::npos);

  r = run({"maxangle", dataPath("torus.json"), "--vertex", "2", "--n", "3"});
  CHECK(r.code == 2);
}
