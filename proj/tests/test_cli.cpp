#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "anglegauge/cli.hpp"
#include "anglegauge/matrix_io.hpp"
#include "test_support.hpp"

using namespace anglegauge;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

std::pair<int, std::string> run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("csv parsing golden") {
  std::istringstream in("2,0\n0,1\n");
  const Matrix m = parse_matrix_csv(in);
  CHECK(m == Matrix::diagonal({2.0, 1.0}));
}

TEST_CASE("csv parsing with comments and whitespace") {
  std::istringstream in("# header\n 1 , 2 \n\n3,4\n");
  const Matrix m = parse_matrix_csv(in);
  CHECK(m == Matrix(2, 2, {1, 2, 3, 4}));
}

TEST_CASE("ragged csv names the offending line") {
  std::istringstream in("1,2\n3\n");
  try {
    parse_matrix_csv(in);
    FAIL("expected RaggedRows");
  } catch (const RaggedRows& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("csv rejects garbage and non-finite values") {
  std::istringstream bad("1,x\n");
  CHECK_THROWS_AS(parse_matrix_csv(bad), ParseError);
  std::istringstream inf("1,inf\n");
  CHECK_THROWS_AS(parse_matrix_csv(inf), Error);
}

TEST_CASE("json parsing golden and shape mismatch") {
  const Matrix m = parse_matrix_json(R"({"rows":2,"cols":2,"data":[1,0,0,1]})");
  CHECK(m == Matrix::identity(2));
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows":2,"cols":2,"data":[1,0,0]})"),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_matrix_json("not json"), ParseError);
}

TEST_CASE("canonical serialization round-trips bit-exactly") {
  for (std::size_t idx = 0; idx < 30; ++idx) {
    const Matrix t = agtest::mixed_corpus_matrix(151, idx);
    const Matrix back = parse_matrix_json(canonical_json(t));
    CHECK(back == t);
  }
}

TEST_CASE("digest is stable and input-sensitive") {
  const Matrix a = Matrix::diagonal({2.0, 1.0});
  CHECK(matrix_digest(a) == matrix_digest(a));
  CHECK(matrix_digest(a) != matrix_digest(Matrix::identity(2)));
  CHECK(matrix_digest(a).size() == 16);
}

TEST_CASE("analyze emits the closed form") {
  const auto p = write_temp("ag_d21.csv", "2,0\n0,1\n");
  const auto [code, out] = run_args(
      {"analyze", "--matrix", p.string(), "--c", "0", "--samples", "0"});
  CHECK(code == 0);
  const auto doc = nlohmann::json::parse(out);
  CHECK(doc["reports"][0]["eps_hat"].get<double>() == doctest::Approx(0.6));
  CHECK(out.find("\"eps_hat\": 0.6") != std::string::npos);
}

TEST_CASE("analyze output is byte-identical across runs") {
  const auto p = write_temp("ag_d21b.csv", "2,0\n0,1\n");
  const std::vector<std::string> args{"analyze",   "--matrix", p.string(),
                                      "--c",       "0",        "--c",
                                      "0.5",       "--samples", "2000",
                                      "--seed",    "7"};
  const auto a = run_args(args);
  const auto b = run_args(args);
  CHECK(a.first == 0);
  CHECK(a.second == b.second);
}

TEST_CASE("witness command reports the extremal pair") {
  const auto p = write_temp("ag_d21c.csv", "2,0\n0,1\n");
  const auto [code, out] =
      run_args({"witness", "--matrix", p.string(), "--c", "0"});
  CHECK(code == 0);
  const auto doc = nlohmann::json::parse(out);
  CHECK(doc["witnesses"][0]["value"].get<double>() == doctest::Approx(0.6));
  const auto u = doc["witnesses"][0]["u"].get<std::vector<double>>();
  const auto v = doc["witnesses"][0]["v"].get<std::vector<double>>();
  // (e1+e2, e1-e2) up to sign convention and component order
  CHECK(std::abs(u[0] * u[1]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(v[0] * v[1]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("verify exits 0 on the identity") {
  const auto p = write_temp("ag_id.json", R"({"rows":2,"cols":2,"data":[1,0,0,1]})");
  const auto [code, out] = run_args({"verify", "--matrix", p.string(), "--c",
                                     "0.5", "--seed", "7", "--samples", "500"});
  CHECK(code == 0);
  const auto doc = nlohmann::json::parse(out);
  CHECK(doc["all_passed"].get<bool>());
}

TEST_CASE("structured errors exit with code 2") {
  const auto ragged = write_temp("ag_bad.csv", "1,2\n3\n");
  auto [code, out] = run_args({"analyze", "--matrix", ragged.string(), "--c", "0"});
  CHECK(code == 2);
  CHECK(nlohmann::json::parse(out)["error"]["type"] == "RaggedRows");

  const auto zero = write_temp("ag_zero.csv", "0,0\n0,0\n");
  auto [code2, out2] = run_args({"analyze", "--matrix", zero.string(), "--c", "0"});
  CHECK(code2 == 2);
  CHECK(nlohmann::json::parse(out2)["error"]["type"] == "ZeroMap");

  auto [code3, out3] = run_args({"witness", "--matrix", zero.string(), "--c", "0"});
  CHECK(code3 == 2);

  const auto missing =
      run_args({"analyze", "--matrix", "/nonexistent.csv", "--c", "0"});
  CHECK(missing.first == 2);

  const auto bad_c = write_temp("ag_ok.csv", "1,0\n0,1\n");
  CHECK(run_args({"analyze", "--matrix", bad_c.string(), "--c", "1.5"}).first == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_args({"analyze"}).first == 2);          // missing --matrix
  CHECK(run_args({"frobnicate"}).first == 2);       // unknown subcommand
  CHECK(run_args({}).first == 2);                   // no subcommand
}

TEST_CASE("text output mode") {
  const auto p = write_temp("ag_d21d.csv", "2,0\n0,1\n");
  const auto [code, out] = run_args({"analyze", "--matrix", p.string(), "--c",
                                     "0", "--samples", "0", "--output", "text"});
  CHECK(code == 0);
  CHECK(out.find("eps_hat=0.6") != std::string::npos);
}
