#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "aspectral/errors.hpp"
#include "aspectral/matrix_io.hpp"
#include "aspectral/rng.hpp"

using namespace aspectral;

TEST_CASE("matrix json round trip is exact") {
  Rng rng(1);
  for (int n : {1, 2, 5, 9}) {
    ComplexMatrix m = rng.gaussian_matrix(n, n + 1, 1e3);
    m(0, 0) = Complex(std::numeric_limits<double>::denorm_min(), -std::numeric_limits<double>::max());
    m(n - 1, 0) = Complex(1.0 / 3.0, -0.0);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }
}

TEST_CASE("matrix file round trip") {
  const std::string path = "test_matrix_io_roundtrip.json";
  Rng rng(2);
  const ComplexMatrix m = rng.gaussian_matrix(4, 4);
  write_matrix_file(path, m);
  CHECK(read_matrix_file(path) == m);
  std::remove(path.c_str());
}

TEST_CASE("matrix json layout") {
  ComplexMatrix m(1, 2);
  m << Complex(1, 0), Complex(0.5, -2);
  CHECK(matrix_to_json(m) == "{\"rows\": 1, \"cols\": 2, \"data\": [[1, 0], [0.5, -2]]}\n");
}

TEST_CASE("malformed matrix files are rejected") {
  CHECK_THROWS_AS(matrix_from_json("not json"), ParseError);
  CHECK_THROWS_AS(matrix_from_json("[]"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 1, "data": [[1, 0]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[1]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [["a", 0]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": -1, "cols": 1, "data": []})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[1e999, 0]]})"), ParseError);
  CHECK_THROWS_AS(read_matrix_file("definitely/not/here.json"), ParseError);

  ComplexMatrix bad = ComplexMatrix::Zero(1, 1);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(matrix_to_json(bad), InvalidArgument);
}

TEST_CASE("law report json") {
  FuzzConfig cfg;
  LawReport r;
  r.law_id = "gkz";
  r.trials = 3;
  r.passed = 2;
  r.worst_deviation = 0.25;
  r.elapsed_seconds = 1.5;
  Witness w;
  w.seed = 42;
  w.trial = 1;
  w.note = "why";
  w.weight = ComplexMatrix::Identity(2, 2);
  r.counterexample = w;

  const auto doc = nlohmann::json::parse(law_reports_to_json(cfg, {r}));
  CHECK(doc["laws"][0]["law_id"] == "gkz");
  CHECK(doc["laws"][0]["ok"] == false);
  CHECK(doc["laws"][0]["counterexample"]["seed"] == 42);
  CHECK_FALSE(doc["laws"][0].contains("elapsed_seconds"));
  CHECK(doc["all_passed"] == false);
  CHECK(nlohmann::json::parse(law_reports_to_json(cfg, {r}, true))["laws"][0]["elapsed_seconds"] == 1.5);

  const auto wj = nlohmann::json::parse(witness_to_json("gkz", w));
  CHECK(matrix_from_json(wj["weight"].dump()) == w.weight);
}

TEST_CASE("manifest json") {
  RunManifest m;
  m.command = "laws";
  m.arguments = {"laws", "--seed", "7"};
  m.tolerance_overrides = {{"residual_tol", 1e-8}};
  m.seed = 7;
  m.version = kVersion;
  m.timestamp = utc_timestamp();
  const auto doc = nlohmann::json::parse(manifest_to_json(m));
  CHECK(doc["command"] == "laws");
  CHECK(doc["arguments"].size() == 3);
  CHECK(doc["tolerance_overrides"]["residual_tol"] == 1e-8);
  CHECK(doc["seed"] == 7);
  CHECK(doc["timestamp"].get<std::string>().size() == 20);
}

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}
