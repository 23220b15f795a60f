#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mubcoh/errors.hpp"
#include "mubcoh/io.hpp"
#include "mubcoh/linalg.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/rng.hpp"
#include "mubcoh/states.hpp"
#include "mubcoh/surface.hpp"
#include "mubcoh/verify.hpp"
#include "test_support.hpp"

using namespace mubcoh;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mubcoh_io_test_" + name);
}

}  // namespace

TEST_CASE("matrix JSON round trip is exact") {
  SampleRng rng(400);
  Matrix m(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  m(0, 0) = Complex(1.0 / 3.0, -2.0 / 7.0);  // awkward decimals on purpose

  Json j = matrix_to_json(m);
  CHECK(j["dim"] == 3);
  REQUIRE(j["entries"].size() == 3);
  REQUIRE(j["entries"][0].size() == 3);
  CHECK(j["entries"][0][0][0].get<Real>() == 1.0 / 3.0);

  Matrix back = matrix_from_json(j);
  CHECK(max_abs_diff(back, m) == 0.0);

  // Through an actual file, including the text parse.
  const auto path = temp_file("matrix.json");
  write_json_file(path, j);
  Matrix from_file = matrix_from_json(read_json_file(path));
  CHECK(max_abs_diff(from_file, m) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("matrix JSON rejects malformed input") {
  CHECK_THROWS_AS((void)matrix_from_json(Json{{"entries", Json::array()}}), InputError);
  CHECK_THROWS_AS((void)matrix_from_json(Json{{"dim", 0}, {"entries", Json::array()}}),
                  InputError);
  CHECK_THROWS_AS((void)matrix_from_json(Json{{"dim", 99}, {"entries", Json::array()}}),
                  InputError);

  Json wrong_rows = Json{{"dim", 2}, {"entries", Json::array({Json::array()})}};
  CHECK_THROWS_AS((void)matrix_from_json(wrong_rows), InputError);

  Json bad_cell = matrix_to_json(Matrix::Identity(2, 2));
  bad_cell["entries"][0][0] = Json::array({1.0});  // not an [re, im] pair
  CHECK_THROWS_AS((void)matrix_from_json(bad_cell), InputError);

  Json non_finite = matrix_to_json(Matrix::Identity(2, 2));
  non_finite["entries"][0][0][0] = std::numeric_limits<Real>::infinity();
  CHECK_THROWS_AS((void)matrix_from_json(non_finite), InputError);

  Json text_cell = matrix_to_json(Matrix::Identity(2, 2));
  text_cell["entries"][0][0][0] = "one";
  CHECK_THROWS_AS((void)matrix_from_json(text_cell), InputError);
}

TEST_CASE("basis JSON round trip preserves kets and label") {
  const MubSet d3 = dim3_mubs();
  for (const OrthonormalBasis& b : d3.bases) {
    Json j = basis_to_json(b);
    CHECK(j["dim"] == 3);
    CHECK(j["label"] == b.label);
    OrthonormalBasis back = basis_from_json(j);
    CHECK(back.label == b.label);
    CHECK(max_abs_diff(back.kets, b.kets) == 0.0);
  }

  // kets[j] is column j: a swapped-column file parses to swapped columns.
  Json j;
  j["dim"] = 2;
  j["label"] = "swapped";
  j["kets"] = Json::array({Json::array({Json::array({0.0, 0.0}), Json::array({1.0, 0.0})}),
                           Json::array({Json::array({1.0, 0.0}), Json::array({0.0, 0.0})})});
  OrthonormalBasis swapped = basis_from_json(j);
  CHECK(swapped.kets(1, 0) == Complex(1.0, 0.0));
  CHECK(swapped.kets(0, 1) == Complex(1.0, 0.0));
  CHECK(swapped.kets(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("basis JSON validates orthonormality with optional rescue") {
  Json j = basis_to_json(pauli_mubs().bases[1]);
  for (auto& ket : j["kets"])
    for (auto& cell : ket) {
      cell[0] = cell[0].get<Real>() * 2.0;
      cell[1] = cell[1].get<Real>() * 2.0;
    }
  CHECK_THROWS_AS((void)basis_from_json(j), InvalidBasis);
  OrthonormalBasis rescued = basis_from_json(j, kStateTol, true);
  CHECK(max_abs_diff(rescued.kets, pauli_mubs().bases[1].kets) <= 1e-15);

  CHECK_THROWS_AS((void)basis_from_json(Json{{"dim", 2}, {"label", "x"}}), InputError);
}

TEST_CASE("verification report serialization") {
  VerificationReport r;
  r.claim_id = "qubit-bound";
  r.samples = 10000;
  r.seed = 42;
  r.max_deviation = 3.25e-16;
  r.tolerance = 1e-12;
  r.passed = true;
  r.details = "sweep";

  Json j = report_to_json(r);
  CHECK(j["claim_id"] == "qubit-bound");
  CHECK(j["samples"] == 10000);
  CHECK(j["seed"] == 42);
  CHECK(j["max_deviation"].get<Real>() == 3.25e-16);
  CHECK(j["tolerance"].get<Real>() == 1e-12);
  CHECK(j["passed"] == true);
  CHECK(j["details"] == "sweep");
}

TEST_CASE("coherence serialization uses null for a missing entropy") {
  Json with = coherence_to_json("x", 0.8, true, 0.25);
  CHECK(with["basis"] == "x");
  CHECK(with["l1"].get<Real>() == 0.8);
  CHECK(with["relative_entropy"].get<Real>() == 0.25);

  Json without = coherence_to_json("x", 0.8, false, 0.0);
  CHECK(without["relative_entropy"].is_null());
}

TEST_CASE("JSON file errors become input errors") {
  CHECK_THROWS_AS((void)read_json_file(temp_file("does_not_exist.json")), InputError);

  const auto path = temp_file("broken.json");
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK_THROWS_AS((void)read_json_file(path), InputError);
  std::filesystem::remove(path);
}

TEST_CASE("heightmap CSV layout") {
  HeightMap h = pair_coherence_heightmap(2);
  std::ostringstream out;
  write_heightmap_csv(out, h);
  std::istringstream in(out.str());
  std::string line;

  REQUIRE(std::getline(in, line));
  CHECK(line == "c1,c2,value");
  REQUIRE(std::getline(in, line));
  CHECK(line == "-1,-1,1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "1,-1,1");  // first coordinate varies fastest
  REQUIRE(std::getline(in, line));
  CHECK(line == "-1,1,1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "1,1,1");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("field CSV layout") {
  ScalarField3 f = coherence_sum_field(2);
  std::ostringstream out;
  write_field_csv(out, f);
  std::istringstream in(out.str());
  std::string line;

  REQUIRE(std::getline(in, line));
  CHECK(line == "c1,c2,c3,value");
  REQUIRE(std::getline(in, line));
  CHECK(line == "-1,-1,-1,3");
  REQUIRE(std::getline(in, line));
  CHECK(line == "1,-1,-1,3");
  int rows = 2;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
}

TEST_CASE("CSV doubles carry full precision") {
  HeightMap h;
  h.n = 2;
  h.values = {1.0 / 3.0, 0.1, 2.0 / 7.0, 1e-300};
  std::ostringstream out;
  write_heightmap_csv(out, h);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);
  const std::string value = line.substr(line.rfind(',') + 1);
  CHECK(std::stod(value) == 1.0 / 3.0);
}

TEST_CASE("mesh OBJ layout is one-based") {
  TriangleMesh mesh;
  mesh.vertices = {{0.0, 0.25, -1.0}, {0.5, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  mesh.triangles = {{0, 1, 2}};
  std::ostringstream out;
  write_mesh_obj(out, mesh);
  std::istringstream in(out.str());
  std::string line;

  REQUIRE(std::getline(in, line));
  CHECK(line == "v 0 0.25 -1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "v 0.5 0 0");
  REQUIRE(std::getline(in, line));
  CHECK(line == "v 0 1 0");
  REQUIRE(std::getline(in, line));
  CHECK(line == "f 1 2 3");
  CHECK_FALSE(std::getline(in, line));
}
