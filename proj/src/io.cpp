#include "mubcoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "mubcoh/errors.hpp"

namespace mubcoh {

namespace {

std::string fmt17(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Real finite_number(const Json& j, const char* where) {
  if (!j.is_number()) throw InputError(std::string(where) + ": expected a number");
  const Real v = j.get<Real>();
  if (!std::isfinite(v)) throw InputError(std::string(where) + ": non-finite value");
  return v;
}

Complex cell_to_complex(const Json& cell, const char* where) {
  if (!cell.is_array() || cell.size() != 2)
    throw InputError(std::string(where) + ": expected an [re, im] pair");
  return Complex(finite_number(cell[0], where), finite_number(cell[1], where));
}

Json complex_to_cell(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Index checked_dim(const Json& j, const char* what) {
  // Accept either integer storage class; nlohmann keeps signed and unsigned
  // numbers distinct.
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError(std::string(what) + ": missing or invalid \"dim\"");
  const auto d = j["dim"].get<std::int64_t>();
  if (d < 1 || d > 16) throw InputError(std::string(what) + ": \"dim\" must be in 1..16");
  return static_cast<Index>(d);
}

Matrix grid_to_matrix(const Json& rows, Index d, const char* what, bool rows_are_columns) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d))
    throw InputError(std::string(what) + ": expected " + std::to_string(d) + " rows");
  Matrix m(d, d);
  for (Index a = 0; a < d; ++a) {
    const Json& row = rows[static_cast<std::size_t>(a)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
      throw InputError(std::string(what) + ": row " + std::to_string(a) + " has wrong length");
    for (Index b = 0; b < d; ++b) {
      const Complex c = cell_to_complex(row[static_cast<std::size_t>(b)], what);
      if (rows_are_columns)
        m(b, a) = c;
      else
        m(a, b) = c;
    }
  }
  return m;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_cell(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const Index d = checked_dim(j, "matrix");
  if (!j.contains("entries")) throw InputError("matrix: missing \"entries\"");
  return grid_to_matrix(j["entries"], d, "matrix", false);
}

Json basis_to_json(const OrthonormalBasis& b) {
  Json kets = Json::array();
  for (Index j = 0; j < b.dim(); ++j) {
    Json ket = Json::array();
    for (Index i = 0; i < b.dim(); ++i) ket.push_back(complex_to_cell(b.kets(i, j)));
    kets.push_back(std::move(ket));
  }
  return Json{{"dim", b.dim()}, {"label", b.label}, {"kets", std::move(kets)}};
}

OrthonormalBasis basis_from_json(const Json& j, Real tol, bool renormalize) {
  const Index d = checked_dim(j, "basis");
  if (!j.contains("label") || !j["label"].is_string())
    throw InputError("basis: missing or invalid \"label\"");
  if (!j.contains("kets")) throw InputError("basis: missing \"kets\"");
  Matrix kets = grid_to_matrix(j["kets"], d, "basis", true);
  return make_basis(j["label"].get<std::string>(), std::move(kets), tol, renormalize);
}

Json report_to_json(const VerificationReport& r) {
  return Json{{"claim_id", r.claim_id},   {"samples", r.samples},
              {"seed", r.seed},           {"max_deviation", r.max_deviation},
              {"tolerance", r.tolerance}, {"passed", r.passed},
              {"details", r.details}};
}

Json coherence_to_json(const std::string& basis_label, Real l1, bool has_entropy,
                       Real relative_entropy) {
  Json j{{"basis", basis_label}, {"l1", l1}};
  if (has_entropy)
    j["relative_entropy"] = relative_entropy;
  else
    j["relative_entropy"] = nullptr;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw InputError("write failed: " + path.string());
}

void write_heightmap_csv(std::ostream& out, const HeightMap& h) {
  out << "c1,c2,value\n";
  for (Index j = 0; j < h.n; ++j)
    for (Index i = 0; i < h.n; ++i)
      out << fmt17(grid_coord(i, h.n)) << ',' << fmt17(grid_coord(j, h.n)) << ','
          << fmt17(h.at(i, j)) << '\n';
}

void write_field_csv(std::ostream& out, const ScalarField3& f) {
  out << "c1,c2,c3,value\n";
  for (Index k = 0; k < f.n; ++k)
    for (Index j = 0; j < f.n; ++j)
      for (Index i = 0; i < f.n; ++i)
        out << fmt17(grid_coord(i, f.n)) << ',' << fmt17(grid_coord(j, f.n)) << ','
            << fmt17(grid_coord(k, f.n)) << ',' << fmt17(f.at(i, j, k)) << '\n';
}

void write_mesh_obj(std::ostream& out, const TriangleMesh& mesh) {
  for (const auto& v : mesh.vertices)
    out << "v " << fmt17(v[0]) << ' ' << fmt17(v[1]) << ' ' << fmt17(v[2]) << '\n';
  for (const auto& t : mesh.triangles)
    out << "f " << (t[0] + 1) << ' ' << (t[1] + 1) << ' ' << (t[2] + 1) << '\n';
}

}  // namespace mubcoh
