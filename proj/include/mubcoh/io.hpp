#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "mubcoh/coherence.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/surface.hpp"
#include "mubcoh/types.hpp"
#include "mubcoh/verify.hpp"

namespace mubcoh {

using Json = nlohmann::json;

/// Shared matrix file format: {"dim": d, "entries": [[[re, im] x d] x d]}
/// with row-major rows. Doubles survive a write/read round trip exactly.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Basis file format: {"dim": d, "label": text, "kets": [[[re, im] x d] x d]}
/// where kets[j] is the j-th ket (column j of the ket matrix).
Json basis_to_json(const OrthonormalBasis& b);
OrthonormalBasis basis_from_json(const Json& j, Real tol = kStateTol, bool renormalize = false);

Json report_to_json(const VerificationReport& r);

/// Coherence result; pass has_entropy = false to emit relative_entropy as
/// null (states that are not positive semidefinite have no entropy).
Json coherence_to_json(const std::string& basis_label, Real l1, bool has_entropy,
                       Real relative_entropy);

/// Parses a JSON file; all failures (missing file, bad syntax) become InputError.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// CSV with header "c1,c2,value"; the first coordinate varies fastest.
void write_heightmap_csv(std::ostream& out, const HeightMap& h);

/// CSV with header "c1,c2,c3,value"; the first coordinate varies fastest.
void write_field_csv(std::ostream& out, const ScalarField3& f);

/// Wavefront-style text mesh: "v x y z" lines then "f i j k" lines (1-based).
void write_mesh_obj(std::ostream& out, const TriangleMesh& mesh);

}  // namespace mubcoh
