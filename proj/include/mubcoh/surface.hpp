#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mubcoh/types.hpp"

namespace mubcoh {

/// Grid coordinate i of an n-point uniform sampling of [-1, 1].
inline Real grid_coord(Index i, Index n) {
  return n < 2 ? -1.0 : -1.0 + 2.0 * static_cast<Real>(i) / static_cast<Real>(n - 1);
}

/// n x n scalar samples over [-1, 1]^2; the first coordinate varies fastest:
/// values[i + n*j] belongs to (grid_coord(i), grid_coord(j)).
struct HeightMap {
  Index n = 0;
  std::vector<Real> values;

  Real at(Index i, Index j) const { return values[static_cast<std::size_t>(i + n * j)]; }
};

/// n^3 scalar samples over [-1, 1]^3; values[i + n*(j + n*k)].
struct ScalarField3 {
  Index n = 0;
  std::vector<Real> values;

  Real at(Index i, Index j, Index k) const {
    return values[static_cast<std::size_t>(i + n * (j + n * k))];
  }
};

/// Indexed triangle soup; triangle entries are 0-based vertex indices.
struct TriangleMesh {
  std::vector<std::array<Real, 3>> vertices;
  std::vector<std::array<std::int32_t, 3>> triangles;
};

/// Coherence of a correlation-diagonal two-qubit state in the doubled-z
/// product basis over the (c1, c2) plane (the value is c3-independent).
/// Throws ParamOutOfRange unless n >= 2.
HeightMap pair_coherence_heightmap(Index n);

/// Sum of the three product-basis coherences over the component cube.
/// Values lie in [0, 3] with 0 only at the origin. Throws ParamOutOfRange
/// unless n >= 2.
ScalarField3 coherence_sum_field(Index n);

/// Marching-cubes triangulation of {value = level}. Vertices are welded
/// (shared across cells), coordinates stay inside [-1, 1]^3, and the cell
/// scan order is fixed, so output is deterministic. Throws EmptyLevelSet
/// when no cell straddles the level.
TriangleMesh isosurface(const ScalarField3& field, Real level);

/// Keeps only triangles whose three vertices are component triples of
/// positive-semidefinite states (within tol), compacting the vertex list.
TriangleMesh filter_physical(const TriangleMesh& mesh, Real tol = kStateTol);

}  // namespace mubcoh
