#include "mubcoh/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "mubcoh/coherence.hpp"
#include "mubcoh/errors.hpp"
#include "mubcoh/states.hpp"

namespace mubcoh {

namespace {

#include "mc_tables.inc"

// Cell-corner offsets matching the table convention (corner c = bit c).
constexpr int kDx[8] = {0, 1, 1, 0, 0, 1, 1, 0};
constexpr int kDy[8] = {0, 0, 1, 1, 0, 0, 1, 1};
constexpr int kDz[8] = {0, 0, 0, 0, 1, 1, 1, 1};

// Corner pair of each of the 12 cell edges.
constexpr int kEdgeA[12] = {0, 1, 2, 3, 4, 5, 6, 7, 0, 1, 2, 3};
constexpr int kEdgeB[12] = {1, 2, 3, 0, 5, 6, 7, 4, 4, 5, 6, 7};

}  // namespace

HeightMap pair_coherence_heightmap(Index n) {
  if (n < 2) throw ParamOutOfRange("heightmap resolution must be at least 2");
  HeightMap h;
  h.n = n;
  h.values.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      h.values[static_cast<std::size_t>(i + n * j)] = bell_closed_form(
          CorrelationTriple{grid_coord(i, n), grid_coord(j, n), 0.0}, PairBasis::ZZ);
  return h;
}

ScalarField3 coherence_sum_field(Index n) {
  if (n < 2) throw ParamOutOfRange("field resolution must be at least 2");
  ScalarField3 f;
  f.n = n;
  f.values.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                  static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k)
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        f.values[static_cast<std::size_t>(i + n * (j + n * k))] =
            bell_sum(CorrelationTriple{grid_coord(i, n), grid_coord(j, n), grid_coord(k, n)});
  return f;
}

TriangleMesh isosurface(const ScalarField3& field, Real level) {
  const Index n = field.n;
  if (n < 2) throw ParamOutOfRange("field resolution must be at least 2");

  TriangleMesh mesh;
  // Welds vertices: one id per crossed grid edge, keyed by the edge's base
  // grid point and axis.
  std::unordered_map<std::uint64_t, std::int32_t> edge_vertex;

  const auto corner_index = [n](Index i, Index j, Index k) {
    return static_cast<std::uint64_t>(i + n * (j + n * k));
  };

  const auto vertex_on_edge = [&](Index ai, Index aj, Index ak, Index bi, Index bj, Index bk,
                                  Real va, Real vb) {
    int axis = 0;
    if (bj != aj)
      axis = 1;
    else if (bk != ak)
      axis = 2;
    const std::uint64_t key = 3 * corner_index(ai, aj, ak) + static_cast<std::uint64_t>(axis);
    const auto found = edge_vertex.find(key);
    if (found != edge_vertex.end()) return found->second;
    Real t = (level - va) / (vb - va);
    t = std::clamp(t, 0.0, 1.0);
    const std::array<Real, 3> pa{grid_coord(ai, n), grid_coord(aj, n), grid_coord(ak, n)};
    const std::array<Real, 3> pb{grid_coord(bi, n), grid_coord(bj, n), grid_coord(bk, n)};
    const std::int32_t id = static_cast<std::int32_t>(mesh.vertices.size());
    mesh.vertices.push_back({pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]),
                             pa[2] + t * (pb[2] - pa[2])});
    edge_vertex.emplace(key, id);
    return id;
  };

  for (Index k = 0; k + 1 < n; ++k)
    for (Index j = 0; j + 1 < n; ++j)
      for (Index i = 0; i + 1 < n; ++i) {
        Real value[8];
        unsigned cube = 0;
        for (int c = 0; c < 8; ++c) {
          value[c] = field.at(i + kDx[c], j + kDy[c], k + kDz[c]);
          if (value[c] < level) cube |= 1u << c;
        }
        if (kEdgeTable[cube] == 0) continue;

        std::int32_t on_edge[12];
        for (int e = 0; e < 12; ++e) {
          if (!(kEdgeTable[cube] & (1u << e))) continue;
          const int a = kEdgeA[e];
          const int b = kEdgeB[e];
          // The base corner of the global edge key is the one with the
          // smaller grid coordinate along the edge axis.
          const bool forward = (kDx[a] + kDy[a] + kDz[a]) <= (kDx[b] + kDy[b] + kDz[b]);
          const int lo = forward ? a : b;
          const int hi = forward ? b : a;
          on_edge[e] = vertex_on_edge(i + kDx[lo], j + kDy[lo], k + kDz[lo], i + kDx[hi],
                                      j + kDy[hi], k + kDz[hi], value[lo], value[hi]);
        }

        const std::int8_t* tri = kTriTable[cube];
        for (int t = 0; tri[t] != -1; t += 3)
          mesh.triangles.push_back({on_edge[tri[t]], on_edge[tri[t + 1]], on_edge[tri[t + 2]]});
      }

  if (mesh.triangles.empty()) throw EmptyLevelSet(level);
  return mesh;
}

TriangleMesh filter_physical(const TriangleMesh& mesh, Real tol) {
  std::vector<char> keep_vertex(mesh.vertices.size());
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    const auto& p = mesh.vertices[v];
    const CorrelationTriple c{std::clamp(p[0], -1.0, 1.0), std::clamp(p[1], -1.0, 1.0),
                              std::clamp(p[2], -1.0, 1.0)};
    keep_vertex[v] = is_physical_triple(c, tol) ? 1 : 0;
  }

  TriangleMesh out;
  std::vector<std::int32_t> remap(mesh.vertices.size(), -1);
  for (const auto& t : mesh.triangles) {
    if (!keep_vertex[static_cast<std::size_t>(t[0])] ||
        !keep_vertex[static_cast<std::size_t>(t[1])] ||
        !keep_vertex[static_cast<std::size_t>(t[2])])
      continue;
    std::array<std::int32_t, 3> mapped{};
    for (int s = 0; s < 3; ++s) {
      std::int32_t& m = remap[static_cast<std::size_t>(t[s])];
      if (m < 0) {
        m = static_cast<std::int32_t>(out.vertices.size());
        out.vertices.push_back(mesh.vertices[static_cast<std::size_t>(t[s])]);
      }
      mapped[s] = m;
    }
    out.triangles.push_back(mapped);
  }
  return out;
}

}  // namespace mubcoh
