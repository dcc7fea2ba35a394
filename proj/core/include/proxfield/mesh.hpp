// Isosurface extraction from sampled discomfort fields: standard marching
// cubes with linear edge interpolation, boundary-loop capping so level sets
// clipped by the grid still close, and vertex residual checks against the
// analytic field.
#ifndef PROXFIELD_MESH_HPP_
#define PROXFIELD_MESH_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "proxfield/field.hpp"
#include "proxfield/grid.hpp"
#include "proxfield/vec.hpp"

namespace proxfield {

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  double level = 0.0;

  bool empty() const { return triangles.empty(); }
};

struct MarchingCubesOptions {
  // close level-set openings at the grid boundary by fan-triangulating each
  // boundary loop; adds no vertices, so residual checks stay meaningful
  bool cap_boundary = true;
};

/// Extracts the level set of a sampled field as a triangle mesh. Triangles
/// are wound so normals point toward lower field values (outward for a
/// discomfort blob). Throws unless 0 < level < 1. Returns an empty mesh when
/// no cell straddles the level.
TriMesh marching_cubes(const Field3D& field, double level, const MarchingCubesOptions& options = {});

/// True when every edge is shared by exactly two triangles.
bool is_watertight(const TriMesh& mesh);

struct ResidualStats {
  std::size_t vertex_count = 0;
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

/// Re-evaluates scene discomfort at every mesh vertex and reports |S - level|
/// statistics; zero statistics for an empty mesh.
ResidualStats mesh_vertex_residuals(const TriMesh& mesh, const Scene& scene, double level);

}  // namespace proxfield

#endif  // PROXFIELD_MESH_HPP_
