#include "proxfield/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "mc_tables.hpp"

namespace proxfield {
namespace {

constexpr std::array<std::array<std::size_t, 3>, 8> kCornerOffsets = {{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
}};

constexpr std::array<std::array<int, 2>, 12> kEdgeCorners = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 0},
    {4, 5}, {5, 6}, {6, 7}, {7, 4},
    {0, 4}, {1, 5}, {2, 6}, {3, 7},
}};

std::uint64_t edge_key(std::uint64_t a, std::uint64_t b, std::uint64_t corner_count) {
  if (a > b) std::swap(a, b);
  return a * corner_count + b;
}

// Closes each boundary loop with a triangle fan rooted at the loop's
// lowest-index vertex. Boundary edges appear in exactly one triangle; the fan
// traverses them in reverse so the cap's winding matches the surface.
void cap_boundary_loops(TriMesh& mesh) {
  std::unordered_map<std::uint64_t, int> undirected_count;
  undirected_count.reserve(mesh.triangles.size() * 3);
  const std::uint64_t n = mesh.vertices.size();
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      ++undirected_count[edge_key(tri[e], tri[(e + 1) % 3], n)];
    }
  }

  std::unordered_map<std::uint32_t, std::uint32_t> succ;  // reversed boundary edges
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const std::uint32_t u = tri[e], v = tri[(e + 1) % 3];
      if (undirected_count[edge_key(u, v, n)] == 1) succ[v] = u;
    }
  }
  if (succ.empty()) return;

  std::vector<bool> visited(mesh.vertices.size(), false);
  for (std::uint32_t start = 0; start < mesh.vertices.size(); ++start) {
    if (visited[start] || !succ.contains(start)) continue;
    std::vector<std::uint32_t> loop;
    std::uint32_t cur = start;
    bool closed = false;
    while (loop.size() <= mesh.vertices.size()) {
      loop.push_back(cur);
      visited[cur] = true;
      auto it = succ.find(cur);
      if (it == succ.end()) break;
      cur = it->second;
      if (cur == start) {
        closed = true;
        break;
      }
    }
    if (!closed || loop.size() < 3) continue;
    for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
      mesh.triangles.push_back({loop[0], loop[i], loop[i + 1]});
    }
  }
}

}  // namespace

TriMesh marching_cubes(const Field3D& field, double level, const MarchingCubesOptions& options) {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("marching_cubes: level must lie strictly inside (0,1)");
  }

  const GridSpec& spec = field.spec();
  const std::size_t nx = spec.nx(), ny = spec.ny(), nz = spec.nz();
  const std::uint64_t corner_count = static_cast<std::uint64_t>(nx) * ny * nz;

  TriMesh mesh;
  mesh.level = level;

  std::unordered_map<std::uint64_t, std::uint32_t> edge_vertex;

  std::array<std::uint64_t, 8> ids;
  std::array<double, 8> values;
  std::array<Vec3, 8> corners;
  std::array<std::uint32_t, 12> edge_to_vertex{};

  for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
    for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
      for (std::size_t iz = 0; iz + 1 < nz; ++iz) {
        unsigned cube = 0;
        for (int c = 0; c < 8; ++c) {
          const std::size_t cx = ix + kCornerOffsets[c][0];
          const std::size_t cy = iy + kCornerOffsets[c][1];
          const std::size_t cz = iz + kCornerOffsets[c][2];
          ids[c] = (static_cast<std::uint64_t>(cx) * ny + cy) * nz + cz;
          values[c] = field.at(cx, cy, cz);
          corners[c] = spec.point(cx, cy, cz);
          if (values[c] < level) cube |= 1u << c;
        }
        const std::uint16_t cut = detail::kEdgeTable[cube];
        if (cut == 0) continue;

        for (int e = 0; e < 12; ++e) {
          if (!(cut & (1u << e))) continue;
          const int ca = kEdgeCorners[e][0], cb = kEdgeCorners[e][1];
          const std::uint64_t key = edge_key(ids[ca], ids[cb], corner_count);
          auto it = edge_vertex.find(key);
          if (it == edge_vertex.end()) {
            // keep t strictly inside (0,1) so vertices on adjacent edges of
            // one cell can never coincide
            double t = (level - values[ca]) / (values[cb] - values[ca]);
            t = std::clamp(t, 1e-9, 1.0 - 1e-9);
            const Vec3 p = corners[ca] + (corners[cb] - corners[ca]) * t;
            it = edge_vertex.emplace(key, static_cast<std::uint32_t>(mesh.vertices.size())).first;
            mesh.vertices.push_back(p);
          }
          edge_to_vertex[e] = it->second;
        }

        const auto& row = detail::kTriTable[cube];
        for (int k = 0; row[k] >= 0; k += 3) {
          mesh.triangles.push_back({edge_to_vertex[row[k]],
                                    edge_to_vertex[row[k + 1]],
                                    edge_to_vertex[row[k + 2]]});
        }
      }
    }
  }

  if (options.cap_boundary && !mesh.triangles.empty()) cap_boundary_loops(mesh);
  return mesh;
}

bool is_watertight(const TriMesh& mesh) {
  if (mesh.triangles.empty()) return false;
  std::unordered_map<std::uint64_t, int> count;
  count.reserve(mesh.triangles.size() * 3);
  const std::uint64_t n = mesh.vertices.size();
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      ++count[edge_key(tri[e], tri[(e + 1) % 3], n)];
    }
  }
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

ResidualStats mesh_vertex_residuals(const TriMesh& mesh, const Scene& scene, double level) {
  ResidualStats stats;
  if (mesh.vertices.empty()) return stats;
  double sum = 0.0;
  for (const Vec3& v : mesh.vertices) {
    const double r = std::abs(scene.discomfort(v.x, v.y, v.z) - level);
    stats.max_abs = std::max(stats.max_abs, r);
    sum += r;
  }
  stats.vertex_count = mesh.vertices.size();
  stats.mean_abs = sum / static_cast<double>(stats.vertex_count);
  return stats;
}

}  // namespace proxfield
