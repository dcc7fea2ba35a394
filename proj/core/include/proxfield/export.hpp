// Deterministic file exporters. Every writer produces byte-identical output
// for identical inputs and writes atomically (temp file + rename), so a
// failed export never leaves a partial file behind.
#ifndef PROXFIELD_EXPORT_HPP_
#define PROXFIELD_EXPORT_HPP_

#include <filesystem>
#include <span>
#include <string>

#include "proxfield/fuzzy_z.hpp"
#include "proxfield/grid.hpp"
#include "proxfield/mesh.hpp"
#include "proxfield/planner.hpp"

namespace proxfield {

/// Locale-independent decimal text with 9 significant digits.
std::string format_number(double value);

/// CSV with header "z,f", one row per sample, LF line endings.
void export_profile_csv(std::span<const ZSample> profile, const std::filesystem::path& path);

/// CSV with header "<a>,<b>,value" naming the plane axes; rows iterate the
/// first axis slowly.
void export_slice_csv(const Field2D& field, const std::filesystem::path& path);

/// Wavefront OBJ: "v x y z" lines with 6 decimals, then 1-based "f i j k".
void export_mesh_obj(const TriMesh& mesh, const std::filesystem::path& path);

/// VTK legacy ASCII STRUCTURED_POINTS with one scalar array "discomfort",
/// point data in x-fastest order.
void export_grid_vtk(const Field3D& field, const std::filesystem::path& path);

/// Binary 16-bit PGM (P5, big-endian samples): [lo, hi] maps linearly onto
/// [0, 65535], clamped; rows follow the second axis top to bottom. Throws
/// unless lo < hi.
void export_heatmap_pgm(const Field2D& field, double lo, double hi,
                        const std::filesystem::path& path);

/// CSV with header "x,y,z", one waypoint per row.
void export_path_csv(const Path& path_data, const std::filesystem::path& path);

}  // namespace proxfield

#endif  // PROXFIELD_EXPORT_HPP_
