#include "proxfield/export.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace proxfield {
namespace {

// Writes the finished payload next to the target and renames it into place.
void atomic_write(const std::filesystem::path& path, const std::string& payload) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place: " + path.string());
  }
}

std::string format_fixed(double value, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void export_profile_csv(std::span<const ZSample> profile, const std::filesystem::path& path) {
  if (profile.empty()) throw std::invalid_argument("export_profile_csv: profile is empty");
  std::string out = "z,f\n";
  for (const ZSample& s : profile) {
    out += format_number(s.z);
    out += ',';
    out += format_number(s.discomfort);
    out += '\n';
  }
  atomic_write(path, out);
}

void export_slice_csv(const Field2D& field, const std::filesystem::path& path) {
  if (field.values().empty()) throw std::invalid_argument("export_slice_csv: field is empty");
  const SliceSpec& spec = field.spec();
  std::string out;
  out += axis_name_a(spec.plane);
  out += ',';
  out += axis_name_b(spec.plane);
  out += ",value\n";
  for (std::size_t ia = 0; ia < spec.na(); ++ia) {
    const double a = spec.a_min + static_cast<double>(ia) * spec.resolution;
    for (std::size_t ib = 0; ib < spec.nb(); ++ib) {
      const double b = spec.b_min + static_cast<double>(ib) * spec.resolution;
      out += format_number(a);
      out += ',';
      out += format_number(b);
      out += ',';
      out += format_number(field.at(ia, ib));
      out += '\n';
    }
  }
  atomic_write(path, out);
}

void export_mesh_obj(const TriMesh& mesh, const std::filesystem::path& path) {
  std::string out;
  out += "# proxfield isosurface, level " + format_number(mesh.level) + "\n";
  out += "# " + std::to_string(mesh.vertices.size()) + " vertices, " +
         std::to_string(mesh.triangles.size()) + " triangles\n";
  for (const Vec3& v : mesh.vertices) {
    out += "v " + format_fixed(v.x, 6) + ' ' + format_fixed(v.y, 6) + ' ' + format_fixed(v.z, 6) + '\n';
  }
  for (const auto& tri : mesh.triangles) {
    out += "f " + std::to_string(tri[0] + 1) + ' ' + std::to_string(tri[1] + 1) + ' ' +
           std::to_string(tri[2] + 1) + '\n';
  }
  atomic_write(path, out);
}

void export_grid_vtk(const Field3D& field, const std::filesystem::path& path) {
  const GridSpec& spec = field.spec();
  const std::size_t nx = spec.nx(), ny = spec.ny(), nz = spec.nz();

  std::ostringstream out;
  out << "# vtk DataFile Version 3.0\n";
  out << "proxfield discomfort field (scene " << std::hex << field.scene_hash() << std::dec << ")\n";
  out << "ASCII\n";
  out << "DATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << nx << ' ' << ny << ' ' << nz << '\n';
  out << "ORIGIN " << format_number(spec.min.x) << ' ' << format_number(spec.min.y) << ' '
      << format_number(spec.min.z) << '\n';
  out << "SPACING " << format_number(spec.resolution) << ' ' << format_number(spec.resolution)
      << ' ' << format_number(spec.resolution) << '\n';
  out << "POINT_DATA " << nx * ny * nz << '\n';
  out << "SCALARS discomfort double 1\n";
  out << "LOOKUP_TABLE default\n";
  for (std::size_t iz = 0; iz < nz; ++iz) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        out << format_number(field.at(ix, iy, iz)) << '\n';
      }
    }
  }
  atomic_write(path, out.str());
}

void export_heatmap_pgm(const Field2D& field, double lo, double hi,
                        const std::filesystem::path& path) {
  if (!(lo < hi)) throw std::invalid_argument("export_heatmap_pgm: lo must be below hi");
  const SliceSpec& spec = field.spec();
  const std::size_t width = spec.na(), height = spec.nb();

  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
  out.reserve(out.size() + width * height * 2);
  for (std::size_t row = 0; row < height; ++row) {
    const std::size_t ib = row;  // second axis increases downward
    for (std::size_t ia = 0; ia < width; ++ia) {
      double t = (field.at(ia, ib) - lo) / (hi - lo);
      t = std::clamp(t, 0.0, 1.0);
      const auto sample = static_cast<std::uint16_t>(t * 65535.0 + 0.5);
      out += static_cast<char>(sample >> 8);  // big-endian per PGM for maxval > 255
      out += static_cast<char>(sample & 0xff);
    }
  }
  atomic_write(path, out);
}

void export_path_csv(const Path& path_data, const std::filesystem::path& path) {
  std::string out = "x,y,z\n";
  for (const Vec3& w : path_data.waypoints) {
    out += format_number(w.x);
    out += ',';
    out += format_number(w.y);
    out += ',';
    out += format_number(w.z);
    out += '\n';
  }
  atomic_write(path, out);
}

}  // namespace proxfield
