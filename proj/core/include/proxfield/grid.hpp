// Dense lattice sampling of scene discomfort on axis-aligned 3D grids and 2D
// slices. Sampling is at cell corners and deterministic across worker counts.
#ifndef PROXFIELD_GRID_HPP_
#define PROXFIELD_GRID_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "proxfield/field.hpp"
#include "proxfield/vec.hpp"

namespace proxfield {

struct GridSpec {
  Vec3 min{};
  Vec3 max{};
  double resolution = 0.05;  // meters per cell, uniform

  std::size_t nx() const;  // corner counts per axis
  std::size_t ny() const;
  std::size_t nz() const;
  Vec3 point(std::size_t ix, std::size_t iy, std::size_t iz) const;

  /// Throws std::invalid_argument unless min < max per axis, resolution > 0,
  /// and each axis spans at least two corners.
  void validate() const;
};

/// Dense scalar samples over a GridSpec. Storage is x-major: index
/// (ix * ny + iy) * nz + iz, so z varies fastest.
class Field3D {
 public:
  Field3D(const GridSpec& spec, std::vector<double> values, std::uint64_t scene_hash);

  const GridSpec& spec() const { return spec_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return values_[(ix * spec_.ny() + iy) * spec_.nz() + iz];
  }
  std::uint64_t scene_hash() const { return scene_hash_; }

 private:
  GridSpec spec_;
  std::vector<double> values_;
  std::uint64_t scene_hash_ = 0;
};

/// Samples scene discomfort at every cell corner. Work is partitioned across
/// hardware threads (capped by PROXFIELD_THREADS); partitioning never changes
/// the output. Throws when the grid dips below z = 0.
Field3D sample_grid(const Scene& scene, const GridSpec& spec);

enum class Plane { XZ, YZ, XY };

std::string_view axis_name_a(Plane plane);  // first in-plane axis: x, y, x
std::string_view axis_name_b(Plane plane);  // second in-plane axis: z, z, y

struct SliceSpec {
  Plane plane = Plane::XZ;
  double at = 0.0;  // fixed coordinate of the off-plane axis
  double a_min = -3.0;
  double a_max = 3.0;
  double b_min = 0.0;
  double b_max = 3.0;
  double resolution = 0.05;

  std::size_t na() const;
  std::size_t nb() const;
  void validate() const;
};

/// 2D lattice of scene discomfort on an axis-aligned plane. Storage is
/// a-major: index ia * nb + ib.
class Field2D {
 public:
  Field2D(const SliceSpec& spec, std::vector<double> values, std::uint64_t scene_hash);

  const SliceSpec& spec() const { return spec_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t ia, std::size_t ib) const { return values_[ia * spec_.nb() + ib]; }
  std::uint64_t scene_hash() const { return scene_hash_; }

 private:
  SliceSpec spec_;
  std::vector<double> values_;
  std::uint64_t scene_hash_ = 0;
};

Field2D sample_slice(const Scene& scene, const SliceSpec& spec);

}  // namespace proxfield

#endif  // PROXFIELD_GRID_HPP_
