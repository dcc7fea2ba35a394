#include "proxfield/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "proxfield/scene_io.hpp"

namespace proxfield {
namespace {

std::size_t corner_count(double lo, double hi, double res) {
  return static_cast<std::size_t>(std::floor((hi - lo) / res + 1e-9)) + 1;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
  if (const char* env = std::getenv("PROXFIELD_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return std::min(n, jobs);
}

// Runs fn(begin, end) over disjoint chunks of [0, n). Chunk boundaries do not
// depend on the worker count, and each chunk writes its own output range, so
// results are identical for any number of threads.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn fn) {
  const std::size_t workers = worker_count(n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([=] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::size_t GridSpec::nx() const { return corner_count(min.x, max.x, resolution); }
std::size_t GridSpec::ny() const { return corner_count(min.y, max.y, resolution); }
std::size_t GridSpec::nz() const { return corner_count(min.z, max.z, resolution); }

Vec3 GridSpec::point(std::size_t ix, std::size_t iy, std::size_t iz) const {
  return {min.x + static_cast<double>(ix) * resolution,
          min.y + static_cast<double>(iy) * resolution,
          min.z + static_cast<double>(iz) * resolution};
}

void GridSpec::validate() const {
  if (!(resolution > 0.0)) throw std::invalid_argument("GridSpec: resolution must be positive");
  if (!(min.x < max.x && min.y < max.y && min.z < max.z)) {
    throw std::invalid_argument("GridSpec: min must be below max on every axis");
  }
  if (nx() < 2 || ny() < 2 || nz() < 2) {
    throw std::invalid_argument("GridSpec: needs at least two samples per axis");
  }
}

Field3D::Field3D(const GridSpec& spec, std::vector<double> values, std::uint64_t scene_hash)
    : spec_(spec), values_(std::move(values)), scene_hash_(scene_hash) {
  spec_.validate();
  if (values_.size() != spec_.nx() * spec_.ny() * spec_.nz()) {
    throw std::invalid_argument("Field3D: value count does not match the grid");
  }
}

Field3D sample_grid(const Scene& scene, const GridSpec& spec) {
  spec.validate();
  if (spec.min.z < 0.0) throw std::invalid_argument("sample_grid: grid must not dip below z = 0");

  const std::size_t nx = spec.nx(), ny = spec.ny(), nz = spec.nz();
  std::vector<double> values(nx * ny * nz);
  parallel_chunks(nx, [&](std::size_t x_begin, std::size_t x_end) {
    for (std::size_t ix = x_begin; ix < x_end; ++ix) {
      for (std::size_t iy = 0; iy < ny; ++iy) {
        double* out = &values[(ix * ny + iy) * nz];
        for (std::size_t iz = 0; iz < nz; ++iz) {
          const Vec3 p = spec.point(ix, iy, iz);
          out[iz] = scene.discomfort(p.x, p.y, p.z);
        }
      }
    }
  });
  return Field3D(spec, std::move(values), scene_hash(scene));
}

std::string_view axis_name_a(Plane plane) {
  switch (plane) {
    case Plane::XZ: return "x";
    case Plane::YZ: return "y";
    case Plane::XY: return "x";
  }
  return "?";
}

std::string_view axis_name_b(Plane plane) {
  switch (plane) {
    case Plane::XZ: return "z";
    case Plane::YZ: return "z";
    case Plane::XY: return "y";
  }
  return "?";
}

std::size_t SliceSpec::na() const { return corner_count(a_min, a_max, resolution); }
std::size_t SliceSpec::nb() const { return corner_count(b_min, b_max, resolution); }

void SliceSpec::validate() const {
  if (!(resolution > 0.0)) throw std::invalid_argument("SliceSpec: resolution must be positive");
  if (!(a_min < a_max && b_min < b_max)) {
    throw std::invalid_argument("SliceSpec: window min must be below max");
  }
  if (na() < 2 || nb() < 2) {
    throw std::invalid_argument("SliceSpec: needs at least two samples per axis");
  }
  const bool vertical = plane == Plane::XZ || plane == Plane::YZ;
  if (vertical && b_min < 0.0) {
    throw std::invalid_argument("SliceSpec: z window must not dip below z = 0");
  }
  if (plane == Plane::XY && at < 0.0) {
    throw std::invalid_argument("SliceSpec: xy plane height must be non-negative");
  }
}

Field2D::Field2D(const SliceSpec& spec, std::vector<double> values, std::uint64_t scene_hash)
    : spec_(spec), values_(std::move(values)), scene_hash_(scene_hash) {
  spec_.validate();
  if (values_.size() != spec_.na() * spec_.nb()) {
    throw std::invalid_argument("Field2D: value count does not match the lattice");
  }
}

Field2D sample_slice(const Scene& scene, const SliceSpec& spec) {
  spec.validate();
  const std::size_t na = spec.na(), nb = spec.nb();
  std::vector<double> values(na * nb);
  parallel_chunks(na, [&](std::size_t a_begin, std::size_t a_end) {
    for (std::size_t ia = a_begin; ia < a_end; ++ia) {
      const double a = spec.a_min + static_cast<double>(ia) * spec.resolution;
      double* out = &values[ia * nb];
      for (std::size_t ib = 0; ib < nb; ++ib) {
        const double b = spec.b_min + static_cast<double>(ib) * spec.resolution;
        double x = 0.0, y = 0.0, z = 0.0;
        switch (spec.plane) {
          case Plane::XZ: x = a; z = b; y = spec.at; break;
          case Plane::YZ: y = a; z = b; x = spec.at; break;
          case Plane::XY: x = a; y = b; z = spec.at; break;
        }
        out[ib] = scene.discomfort(x, y, z);
      }
    }
  });
  return Field2D(spec, std::move(values), scene_hash(scene));
}

}  // namespace proxfield
