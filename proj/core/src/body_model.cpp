#include "proxfield/body_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace proxfield {
namespace {

struct RegionDefaults {
  Region id;
  double discomfort;
  double relative_height;  // fraction of h for body regions, unused for ground/top
  double sigma;
};

// Defaults per region. Discomfort consequents are the published three-decimal
// pressure ratios, not the full quotients, so tables built with no overrides
// are bit-stable.
constexpr std::array<RegionDefaults, 6> kDefaults = {{
    {Region::Legs, 0.500, 0.142, 0.3},
    {Region::Hips, 0.464, 0.431, 0.3},
    {Region::Torso, 0.591, 0.630, 0.3},
    {Region::Head, 1.000, 0.903, 0.25},
    {Region::Ground, 1.000, 0.0, 0.1},
    {Region::Top, 0.000, 0.0, 0.3},
}};

const RegionDefaults& defaults_for(Region id) {
  for (const auto& d : kDefaults) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("unknown region");
}

}  // namespace

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Legs: return "legs";
    case Region::Hips: return "hips";
    case Region::Torso: return "torso";
    case Region::Head: return "head";
    case Region::Ground: return "ground";
    case Region::Top: return "top";
  }
  return "unknown";
}

std::optional<Region> region_from_string(std::string_view name) {
  for (Region r : kAllRegions) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

double discomfort_from_mpp(double mpp, double reference_mpp) {
  if (!(mpp > 0.0)) throw std::invalid_argument("discomfort_from_mpp: mpp must be positive");
  if (!(reference_mpp > 0.0)) {
    throw std::invalid_argument("discomfort_from_mpp: reference_mpp must be positive");
  }
  // reference_mpp > mpp would yield a ratio above 1; clamp rather than fail.
  return std::clamp(reference_mpp / mpp, 0.0, 1.0);
}

double region_anchor_height(Region region, double height) {
  if (!(height > 0.0)) throw std::invalid_argument("region_anchor_height: height must be positive");
  switch (region) {
    case Region::Ground: return 0.0;
    case Region::Top: return height + kTopOffset;
    default: return defaults_for(region).relative_height * height;
  }
}

const ResolvedRegion& RegionTable::region(Region id) const {
  for (const auto& r : regions_) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("RegionTable::region: unknown region");
}

RegionTable build_region_table(double height, const RegionOverrides& overrides) {
  if (!(height > 0.0)) throw std::invalid_argument("build_region_table: height must be positive");

  RegionTable table;
  table.height_ = height;
  for (std::size_t i = 0; i < kDefaults.size(); ++i) {
    const RegionDefaults& d = kDefaults[i];
    ResolvedRegion r;
    r.id = d.id;
    r.sigma = d.sigma;
    r.discomfort = d.discomfort;

    double center;
    switch (d.id) {
      case Region::Ground: center = 0.0; break;
      case Region::Top: center = height + kTopOffset; break;
      default: center = d.relative_height * height; break;
    }

    if (auto it = overrides.find(d.id); it != overrides.end()) {
      const RegionOverride& o = it->second;
      if (o.discomfort) r.discomfort = *o.discomfort;
      if (o.sigma) r.sigma = *o.sigma;
      if (o.relative_height) {
        if (d.id == Region::Ground || d.id == Region::Top) {
          throw std::invalid_argument(
              "build_region_table: relative_height override only applies to body regions");
        }
        center = *o.relative_height * height;
      }
      if (!(r.sigma > 0.0)) {
        throw std::invalid_argument("build_region_table: sigma override must be positive");
      }
      if (r.discomfort < 0.0 || r.discomfort > 1.0) {
        throw std::invalid_argument("build_region_table: discomfort override outside [0,1]");
      }
    }

    r.center = center;
    table.regions_[i] = r;
  }

  // anchors must be strictly increasing from the ground up
  const std::array<Region, 6> order = {Region::Ground, Region::Legs, Region::Hips,
                                       Region::Torso, Region::Head, Region::Top};
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!(table.region(order[i - 1]).center < table.region(order[i]).center)) {
      throw std::invalid_argument("build_region_table: region anchors must be strictly increasing");
    }
  }
  return table;
}

}  // namespace proxfield
