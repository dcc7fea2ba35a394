// Body-region segmentation: maps ISO/TS 15066 pressure limits to per-region
// discomfort consequents and anchors each region at a height relative to the
// person's total height.
#ifndef PROXFIELD_BODY_MODEL_HPP_
#define PROXFIELD_BODY_MODEL_HPP_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>

namespace proxfield {

enum class Region { Legs, Hips, Torso, Head, Ground, Top };

inline constexpr std::array<Region, 6> kAllRegions = {
    Region::Legs, Region::Hips, Region::Torso, Region::Head, Region::Ground, Region::Top};

std::string_view to_string(Region r);
std::optional<Region> region_from_string(std::string_view name);

/// Vertical extent of the comfort envelope above the head, in meters.
inline constexpr double kTopOffset = 0.75;

/// Reference pressure (N/cm^2) of the most sensitive region; the head row.
inline constexpr double kReferenceMpp = 65.0;

/// Discomfort as the inverse-pressure ratio reference_mpp / mpp, clamped to
/// [0,1]. Throws std::invalid_argument for non-positive inputs.
double discomfort_from_mpp(double mpp, double reference_mpp = kReferenceMpp);

/// Absolute anchor height in meters for a region of a person of height h:
/// body regions scale with h, ground is fixed at 0, top sits at h + 0.75.
double region_anchor_height(Region region, double height);

/// Per-region replacement values; unset fields keep their defaults.
struct RegionOverride {
  std::optional<double> discomfort;
  std::optional<double> sigma;
  std::optional<double> relative_height;
};

using RegionOverrides = std::map<Region, RegionOverride>;

struct ResolvedRegion {
  Region id = Region::Legs;
  double center = 0.0;      // absolute anchor, meters
  double sigma = 0.0;       // meters
  double discomfort = 0.0;  // dimensionless, in [0,1]
};

/// The six regions of one person resolved to absolute anchors. Immutable
/// after construction; all accessors are pure.
class RegionTable {
 public:
  double height() const { return height_; }

  /// Regions in fixed order: legs, hips, torso, head, ground, top.
  std::span<const ResolvedRegion, 6> regions() const { return regions_; }

  const ResolvedRegion& region(Region id) const;

 private:
  friend RegionTable build_region_table(double, const RegionOverrides&);
  double height_ = 0.0;
  std::array<ResolvedRegion, 6> regions_{};
};

/// Builds the table for a person of the given height. Overrides replace the
/// default discomfort, sigma, or relative height of single regions. Throws
/// std::invalid_argument when h <= 0 or an override breaks an invariant
/// (sigma <= 0, discomfort outside [0,1], anchors not strictly increasing).
RegionTable build_region_table(double height, const RegionOverrides& overrides = {});

}  // namespace proxfield

#endif  // PROXFIELD_BODY_MODEL_HPP_
