// Zero-order Sugeno inference over the body regions: six single-antecedent
// rules whose weighted average turns height z into a continuous discomfort
// value f(z) in [0,1].
#ifndef PROXFIELD_FUZZY_Z_HPP_
#define PROXFIELD_FUZZY_Z_HPP_

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "proxfield/body_model.hpp"

namespace proxfield {

struct GaussianMf {
  double center = 0.0;  // meters
  double spread = 1.0;  // meters, > 0
};

struct SShapedMf {
  double foot = 0.0;      // output 0 at and below
  double shoulder = 1.0;  // output 1 at and above; foot < shoulder
};

using MembershipFunction = std::variant<GaussianMf, SShapedMf>;

/// exp(-(z-center)^2 / (2 spread^2)); throws for spread <= 0.
double gaussian_mf(double z, double center, double spread);

/// Smoothstep cubic: 0 below foot, 1 above shoulder, C1-continuous at both
/// ends. Throws unless foot < shoulder.
double s_shaped_mf(double z, double foot, double shoulder);

double eval(const MembershipFunction& mf, double z);

struct FuzzyRule {
  MembershipFunction antecedent;
  double consequent = 0.0;  // discomfort in [0,1]
};

struct ZModelOptions {
  // replace the top region's Gaussian with an S-shaped MF rising from the
  // head anchor to the top anchor, for a hard comfort zone above the head
  bool s_shaped_top = false;
  // hard zero cutoff; fuzzy tails can lift discomfort again far above the
  // head in hand-tuned configurations, this clamps that region to 0
  std::optional<double> zero_above;
  double underflow_epsilon = 1e-12;
};

/// Immutable rule set mapping z to discomfort. Construct either from a
/// RegionTable (one rule per region) or from an explicit rule list.
class ZDiscomfortModel {
 public:
  ZDiscomfortModel(const RegionTable& table, const ZModelOptions& options = {});
  explicit ZDiscomfortModel(std::vector<FuzzyRule> rules, const ZModelOptions& options = {});

  /// f(z): activation-weighted average of the rule consequents. When every
  /// activation underflows, falls back to the consequent of the rule whose
  /// center is nearest in spread-normalized distance. Throws for z < 0.
  double operator()(double z) const;

  std::span<const FuzzyRule> rules() const { return rules_; }
  const ZModelOptions& options() const { return options_; }

  /// Upper end of the z range worth searching for the maximum: every rule's
  /// activation is negligible beyond it.
  double scan_upper() const;

 private:
  std::vector<FuzzyRule> rules_;
  ZModelOptions options_;
};

inline double z_discomfort(const ZDiscomfortModel& model, double z) { return model(z); }

struct ZSample {
  double z = 0.0;
  double discomfort = 0.0;
};

/// Uniform inclusive sampling of f on [z_min, z_max]; the last sample sits at
/// the largest z_min + k*step <= z_max.
std::vector<ZSample> z_profile(const ZDiscomfortModel& model, double z_min, double z_max,
                               double step);

struct ZPeak {
  double z = 0.0;
  double value = 0.0;
};

/// Global maximizer of f over [0, scan_upper()]: 1 mm dense scan, then
/// golden-section refinement of the winning bracket to |dz| < 1e-6.
ZPeak max_z_discomfort(const ZDiscomfortModel& model);

}  // namespace proxfield

#endif  // PROXFIELD_FUZZY_Z_HPP_
