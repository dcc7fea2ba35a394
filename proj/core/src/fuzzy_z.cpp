#include "proxfield/fuzzy_z.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace proxfield {

double gaussian_mf(double z, double center, double spread) {
  if (!(spread > 0.0)) throw std::invalid_argument("gaussian_mf: spread must be positive");
  const double d = z - center;
  return std::exp(-(d * d) / (2.0 * spread * spread));
}

double s_shaped_mf(double z, double foot, double shoulder) {
  if (!(foot < shoulder)) throw std::invalid_argument("s_shaped_mf: foot must be below shoulder");
  if (z <= foot) return 0.0;
  if (z >= shoulder) return 1.0;
  const double t = (z - foot) / (shoulder - foot);
  return t * t * (3.0 - 2.0 * t);
}

double eval(const MembershipFunction& mf, double z) {
  if (const auto* g = std::get_if<GaussianMf>(&mf)) {
    return gaussian_mf(z, g->center, g->spread);
  }
  const auto& s = std::get<SShapedMf>(mf);
  return s_shaped_mf(z, s.foot, s.shoulder);
}

namespace {

void validate_rules(const std::vector<FuzzyRule>& rules, const ZModelOptions& options) {
  if (rules.empty()) throw std::invalid_argument("ZDiscomfortModel: needs at least one rule");
  if (!(options.underflow_epsilon > 0.0)) {
    throw std::invalid_argument("ZDiscomfortModel: underflow_epsilon must be positive");
  }
  for (const auto& rule : rules) {
    if (rule.consequent < 0.0 || rule.consequent > 1.0) {
      throw std::invalid_argument("ZDiscomfortModel: consequent outside [0,1]");
    }
    if (const auto* g = std::get_if<GaussianMf>(&rule.antecedent)) {
      if (!(g->spread > 0.0)) throw std::invalid_argument("ZDiscomfortModel: spread must be positive");
    } else {
      const auto& s = std::get<SShapedMf>(rule.antecedent);
      if (!(s.foot < s.shoulder)) {
        throw std::invalid_argument("ZDiscomfortModel: s-shaped foot must be below shoulder");
      }
    }
  }
}

// center and spread used for the underflow fallback's nearest-rule metric
std::pair<double, double> rule_locus(const FuzzyRule& rule) {
  if (const auto* g = std::get_if<GaussianMf>(&rule.antecedent)) return {g->center, g->spread};
  const auto& s = std::get<SShapedMf>(rule.antecedent);
  return {s.shoulder, 0.5 * (s.shoulder - s.foot)};
}

}  // namespace

ZDiscomfortModel::ZDiscomfortModel(const RegionTable& table, const ZModelOptions& options)
    : options_(options) {
  rules_.reserve(table.regions().size());
  for (const ResolvedRegion& region : table.regions()) {
    FuzzyRule rule;
    rule.consequent = region.discomfort;
    if (region.id == Region::Top && options.s_shaped_top) {
      rule.antecedent = SShapedMf{table.region(Region::Head).center, region.center};
    } else {
      rule.antecedent = GaussianMf{region.center, region.sigma};
    }
    rules_.push_back(rule);
  }
  validate_rules(rules_, options_);
}

ZDiscomfortModel::ZDiscomfortModel(std::vector<FuzzyRule> rules, const ZModelOptions& options)
    : rules_(std::move(rules)), options_(options) {
  validate_rules(rules_, options_);
}

double ZDiscomfortModel::operator()(double z) const {
  if (z < 0.0) throw std::invalid_argument("z_discomfort: z must be non-negative");
  if (options_.zero_above && z > *options_.zero_above) return 0.0;

  double weighted = 0.0;
  double total = 0.0;
  for (const FuzzyRule& rule : rules_) {
    const double w = eval(rule.antecedent, z);
    weighted += w * rule.consequent;
    total += w;
  }
  if (total < options_.underflow_epsilon) {
    // the quotient degenerates to 0/0 far outside all membership functions;
    // the continuous limit is the nearest rule's consequent
    double best = std::numeric_limits<double>::infinity();
    double consequent = rules_.front().consequent;
    for (const FuzzyRule& rule : rules_) {
      const auto [center, spread] = rule_locus(rule);
      const double d = std::abs(z - center) / spread;
      if (d < best) {
        best = d;
        consequent = rule.consequent;
      }
    }
    return consequent;
  }
  return weighted / total;
}

double ZDiscomfortModel::scan_upper() const {
  double upper = 0.0;
  for (const FuzzyRule& rule : rules_) {
    if (const auto* g = std::get_if<GaussianMf>(&rule.antecedent)) {
      upper = std::max(upper, g->center + 4.0 * g->spread);
    } else {
      upper = std::max(upper, std::get<SShapedMf>(rule.antecedent).shoulder);
    }
  }
  return upper;
}

std::vector<ZSample> z_profile(const ZDiscomfortModel& model, double z_min, double z_max,
                               double step) {
  if (z_min < 0.0) throw std::invalid_argument("z_profile: z_min must be non-negative");
  if (!(z_min < z_max)) throw std::invalid_argument("z_profile: z_min must be below z_max");
  if (!(step > 0.0)) throw std::invalid_argument("z_profile: step must be positive");

  const auto count = static_cast<std::size_t>(std::floor((z_max - z_min) / step + 1e-9)) + 1;
  std::vector<ZSample> samples;
  samples.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double z = z_min + static_cast<double>(k) * step;
    samples.push_back({z, model(z)});
  }
  return samples;
}

ZPeak max_z_discomfort(const ZDiscomfortModel& model) {
  const double upper = model.scan_upper();
  const double step = 1e-3;

  ZPeak best{0.0, model(0.0)};
  const auto count = static_cast<std::size_t>(std::ceil(upper / step)) + 1;
  for (std::size_t k = 1; k < count; ++k) {
    const double z = std::min(static_cast<double>(k) * step, upper);
    const double v = model(z);
    if (v > best.value) best = {z, v};
  }

  // golden-section refinement inside the winning bracket
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = std::max(0.0, best.z - step);
  double hi = std::min(upper, best.z + step);
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = model(c);
  double fd = model(d);
  while (hi - lo > 1e-6) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = model(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = model(d);
    }
  }
  const double z_refined = 0.5 * (lo + hi);
  const double f_refined = model(z_refined);
  if (f_refined > best.value) best = {z_refined, f_refined};
  return best;
}

}  // namespace proxfield
