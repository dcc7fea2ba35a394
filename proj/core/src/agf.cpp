#include "proxfield/agf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace proxfield {
namespace {

// wrap to (-pi, pi]
double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

}  // namespace

void validate(const AgfParams& params) {
  if (!(params.sigma_head > 0.0) || !(params.sigma_side > 0.0) || !(params.sigma_rear > 0.0)) {
    throw std::invalid_argument("AgfParams: spreads must be positive");
  }
  if (params.speed < 0.0) throw std::invalid_argument("AgfParams: speed must be non-negative");
  const double front = effective_front_sigma(params);
  if (front < params.sigma_rear) {
    throw std::invalid_argument("AgfParams: effective front spread must not fall below the rear spread");
  }
}

double effective_front_sigma(const AgfParams& params) {
  switch (params.elongation) {
    case ElongationRule::Kirby2v:
      return std::max(2.0 * params.speed * params.sigma_head, params.sigma_head);
    case ElongationRule::None:
      return params.sigma_head;
  }
  return params.sigma_head;
}

double agf_eval(const AgfParams& params, double x, double y) {
  const double dx = x - params.center.x;
  const double dy = y - params.center.y;
  const double bearing = wrap_angle(std::atan2(dy, dx) - params.orientation);

  const double sigma_long = std::abs(bearing) <= std::numbers::pi / 2.0
                                ? effective_front_sigma(params)
                                : params.sigma_rear;
  const double sigma_lat = params.sigma_side;

  const double ct = std::cos(params.orientation);
  const double st = std::sin(params.orientation);
  const double s2t = std::sin(2.0 * params.orientation);
  const double a = (ct * ct) / (2.0 * sigma_long * sigma_long) + (st * st) / (2.0 * sigma_lat * sigma_lat);
  const double b = s2t / (4.0 * sigma_long * sigma_long) - s2t / (4.0 * sigma_lat * sigma_lat);
  const double c = (st * st) / (2.0 * sigma_long * sigma_long) + (ct * ct) / (2.0 * sigma_lat * sigma_lat);

  return std::exp(-(a * dx * dx + 2.0 * b * dx * dy + c * dy * dy));
}

}  // namespace proxfield
