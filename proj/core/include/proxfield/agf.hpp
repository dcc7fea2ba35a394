// Planar personal space: asymmetric Gaussian centered on the person, with
// distinct spreads ahead, to the sides, and behind, elongated along the
// facing direction when the person moves.
#ifndef PROXFIELD_AGF_HPP_
#define PROXFIELD_AGF_HPP_

#include "proxfield/vec.hpp"

namespace proxfield {

enum class ElongationRule {
  Kirby2v,  // sigma_front = max(2 v sigma_head, sigma_head)
  None,     // sigma_front = sigma_head regardless of speed
};

struct AgfParams {
  Vec2 center{};
  double orientation = 0.0;       // radians
  double sigma_head = 0.5;        // front base spread, meters
  double sigma_side = 1.0 / 3.0;  // (2/3) sigma_head
  double sigma_rear = 0.25;       // (1/2) sigma_head
  double speed = 1.0;             // m/s
  ElongationRule elongation = ElongationRule::Kirby2v;
};

/// Throws std::invalid_argument when a spread is non-positive, speed is
/// negative, or the effective front spread would fall below the rear spread.
void validate(const AgfParams& params);

/// Longitudinal spread ahead of the person after speed elongation.
double effective_front_sigma(const AgfParams& params);

/// Asymmetric Gaussian at (x, y): 1 at the center, strictly decaying with
/// range, elongated ahead when moving. The longitudinal spread switches from
/// front to rear at bearing +-pi/2 relative to the facing direction.
double agf_eval(const AgfParams& params, double x, double y);

}  // namespace proxfield

#endif  // PROXFIELD_AGF_HPP_
