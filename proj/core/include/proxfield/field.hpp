// The combined 3D personal space: geometric mean of the planar asymmetric
// Gaussian and the vertical fuzzy discomfort, normalized so its supremum is
// exactly 1, plus aggregation over multi-person scenes.
#ifndef PROXFIELD_FIELD_HPP_
#define PROXFIELD_FIELD_HPP_

#include <optional>
#include <span>
#include <vector>

#include "proxfield/agf.hpp"
#include "proxfield/body_model.hpp"
#include "proxfield/fuzzy_z.hpp"
#include "proxfield/vec.hpp"

namespace proxfield {

struct AgfSpreads {
  double head = 0.5;
  double side = 1.0 / 3.0;
  double rear = 0.25;
};

struct Person {
  Vec2 position{};
  double orientation = 0.0;  // radians
  double height = 1.75;      // meters, > 0
  double speed = 1.0;        // m/s, >= 0
  RegionOverrides region_overrides{};     // per-person body-model tweaks
  std::optional<AgfSpreads> agf_spreads;  // per-person planar spreads
};

enum class Aggregation { Max, SumClamp };

struct ModelOptions {
  Aggregation aggregation = Aggregation::Max;
  ElongationRule elongation = ElongationRule::Kirby2v;
  bool s_shaped_top = false;
  std::optional<double> zero_above;
  RegionOverrides region_overrides{};  // applied to every person
};

/// One person's normalized discomfort field S(P, r). Immutable; evaluation is
/// pure and safe to call concurrently.
class PersonField {
 public:
  explicit PersonField(const Person& person, const ModelOptions& options = {});

  /// sqrt(AGF(x, y) * f(z)) / kappa, clamped to [0,1]. Throws for z < 0.
  double discomfort(double x, double y, double z) const;

  double normalization() const { return kappa_; }
  const Person& person() const { return person_; }
  const ZDiscomfortModel& z_model() const { return z_model_; }
  const AgfParams& planar() const { return planar_; }

 private:
  Person person_;
  ZDiscomfortModel z_model_;
  AgfParams planar_;
  double kappa_ = 1.0;
};

/// kappa = sqrt(max_z f): the supremum of the unnormalized combined field,
/// since the planar factor peaks at exactly 1 over the person's center.
double normalization_constant(const Person& person, const ModelOptions& options = {});

/// A set of persons plus the model options they share. Point evaluations
/// aggregate per-person discomfort (pointwise max by default).
class Scene {
 public:
  Scene() = default;
  explicit Scene(std::vector<Person> persons, const ModelOptions& options = {});

  /// Aggregated discomfort at (x, y, z); 0 for an empty scene. Throws for z < 0.
  double discomfort(double x, double y, double z) const;

  std::span<const PersonField> fields() const { return fields_; }
  std::span<const Person> persons() const { return persons_; }
  const ModelOptions& options() const { return options_; }
  bool empty() const { return fields_.empty(); }
  std::size_t size() const { return fields_.size(); }

 private:
  std::vector<Person> persons_;
  std::vector<PersonField> fields_;
  ModelOptions options_;
};

}  // namespace proxfield

#endif  // PROXFIELD_FIELD_HPP_
