#include "proxfield/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace proxfield {
namespace {

RegionOverrides merge_overrides(const RegionOverrides& base, const RegionOverrides& extra) {
  RegionOverrides merged = base;
  for (const auto& [region, o] : extra) {
    RegionOverride& target = merged[region];
    if (o.discomfort) target.discomfort = o.discomfort;
    if (o.sigma) target.sigma = o.sigma;
    if (o.relative_height) target.relative_height = o.relative_height;
  }
  return merged;
}

ZDiscomfortModel make_z_model(const Person& person, const ModelOptions& options) {
  if (!(person.height > 0.0)) throw std::invalid_argument("Person: height must be positive");
  if (person.speed < 0.0) throw std::invalid_argument("Person: speed must be non-negative");
  const RegionTable table =
      build_region_table(person.height, merge_overrides(options.region_overrides, person.region_overrides));
  ZModelOptions z_options;
  z_options.s_shaped_top = options.s_shaped_top;
  z_options.zero_above = options.zero_above;
  return ZDiscomfortModel(table, z_options);
}

AgfParams make_planar(const Person& person, const ModelOptions& options) {
  AgfParams params;
  params.center = person.position;
  params.orientation = person.orientation;
  if (person.agf_spreads) {
    params.sigma_head = person.agf_spreads->head;
    params.sigma_side = person.agf_spreads->side;
    params.sigma_rear = person.agf_spreads->rear;
  }
  params.speed = person.speed;
  params.elongation = options.elongation;
  validate(params);
  return params;
}

}  // namespace

PersonField::PersonField(const Person& person, const ModelOptions& options)
    : person_(person),
      z_model_(make_z_model(person, options)),
      planar_(make_planar(person, options)) {
  kappa_ = std::sqrt(max_z_discomfort(z_model_).value);
}

double PersonField::discomfort(double x, double y, double z) const {
  if (z < 0.0) throw std::invalid_argument("person discomfort: z must be non-negative");
  const double planar = agf_eval(planar_, x, y);
  const double vertical = z_model_(z);
  return std::clamp(std::sqrt(planar * vertical) / kappa_, 0.0, 1.0);
}

double normalization_constant(const Person& person, const ModelOptions& options) {
  return std::sqrt(max_z_discomfort(make_z_model(person, options)).value);
}

Scene::Scene(std::vector<Person> persons, const ModelOptions& options)
    : persons_(std::move(persons)), options_(options) {
  if (options_.zero_above && !(*options_.zero_above > 0.0)) {
    throw std::invalid_argument("Scene: zero_above must be positive");
  }
  fields_.reserve(persons_.size());
  for (const Person& person : persons_) {
    fields_.emplace_back(person, options_);
  }
}

double Scene::discomfort(double x, double y, double z) const {
  if (z < 0.0) throw std::invalid_argument("scene discomfort: z must be non-negative");
  double result = 0.0;
  if (options_.aggregation == Aggregation::Max) {
    for (const PersonField& field : fields_) {
      result = std::max(result, field.discomfort(x, y, z));
    }
  } else {
    for (const PersonField& field : fields_) {
      result += field.discomfort(x, y, z);
    }
    result = std::min(result, 1.0);
  }
  return result;
}

}  // namespace proxfield
