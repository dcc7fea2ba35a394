// Discomfort-aware shortest paths: A* over a 26-connected lattice where each
// edge costs its Euclidean length scaled by 1 + lambda * S at the midpoint,
// with an optional hard discomfort cap on nodes.
#ifndef PROXFIELD_PLANNER_HPP_
#define PROXFIELD_PLANNER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "proxfield/field.hpp"
#include "proxfield/grid.hpp"
#include "proxfield/vec.hpp"

namespace proxfield {

struct PlanRequest {
  GridSpec grid;
  Vec3 start{};
  Vec3 goal{};
  double lambda = 0.0;        // discomfort weight, >= 0
  std::optional<double> tau;  // hard cap: nodes with S > tau are removed
};

struct PathMetrics {
  double length = 0.0;                 // meters
  double max_discomfort = 0.0;         // over waypoints and edge midpoints
  double integrated_discomfort = 0.0;  // sum of edge length * midpoint S
};

struct Path {
  std::vector<Vec3> waypoints;  // consecutive entries are lattice neighbors
  double resolution = 0.0;
  PathMetrics metrics;
};

struct PlanResult {
  bool feasible = false;
  std::string reason;  // set when infeasible
  Path path;           // valid when feasible
  double cost = 0.0;   // accumulated A* objective
};

/// Optimal lattice path from start to goal, or infeasible with a reason.
/// Start and goal snap to the nearest lattice node and must lie inside the
/// grid. Ties are broken by smaller heuristic, then node index, so results
/// are deterministic. Throws std::invalid_argument when start equals goal or
/// lambda is negative.
PlanResult plan_path(const Scene& scene, const PlanRequest& request);

/// Recomputes length, max discomfort, and integrated discomfort from the
/// waypoints alone. Throws when consecutive waypoints are not lattice
/// neighbors.
PathMetrics path_metrics(const Path& path, const Scene& scene);

}  // namespace proxfield

#endif  // PROXFIELD_PLANNER_HPP_
