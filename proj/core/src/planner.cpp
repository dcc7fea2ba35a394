#include "proxfield/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace proxfield {
namespace {

struct LatticeIdx {
  std::size_t ix = 0, iy = 0, iz = 0;
};

struct QueueEntry {
  double f = 0.0;
  double h = 0.0;
  std::uint64_t index = 0;
  double g = 0.0;

  // min-heap: smaller f first, ties by smaller heuristic, then node index
  bool operator<(const QueueEntry& other) const {
    if (f != other.f) return f > other.f;
    if (h != other.h) return h > other.h;
    return index > other.index;
  }
};

bool inside(double v, double lo, double hi) { return v >= lo - 1e-9 && v <= hi + 1e-9; }

std::optional<LatticeIdx> snap(const GridSpec& grid, const Vec3& p) {
  if (!inside(p.x, grid.min.x, grid.max.x) || !inside(p.y, grid.min.y, grid.max.y) ||
      !inside(p.z, grid.min.z, grid.max.z)) {
    return std::nullopt;
  }
  auto clamp_idx = [](double c, double lo, double res, std::size_t n) {
    const auto i = static_cast<long long>(std::llround((c - lo) / res));
    return static_cast<std::size_t>(std::clamp<long long>(i, 0, static_cast<long long>(n) - 1));
  };
  return LatticeIdx{clamp_idx(p.x, grid.min.x, grid.resolution, grid.nx()),
                    clamp_idx(p.y, grid.min.y, grid.resolution, grid.ny()),
                    clamp_idx(p.z, grid.min.z, grid.resolution, grid.nz())};
}

PathMetrics metrics_along(std::span<const Vec3> waypoints, const Scene& scene) {
  PathMetrics m;
  if (waypoints.empty()) return m;
  m.max_discomfort = scene.discomfort(waypoints[0].x, waypoints[0].y, waypoints[0].z);
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const Vec3& a = waypoints[i - 1];
    const Vec3& b = waypoints[i];
    const double seg = norm(b - a);
    const Vec3 mid = (a + b) * 0.5;
    const double s_mid = scene.discomfort(mid.x, mid.y, mid.z);
    const double s_b = scene.discomfort(b.x, b.y, b.z);
    m.length += seg;
    m.integrated_discomfort += seg * s_mid;
    m.max_discomfort = std::max({m.max_discomfort, s_mid, s_b});
  }
  return m;
}

}  // namespace

PlanResult plan_path(const Scene& scene, const PlanRequest& request) {
  const GridSpec& grid = request.grid;
  grid.validate();
  if (grid.min.z < 0.0) throw std::invalid_argument("plan_path: grid must not dip below z = 0");
  if (request.lambda < 0.0) throw std::invalid_argument("plan_path: lambda must be non-negative");
  if (request.tau && !(*request.tau > 0.0 && *request.tau <= 1.0)) {
    throw std::invalid_argument("plan_path: tau must lie in (0,1]");
  }
  if (request.start.x == request.goal.x && request.start.y == request.goal.y &&
      request.start.z == request.goal.z) {
    throw std::invalid_argument("plan_path: start and goal must differ");
  }

  PlanResult result;
  const auto start_idx = snap(grid, request.start);
  if (!start_idx) {
    result.reason = "start outside grid bounds";
    return result;
  }
  const auto goal_idx = snap(grid, request.goal);
  if (!goal_idx) {
    result.reason = "goal outside grid bounds";
    return result;
  }

  const std::size_t nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
  auto linear = [&](const LatticeIdx& n) {
    return (static_cast<std::uint64_t>(n.ix) * ny + n.iy) * nz + n.iz;
  };
  auto coords = [&](std::uint64_t index) {
    const std::size_t iz = index % nz;
    const std::size_t iy = (index / nz) % ny;
    const std::size_t ix = index / (nz * ny);
    return LatticeIdx{ix, iy, iz};
  };
  auto point = [&](std::uint64_t index) {
    const LatticeIdx n = coords(index);
    return grid.point(n.ix, n.iy, n.iz);
  };
  auto node_discomfort = [&](std::uint64_t index) {
    const Vec3 p = point(index);
    return scene.discomfort(p.x, p.y, p.z);
  };
  auto blocked = [&](std::uint64_t index) {
    return request.tau && node_discomfort(index) > *request.tau;
  };

  const std::uint64_t start = linear(*start_idx);
  const std::uint64_t goal = linear(*goal_idx);
  if (blocked(start)) {
    result.reason = "start lies inside the removed (S > tau) region";
    return result;
  }
  if (blocked(goal)) {
    result.reason = "goal lies inside the removed (S > tau) region";
    return result;
  }
  if (start == goal) {
    // distinct query points can snap to the same lattice node
    result.feasible = true;
    result.path.resolution = grid.resolution;
    result.path.waypoints = {point(start)};
    result.path.metrics = metrics_along(result.path.waypoints, scene);
    return result;
  }

  const Vec3 goal_point = point(goal);
  auto heuristic = [&](std::uint64_t index) { return norm(goal_point - point(index)); };

  const std::uint64_t node_count = static_cast<std::uint64_t>(nx) * ny * nz;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> g(node_count, kInf);
  std::vector<std::uint64_t> parent(node_count, node_count);
  std::vector<bool> settled(node_count, false);

  std::priority_queue<QueueEntry> open;
  g[start] = 0.0;
  open.push({heuristic(start), heuristic(start), start, 0.0});

  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    if (top.g != g[top.index] || settled[top.index]) continue;
    settled[top.index] = true;
    if (top.index == goal) break;

    const LatticeIdx u = coords(top.index);
    const Vec3 pu = point(top.index);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const long long vx = static_cast<long long>(u.ix) + dx;
          const long long vy = static_cast<long long>(u.iy) + dy;
          const long long vz = static_cast<long long>(u.iz) + dz;
          if (vx < 0 || vy < 0 || vz < 0 || vx >= static_cast<long long>(nx) ||
              vy >= static_cast<long long>(ny) || vz >= static_cast<long long>(nz)) {
            continue;
          }
          const LatticeIdx vn{static_cast<std::size_t>(vx), static_cast<std::size_t>(vy),
                              static_cast<std::size_t>(vz)};
          const std::uint64_t v = linear(vn);
          if (settled[v] || blocked(v)) continue;

          const Vec3 pv = grid.point(vn.ix, vn.iy, vn.iz);
          const double seg = norm(pv - pu);
          const Vec3 mid = (pu + pv) * 0.5;
          const double cost = seg * (1.0 + request.lambda * scene.discomfort(mid.x, mid.y, mid.z));
          const double ng = top.g + cost;
          if (ng < g[v]) {
            g[v] = ng;
            parent[v] = top.index;
            open.push({ng + heuristic(v), heuristic(v), v, ng});
          }
        }
      }
    }
  }

  if (g[goal] == kInf) {
    result.reason = "goal unreachable on the lattice";
    return result;
  }

  std::vector<Vec3> waypoints;
  for (std::uint64_t cur = goal; cur != node_count; cur = parent[cur]) {
    waypoints.push_back(point(cur));
    if (cur == start) break;
  }
  std::reverse(waypoints.begin(), waypoints.end());

  result.feasible = true;
  result.cost = g[goal];
  result.path.resolution = grid.resolution;
  result.path.waypoints = std::move(waypoints);
  result.path.metrics = metrics_along(result.path.waypoints, scene);
  return result;
}

PathMetrics path_metrics(const Path& path, const Scene& scene) {
  const auto& wp = path.waypoints;
  if (!(path.resolution > 0.0)) throw std::invalid_argument("path_metrics: resolution must be positive");
  for (std::size_t i = 1; i < wp.size(); ++i) {
    const double ax = std::abs(wp[i].x - wp[i - 1].x);
    const double ay = std::abs(wp[i].y - wp[i - 1].y);
    const double az = std::abs(wp[i].z - wp[i - 1].z);
    auto is_step = [&](double d) {
      return std::abs(d) < 1e-9 || std::abs(d - path.resolution) < 1e-9;
    };
    if (!is_step(ax) || !is_step(ay) || !is_step(az) || (ax + ay + az) < 1e-9) {
      throw std::invalid_argument("path_metrics: consecutive waypoints must be lattice neighbors");
    }
  }
  return metrics_along(wp, scene);
}

}  // namespace proxfield
