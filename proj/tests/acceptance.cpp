// Acceptance suite: one check per release criterion, one PASS/FAIL line each.
// Exits with the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "proxfield/export.hpp"
#include "proxfield/field.hpp"
#include "proxfield/grid.hpp"
#include "proxfield/mesh.hpp"
#include "proxfield/planner.hpp"
#include "proxfield/scene_io.hpp"

using namespace proxfield;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string fmt(double v) { return format_number(v); }

Scene default_scene() {
  Person p;
  p.height = 1.75;
  return Scene({p});
}

// ---- criterion 1: pressure-ratio table ----
Criterion table_reproduction() {
  Criterion c;
  const double head = discomfort_from_mpp(65.0);
  const double torso = discomfort_from_mpp(110.0);
  const double hips = discomfort_from_mpp(140.0);
  const double legs = discomfort_from_mpp(130.0);
  c.require(std::abs(head - 1.000) < 5e-4, "head ratio " + fmt(head));
  c.require(std::abs(torso - 0.591) < 5e-4, "torso ratio " + fmt(torso));
  c.require(std::abs(hips - 0.464) < 5e-4, "hips ratio " + fmt(hips));
  c.require(std::abs(legs - 0.500) < 5e-4, "legs ratio " + fmt(legs));
  return c;
}

// ---- criterion 2: head anchor ----
Criterion anchor_reproduction() {
  Criterion c;
  const double anchor = region_anchor_height(Region::Head, 1.75);
  c.require(std::abs(anchor - 1.58) < 0.005, "head anchor " + fmt(anchor));
  return c;
}

// ---- criterion 3: vertical profile shape ----
Criterion profile_shape() {
  Criterion c;
  const ZDiscomfortModel model(build_region_table(1.75));
  const auto profile = z_profile(model, 0.0, 2.5, 1e-3);

  std::size_t argmax = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].discomfort > profile[argmax].discomfort) argmax = i;
  }
  c.require(profile[argmax].z >= 1.54 && profile[argmax].z <= 1.79,
            "peak at z = " + fmt(profile[argmax].z));
  c.require(profile[argmax].discomfort >= 0.90 && profile[argmax].discomfort <= 0.95,
            "peak value " + fmt(profile[argmax].discomfort));

  double trough = 1.0;
  for (const ZSample& s : profile) {
    if (s.z > 0.3 && s.z < 1.0) trough = std::min(trough, s.discomfort);
  }
  c.require(trough >= 0.44 && trough <= 0.50, "hips trough " + fmt(trough));

  const double at_ground = model(0.0);
  c.require(at_ground >= 0.75 && at_ground <= 0.82, "f(0) = " + fmt(at_ground));
  const double at_top = model(2.5);
  c.require(at_top <= 0.01, "f(2.5) = " + fmt(at_top));
  return c;
}

// ---- criterion 4: height adaptability ----
Criterion height_adaptability() {
  Criterion c;
  for (double h : {1.30, 1.75, 2.20}) {
    const RegionTable table = build_region_table(h);
    c.require(table.region(Region::Top).center == h + 0.75, "top anchor for h = " + fmt(h));
    const ZPeak peak = max_z_discomfort(ZDiscomfortModel(table));
    c.require(peak.z >= 0.88 * h && peak.z <= 1.03 * h,
              "peak z = " + fmt(peak.z) + " for h = " + fmt(h));
  }
  return c;
}

// ---- criterion 5: hovering above the head beats every body height ----
Criterion above_head_preference() {
  Criterion c;
  const double h = 1.75;
  const ZDiscomfortModel model(build_region_table(h));
  double body_min = 1.0;
  for (double z = 0.1 * h; z <= h; z += 1e-3) body_min = std::min(body_min, model(z));
  const double above = model(h + 0.35);
  c.require(above < body_min,
            "f(h+0.35) = " + fmt(above) + " vs body minimum " + fmt(body_min));
  return c;
}

// ---- criterion 6: combined-field contract ----
Criterion combined_field_contract() {
  Criterion c;
  const PersonField field(Person{}, {});
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> xy(-4.0, 4.0);
  std::uniform_real_distribution<double> zd(0.0, 3.2);
  for (int i = 0; i < 100000 && c.ok; ++i) {
    const double x = xy(rng), y = xy(rng), z = zd(rng);
    const double s = field.discomfort(x, y, z);
    c.require(s >= 0.0 && s <= 1.0, "S out of range at sample " + std::to_string(i));

    const double a = agf_eval(field.planar(), x, y);
    const double f = field.z_model()(z);
    const double combined = std::sqrt(a * f);
    c.require(combined >= std::min(a, f) - 1e-12 && combined <= std::max(a, f) + 1e-12,
              "geometric-mean bounds violated at sample " + std::to_string(i));
  }

  // either factor at zero annihilates the product
  ModelOptions cutoff;
  cutoff.zero_above = 2.0;
  const PersonField clipped(Person{}, cutoff);
  c.require(clipped.discomfort(0.0, 0.0, 2.5) == 0.0, "S above the cutoff is not 0");
  c.require(field.discomfort(60.0, 0.0, 1.5) == 0.0, "S at extreme range is not 0");

  // supremum over a 1 cm lattice around the person
  const ZPeak peak = max_z_discomfort(field.z_model());
  GridSpec spec;
  spec.min = {-0.05, -0.05, peak.z - 0.05};
  spec.max = {0.05, 0.05, peak.z + 0.05};
  spec.resolution = 0.01;
  const Field3D grid = sample_grid(default_scene(), spec);
  double sup = 0.0;
  for (double v : grid.values()) sup = std::max(sup, v);
  c.require(sup >= 0.99, "grid supremum " + fmt(sup));
  return c;
}

// ---- criterion 7: planar Gaussian properties ----
Criterion agf_properties() {
  Criterion c;
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> speed(0.0, 2.0);
  std::uniform_real_distribution<double> range(0.01, 6.0);

  for (int i = 0; i < 10000 && c.ok; ++i) {
    AgfParams p;
    p.center = {pos(rng), pos(rng)};
    p.orientation = angle(rng);
    p.speed = speed(rng);

    c.require(agf_eval(p, p.center.x, p.center.y) == 1.0, "center value off at " + std::to_string(i));

    const double alpha = angle(rng);
    const double d = range(rng);
    const double plus = agf_eval(p, p.center.x + d * std::cos(p.orientation + alpha),
                                 p.center.y + d * std::sin(p.orientation + alpha));
    const double minus = agf_eval(p, p.center.x + d * std::cos(p.orientation - alpha),
                                  p.center.y + d * std::sin(p.orientation - alpha));
    c.require(std::abs(plus - minus) <= 1e-12, "lateral asymmetry at " + std::to_string(i));

    const double eps = 1e-7;
    const double side = std::numbers::pi / 2.0;
    const double before = agf_eval(p, p.center.x + d * std::cos(p.orientation + side - eps),
                                   p.center.y + d * std::sin(p.orientation + side - eps));
    const double after = agf_eval(p, p.center.x + d * std::cos(p.orientation + side + eps),
                                  p.center.y + d * std::sin(p.orientation + side + eps));
    c.require(std::abs(before - after) <= 1e-6, "side-boundary jump at " + std::to_string(i));

    const double qx = p.center.x + pos(rng) * 0.5;
    const double qy = p.center.y + pos(rng) * 0.5;
    const double base = agf_eval(p, qx, qy);
    const double rot = angle(rng);
    AgfParams rotated = p;
    rotated.orientation = p.orientation + rot;
    const double rx =
        p.center.x + std::cos(rot) * (qx - p.center.x) - std::sin(rot) * (qy - p.center.y);
    const double ry =
        p.center.y + std::sin(rot) * (qx - p.center.x) + std::cos(rot) * (qy - p.center.y);
    c.require(std::abs(agf_eval(rotated, rx, ry) - base) <= 1e-9,
              "rotation variance at " + std::to_string(i));
    const double tx = pos(rng), ty = pos(rng);
    AgfParams moved = p;
    moved.center = {p.center.x + tx, p.center.y + ty};
    c.require(std::abs(agf_eval(moved, qx + tx, qy + ty) - base) <= 1e-12,
              "translation variance at " + std::to_string(i));
  }
  return c;
}

// ---- criterion 8: isosurface extraction ----
Criterion isosurface_extraction() {
  Criterion c;
  const Scene scene = default_scene();

  GridSpec coarse;
  coarse.min = {-3.0, -3.0, 0.0};
  coarse.max = {3.0, 3.0, 3.0};
  coarse.resolution = 0.05;
  const TriMesh mesh = marching_cubes(sample_grid(scene, coarse), 0.5);
  c.require(!mesh.empty(), "mesh is empty");
  c.require(is_watertight(mesh), "mesh is not watertight");
  const ResidualStats at_5cm = mesh_vertex_residuals(mesh, scene, 0.5);
  c.require(at_5cm.max_abs < 0.02, "5 cm max residual " + fmt(at_5cm.max_abs));

  GridSpec fine = coarse;
  fine.resolution = 0.025;
  const ResidualStats at_25mm =
      mesh_vertex_residuals(marching_cubes(sample_grid(scene, fine), 0.5), scene, 0.5);
  c.require(at_25mm.max_abs < at_5cm.max_abs,
            "residual did not shrink: " + fmt(at_25mm.max_abs) + " vs " + fmt(at_5cm.max_abs));
  return c;
}

// ---- criterion 9: oracle equivalence ----
Criterion oracle_equivalence() {
  Criterion c;
  const PersonField field(Person{}, {});
  const auto regions = oracle::default_regions(1.75);
  const double kappa = field.normalization();

  std::mt19937 rng(107);
  std::uniform_real_distribution<double> xy(-4.0, 4.0);
  std::uniform_real_distribution<double> zd(0.0, 3.4);
  const double sigma_front = effective_front_sigma(field.planar());
  for (int i = 0; i < 10000 && c.ok; ++i) {
    const double x = xy(rng), y = xy(rng), z = zd(rng);
    const double f_lib = field.z_model()(z);
    const double f_ref = oracle::z_discomfort(z, regions);
    c.require(std::abs(f_lib - f_ref) < 1e-12, "f(z) drift " + fmt(f_lib - f_ref));

    const double s_lib = field.discomfort(x, y, z);
    const double s_ref = oracle::person_discomfort(0.0, 0.0, 0.0, sigma_front, 1.0 / 3.0, 0.25,
                                                   regions, kappa, x, y, z);
    c.require(std::abs(s_lib - s_ref) < 1e-12, "S drift " + fmt(s_lib - s_ref));
  }

  // the cached normalization agrees with an independent dense scan
  const auto ref_peak = oracle::dense_scan_max(regions, 0.0, 3.7);
  c.require(std::abs(kappa - std::sqrt(ref_peak.value)) < 1e-6,
            "kappa " + fmt(kappa) + " vs oracle " + fmt(std::sqrt(ref_peak.value)));
  return c;
}

// ---- criterion 10: planner sanity ----
double dijkstra_cost(const Scene& scene, const GridSpec& grid, const Vec3& start, const Vec3& goal,
                     double lambda) {
  const std::size_t nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
  auto to_index = [&](const Vec3& p) {
    const auto ix = static_cast<std::size_t>(std::llround((p.x - grid.min.x) / grid.resolution));
    const auto iy = static_cast<std::size_t>(std::llround((p.y - grid.min.y) / grid.resolution));
    const auto iz = static_cast<std::size_t>(std::llround((p.z - grid.min.z) / grid.resolution));
    return (ix * ny + iy) * nz + iz;
  };
  auto point_of = [&](std::size_t idx) {
    return grid.point(idx / (ny * nz), (idx / nz) % ny, idx % nz);
  };
  const std::size_t n = nx * ny * nz;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<bool> done(n, false);
  dist[to_index(start)] = 0.0;
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.push({0.0, to_index(start)});
  while (!open.empty()) {
    const auto [d, u] = open.top();
    open.pop();
    if (done[u] || d != dist[u]) continue;
    done[u] = true;
    const Vec3 pu = point_of(u);
    const std::size_t ux = u / (ny * nz), uy = (u / nz) % ny, uz = u % nz;
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const long long vx = static_cast<long long>(ux) + dx;
          const long long vy = static_cast<long long>(uy) + dy;
          const long long vz = static_cast<long long>(uz) + dz;
          if (vx < 0 || vy < 0 || vz < 0 || vx >= static_cast<long long>(nx) ||
              vy >= static_cast<long long>(ny) || vz >= static_cast<long long>(nz)) {
            continue;
          }
          const std::size_t v =
              (static_cast<std::size_t>(vx) * ny + static_cast<std::size_t>(vy)) * nz +
              static_cast<std::size_t>(vz);
          if (done[v]) continue;
          const Vec3 pv = point_of(v);
          const Vec3 mid = (pu + pv) * 0.5;
          const double seg = norm(pv - pu);
          const double w = seg * (1.0 + lambda * scene.discomfort(mid.x, mid.y, mid.z));
          if (dist[u] + w < dist[v]) {
            dist[v] = dist[u] + w;
            open.push({dist[v], v});
          }
        }
      }
    }
  }
  return dist[to_index(goal)];
}

Criterion planner_sanity() {
  Criterion c;
  Person blocker;
  blocker.position = {2.5, 0.0};
  blocker.orientation = std::numbers::pi / 2.0;
  const Scene scene({blocker});

  // 15^3 lattice spanning the corridor
  GridSpec grid;
  grid.min = {-0.5, -1.75, 0.0};
  grid.max = {5.1, 1.75, 3.5};
  grid.resolution = 0.4;  // 15 x ...
  if (grid.nx() > 15 || grid.ny() > 15 || grid.nz() > 15) {
    c.require(false, "test lattice exceeds 15^3");
    return c;
  }

  for (double lambda : {0.0, 5.0, 20.0}) {
    PlanRequest request;
    request.grid = grid;
    request.start = {0.0, 0.0, 1.2};
    request.goal = {4.8, 0.0, 1.2};
    request.lambda = lambda;
    const PlanResult result = plan_path(scene, request);
    c.require(result.feasible, "plan infeasible at lambda " + fmt(lambda));
    if (!result.feasible) return c;
    const double reference = dijkstra_cost(scene, grid, request.start, request.goal, lambda);
    c.require(result.cost == reference,
              "A* " + fmt(result.cost) + " != Dijkstra " + fmt(reference) + " at lambda " +
                  fmt(lambda));
  }

  double prev_integrated = std::numeric_limits<double>::infinity();
  double prev_length = 0.0;
  for (double lambda : {0.0, 5.0, 20.0}) {
    PlanRequest request;
    request.grid = grid;
    request.start = {0.0, 0.0, 1.2};
    request.goal = {4.8, 0.0, 1.2};
    request.lambda = lambda;
    const PlanResult result = plan_path(scene, request);
    c.require(result.feasible, "sweep infeasible at lambda " + fmt(lambda));
    if (!result.feasible) return c;
    c.require(result.path.metrics.integrated_discomfort <= prev_integrated + 1e-9,
              "integrated discomfort rose in the lambda sweep");
    c.require(result.path.metrics.length >= prev_length - 1e-9, "length fell in the lambda sweep");
    prev_integrated = result.path.metrics.integrated_discomfort;
    prev_length = result.path.metrics.length;
  }

  PlanRequest capped;
  capped.grid = grid;
  capped.start = {0.0, 0.0, 1.2};
  capped.goal = {4.8, 0.0, 1.2};
  capped.lambda = 0.0;
  capped.tau = 0.3;
  const PlanResult result = plan_path(scene, capped);
  c.require(result.feasible, "tau-capped plan infeasible");
  if (result.feasible) {
    for (const Vec3& w : result.path.waypoints) {
      c.require(scene.discomfort(w.x, w.y, w.z) <= 0.3 + 1e-12, "waypoint exceeds tau");
    }
  }
  return c;
}

// ---- criterion 11: deterministic I/O and the CLI contract ----
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& arguments, const fs::path& dir) {
  const std::string command =
      std::string(PROXFIELD_CLI_PATH) + " " + arguments + " > " + (dir / "out.txt").string() +
      " 2>&1";
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Criterion io_determinism() {
  Criterion c;
  const fs::path dir = fs::temp_directory_path() / "proxfield_acceptance_io";
  fs::create_directories(dir);

  const Scene scene = default_scene();

  // every exporter, two runs, byte-identical
  const ZDiscomfortModel model(build_region_table(1.75));
  const auto profile = z_profile(model, 0.0, 2.5, 0.01);
  export_profile_csv(profile, dir / "a.csv");
  export_profile_csv(profile, dir / "b.csv");
  c.require(slurp(dir / "a.csv") == slurp(dir / "b.csv"), "profile CSV not byte-stable");

  SliceSpec slice_spec;
  slice_spec.plane = Plane::XZ;
  slice_spec.at = 0.0;
  slice_spec.a_min = -2.0;
  slice_spec.a_max = 2.0;
  slice_spec.b_min = 0.0;
  slice_spec.b_max = 2.6;
  slice_spec.resolution = 0.1;
  const Field2D slice = sample_slice(scene, slice_spec);
  export_slice_csv(slice, dir / "a_slice.csv");
  export_slice_csv(slice, dir / "b_slice.csv");
  c.require(slurp(dir / "a_slice.csv") == slurp(dir / "b_slice.csv"), "slice CSV not byte-stable");
  export_heatmap_pgm(slice, 0.0, 1.0, dir / "a.pgm");
  export_heatmap_pgm(slice, 0.0, 1.0, dir / "b.pgm");
  c.require(slurp(dir / "a.pgm") == slurp(dir / "b.pgm"), "PGM not byte-stable");

  GridSpec grid_spec;
  grid_spec.min = {-1.0, -1.0, 0.0};
  grid_spec.max = {1.0, 1.0, 2.2};
  grid_spec.resolution = 0.2;
  const Field3D grid = sample_grid(scene, grid_spec);
  export_grid_vtk(grid, dir / "a.vtk");
  export_grid_vtk(grid, dir / "b.vtk");
  c.require(slurp(dir / "a.vtk") == slurp(dir / "b.vtk"), "VTK not byte-stable");

  GridSpec iso_spec;
  iso_spec.min = {-3.0, -3.0, 0.0};
  iso_spec.max = {3.0, 3.0, 3.0};
  iso_spec.resolution = 0.1;
  const TriMesh mesh = marching_cubes(sample_grid(scene, iso_spec), 0.5);
  export_mesh_obj(mesh, dir / "a.obj");
  export_mesh_obj(mesh, dir / "b.obj");
  c.require(slurp(dir / "a.obj") == slurp(dir / "b.obj"), "OBJ not byte-stable");

  PlanRequest request;
  request.grid = grid_spec;
  request.start = {-1.0, -1.0, 0.5};
  request.goal = {1.0, 1.0, 1.5};
  request.lambda = 5.0;
  const PlanResult planned = plan_path(scene, request);
  c.require(planned.feasible, "acceptance plan infeasible");
  if (planned.feasible) {
    export_path_csv(planned.path, dir / "a_path.csv");
    export_path_csv(planned.path, dir / "b_path.csv");
    c.require(slurp(dir / "a_path.csv") == slurp(dir / "b_path.csv"), "path CSV not byte-stable");
  }

  // canonical scene round trip
  const std::string canonical = serialize_scene(scene);
  c.require(serialize_scene(parse_scene(canonical)) == canonical, "scene round trip drifted");

  // exit-code contract on crafted failures
  {
    std::ofstream(dir / "person.json") << canonical;
    std::ofstream(dir / "broken.json") << "{\"schema_version\": 1, \"persons\": [";
    const int usage = run_cli("eval --scene " + (dir / "person.json").string() +
                                  " --point 0,0,0 --bogus",
                              dir);
    c.require(usage == 2, "usage failure exited " + std::to_string(usage));
    const int schema = run_cli("validate --scene " + (dir / "broken.json").string(), dir);
    c.require(schema == 3, "schema failure exited " + std::to_string(schema));
    const int runtime = run_cli("eval --scene " + (dir / "missing.json").string() + " --point 0,0,0", dir);
    c.require(runtime == 1, "runtime failure exited " + std::to_string(runtime));
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Criterion()> check;
  };
  const std::vector<Entry> criteria = {
      {"1. pressure-ratio table {65,110,140,130} -> {1.000,0.591,0.464,0.500} +-5e-4",
       table_reproduction},
      {"2. head anchor 0.903 * 1.75 = 1.58 +-0.005", anchor_reproduction},
      {"3. vertical profile shape (peak, trough, ground, top) for h = 1.75", profile_shape},
      {"4. height adaptability: peak in [0.88h, 1.03h], top anchor exact, h in {1.30,1.75,2.20}",
       height_adaptability},
      {"5. hovering at h+0.35 preferred over every height below h", above_head_preference},
      {"6. combined field: range, annihilation, mean bounds, supremum >= 0.99 (1e5 samples)",
       combined_field_contract},
      {"7. planar Gaussian: center, symmetry, boundary continuity, rigid invariance (1e4 samples)",
       agf_properties},
      {"8. isosurface at 0.5: watertight, max residual < 0.02 at 5 cm, shrinking at 2.5 cm",
       isosurface_extraction},
      {"9. direct-summation oracle equivalence within 1e-12 (1e4 samples)", oracle_equivalence},
      {"10. planner: A* == Dijkstra exactly, lambda-sweep monotone, tau cap sound", planner_sanity},
      {"11. deterministic exporters, scene round trip, CLI exit codes", io_determinism},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    Criterion result;
    try {
      result = entry.check();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (result.ok) {
      std::printf("[PASS] %s\n", entry.name);
    } else {
      std::printf("[FAIL] %s -- %s\n", entry.name, result.detail.c_str());
      ++failures;
    }
  }
  return failures;
}
