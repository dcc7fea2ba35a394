// proxfield command line: evaluate, sample, extract, export, and plan over
// 3D personal-space discomfort fields.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error, 3 scene
// schema/validation error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "proxfield/export.hpp"
#include "proxfield/field.hpp"
#include "proxfield/fuzzy_z.hpp"
#include "proxfield/grid.hpp"
#include "proxfield/mesh.hpp"
#include "proxfield/planner.hpp"
#include "proxfield/scene_io.hpp"

namespace {

using namespace proxfield;

std::vector<double> parse_csv_numbers(const std::string& text, std::size_t expected,
                                      const std::string& flag) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected comma-separated numbers, got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.size() != expected) {
    throw CLI::ValidationError(flag, "expected " + std::to_string(expected) +
                                         " comma-separated numbers, got '" + text + "'");
  }
  return values;
}

GridSpec grid_from(const std::vector<double>& b, double res) {
  GridSpec spec;
  spec.min = {b[0], b[2], b[4]};
  spec.max = {b[1], b[3], b[5]};
  spec.resolution = res;
  return spec;
}

// person positions +- 3 m horizontally, ground to max height + 1.25 m
GridSpec default_iso_bounds(const Scene& scene, double res) {
  double x_lo = -3.0, x_hi = 3.0, y_lo = -3.0, y_hi = 3.0, z_hi = 3.0;
  bool first = true;
  for (const Person& p : scene.persons()) {
    if (first) {
      x_lo = p.position.x - 3.0;
      x_hi = p.position.x + 3.0;
      y_lo = p.position.y - 3.0;
      y_hi = p.position.y + 3.0;
      z_hi = p.height + 1.25;
      first = false;
    } else {
      x_lo = std::min(x_lo, p.position.x - 3.0);
      x_hi = std::max(x_hi, p.position.x + 3.0);
      y_lo = std::min(y_lo, p.position.y - 3.0);
      y_hi = std::max(y_hi, p.position.y + 3.0);
      z_hi = std::max(z_hi, p.height + 1.25);
    }
  }
  GridSpec spec;
  spec.min = {x_lo, y_lo, 0.0};
  spec.max = {x_hi, y_hi, z_hi};
  spec.resolution = res;
  return spec;
}

struct CliArgs {
  std::string scene_path;
  std::string out_path;
  std::string pgm_path;
  std::string point;
  std::string bounds;
  std::string start;
  std::string goal;
  std::string plane = "xz";
  double at = 0.0;
  double height = 1.75;
  std::optional<double> zmin;
  std::optional<double> zmax;
  double step = 0.01;
  double res = 0.05;
  double level = 0.5;
  double lambda = 0.0;
  std::optional<double> tau;
  bool report_residuals = false;
};

int run(int argc, char** argv) {
  CLI::App app{"3D personal-space discomfort fields: evaluate, sample, export, plan"};
  app.require_subcommand(1);
  CliArgs args;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate scene discomfort at one point");
  eval_cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();
  eval_cmd->add_option("--point", args.point, "Query point X,Y,Z in meters")->required();

  auto* zprofile_cmd = app.add_subcommand("zprofile", "Export the vertical discomfort profile as CSV");
  zprofile_cmd->add_option("--height", args.height, "Person height in meters")
      ->required()
      ->check(CLI::PositiveNumber);
  zprofile_cmd->add_option("--zmin", args.zmin, "Profile start, meters (default 0)");
  zprofile_cmd->add_option("--zmax", args.zmax, "Profile end, meters (default height + 1.5)");
  zprofile_cmd->add_option("--step", args.step, "Sample step, meters (default 0.01)")
      ->check(CLI::PositiveNumber);
  zprofile_cmd->add_option("--out", args.out_path, "Output CSV path")->required();

  auto* slice_cmd = app.add_subcommand("slice", "Sample a planar slice of the field");
  slice_cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();
  slice_cmd->add_option("--plane", args.plane, "Slice plane: xz, yz, or xy")
      ->check(CLI::IsMember({"xz", "yz", "xy"}));
  slice_cmd->add_option("--at", args.at, "Fixed coordinate of the off-plane axis")->required();
  slice_cmd->add_option("--bounds", args.bounds, "In-plane window AMIN,AMAX,BMIN,BMAX")->required();
  slice_cmd->add_option("--res", args.res, "Sample resolution, meters")->check(CLI::PositiveNumber);
  slice_cmd->add_option("--out", args.out_path, "Output CSV path")->required();
  slice_cmd->add_option("--pgm", args.pgm_path, "Optional 16-bit PGM heatmap path");

  auto* grid_cmd = app.add_subcommand("grid", "Sample the field on a 3D grid and export VTK");
  grid_cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();
  grid_cmd->add_option("--bounds", args.bounds, "Box XMIN,XMAX,YMIN,YMAX,ZMIN,ZMAX")->required();
  grid_cmd->add_option("--res", args.res, "Grid resolution, meters")->check(CLI::PositiveNumber);
  grid_cmd->add_option("--out", args.out_path, "Output VTK path")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Extract a discomfort isosurface as OBJ");
  iso_cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();
  iso_cmd->add_option("--level", args.level, "Iso level in (0,1)")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  iso_cmd->add_option("--bounds", args.bounds,
                      "Box XMIN,XMAX,YMIN,YMAX,ZMIN,ZMAX (default: persons +-3 m, ground to top)");
  iso_cmd->add_option("--res", args.res, "Grid resolution, meters (default 0.05)")
      ->check(CLI::PositiveNumber);
  iso_cmd->add_option("--out", args.out_path, "Output OBJ path")->required();
  iso_cmd->add_flag("--report-residuals", args.report_residuals,
                    "Re-evaluate the field at each vertex and print |S - level| statistics");

  auto* plan_cmd = app.add_subcommand("plan", "Plan a discomfort-aware lattice path");
  plan_cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();
  plan_cmd->add_option("--start", args.start, "Start point X,Y,Z")->required();
  plan_cmd->add_option("--goal", args.goal, "Goal point X,Y,Z")->required();
  plan_cmd->add_option("--lambda", args.lambda, "Discomfort weight, >= 0")
      ->check(CLI::NonNegativeNumber);
  plan_cmd->add_option("--tau", args.tau, "Hard cap: remove nodes with S > tau");
  plan_cmd->add_option("--bounds", args.bounds,
                       "Box XMIN,XMAX,YMIN,YMAX,ZMIN,ZMAX (default: padded box of start/goal/persons)");
  plan_cmd->add_option("--res", args.res, "Lattice resolution, meters (default 0.05)")
      ->check(CLI::PositiveNumber);
  plan_cmd->add_option("--out", args.out_path, "Output waypoint CSV path")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check a scene file against the schema");
  validate_cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) {
      const Scene scene = load_scene(args.scene_path);
      const auto p = parse_csv_numbers(args.point, 3, "--point");
      const double s = scene.discomfort(p[0], p[1], p[2]);
      std::printf("%.9f\n", s);
      return 0;
    }

    if (zprofile_cmd->parsed()) {
      const ZDiscomfortModel model(build_region_table(args.height));
      const double z_min = args.zmin.value_or(0.0);
      const double z_max = args.zmax.value_or(args.height + kTopOffset + 0.75);
      const auto profile = z_profile(model, z_min, z_max, args.step);
      export_profile_csv(profile, args.out_path);
      return 0;
    }

    if (slice_cmd->parsed()) {
      const Scene scene = load_scene(args.scene_path);
      const auto b = parse_csv_numbers(args.bounds, 4, "--bounds");
      SliceSpec spec;
      spec.plane = args.plane == "xz" ? Plane::XZ : (args.plane == "yz" ? Plane::YZ : Plane::XY);
      spec.at = args.at;
      spec.a_min = b[0];
      spec.a_max = b[1];
      spec.b_min = b[2];
      spec.b_max = b[3];
      spec.resolution = args.res;
      const Field2D field = sample_slice(scene, spec);
      export_slice_csv(field, args.out_path);
      if (!args.pgm_path.empty()) export_heatmap_pgm(field, 0.0, 1.0, args.pgm_path);
      return 0;
    }

    if (grid_cmd->parsed()) {
      const Scene scene = load_scene(args.scene_path);
      const auto b = parse_csv_numbers(args.bounds, 6, "--bounds");
      const Field3D field = sample_grid(scene, grid_from(b, args.res));
      export_grid_vtk(field, args.out_path);
      return 0;
    }

    if (iso_cmd->parsed()) {
      const Scene scene = load_scene(args.scene_path);
      GridSpec spec;
      if (args.bounds.empty()) {
        spec = default_iso_bounds(scene, args.res);
      } else {
        spec = grid_from(parse_csv_numbers(args.bounds, 6, "--bounds"), args.res);
      }
      const Field3D field = sample_grid(scene, spec);
      const TriMesh mesh = marching_cubes(field, args.level);
      export_mesh_obj(mesh, args.out_path);
      std::printf("mesh: %zu vertices, %zu triangles\n", mesh.vertices.size(),
                  mesh.triangles.size());
      if (args.report_residuals) {
        const ResidualStats stats = mesh_vertex_residuals(mesh, scene, args.level);
        std::printf("residuals: vertices=%zu max=%s mean=%s\n", stats.vertex_count,
                    format_number(stats.max_abs).c_str(), format_number(stats.mean_abs).c_str());
      }
      return 0;
    }

    if (plan_cmd->parsed()) {
      const Scene scene = load_scene(args.scene_path);
      PlanRequest request;
      const auto s = parse_csv_numbers(args.start, 3, "--start");
      const auto g = parse_csv_numbers(args.goal, 3, "--goal");
      request.start = {s[0], s[1], s[2]};
      request.goal = {g[0], g[1], g[2]};
      request.lambda = args.lambda;
      request.tau = args.tau;
      if (args.bounds.empty()) {
        // padded box around start, goal, and everyone in the scene
        double x_lo = std::min(s[0], g[0]), x_hi = std::max(s[0], g[0]);
        double y_lo = std::min(s[1], g[1]), y_hi = std::max(s[1], g[1]);
        double z_hi = std::max(s[2], g[2]);
        for (const Person& p : scene.persons()) {
          x_lo = std::min(x_lo, p.position.x);
          x_hi = std::max(x_hi, p.position.x);
          y_lo = std::min(y_lo, p.position.y);
          y_hi = std::max(y_hi, p.position.y);
          z_hi = std::max(z_hi, p.height + 1.0);
        }
        request.grid.min = {x_lo - 1.0, y_lo - 1.0, 0.0};
        request.grid.max = {x_hi + 1.0, y_hi + 1.0, z_hi + 1.0};
        request.grid.resolution = args.res;
      } else {
        request.grid = grid_from(parse_csv_numbers(args.bounds, 6, "--bounds"), args.res);
      }
      const PlanResult result = plan_path(scene, request);
      if (!result.feasible) {
        std::cerr << "plan: infeasible: " << result.reason << "\n";
        return 1;
      }
      export_path_csv(result.path, args.out_path);
      const PathMetrics& m = result.path.metrics;
      std::printf("path: %zu waypoints, length=%s max_discomfort=%s integrated_discomfort=%s\n",
                  result.path.waypoints.size(), format_number(m.length).c_str(),
                  format_number(m.max_discomfort).c_str(),
                  format_number(m.integrated_discomfort).c_str());
      return 0;
    }

    if (validate_cmd->parsed()) {
      load_scene(args.scene_path);
      std::printf("ok\n");
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SceneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
