#include "liftplan/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "liftplan/io.hpp"
#include "liftplan/oracle.hpp"
#include "liftplan/shape.hpp"
#include "liftplan/trajectory.hpp"

namespace liftplan::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::optional<std::string> preset;
  std::optional<double> L, q, k, f;
  double step = 0.001;
  std::string mode = "dexterous";
  std::optional<std::string> heights;
  std::string k_range = "0.1:3:30";
  std::string format = "csv";
  std::optional<std::string> out;
  std::size_t n = 5000;
  std::size_t stride = 50;
  std::optional<double> tol_u;
  std::optional<double> tol_res;
  std::optional<int> max_iter;
  std::size_t samples = 2001;
  std::optional<double> pos_tol;
  std::optional<double> ang_tol_deg;
  bool no_terminal = false;
};

MaterialSpec resolve_material(const Options& o) {
  const bool inline_given = o.L || o.q || o.k || o.f;
  if (o.preset && inline_given) {
    throw ConfigError("give either --preset or an inline material (--L --q --k), not both");
  }
  MaterialSpec m;
  if (o.preset) {
    m = io::find_preset(*o.preset).material;
  } else {
    if (!o.L || !o.q || !o.k) {
      throw ConfigError("material needs --preset or all of --L, --q and --k");
    }
    m.length_L = *o.L;
    m.weight_q = *o.q;
    m.friction_k_covering = *o.k;
    m.friction_f_gripper = o.f.value_or(0.0);
    m.label = "inline";
  }
  try {
    m.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return m;
}

SolverConfig resolve_solver(const Options& o) {
  SolverConfig cfg;
  if (o.tol_u) cfg.tol_u = *o.tol_u;
  if (o.tol_res) cfg.tol_residual_rel = *o.tol_res;
  if (o.max_iter) cfg.max_iter = *o.max_iter;
  cfg.validate();
  return cfg;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(io::parse_number(item));
  }
  if (values.empty()) throw ConfigError("empty list '" + text + "'");
  return values;
}

std::vector<double> parse_k_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw ConfigError("--k-range expects min:max:count");
  const double lo = io::parse_number(std::string_view(text).substr(0, first));
  const double hi = io::parse_number(std::string_view(text).substr(first + 1, second - first - 1));
  const double count = io::parse_number(std::string_view(text).substr(second + 1));
  if (!(count >= 1.0) || count != std::floor(count)) {
    throw ConfigError("--k-range count must be a positive integer");
  }
  if (!(lo > 0.0) || !(hi >= lo)) throw ConfigError("--k-range needs 0 < min <= max");
  return linspace(lo, hi, static_cast<std::size_t>(count));
}

fs::path resolve_out(const Options& o, const std::string& default_name) {
  fs::path p = o.out ? fs::path(*o.out) : fs::path(default_name);
  if (p.is_relative()) {
    if (const char* base = std::getenv(kOutputDirEnv); base != nullptr && *base != '\0') {
      p = fs::path(base) / p;
    }
  }
  return p;
}

std::string extension(io::Format fmt) { return fmt == io::Format::csv ? ".csv" : ".jsonl"; }

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

TrajectoryRequest make_request(const Options& o, LiftMode mode) {
  TrajectoryRequest req;
  req.material = resolve_material(o);
  req.solver = resolve_solver(o);
  req.step_dz = o.step;
  req.mode = mode;
  req.include_terminal = !o.no_terminal;
  if (!(req.step_dz > 0.0) || !(req.step_dz < req.material.length_L)) {
    throw ConfigError("--step must satisfy 0 < step < L");
  }
  return req;
}

int cmd_plan(const Options& o, std::ostream& out) {
  const io::Format fmt = io::parse_format(o.format);
  const TrajectoryRequest req = make_request(o, parse_lift_mode(o.mode));
  const Trajectory traj = generate_trajectory(req);

  std::ostringstream data;
  io::write_waypoints(data, traj.waypoints, fmt);
  const fs::path path = resolve_out(o, "waypoints" + extension(fmt));
  io::write_file_atomic(path, data.str());

  double max_step = 0.0;
  for (std::size_t i = 1; i < traj.waypoints.size(); ++i) {
    max_step = std::max(max_step, std::abs(traj.waypoints[i].alpha - traj.waypoints[i - 1].alpha));
  }
  const Waypoint& last = traj.waypoints.back();
  out << "mode: " << to_string(traj.mode) << '\n'
      << "waypoints: " << traj.waypoints.size() << '\n'
      << "terminal: x=" << fixed(last.x, 6) << " z=" << fixed(last.z, 6)
      << " alpha=" << fixed(to_degrees(last.alpha), 3) << " deg"
      << (traj.terminal_appended ? " (analytic)" : "") << '\n'
      << "max alpha step: " << fixed(to_degrees(max_step), 4) << " deg\n"
      << "output: " << path.string() << '\n';
  return kOk;
}

int cmd_shape(const Options& o, std::ostream& out) {
  const io::Format fmt = io::parse_format(o.format);
  const MaterialSpec material = resolve_material(o);
  const SolverConfig cfg = resolve_solver(o);
  const std::vector<double> heights = parse_list(o.heights.value_or("0.25,0.5,0.75"));
  std::vector<LiftMode> modes;
  if (o.mode == "both") {
    modes = {LiftMode::dexterous, LiftMode::vertical_naive};
  } else {
    modes = {parse_lift_mode(o.mode)};
  }
  if (o.samples < 2) throw ConfigError("--samples must be at least 2");

  std::vector<MaterialShape> shapes;
  for (const LiftMode mode : modes) {
    for (const double z1 : heights) shapes.push_back(shape_at(z1, material, mode, o.samples, cfg));
  }
  std::ostringstream data;
  io::write_shapes(data, shapes, fmt);
  const fs::path path = resolve_out(o, "shape" + extension(fmt));
  io::write_file_atomic(path, data.str());

  for (const MaterialShape& s : shapes) {
    out << "z1=" << io::format_number(s.z1) << " mode=" << to_string(s.mode)
        << " far_end_x=" << fixed(s.samples.front().x(), 9)
        << " length=" << fixed(polyline_length(std::span<const Vec2>(s.samples)), 9)
        << " samples=" << s.samples.size() << '\n';
  }
  out << "output: " << path.string() << '\n';
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const io::Format fmt = io::parse_format(o.format);
  const MaterialSpec material = resolve_material(o);
  const SolverConfig cfg = resolve_solver(o);
  const std::vector<double> ks = parse_k_range(o.k_range);
  const std::vector<double> heights =
      o.heights ? parse_list(*o.heights) : height_grid(material.length_L, o.step);
  const SweepTable table = sweep_friction(material, ks, heights, cfg);

  std::ostringstream data;
  io::write_sweep(data, table, fmt);
  const fs::path path = resolve_out(o, "sweep" + extension(fmt));
  io::write_file_atomic(path, data.str());

  std::size_t failed = 0;
  for (const SweepCell& c : table.cells) failed += c.ok ? 0 : 1;
  out << "k values: " << ks.size() << '\n'
      << "heights: " << heights.size() << '\n'
      << "cells: " << table.cells.size() << " (failed " << failed << ")\n"
      << "output: " << path.string() << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const TrajectoryRequest req = make_request(o, parse_lift_mode(o.mode));
  if (o.n < 2) throw ConfigError("--n must be at least 2");
  if (o.stride < 1) throw ConfigError("--stride must be at least 1");
  const Trajectory traj = generate_trajectory(req);
  const VerificationReport report = verify_trajectory(traj, o.n, o.stride);

  VerificationThresholds thresholds = VerificationThresholds::defaults_for(req.material);
  if (o.pos_tol) thresholds.position = *o.pos_tol;
  if (o.ang_tol_deg) thresholds.angle = to_radians(*o.ang_tol_deg);
  const bool passed = report.passes(thresholds.position, thresholds.angle, thresholds.tension);

  nlohmann::ordered_json j = io::report_to_json(report, thresholds, passed);
  j["n"] = o.n;
  j["stride"] = o.stride;
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (o.out) io::write_file_atomic(resolve_out(o, *o.out), text);
  return passed ? kOk : kVerificationFailed;
}

int cmd_presets(const Options& o, std::ostream& out) {
  io::write_presets(out, io::preset_catalog(), io::parse_format(o.format));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slip-free lifting planner for sheet materials grasped at one edge", "liftplan"};
  app.set_config("--config", "", "key=value file mirroring the long flags");
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--preset", o.preset, "material preset (see `presets`)");
  app.add_option("--L", o.L, "material length [m]");
  app.add_option("--q", o.q, "weight per unit length [N/m]");
  app.add_option("--k", o.k, "friction coefficient against the support surface");
  app.add_option("--f", o.f, "friction coefficient against the gripper");
  app.add_option("--step", o.step, "lift height step [m]")->capture_default_str();
  app.add_option("--mode", o.mode, "dexterous | vertical-naive (shape also: both)")
      ->capture_default_str();
  app.add_option("--heights", o.heights, "comma-separated lift heights [m]");
  app.add_option("--k-range", o.k_range, "friction sweep min:max:count")->capture_default_str();
  app.add_option("--format", o.format, "csv | jsonl")->capture_default_str();
  app.add_option("--out", o.out, "output file");
  app.add_option("--n", o.n, "links in the verification chain")->capture_default_str();
  app.add_option("--stride", o.stride, "verify every stride-th waypoint")->capture_default_str();
  app.add_option("--tol-u", o.tol_u, "absolute tolerance on the shape ratio");
  app.add_option("--tol-res", o.tol_res, "residual gate as a fraction of L");
  app.add_option("--max-iter", o.max_iter, "solver iteration cap");
  app.add_option("--samples", o.samples, "samples per shape series")->capture_default_str();
  app.add_option("--pos-tol", o.pos_tol, "verification position threshold [m]");
  app.add_option("--ang-tol-deg", o.ang_tol_deg, "verification angle threshold [deg]");
  app.add_flag("--no-terminal", o.no_terminal, "omit the analytic fully-hung waypoint");

  CLI::App* plan = app.add_subcommand("plan", "generate lifting waypoints");
  CLI::App* shape = app.add_subcommand("shape", "material shape series at given heights");
  CLI::App* sweep = app.add_subcommand("sweep", "trajectory parameters over a friction range");
  CLI::App* verify = app.add_subcommand("verify", "check a trajectory against the chain oracle");
  CLI::App* presets = app.add_subcommand("presets", "list material presets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (plan->parsed()) return cmd_plan(o, out);
    if (shape->parsed()) return cmd_shape(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (presets->parsed()) return cmd_presets(o, out);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  err << "error: no subcommand\n";
  return kConfigError;
}

}  // namespace liftplan::cli
