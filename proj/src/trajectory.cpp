#include "liftplan/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace liftplan {
namespace {

// Keep w >= 0 so consecutive quaternions stay on one hemisphere.
Quat canonical(Quat q) {
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  return q;
}

}  // namespace

std::vector<double> height_grid(double length_L, double step_dz) {
  if (!(step_dz > 0.0) || !(step_dz < length_L)) {
    throw ConfigError("step_dz must satisfy 0 < step_dz < L");
  }
  const double cap = length_L * (1.0 - kTerminalEps);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(length_L / step_dz) + 2);
  for (std::size_t i = 0;; ++i) {
    const double z1 = static_cast<double>(i) * step_dz;
    if (z1 >= cap) break;
    grid.push_back(z1);
  }
  return grid;
}

Waypoint make_waypoint(const CatenaryState& state, const MaterialSpec& material, LiftMode mode) {
  Waypoint wp;
  wp.z1 = state.z1;
  wp.edge_alpha = state.alpha;
  if (mode == LiftMode::dexterous) {
    const Vec2 p = waypoint_coordinates(state, material);
    wp.x = p.x();
    wp.z = p.y();
    wp.alpha = state.alpha;
  } else {
    wp.x = material.length_L;
    wp.z = state.z1;
    wp.alpha = state.z1 > 0.0 ? kHalfPi : 0.0;
  }
  wp.quat = canonical(quaternion_from_pitch(wp.alpha));
  return wp;
}

Waypoint terminal_waypoint(const MaterialSpec& material) {
  Waypoint wp;
  wp.z1 = material.length_L;
  wp.x = 0.0;
  wp.z = material.length_L;
  wp.alpha = kHalfPi;
  wp.edge_alpha = kHalfPi;
  wp.quat = canonical(quaternion_from_pitch(kHalfPi));
  return wp;
}

Trajectory generate_trajectory(const TrajectoryRequest& req) {
  req.material.validate();
  req.solver.validate();
  const std::vector<double> heights = height_grid(req.material.length_L, req.step_dz);
  const std::vector<CatenaryState> states =
      solve_states_monotone(heights, req.material, req.solver);

  Trajectory traj;
  traj.material = req.material;
  traj.mode = req.mode;
  traj.step_dz = req.step_dz;
  traj.solver = req.solver;
  traj.waypoints.reserve(states.size() + 1);
  for (const CatenaryState& s : states) {
    traj.waypoints.push_back(make_waypoint(s, req.material, req.mode));
  }
  if (req.include_terminal && req.mode == LiftMode::dexterous) {
    traj.waypoints.push_back(terminal_waypoint(req.material));
    traj.terminal_appended = true;
  }
  return traj;
}

double slip_distance_naive(double z1, const MaterialSpec& material, const SolverConfig& cfg) {
  const CatenaryState s = solve_state(z1, material, cfg);
  return s.L1 - s.l1;
}

double polyline_length(const std::vector<Waypoint>& waypoints) {
  double total = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    total += std::hypot(waypoints[i].x - waypoints[i - 1].x, waypoints[i].z - waypoints[i - 1].z);
  }
  return total;
}

Trajectory resample_by_path_length(const Trajectory& traj, double ds) {
  const auto& src = traj.waypoints;
  if (src.size() < 2) throw DomainError("resample: need at least two waypoints");
  if (!(ds > 0.0)) throw DomainError("resample: ds must be positive");

  std::vector<double> arc(src.size(), 0.0);
  for (std::size_t i = 1; i < src.size(); ++i) {
    arc[i] = arc[i - 1] + std::hypot(src[i].x - src[i - 1].x, src[i].z - src[i - 1].z);
  }
  const double total = arc.back();
  if (!(total > 0.0)) throw DomainError("resample: path has zero length");

  Trajectory out = traj;
  out.waypoints.clear();
  const double stop = total * (1.0 - 1e-12);
  for (std::size_t j = 0;; ++j) {
    const double s = static_cast<double>(j) * ds;
    if (j > 0 && s >= stop) break;
    // First vertex with arc > s; the sample lies on the segment before it.
    auto it = std::upper_bound(arc.begin(), arc.end(), s);
    const std::size_t hi = std::min<std::size_t>(
        static_cast<std::size_t>(std::distance(arc.begin(), it)), src.size() - 1);
    const std::size_t lo = hi - 1;
    const double span = arc[hi] - arc[lo];
    const double t = span > 0.0 ? (s - arc[lo]) / span : 0.0;
    const Waypoint& a = src[lo];
    const Waypoint& b = src[hi];
    Waypoint w;
    w.z1 = a.z1 + t * (b.z1 - a.z1);
    w.x = a.x + t * (b.x - a.x);
    w.z = a.z + t * (b.z - a.z);
    w.alpha = a.alpha + t * (b.alpha - a.alpha);
    w.edge_alpha = a.edge_alpha + t * (b.edge_alpha - a.edge_alpha);
    w.quat = canonical(a.quat.slerp(t, b.quat));
    out.waypoints.push_back(w);
  }
  out.waypoints.front() = src.front();
  out.waypoints.push_back(src.back());
  return out;
}

std::string_view to_string(LiftMode mode) {
  return mode == LiftMode::dexterous ? "dexterous" : "vertical-naive";
}

LiftMode parse_lift_mode(std::string_view text) {
  if (text == "dexterous") return LiftMode::dexterous;
  if (text == "vertical-naive") return LiftMode::vertical_naive;
  throw ConfigError("unknown mode '" + std::string(text) +
                    "' (expected dexterous or vertical-naive)");
}

}  // namespace liftplan
