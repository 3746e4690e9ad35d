#include "liftplan/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace liftplan {

ChainEquilibrium chain_hang(double H, double q, double L1, std::size_t n) {
  if (!(H > 0.0) || !(q > 0.0) || !(L1 > 0.0)) {
    throw DomainError("chain_hang: H, q and L1 must be positive");
  }
  if (n < 2) throw DomainError("chain_hang: need at least two links");

  ChainEquilibrium chain;
  chain.n_links = n;
  chain.link_length = L1 / static_cast<double>(n);
  chain.H_input = H;
  chain.node_positions.reserve(n + 1);
  chain.link_angles.reserve(n);

  const double h = chain.link_length;
  Vec2 p = Vec2::Zero();
  chain.node_positions.push_back(p);
  for (std::size_t i = 1; i <= n; ++i) {
    const double vertical = q * (static_cast<double>(i) - 0.5) * h;
    const double tension = std::hypot(H, vertical);
    p += h * Vec2(H / tension, vertical / tension);
    chain.node_positions.push_back(p);
    chain.link_angles.push_back(std::atan2(vertical, H));
  }
  chain.endpoint = chain.node_positions.back();
  chain.endpoint_angle = chain.link_angles.back();
  return chain;
}

void VerificationReport::absorb(const VerificationReport& other) {
  max_position_error = std::max(max_position_error, other.max_position_error);
  angle_error = std::max(angle_error, other.angle_error);
  tension_error = std::max(tension_error, other.tension_error);
  checked += other.checked;
  skipped += other.skipped;
}

VerificationThresholds VerificationThresholds::defaults_for(const MaterialSpec& material) {
  const double L = material.length_L;
  const double tension_scale =
      material.weight_q * L * std::max(material.friction_k_covering, 1.0);
  return {1e-3 * L, to_radians(0.1), 1e-9 * tension_scale};
}

VerificationReport verify_state(const CatenaryState& state, const MaterialSpec& material,
                                std::size_t n) {
  VerificationReport report;
  report.checked = 1;
  if (state.L1 == 0.0) return report;  // flat: nothing hangs

  const ChainEquilibrium chain = chain_hang(state.H, material.weight_q, state.L1, n);
  report.max_position_error = (chain.endpoint - Vec2(state.l1, state.z1)).norm();
  report.angle_error = std::abs(chain.endpoint_angle - state.alpha);
  report.tension_error = std::abs(state.H - tension_from_friction(material, state.L1));
  return report;
}

namespace {

// Compares the waypoint itself with the pose the chain predicts for it.
VerificationReport verify_waypoint(const Waypoint& wp, const Trajectory& traj, std::size_t n) {
  const MaterialSpec& material = traj.material;
  VerificationReport report;
  if (wp.z1 >= material.length_L * (1.0 - kTerminalEps)) {
    report.skipped = 1;
    return report;
  }
  const CatenaryState state = solve_state(wp.z1, material, traj.solver);
  report.checked = 1;
  if (state.L1 == 0.0) {
    report.max_position_error = (Vec2(wp.x, wp.z) - Vec2(material.length_L, 0.0)).norm();
    report.angle_error = std::abs(wp.edge_alpha);
    return report;
  }
  const ChainEquilibrium chain = chain_hang(state.H, material.weight_q, state.L1, n);
  const Vec2 predicted =
      traj.mode == LiftMode::dexterous
          ? Vec2(material.length_L - state.L1 + chain.endpoint.x(), chain.endpoint.y())
          : Vec2(material.length_L, chain.endpoint.y());
  report.max_position_error = std::max((chain.endpoint - Vec2(state.l1, state.z1)).norm(),
                                       (Vec2(wp.x, wp.z) - predicted).norm());
  report.angle_error = std::max(std::abs(chain.endpoint_angle - state.alpha),
                                std::abs(chain.endpoint_angle - wp.edge_alpha));
  report.tension_error = std::abs(state.H - tension_from_friction(material, state.L1));
  return report;
}

}  // namespace

VerificationReport verify_trajectory(const Trajectory& traj, std::size_t n, std::size_t stride) {
  if (traj.waypoints.empty()) throw DomainError("verify_trajectory: empty trajectory");
  if (stride == 0) throw DomainError("verify_trajectory: stride must be positive");
  VerificationReport total;
  const std::size_t last = traj.waypoints.size() - 1;
  for (std::size_t i = 0; i <= last; i += stride) {
    total.absorb(verify_waypoint(traj.waypoints[i], traj, n));
  }
  if (last % stride != 0) total.absorb(verify_waypoint(traj.waypoints[last], traj, n));
  return total;
}

}  // namespace liftplan
