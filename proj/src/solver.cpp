#include "liftplan/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace liftplan {
namespace {

// cosh(u) - 1 without cancellation near u = 0.
double cosh_m1(double u) {
  const double s = std::sinh(0.5 * u);
  return 2.0 * s * s;
}

double shape_ratio_slope(double u, double k) {
  const double den = 1.0 + k * std::sinh(u);
  return (std::sinh(u) + k * cosh_m1(u)) / (den * den);
}

// Largest u whose cosh still fits in a double with margin.
constexpr double kUOverflow = 700.0;

void check_height(double z1, const MaterialSpec& material) {
  const double L = material.length_L;
  if (!(z1 >= 0.0)) throw HeightOutOfRange("lift height must be nonnegative");
  if (z1 >= L * (1.0 - kTerminalEps)) {
    throw HeightOutOfRange("lift height " + std::to_string(z1) +
                           " is at or beyond the terminal cap for L = " +
                           std::to_string(L));
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tol_u > 0.0)) throw ConfigError("solver: tol_u must be positive");
  if (!(tol_residual_rel > 0.0)) throw ConfigError("solver: tol_residual must be positive");
  if (max_iter < 1) throw ConfigError("solver: max_iter must be at least 1");
  if (!(u_bracket_max > 0.0)) throw ConfigError("solver: u_bracket_max must be positive");
}

double shape_ratio_lhs(double u, double k) {
  return cosh_m1(u) / (1.0 + k * std::sinh(u));
}

double solve_shape_ratio(double z1, const MaterialSpec& material, const SolverConfig& cfg,
                         double u_lower) {
  material.validate();
  cfg.validate();
  check_height(z1, material);
  if (z1 == 0.0) return 0.0;

  const double k = material.friction_k_covering;
  const double target = z1 / (material.length_L * k);
  const auto f = [&](double u) { return shape_ratio_lhs(u, k) - target; };

  double lo = std::max(u_lower, 0.0);
  if (f(lo) > 0.0) lo = 0.0;
  double hi = std::max(cfg.u_bracket_max, lo);
  for (int grow = 0; f(hi) < 0.0; ++grow) {
    if (grow >= cfg.max_iter || 2.0 * hi > kUOverflow) {
      throw SolverError("solve_shape_ratio: failed to bracket root for z1 = " +
                        std::to_string(z1));
    }
    lo = hi;
    hi *= 2.0;
  }
  if (f(hi) == 0.0) return hi;

  // Newton from the small-u asymptote g(u) ~ u^2 / 2, falling back to
  // bisection whenever the step leaves the bracket.
  double u = std::clamp(std::sqrt(2.0 * target), lo, hi);
  if (u <= lo || u >= hi) u = 0.5 * (lo + hi);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double fu = f(u);
    if (fu == 0.0) return u;
    if (fu < 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    const double slope = shape_ratio_slope(u, k);
    double next = slope > 0.0 ? u - fu / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) < cfg.tol_u || hi - lo < cfg.tol_u) return next;
    u = next;
  }
  throw SolverError("solve_shape_ratio: no convergence within " +
                    std::to_string(cfg.max_iter) + " iterations for z1 = " +
                    std::to_string(z1));
}

namespace {

CatenaryState assemble_state(double z1, double u, const MaterialSpec& material,
                             const SolverConfig& cfg) {
  const double L = material.length_L;
  const double k = material.friction_k_covering;
  CatenaryState s;
  s.z1 = z1;
  s.u = u;
  if (u == 0.0) {
    s.a = L * k;
    s.H = material.weight_q * s.a;
    return s;
  }
  const double sh = std::sinh(u);
  s.a = L * k / (1.0 + k * sh);
  s.l1 = s.a * u;
  s.L1 = std::min(s.a * sh, L);
  s.H = material.weight_q * s.a;
  s.alpha = std::atan(sh);

  const double gate = cfg.tol_residual_rel * L;
  if (std::abs(grasp_residual(s)) > gate || std::abs(tension_residual(s, material)) > gate) {
    throw SolverError("solve_state: residual gate failed at z1 = " + std::to_string(z1));
  }
  return s;
}

}  // namespace

CatenaryState solve_state(double z1, const MaterialSpec& material, const SolverConfig& cfg) {
  const double u = solve_shape_ratio(z1, material, cfg);
  return assemble_state(z1, u, material, cfg);
}

std::vector<CatenaryState> solve_states_monotone(std::span<const double> heights,
                                                 const MaterialSpec& material,
                                                 const SolverConfig& cfg) {
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (!(heights[i] > heights[i - 1])) {
      throw ConfigError("solve_states_monotone: heights must be strictly increasing");
    }
  }
  std::vector<CatenaryState> states;
  states.reserve(heights.size());
  double u_prev = 0.0;
  for (const double z1 : heights) {
    const double u = solve_shape_ratio(z1, material, cfg, u_prev);
    states.push_back(assemble_state(z1, u, material, cfg));
    u_prev = u;
  }
  return states;
}

double grasp_residual(const CatenaryState& state) {
  return state.a * cosh_m1(state.u) - state.z1;
}

double tension_residual(const CatenaryState& state, const MaterialSpec& material) {
  const double k = material.friction_k_covering;
  return state.a * (1.0 + k * std::sinh(state.u)) - material.length_L * k;
}

}  // namespace liftplan
