#pragma once

#include <span>
#include <vector>

#include "liftplan/model.hpp"

namespace liftplan {

struct SolverConfig {
  double tol_u = 1e-12;
  // Absolute residual gate for the grasp-point and tension equations, as a
  // fraction of L (the gate is tol_residual_rel * L).
  double tol_residual_rel = 1e-10;
  int max_iter = 200;
  double u_bracket_max = 1.0;

  void validate() const;
};

// Heights at or above L * (1 - kTerminalEps) have no finite catenary root.
inline constexpr double kTerminalEps = 1e-9;

// Left-hand side of the reduced equation in the shape ratio u = l1 / a:
// (cosh u - 1) / (1 + k sinh u). Strictly increasing on u >= 0, supremum 1/k.
double shape_ratio_lhs(double u, double k);

// Unique u >= 0 solving shape_ratio_lhs(u, k) == z1 / (L k).
// `u_lower` is a known lower bound on the root (warm start).
double solve_shape_ratio(double z1, const MaterialSpec& material,
                         const SolverConfig& cfg = {}, double u_lower = 0.0);

// Full equilibrium at height z1. At z1 == 0 returns the exact flat state.
CatenaryState solve_state(double z1, const MaterialSpec& material,
                          const SolverConfig& cfg = {});

// Solves a strictly increasing list of heights, using each root as the lower
// bracket for the next.
std::vector<CatenaryState> solve_states_monotone(std::span<const double> heights,
                                                 const MaterialSpec& material,
                                                 const SolverConfig& cfg = {});

// Residuals a (cosh u - 1) - z1 and a (1 + k sinh u) - L k.
double grasp_residual(const CatenaryState& state);
double tension_residual(const CatenaryState& state, const MaterialSpec& material);

}  // namespace liftplan
