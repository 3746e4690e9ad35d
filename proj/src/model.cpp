#include "liftplan/model.hpp"

namespace liftplan {

void MaterialSpec::validate() const {
  if (!(length_L > 0.0)) throw DomainError("material: length L must be positive");
  if (!(weight_q > 0.0)) throw DomainError("material: weight q must be positive");
  if (!(friction_k_covering > 0.0)) {
    throw DomainError("material: friction k must be positive");
  }
  if (!(friction_f_gripper >= 0.0)) {
    throw DomainError("material: gripper friction f must be nonnegative");
  }
}

Vec2 waypoint_coordinates(const CatenaryState& state, const MaterialSpec& material) {
  if (state.l1 == 0.0) return {material.length_L, 0.0};
  if (!(state.H > 0.0)) {
    throw DomainError("waypoint_coordinates: singular state (H = 0 with l1 > 0)");
  }
  const double a = state.H / material.weight_q;
  const double z = a * (std::cosh(state.l1 / a) - 1.0);
  return {material.length_L - state.L1 + state.l1, z};
}

}  // namespace liftplan
