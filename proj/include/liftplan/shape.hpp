#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liftplan/model.hpp"
#include "liftplan/solver.hpp"

namespace liftplan {

// Whole strip at one lift height: the flat lying part followed by the
// hanging catenary, from the far end to the grasped edge A.
struct MaterialShape {
  double z1 = 0.0;
  std::vector<Vec2> samples;
  double lying_length = 0.0;  // l2 = L - L1
  LiftMode mode = LiftMode::dexterous;
};

// Samples are uniform in arc length within the lying and the hanging parts.
// The hanging part gets at least its proportional share of n_samples and is
// refined until chord shortening stays below 1e-7 L.
MaterialShape shape_at(double z1, const MaterialSpec& material, LiftMode mode,
                       std::size_t n_samples, const SolverConfig& cfg = {});

double polyline_length(std::span<const Vec2> points);

struct SweepCell {
  double k = 0.0;
  double z1 = 0.0;
  double x = 0.0;
  double z = 0.0;
  double alpha = 0.0;
  bool ok = false;
  std::string error;
};

// Min/max over all friction values that solved at one height.
struct SweepEnvelope {
  double z1 = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  std::size_t solved = 0;
};

struct SweepTable {
  std::vector<double> k_values;
  std::vector<double> heights;
  std::vector<SweepCell> cells;  // k-major: cells[ik * heights.size() + iz]
  std::vector<SweepEnvelope> envelopes;

  const SweepCell& at(std::size_t ik, std::size_t iz) const {
    return cells[ik * heights.size() + iz];
  }
};

// Dexterous waypoint parameters over a (k, z1) grid. Per-cell solver failures
// are recorded in the cell and left out of the envelopes.
SweepTable sweep_friction(const MaterialSpec& base, std::span<const double> k_values,
                          std::span<const double> heights, const SolverConfig& cfg = {});

// `count` evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace liftplan
