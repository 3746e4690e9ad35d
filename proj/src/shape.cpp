#include "liftplan/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "liftplan/trajectory.hpp"

namespace liftplan {
namespace {

constexpr std::size_t kMaxHangingIntervals = std::size_t{1} << 20;
constexpr double kChordDeficitRel = 1e-7;

// Point on the catenary at arc length s from its lowest point, relative to it.
Vec2 catenary_point(double s, double a) {
  const double r = std::hypot(a, s);
  return {a * std::asinh(s / a), s * s / (r + a)};
}

std::vector<Vec2> hanging_samples(const CatenaryState& state, const Vec2& origin,
                                  std::size_t intervals) {
  std::vector<Vec2> pts;
  pts.reserve(intervals);
  for (std::size_t j = 1; j < intervals; ++j) {
    const double s = state.L1 * static_cast<double>(j) / static_cast<double>(intervals);
    pts.push_back(origin + catenary_point(s, state.a));
  }
  pts.push_back(origin + Vec2(state.l1, state.z1));
  return pts;
}

}  // namespace

double polyline_length(std::span<const Vec2> points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) total += (points[i] - points[i - 1]).norm();
  return total;
}

MaterialShape shape_at(double z1, const MaterialSpec& material, LiftMode mode,
                       std::size_t n_samples, const SolverConfig& cfg) {
  if (n_samples < 2) throw ConfigError("shape_at: need at least two samples");
  const CatenaryState state = solve_state(z1, material, cfg);
  const double L = material.length_L;

  MaterialShape shape;
  shape.z1 = z1;
  shape.mode = mode;
  shape.lying_length = L - state.L1;

  const double far_x = mode == LiftMode::dexterous ? 0.0 : L - state.l1 - shape.lying_length;
  const std::size_t intervals = n_samples - 1;

  std::size_t lying_intervals = intervals;
  std::size_t hang_intervals = 0;
  if (state.L1 > 0.0) {
    lying_intervals = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(intervals) *
                                                 shape.lying_length / L)));
    hang_intervals = intervals > lying_intervals ? intervals - lying_intervals : 1;
  }

  shape.samples.reserve(lying_intervals + hang_intervals + 1);
  for (std::size_t j = 0; j <= lying_intervals; ++j) {
    shape.samples.emplace_back(
        far_x + shape.lying_length * static_cast<double>(j) / static_cast<double>(lying_intervals),
        0.0);
  }
  if (hang_intervals == 0) return shape;

  const Vec2 origin = shape.samples.back();
  std::vector<Vec2> hanging = hanging_samples(state, origin, hang_intervals);
  const auto deficit = [&](const std::vector<Vec2>& pts) {
    return state.L1 - ((pts.front() - origin).norm() + polyline_length(pts));
  };
  while (deficit(hanging) > kChordDeficitRel * L && hang_intervals < kMaxHangingIntervals) {
    hang_intervals *= 2;
    hanging = hanging_samples(state, origin, hang_intervals);
  }
  shape.samples.insert(shape.samples.end(), hanging.begin(), hanging.end());
  return shape;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

SweepTable sweep_friction(const MaterialSpec& base, std::span<const double> k_values,
                          std::span<const double> heights, const SolverConfig& cfg) {
  if (k_values.empty() || heights.empty()) {
    throw ConfigError("sweep_friction: k values and heights must be nonempty");
  }
  for (const double k : k_values) {
    if (!(k > 0.0)) throw ConfigError("sweep_friction: friction values must be positive");
  }
  for (const double z1 : heights) {
    if (!(z1 >= 0.0 && z1 < base.length_L)) {
      throw ConfigError("sweep_friction: heights must lie in [0, L)");
    }
  }

  SweepTable table;
  table.k_values.assign(k_values.begin(), k_values.end());
  table.heights.assign(heights.begin(), heights.end());
  table.cells.reserve(k_values.size() * heights.size());
  for (const double k : k_values) {
    MaterialSpec material = base;
    material.friction_k_covering = k;
    for (const double z1 : heights) {
      SweepCell cell;
      cell.k = k;
      cell.z1 = z1;
      try {
        const Waypoint wp = make_waypoint(solve_state(z1, material, cfg), material,
                                          LiftMode::dexterous);
        cell.x = wp.x;
        cell.z = wp.z;
        cell.alpha = wp.alpha;
        cell.ok = true;
      } catch (const SolverError& e) {
        cell.error = e.what();
      }
      table.cells.push_back(std::move(cell));
    }
  }

  table.envelopes.reserve(heights.size());
  for (std::size_t iz = 0; iz < heights.size(); ++iz) {
    SweepEnvelope env;
    env.z1 = heights[iz];
    env.x_min = env.alpha_min = std::numeric_limits<double>::infinity();
    env.x_max = env.alpha_max = -std::numeric_limits<double>::infinity();
    for (std::size_t ik = 0; ik < k_values.size(); ++ik) {
      const SweepCell& c = table.at(ik, iz);
      if (!c.ok) continue;
      ++env.solved;
      env.x_min = std::min(env.x_min, c.x);
      env.x_max = std::max(env.x_max, c.x);
      env.alpha_min = std::min(env.alpha_min, c.alpha);
      env.alpha_max = std::max(env.alpha_max, c.alpha);
    }
    if (env.solved == 0) {
      env.x_min = env.x_max = env.alpha_min = env.alpha_max =
          std::numeric_limits<double>::quiet_NaN();
    }
    table.envelopes.push_back(env);
  }
  return table;
}

}  // namespace liftplan
