#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "liftplan/solver.hpp"
#include "reference_oracle.hpp"

namespace liftplan {
namespace {

MaterialSpec strip(double L, double q, double k) { return {L, q, k, 0.0, ""}; }
MaterialSpec demo() { return strip(1.0, 1.0, 0.2); }

TEST(ShapeRatioTest, FlatAtZeroHeight) {
  EXPECT_EQ(solve_shape_ratio(0.0, demo()), 0.0);
  EXPECT_EQ(solve_shape_ratio(0.0, strip(3.0, 2.0, 1.7)), 0.0);
}

TEST(ShapeRatioTest, FrozenDemoValues) {
  // 40-digit bisection values.
  EXPECT_NEAR(solve_shape_ratio(0.5, demo()), 2.6233873356991237, 1e-11);
  EXPECT_NEAR(solve_shape_ratio(0.5, strip(1.0, 1.0, 0.1)), 3.1728043294232479, 1e-11);
  EXPECT_NEAR(solve_shape_ratio(0.5, strip(1.0, 1.0, 3.0)), 1.3601570516088757, 1e-11);
}

TEST(ShapeRatioTest, AgreesWithBisectionReference) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> frac(0.0, 0.9999), ks(0.05, 3.0), Ls(0.1, 5.0);
  for (int i = 0; i < 500; ++i) {
    const double L = Ls(rng), k = ks(rng), z1 = frac(rng) * L;
    const double u = solve_shape_ratio(z1, strip(L, 1.0, k));
    const double ref = static_cast<double>(reference::bisect_shape_ratio(z1, L, k));
    EXPECT_NEAR(u, ref, 1e-9) << "L=" << L << " k=" << k << " z1=" << z1;
  }
}

TEST(ShapeRatioTest, UniqueRootIncreasesWithHeight) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ks(0.05, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const MaterialSpec m = strip(1.0, 1.0, ks(rng));
    double prev = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double z1 = 0.999 * i / 50.0;
      const double u = solve_shape_ratio(z1, m);
      EXPECT_GT(u, prev);
      EXPECT_NEAR(shape_ratio_lhs(u, m.friction_k_covering), z1 / m.friction_k_covering, 1e-10);
      prev = u;
    }
  }
}

TEST(ShapeRatioTest, LhsStrictlyIncreasing) {
  for (const double k : {0.05, 0.2, 1.0, 3.0}) {
    double prev = shape_ratio_lhs(0.0, k);
    for (double u = 0.01; u < 20.0; u += 0.01) {
      const double cur = shape_ratio_lhs(u, k);
      EXPECT_GT(cur, prev) << "k=" << k << " u=" << u;
      EXPECT_LT(cur, 1.0 / k);
      prev = cur;
    }
  }
}

TEST(ShapeRatioTest, HeightOutOfRange) {
  EXPECT_THROW(solve_shape_ratio(1.0, demo()), HeightOutOfRange);
  EXPECT_THROW(solve_shape_ratio(1.5, demo()), HeightOutOfRange);
  EXPECT_THROW(solve_shape_ratio(-0.1, demo()), HeightOutOfRange);
  EXPECT_THROW(solve_shape_ratio(1.0 - 1e-10, demo()), HeightOutOfRange);
  EXPECT_NO_THROW(solve_shape_ratio(1.0 - 1e-8, demo()));
}

TEST(ShapeRatioTest, IterationCapProducesSolverError) {
  SolverConfig cfg;
  cfg.max_iter = 1;
  EXPECT_THROW(solve_shape_ratio(0.5, demo(), cfg), SolverError);
}

TEST(ShapeRatioTest, BracketFailure) {
  SolverConfig cfg;
  cfg.u_bracket_max = 1e-6;
  cfg.max_iter = 3;  // three doublings cannot reach u ~ 2.6
  EXPECT_THROW(solve_shape_ratio(0.5, demo(), cfg), SolverError);
}

TEST(SolverConfigTest, Validation) {
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.tol_u = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.max_iter = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.u_bracket_max = -1.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.tol_residual_rel = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(SolveStateTest, ExactFlatState) {
  const CatenaryState s = solve_state(0.0, demo());
  EXPECT_EQ(s.u, 0.0);
  EXPECT_EQ(s.a, 0.2);
  EXPECT_EQ(s.H, 0.2);
  EXPECT_EQ(s.l1, 0.0);
  EXPECT_EQ(s.L1, 0.0);
  EXPECT_EQ(s.alpha, 0.0);
}

TEST(SolveStateTest, DemoHalfHeight) {
  const CatenaryState s = solve_state(0.5, demo());
  EXPECT_NEAR(s.a, 0.084353400337494641, 1e-12);
  EXPECT_NEAR(s.l1, 0.22129164216854163, 1e-12);
  EXPECT_NEAR(s.L1, 0.57823299831252682, 1e-12);
  EXPECT_NEAR(s.H, 0.084353400337494641, 1e-12);
  EXPECT_NEAR(to_degrees(s.alpha), 81.70016216, 1e-6);
  // Independent route to a through the grasp-point equation.
  EXPECT_NEAR(s.a, 0.5 / (std::cosh(s.u) - 1.0), 1e-12);
  EXPECT_EQ(s.l1, s.a * s.u);
  EXPECT_EQ(s.L1, s.a * std::sinh(s.u));
}

TEST(SolveStateTest, NearTerminal) {
  const CatenaryState s = solve_state(0.999, demo());
  EXPECT_GT(s.L1, 0.98);
  EXPECT_GT(to_degrees(s.alpha), 88.0);
  EXPECT_NEAR(s.L1, 0.99916665508261738, 1e-10);

  const CatenaryState t = solve_state(1.0 - 1e-6, demo());
  EXPECT_NEAR(t.L1, 0.99999916666665507, 1e-10);
  EXPECT_LT(t.a, 1e-6);
}

TEST(SolveStateTest, SmallHeightLimit) {
  // a -> L k as z1 -> 0; the gap shrinks like k^2 sqrt(2 z1 / k) L.
  double prev_gap = 1.0;
  for (const double z1 : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const CatenaryState s = solve_state(z1, demo());
    const double gap = 0.2 - s.a;
    EXPECT_GT(s.u, 0.0);
    EXPECT_GT(gap, 0.0);
    EXPECT_LT(gap, prev_gap);
    EXPECT_NEAR(gap, 0.04 * std::sqrt(2.0 * z1 / 0.2), 0.05 * gap);
    prev_gap = gap;
  }
}

TEST(SolveStateTest, InvariantsAndResiduals) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> frac(0.0, 0.9999), ks(0.05, 3.0), Ls(0.1, 5.0),
      qs(0.01, 10.0);
  for (int i = 0; i < 300; ++i) {
    const MaterialSpec m = strip(Ls(rng), qs(rng), ks(rng));
    const double z1 = frac(rng) * m.length_L;
    const CatenaryState s = solve_state(z1, m);
    const double tol = 1e-10 * m.length_L;
    EXPECT_LT(std::abs(grasp_residual(s)), tol);
    EXPECT_LT(std::abs(tension_residual(s, m)), tol);
    EXPECT_GE(s.L1, 0.0);
    EXPECT_LE(s.L1, m.length_L);
    EXPECT_EQ(s.H, m.weight_q * s.a);
    EXPECT_GE(s.alpha, 0.0);
    EXPECT_LT(s.alpha, kHalfPi);
  }
}

TEST(SolveStatesMonotoneTest, SingleFlat) {
  const std::vector<double> h{0.0};
  const auto states = solve_states_monotone(h, demo());
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(states[0].u, 0.0);
  EXPECT_EQ(states[0].a, 0.2);
}

TEST(SolveStatesMonotoneTest, DemoQuartiles) {
  const std::vector<double> h{0.25, 0.5, 0.75};
  const auto states = solve_states_monotone(h, demo());
  ASSERT_EQ(states.size(), 3u);
  EXPECT_LT(states[0].u, states[1].u);
  EXPECT_LT(states[1].u, states[2].u);
  EXPECT_NEAR(states[0].u, 1.7418709423495172, 1e-11);
  EXPECT_NEAR(states[2].u, 3.6327028801703515, 1e-11);
}

TEST(SolveStatesMonotoneTest, BatchMatchesIndependentSolves) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> frac(0.0, 0.9999);
  std::vector<double> h(100);
  for (double& z : h) z = frac(rng);
  std::sort(h.begin(), h.end());
  const auto batch = solve_states_monotone(h, demo());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const CatenaryState single = solve_state(h[i], demo());
    EXPECT_NEAR(batch[i].u, single.u, 1e-10);
    EXPECT_NEAR(batch[i].a, single.a, 1e-10);
    EXPECT_NEAR(batch[i].L1, single.L1, 1e-10);
  }
}

TEST(SolveStatesMonotoneTest, RejectsUnorderedHeights) {
  const std::vector<double> h{0.5, 0.25};
  EXPECT_THROW(solve_states_monotone(h, demo()), ConfigError);
  const std::vector<double> dup{0.25, 0.25};
  EXPECT_THROW(solve_states_monotone(dup, demo()), ConfigError);
  const std::vector<double> high{0.5, 1.0};
  EXPECT_THROW(solve_states_monotone(high, demo()), HeightOutOfRange);
}

}  // namespace
}  // namespace liftplan
