#include "wavem/model.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace wavem;
using testutil::Rng;

TEST_SUITE_BEGIN("model");

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ModelParams::standard());
  CHECK_THROWS_AS(ModelParams::standard(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::standard(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::standard(2.0, -1.0), std::invalid_argument);
  ModelParams bad = ModelParams::standard();
  bad.a3 = 2.0;  // breaks c = a3 - a2
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(ModelParams::standard(2.0, 1.0).double_sonic_z() ==
        doctest::Approx(0.5773502691896258).epsilon(1e-12));
}

TEST_CASE("flux evaluation") {
  ModelParams zero{};  // raw aggregate: all offsets zero for the pure quadratic
  zero.b1 = 2.0;
  zero.a3 = 0.0;
  auto [f0, g0] = flux_eval(zero, 0.0, 0.0);
  CHECK(f0 == 0.0);
  CHECK(g0 == 0.0);
  auto [f1, g1] = flux_eval(zero, 1.0, 0.0);
  CHECK(f1 == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(g1 == 0.0);
  const ModelParams mp = ModelParams::standard();
  auto [f2, g2] = flux_eval(mp, 1.0, 1.0);
  CHECK(f2 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g2 == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("rh residual on the diagonal vanishes exactly") {
  const ModelParams mp = ModelParams::standard();
  StatePair sp;
  sp.u = sp.up = 0.37;
  sp.v = sp.vp = -1.2;
  sp.s = 5.5;
  auto [r1, r2] = rh_residual(mp, sp);
  CHECK(r1 == 0.0);
  CHECK(r2 == 0.0);
}

TEST_CASE("rh residual is generically nonzero off shock data") {
  const ModelParams mp = ModelParams::standard();
  Rng rng(41);
  int nonzero = 0;
  for (int i = 0; i < 100; ++i) {
    StatePair sp{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                 rng.uniform(-2, 2), rng.uniform(-2, 2)};
    auto [r1, r2] = rh_residual(mp, sp);
    if (std::abs(r1) + std::abs(r2) > 1e-6) ++nonzero;
  }
  CHECK(nonzero > 95);
}

TEST_CASE("chart parametrization hits the manifold identically") {
  const ModelParams mp = ModelParams::standard();
  SUBCASE("fold points") {
    for (double z : {-2.0, -0.3, 0.0, 1.0, 4.0}) {
      const BlowupPoint bp = chart_to_blowup(mp, {z, 0.0, 0.0});
      CHECK(bp.utilde == doctest::Approx(2.0 * z / (z * z + 1.0)).epsilon(1e-14));
      CHECK(bp.v1 == doctest::Approx(1.0 / (z * z + 1.0)).epsilon(1e-14));
      CHECK(std::abs(manifold_residual(mp, bp)) < 1e-14);
    }
  }
  SUBCASE("hand value at z=0, t=1") {
    const BlowupPoint bp = chart_to_blowup(mp, {0.0, 1.0, 0.0});
    CHECK(bp.utilde == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(bp.v1 == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("random points, 1e4 sweep") {
    Rng rng(42);
    double maxg = 0;
    for (int i = 0; i < 10000; ++i) {
      const ChartPoint cp{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
      const BlowupPoint bp = chart_to_blowup(mp, cp);
      const double scale = 1.0 + std::abs(bp.utilde) + std::abs(bp.v1) + mp.c;
      maxg = std::max(maxg, std::abs(manifold_residual(mp, bp)) / scale);
    }
    CHECK(maxg < 1e-12);
  }
}

TEST_CASE("manifold residual hand value") {
  const ModelParams mp = ModelParams::standard();
  CHECK(manifold_residual(mp, BlowupPoint{0.0, 0.0, 0.0, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("chart round trip is the identity") {
  const ModelParams mp = ModelParams::standard();
  Rng rng(43);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const ChartPoint cp{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    if (cp.z == 0.0) continue;
    const ChartPoint back = chart_from_blowup(mp, chart_to_blowup(mp, cp));
    worst = std::max({worst, testutil::relerr(back.z, cp.z),
                      testutil::relerr(back.t, cp.t), testutil::relerr(back.y, cp.y)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("chart_from_blowup error paths") {
  const ModelParams mp = ModelParams::standard();
  SUBCASE("off-manifold input is rejected") {
    CHECK_THROWS_AS(chart_from_blowup(mp, BlowupPoint{3.0, 3.0, 0.0, 2.0}),
                    NotOnManifold);
  }
  SUBCASE("z = 0 cannot recover Y") {
    const BlowupPoint bp = chart_to_blowup(mp, {0.0, 0.5, 1.0});
    CHECK_THROWS_AS(chart_from_blowup(mp, bp), std::domain_error);
  }
}

TEST_CASE("blow-down to states") {
  const ModelParams mp = ModelParams::standard();
  SUBCASE("fold points map to the diagonal") {
    const StatePair sp = chart_to_states(mp, {1.0, 0.0, 0.0});
    CHECK(sp.u == doctest::Approx(sp.up).epsilon(1e-15));
    CHECK(sp.v == doctest::Approx(sp.vp).epsilon(1e-15));
  }
  SUBCASE("z = 0 keeps u = u' with v jump") {
    const StatePair sp = chart_to_states(mp, {0.0, 0.0, 1.0});
    CHECK(sp.u == doctest::Approx(sp.up).epsilon(1e-15));
    CHECK(sp.v - sp.vp == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("rh residual vanishes for |X| > 1e-6, 1e4 sweep") {
    Rng rng(44);
    double worst = 0;
    int n = 0;
    while (n < 10000) {
      const ChartPoint cp{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
      if (std::abs(cp.z * cp.y) <= 1e-6) continue;
      ++n;
      const StatePair sp = chart_to_states(mp, cp);
      auto [r1, r2] = rh_residual(mp, sp);
      const auto [f1, g1] = flux_eval(mp, sp.u, sp.v);
      const auto [f2, g2] = flux_eval(mp, sp.up, sp.vp);
      const double scale = 1.0 + std::abs(f1) + std::abs(f2) + std::abs(g1) + std::abs(g2);
      worst = std::max(worst, (std::abs(r1) + std::abs(r2)) / scale);
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("offsets feed through the affine substitutions") {
  // A non-default instance with every offset active.
  ModelParams mp;
  mp.b1 = 2.5;
  mp.c = 1.0;
  mp.a1 = 0.3;
  mp.a2 = -0.2;
  mp.a3 = 0.8;
  mp.a4 = -0.1;
  mp.validate();
  Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const ChartPoint cp{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (std::abs(cp.z * cp.y) <= 1e-6) continue;
    const StatePair sp = chart_to_states(mp, cp);
    auto [r1, r2] = rh_residual(mp, sp);
    CHECK(std::abs(r1) + std::abs(r2) < 1e-9 * (1.0 + std::abs(sp.s)));
  }
}

TEST_SUITE_END();
