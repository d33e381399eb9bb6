#include "wavem/curves.hpp"

#include <doctest.h>

#include "test_util.hpp"
#include "wavem/model.hpp"
#include "wavem/surfaces.hpp"

using namespace wavem;
using testutil::Rng;
using testutil::relerr;

namespace {
const ModelParams kDefault = ModelParams::standard();

// Test-side transcription of the through-point parametrization with its
// coefficients spelled out, used as an independent oracle for the composed
// closed form.
void through_point_coefficients(const ModelParams& mp, const ChartPoint& p0,
                                double z, double& y_out, double& t_out) {
  const double b1 = mp.b1, c = mp.c, z0 = p0.z, t0 = p0.t, y0 = p0.y;
  const double w0 = z0 * z0 + 1.0;
  const double z04 = z0 * z0 * z0 * z0;
  const double A = -(2 * c + 2 * c * t0 * z0 * w0 + y0 * w0);
  const double B = 4 * c * z0 + 2 * c * t0 * (z04 - 1) + b1 * y0 * z0 * w0;
  const double C = -2 * c * z0 * z0 + 2 * c * t0 * z0 * w0 + y0 * w0;
  const double D = 2 * c * b1 + 2 * c * b1 * t0 * z0 * w0 + b1 * y0 * w0;
  const double E = 2 * c * t0 * (1 - z04) - b1 * z0 * y0 * w0 - 4 * c * z0;
  const double F = 4 * c * w0 + 2 * c * b1 * t0 * z0 * w0 + b1 * y0 * w0 - 2 * c * b1 * z0 * z0;
  const double G = -4 * c * z0 + 2 * c * t0 * (1 - z04) - b1 * z0 * y0 * w0;
  const double z2 = z * z;
  y_out = (A * z2 + B * z + C) / (w0 * ((b1 - 1) * z2 + 1));
  t_out = (((D * z + E) * z + F) * z + G) /
          (2 * c * w0 * ((b1 - 1) * z2 * z2 + b1 * z2 + 1));
}
}  // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("speed at chart points") {
  CHECK(speed_at(kDefault, {0.0, 1.0, 0.0}) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(speed_at(kDefault, {1.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(speed_at(kDefault, {0.0, 0.0, 3.0}) == 0.0);
  // The chart polynomial form agrees with the RH-derived blow-up speed.
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const ChartPoint cp{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
    const double s1 = speed_at(kDefault, cp);
    const double s2 = blowup_speed(kDefault, chart_to_blowup(kDefault, cp));
    CHECK(relerr(s1, s2) < 1e-12);
  }
}

TEST_CASE("curve evaluation") {
  SUBCASE("secondary-bifurcation curve passes through Y(0) = -2c") {
    const HugoniotCurve cu = curve_from_kl(kDefault, 0.0, -2.0, false);
    CHECK(eval_curve(kDefault, cu, 0.0).y == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(is_secondary(kDefault, cu));
  }
  SUBCASE("characteristic roots do land on Y = 0") {
    const HugoniotCurve cu = curve_from_kl(kDefault, 1.5, 0.7, false);
    for (const Root& r : intersect_characteristic(kDefault, cu).roots)
      CHECK(std::abs(eval_curve(kDefault, cu, r.x).y) < 1e-10);
  }
  SUBCASE("manifold closure, 1e4 random (k, l, z)") {
    Rng rng(12);
    double maxg = 0;
    for (int i = 0; i < 10000; ++i) {
      const HugoniotCurve cu =
          curve_from_kl(kDefault, rng.uniform(-5, 5), rng.uniform(-5, 5), i % 2 == 0);
      const ChartPoint cp = eval_curve(kDefault, cu, rng.uniform(-5, 5));
      const BlowupPoint bp = chart_to_blowup(kDefault, cp);
      const double scale = 1.0 + std::abs(bp.utilde) + std::abs(bp.v1) + kDefault.c;
      maxg = std::max(maxg, std::abs(manifold_residual(kDefault, bp)) / scale);
    }
    CHECK(maxg < 1e-12);
  }
}

TEST_CASE("invariants from a point") {
  SUBCASE("fold point hand values") {
    const auto [k, l] = kl_from_point(kDefault, {1.0, 0.0, 0.0});
    CHECK(k == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(l == doctest::Approx(-1.0).epsilon(1e-15));
  }
  SUBCASE("origin maps to zero invariants") {
    const auto [k, l] = kl_from_point(kDefault, {0.0, 0.0, 0.0});
    CHECK(k == 0.0);
    CHECK(l == 0.0);
  }
  SUBCASE("round trip through curve evaluation, 1e4 points") {
    Rng rng(13);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const ChartPoint p{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
      const auto [k, l] = kl_from_point(kDefault, p);
      const ChartPoint q = eval_curve(kDefault, curve_from_kl(kDefault, k, l, false), p.z);
      worst = std::max({worst, relerr(q.t, p.t), relerr(q.y, p.y)});
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("curve through a point") {
  SUBCASE("through-point identity, plain and prime") {
    Rng rng(14);
    for (int i = 0; i < 2000; ++i) {
      const ChartPoint p{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
      for (bool prime : {false, true}) {
        const HugoniotCurve cu = curve_through_point(kDefault, p, prime);
        const ChartPoint q = eval_curve(kDefault, cu, p.z);
        CHECK(relerr(q.t, p.t) < 1e-12);
        CHECK(relerr(q.y, p.y) < 1e-12);
      }
    }
  }
  SUBCASE("fold-point curves are tangent to the characteristic") {
    for (double z0 : {-1.7, -0.4, 0.9, 2.2}) {
      const HugoniotCurve cu = curve_through_point(kDefault, {z0, 0.0, 0.0});
      const RealRoots rr = intersect_characteristic(kDefault, cu);
      REQUIRE(rr.roots.size() == 1);
      CHECK(rr.roots[0].multiplicity == 2);
      CHECK(rr.roots[0].x == doctest::Approx(z0).epsilon(1e-9));
    }
  }
  SUBCASE("spelled-out coefficients match the composition, 1e3 points") {
    Rng rng(15);
    for (int i = 0; i < 1000; ++i) {
      const ChartPoint p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
      const double z = rng.uniform(-3, 3);
      const ChartPoint q =
          eval_curve(kDefault, curve_through_point(kDefault, p, false), z);
      double yc = 0, tc = 0;
      through_point_coefficients(kDefault, p, z, yc, tc);
      CHECK(relerr(yc, q.y) < 1e-9);
      CHECK(relerr(tc, q.t) < 1e-9);
    }
  }
}

TEST_CASE("speed along curves") {
  SUBCASE("fold point value") {
    const HugoniotCurve cu = curve_through_point(kDefault, {1.0, 0.0, 0.0});
    CHECK(speed_along(kDefault, cu, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("characteristic specialization, 1e3 samples") {
    Rng rng(16);
    for (int i = 0; i < 1000; ++i) {
      const double z0 = rng.uniform(-3, 3), t0 = rng.uniform(-3, 3);
      const double z = rng.uniform(-3, 3);
      const HugoniotCurve cu = curve_through_point(kDefault, {z0, t0, 0.0});
      const double s = speed_along(kDefault, cu, z);
      CHECK(relerr(characteristic_speed_form(kDefault, z0, t0, z), s) < 1e-10);
      CHECK(relerr(speed_along_point_form(kDefault, {z0, t0, 0.0}, z), s) < 1e-10);
    }
  }
  SUBCASE("speed gap at the two characteristic crossings") {
    Rng rng(17);
    int done = 0;
    while (done < 1000) {
      const double z0 = rng.uniform(-3, 3), t0 = rng.uniform(-3, 3);
      if (std::abs(t0) < 1e-6) continue;
      if (std::abs(t0 * z0 * (z0 * z0 + 1) + 1.0) < 1e-3) continue;
      const HugoniotCurve cu = curve_through_point(kDefault, {z0, t0, 0.0});
      const RealRoots rr = intersect_characteristic(kDefault, cu);
      if (rr.roots.size() != 2) continue;
      const double za = rr.roots[0].x, zb = rr.roots[1].x;
      const double z1 = std::abs(za - z0) < std::abs(zb - z0) ? zb : za;
      const double gap = speed_along(kDefault, cu, z0) - speed_along(kDefault, cu, z1);
      const double want = kDefault.c * (z0 * z0 + 1.0) * t0;
      CHECK(relerr(gap, want) < 1e-9);
      ++done;
    }
  }
}

TEST_CASE("characteristic intersections") {
  SUBCASE("hand case: curve through (t0=1, z0=0) crosses at -1 and 0") {
    const HugoniotCurve cu = curve_through_point(kDefault, {0.0, 1.0, 0.0});
    const RealRoots rr = intersect_characteristic(kDefault, cu);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(rr.roots[1].x == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("curves that never cross stay clear of Y = 0 on a dense sample") {
    const HugoniotCurve cu = curve_from_kl(kDefault, 0.0, -1.0, false);
    CHECK(intersect_characteristic(kDefault, cu).empty());
    double min_abs = 1e30;
    for (int i = 0; i <= 400; ++i) {
      const double z = -10.0 + 20.0 * i / 400.0;
      min_abs = std::min(min_abs, std::abs(eval_curve(kDefault, cu, z).y));
    }
    CHECK(min_abs > 0.5);
  }
}

TEST_CASE("sonic intersections") {
  SUBCASE("son roots are speed-critical (finite differences)") {
    Rng rng(18);
    int done = 0;
    while (done < 200) {
      const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
      if (std::abs(l + 2.0) < 0.1) continue;
      ++done;
      const HugoniotCurve cu = curve_from_kl(kDefault, k, l, false);
      for (const Root& r : intersect_son(kDefault, cu).roots) {
        if (std::abs(r.x) > 10.0) continue;
        const double h = 1e-3 * (1.0 + std::abs(r.x));
        const auto d = [&](double hh) {
          return (speed_along(kDefault, cu, r.x + hh) -
                  speed_along(kDefault, cu, r.x - hh)) / (2.0 * hh);
        };
        const double fd = (4.0 * d(h / 2) - d(h)) / 3.0;  // Richardson
        const double curv = std::abs(speed_along(kDefault, cu, r.x + 0.1) -
                                     2.0 * speed_along(kDefault, cu, r.x) +
                                     speed_along(kDefault, cu, r.x - 0.1)) / 0.01;
        CHECK(std::abs(fd) <= 1e-8 * (1.0 + curv));
      }
    }
  }
  SUBCASE("son' counts stay in {0, 2, 4} with multiplicity") {
    Rng rng(19);
    int done = 0;
    while (done < 1000) {
      const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
      if (std::abs(l + 2.0) < 0.1) continue;
      ++done;
      const int count =
          intersect_sonprime(kDefault, curve_from_kl(kDefault, k, l, false))
              .count_with_multiplicity();
      CHECK((count == 0 || count == 2 || count == 4));
    }
  }
  SUBCASE("a Son' point shows up among its curve's son' roots") {
    // (t=0, z=1, Y=1) lies on Son'; the plain curve through it crosses there.
    const HugoniotCurve cu = curve_through_point(kDefault, {1.0, 0.0, 1.0});
    bool found = false;
    for (const Root& r : intersect_sonprime(kDefault, cu).roots)
      if (std::abs(r.x - 1.0) < 1e-9) found = true;
    CHECK(found);
  }
  SUBCASE("son on a prime curve mirrors son' on the plain curve") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
      const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
      const RealRoots a = intersect_son(kDefault, curve_from_kl(kDefault, k, l, true));
      const RealRoots b = intersect_sonprime(kDefault, curve_from_kl(kDefault, k, l, false));
      REQUIRE(a.roots.size() == b.roots.size());
      for (std::size_t j = 0; j < a.roots.size(); ++j)
        CHECK(a.roots[j].x == doctest::Approx(b.roots[j].x).epsilon(1e-10));
    }
  }
  SUBCASE("root residuals satisfy the polynomial bound") {
    Rng rng(20);
    for (int i = 0; i < 200; ++i) {
      const HugoniotCurve cu =
          curve_from_kl(kDefault, rng.uniform(-5, 5), rng.uniform(-5, 5), false);
      const Poly f = curve_surface_poly(kDefault, cu, true);
      for (const Root& r : real_roots(f).roots) {
        if (std::abs(r.x) > 20.0) continue;
        CHECK(r.residual <=
              1e-9 * (1.0 + f.max_abs_coeff()) * (1.0 + std::pow(std::abs(r.x), 8)));
      }
    }
  }
}

TEST_CASE("fact 4: the t > 0 crossing carries the larger speed") {
  Rng rng(21);
  int done = 0;
  while (done < 1000) {
    const double z0 = rng.uniform(-3, 3), t0 = rng.uniform(-3, 3);
    if (std::abs(t0) < 1e-6) continue;
    if (std::abs(t0 * z0 * (z0 * z0 + 1) + 1.0) < 1e-3) continue;
    const HugoniotCurve cu = curve_through_point(kDefault, {z0, t0, 0.0});
    const RealRoots rr = intersect_characteristic(kDefault, cu);
    if (rr.roots.size() != 2) continue;
    ++done;
    const ChartPoint a = eval_curve(kDefault, cu, rr.roots[0].x);
    const ChartPoint b = eval_curve(kDefault, cu, rr.roots[1].x);
    const double sa = speed_at(kDefault, a), sb = speed_at(kDefault, b);
    CHECK((a.t > b.t) == (sa > sb));
  }
}

TEST_SUITE_END();
