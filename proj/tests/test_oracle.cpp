#include "wavem/oracle.hpp"

#include <doctest.h>

#include <map>
#include <set>

#include "test_util.hpp"

using namespace wavem;
using testutil::Rng;

namespace {
const ModelParams kDefault = ModelParams::standard();
}

TEST_SUITE_BEGIN("oracle");

TEST_CASE("grid validation") {
  GridSpec g;
  CHECK_NOTHROW(g.validate());
  g.nz = 4;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g = GridSpec{};
  g.guard_cells = 0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("bracketing intersections") {
  SUBCASE("simple crossings match the closed form") {
    Rng rng(61);
    int done = 0;
    while (done < 100) {
      const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
      if (std::abs(l + 2.0) < 0.5) continue;
      const HugoniotCurve cu = curve_from_kl(kDefault, k, l, false);
      const RealRoots closed = intersect_characteristic(kDefault, cu);
      bool tight = false;
      for (std::size_t i = 1; i < closed.roots.size(); ++i)
        if (closed.roots[i].x - closed.roots[i - 1].x < 0.05) tight = true;
      if (tight) continue;
      ++done;
      const BracketedRoots got = oracle_intersections(kDefault, cu,
                                                      SurfaceId::Characteristic,
                                                      -12.0, 12.0, 4000);
      std::size_t in_window = 0;
      for (const Root& r : closed.roots) {
        if (std::abs(r.x) > 11.5 || r.multiplicity != 1) continue;
        ++in_window;
        double best = 1e30;
        for (const Root& o : got.roots.roots) best = std::min(best, std::abs(o.x - r.x));
        CHECK(best < 1e-8);
      }
      CHECK(got.roots.roots.size() == in_window);
    }
  }
  SUBCASE("fold tangency shows up as a flagged candidate, not a sign change") {
    const HugoniotCurve cu = curve_through_point(kDefault, {0.8, 0.0, 0.0});
    const BracketedRoots got =
        oracle_intersections(kDefault, cu, SurfaceId::Characteristic, -4.0, 4.0, 2000);
    CHECK(got.roots.roots.empty());
    REQUIRE(!got.tangency_candidates.empty());
    bool near = false;
    for (double z : got.tangency_candidates)
      if (std::abs(z - 0.8) < 1e-6) near = true;
    CHECK(near);
    // Cross-reference: the closed form reports the double root.
    const RealRoots closed = intersect_characteristic(kDefault, cu);
    REQUIRE(closed.roots.size() == 1);
    CHECK(closed.roots[0].multiplicity == 2);
  }
}

TEST_CASE("flood fill") {
  GridSpec coarse;
  coarse.nz = coarse.nt = coarse.ny = 60;

  SUBCASE("twelve components, six in the upper half space") {
    const FloodFillResult full = oracle_floodfill(kDefault, coarse, false);
    CHECK(full.component_count == 12);
    const FloodFillResult pos = oracle_floodfill(kDefault, coarse, true);
    CHECK(pos.component_count == 6);
    std::map<RegionLabel, int> labels;
    for (const auto& c : full.components) labels[c.label]++;
    CHECK(labels.size() == 12);
    for (const auto& [label, count] : labels) {
      CHECK(count == 1);
      CHECK(label != RegionLabel::Boundary);
      CHECK(label != RegionLabel::Unclassified);
    }
  }
  SUBCASE("labels are stable under refinement and box growth") {
    const FloodFillResult a = oracle_floodfill(kDefault, coarse, false);
    GridSpec fine = coarse;
    fine.nz = fine.nt = fine.ny = 120;
    const FloodFillResult b = oracle_floodfill(kDefault, fine, false);
    GridSpec wide = coarse;
    wide.z_min = -2.5;
    wide.z_max = 2.5;
    wide.t_min = -3.5;
    wide.t_max = 3.5;
    wide.y_min = -7.0;
    wide.y_max = 7.0;
    const FloodFillResult c = oracle_floodfill(kDefault, wide, false);
    auto labels_of = [](const FloodFillResult& r) {
      std::set<RegionLabel> s;
      for (const auto& fc : r.components) s.insert(fc.label);
      return s;
    };
    CHECK(labels_of(a) == labels_of(b));
    CHECK(labels_of(a) == labels_of(c));
    CHECK(b.component_count == 12);
    CHECK(c.component_count == 12);
  }
  SUBCASE("other instances keep twelve regions on the documented grid") {
    for (auto [b1, c] : {std::pair{3.0, 1.0}, std::pair{1.5, 2.0}}) {
      const ModelParams mp = ModelParams::standard(b1, c);
      const FloodFillResult r = oracle_floodfill(mp, GridSpec{}, false);
      CHECK(r.component_count == 12);
      std::set<RegionLabel> labels;
      for (const auto& fc : r.components) labels.insert(fc.label);
      CHECK(labels.size() == 12);
    }
  }
}

TEST_CASE("rh states oracle") {
  SUBCASE("diagonal points give exactly zero") {
    std::vector<ChartPoint> pts;
    for (double z : {-1.0, 0.5, 2.0}) pts.push_back({z, 0.0, 0.0});
    const OracleReport rep = oracle_rh_states(kDefault, pts);
    CHECK(rep.pass);
    CHECK(rep.max_residual == 0.0);
  }
  SUBCASE("corrupted speed is caught (negative control)") {
    Rng rng(62);
    std::vector<ChartPoint> pts;
    for (int i = 0; i < 100; ++i)
      pts.push_back({rng.uniform(1, 3), rng.uniform(-2, 2), rng.uniform(1, 3)});
    // Push the points through by hand with a wrong speed and check the
    // residual the oracle would flag.
    int caught = 0;
    for (const ChartPoint& cp : pts) {
      StatePair sp = chart_to_states(kDefault, cp);
      sp.s += 0.1;
      auto [r1, r2] = rh_residual(kDefault, sp);
      if (std::abs(r1) + std::abs(r2) > 1e-6) ++caught;
    }
    CHECK(caught == 100);
  }
}

TEST_CASE("finite-difference speed oracle") {
  SUBCASE("vanishes at son roots") {
    const HugoniotCurve cu = curve_from_kl(kDefault, 1.3, 0.4, false);
    for (const Root& r : intersect_son(kDefault, cu).roots) {
      if (std::abs(r.x) > 10.0) continue;
      CHECK(std::abs(oracle_fd_speed(kDefault, cu, r.x, 1e-3)) < 1e-6);
    }
  }
  SUBCASE("matches the closed-form derivative at the origin") {
    const HugoniotCurve cu = curve_through_point(kDefault, {0.0, 0.0, 0.0});
    CHECK(oracle_fd_speed(kDefault, cu, 0.0, 1e-3) ==
          doctest::Approx(kDefault.c).epsilon(1e-8));
  }
  SUBCASE("plain centered differences converge quadratically") {
    const HugoniotCurve cu = curve_through_point(kDefault, {0.3, -0.7, 0.0});
    const LocalDerivatives d = local_side_derivatives(kDefault, 0.3, -0.7);
    const auto err = [&](double h) {
      const double fd =
          (speed_along(kDefault, cu, 0.3 + h) - speed_along(kDefault, cu, 0.3 - h)) /
          (2 * h);
      return std::abs(fd - d.ds_dz);
    };
    const double e1 = err(1e-2), e2 = err(5e-3);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
  }
}

TEST_CASE("registry covers every closed form") {
  CHECK(uncovered_closed_forms().empty());
  CHECK(oracle_registry().size() >= 15);
}

TEST_SUITE_END();
