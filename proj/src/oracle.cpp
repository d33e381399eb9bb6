#include "wavem/oracle.hpp"

#include "wavem/detail/forms.hpp"
#include "wavem/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

namespace wavem {

void GridSpec::validate() const {
  if (nz < 8 || nt < 8 || ny < 8)
    throw std::invalid_argument("GridSpec: resolutions must be at least 8");
  if (!(std::isfinite(z_min) && std::isfinite(z_max) && std::isfinite(t_min) &&
        std::isfinite(t_max) && std::isfinite(y_min) && std::isfinite(y_max)))
    throw std::invalid_argument("GridSpec: bounds must be finite");
  if (guard_cells <= 0) throw std::invalid_argument("GridSpec: guard band must be positive");
}

namespace {

// Deterministic uniform doubles independent of the standard library's
// distribution implementation.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 1) {}
  std::uint64_t next() {
    // xorshift*
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
  }
  double uniform(double lo, double hi) {
    const double u = (next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

struct WorstTracker {
  std::vector<std::pair<double, std::string>> items;
  void offer(double r, std::string desc) {
    items.emplace_back(r, std::move(desc));
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (items.size() > 3) items.resize(3);
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& [r, d] : items) out.push_back(d);
    return out;
  }
};

OracleReport finish(std::string name, std::size_t n, double maxr, double tol,
                    const WorstTracker& w, bool extra_ok = true) {
  OracleReport rep;
  rep.name = std::move(name);
  rep.samples = n;
  rep.max_residual = maxr;
  rep.tolerance = tol;
  rep.pass = extra_ok && maxr <= tol;
  rep.worst = w.strings();
  return rep;
}

double rel(double r, double scale) { return std::abs(r) / (1.0 + std::abs(scale)); }

}  // namespace

BracketedRoots oracle_intersections(const ModelParams& mp, const HugoniotCurve& cu,
                                    SurfaceId id, double z_lo, double z_hi,
                                    int samples) {
  BracketedRoots out;
  const auto f = [&](double z) { return surface_value(mp, id, eval_curve(mp, cu, z)); };
  const double dz = (z_hi - z_lo) / samples;
  double prev = f(z_lo);
  double prev_z = z_lo;
  std::vector<double> abs_vals(samples + 1);
  abs_vals[0] = std::abs(prev);
  for (int i = 1; i <= samples; ++i) {
    const double z = z_lo + i * dz;
    const double v = f(z);
    abs_vals[i] = std::abs(v);
    if ((prev < 0.0) != (v < 0.0)) {
      // bisection refinement
      double lo = prev_z, hi = z, flo = prev;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-12 * (1.0 + std::abs(mid))) break;
      }
      const double r = 0.5 * (lo + hi);
      // A genuine transversal crossing changes sign at one-grid-step scale;
      // roundoff flickering around an even-order zero does not.
      const double va2 = f(r - dz), vb2 = f(r + dz);
      if ((va2 < 0.0) != (vb2 < 0.0))
        out.roots.roots.push_back(Root{r, 1, std::abs(f(r))});
      else
        out.tangency_candidates.push_back(r);
    }
    prev = v;
    prev_z = z;
  }
  // Interior |f| minima without a sign change: refine by ternary search and
  // flag as tangency candidates when the refined value is essentially zero.
  for (int i = 1; i < samples; ++i) {
    if (!(abs_vals[i] < abs_vals[i - 1] && abs_vals[i] <= abs_vals[i + 1])) continue;
    const double va = f(z_lo + (i - 1) * dz);
    const double vb = f(z_lo + (i + 1) * dz);
    if ((va < 0.0) != (vb < 0.0)) continue;  // handled by bracketing
    double lo = z_lo + (i - 1) * dz, hi = z_lo + (i + 1) * dz;
    for (int it = 0; it < 120; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (std::abs(f(m1)) < std::abs(f(m2)))
        hi = m2;
      else
        lo = m1;
    }
    const double zm = 0.5 * (lo + hi);
    if (std::abs(f(zm)) < 1e-10) out.tangency_candidates.push_back(zm);
  }
  return out;
}

FloodFillResult oracle_floodfill(const ModelParams& mp, const GridSpec& grid,
                                 bool positive_y_only) {
  grid.validate();
  const int nz = grid.nz, nt = grid.nt, ny = grid.ny;
  const std::size_t total = static_cast<std::size_t>(nz) * nt * ny;
  const auto zc = [&](int i) { return grid.z_min + (grid.z_max - grid.z_min) * (i + 0.5) / nz; };
  const auto tc = [&](int j) { return grid.t_min + (grid.t_max - grid.t_min) * (j + 0.5) / nt; };
  const auto yc = [&](int k) { return grid.y_min + (grid.y_max - grid.y_min) * (k + 0.5) / ny; };
  const auto idx = [&](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * nt + j) * ny + k;
  };

  // Sign triple (sgn Y, sgn son, sgn son') encoded in one byte per cell.
  std::vector<std::int8_t> trip(total);
  for (int i = 0; i < nz; ++i)
    for (int j = 0; j < nt; ++j)
      for (int k = 0; k < ny; ++k) {
        const ChartPoint p{zc(i), tc(j), yc(k)};
        const int sy = p.y > 0.0 ? 1 : 0;
        const int ss = surface_value(mp, SurfaceId::Son, p) > 0.0 ? 1 : 0;
        const int sp = surface_value(mp, SurfaceId::SonPrime, p) > 0.0 ? 1 : 0;
        trip[idx(i, j, k)] = static_cast<std::int8_t>(sy * 4 + ss * 2 + sp);
      }

  // Guard band: a cell is unsafe when the triple changes within guard_cells
  // steps along any axis, or when it sits in the outer shell (where the
  // neighbourhood cannot be verified).
  const int g = grid.guard_cells;
  std::vector<std::uint8_t> safe(total, 1);
  for (int i = 0; i < nz; ++i)
    for (int j = 0; j < nt; ++j)
      for (int k = 0; k < ny; ++k) {
        const std::size_t me = idx(i, j, k);
        if (i < g || i >= nz - g || j < g || j >= nt - g || k < g || k >= ny - g) {
          safe[me] = 0;
          continue;
        }
        if (positive_y_only && yc(k) <= 0.0) {
          safe[me] = 0;
          continue;
        }
        const std::int8_t v = trip[me];
        for (int d = 1; d <= g && safe[me]; ++d) {
          if (trip[idx(i - d, j, k)] != v || trip[idx(i + d, j, k)] != v ||
              trip[idx(i, j - d, k)] != v || trip[idx(i, j + d, k)] != v ||
              trip[idx(i, j, k - d)] != v || trip[idx(i, j, k + d)] != v)
            safe[me] = 0;
        }
      }

  // 6-connected flood fill in deterministic scan order.
  std::vector<std::int32_t> comp(total, -1);
  FloodFillResult res;
  std::vector<std::size_t> stack;
  for (int i = 0; i < nz; ++i)
    for (int j = 0; j < nt; ++j)
      for (int k = 0; k < ny; ++k) {
        const std::size_t start = idx(i, j, k);
        if (!safe[start] || comp[start] >= 0) continue;
        const std::int32_t cid = res.component_count++;
        FloodFillComponent fc;
        fc.representative = ChartPoint{zc(i), tc(j), yc(k)};
        fc.sign_y = fc.representative.y > 0.0 ? 1 : -1;
        fc.sign_son =
            surface_value(mp, SurfaceId::Son, fc.representative) > 0.0 ? 1 : -1;
        fc.sign_sonprime =
            surface_value(mp, SurfaceId::SonPrime, fc.representative) > 0.0 ? 1 : -1;
        fc.z_lo = fc.z_hi = fc.representative.z;
        stack.clear();
        stack.push_back(start);
        comp[start] = cid;
        while (!stack.empty()) {
          const std::size_t cur = stack.back();
          stack.pop_back();
          fc.cells++;
          const int ci = static_cast<int>(cur / (static_cast<std::size_t>(nt) * ny));
          const int cj = static_cast<int>((cur / ny) % nt);
          const int ck = static_cast<int>(cur % ny);
          fc.z_lo = std::min(fc.z_lo, zc(ci));
          fc.z_hi = std::max(fc.z_hi, zc(ci));
          const int di[6] = {-1, 1, 0, 0, 0, 0};
          const int dj[6] = {0, 0, -1, 1, 0, 0};
          const int dk[6] = {0, 0, 0, 0, -1, 1};
          for (int n = 0; n < 6; ++n) {
            const int ni = ci + di[n], nj = cj + dj[n], nk = ck + dk[n];
            if (ni < 0 || ni >= nz || nj < 0 || nj >= nt || nk < 0 || nk >= ny) continue;
            const std::size_t nb = idx(ni, nj, nk);
            if (!safe[nb] || comp[nb] >= 0) continue;
            comp[nb] = cid;
            stack.push_back(nb);
          }
        }
        fc.label = region_classify(mp, fc.representative);
        res.components.push_back(fc);
      }
  return res;
}

OracleReport oracle_rh_states(const ModelParams& mp, std::span<const ChartPoint> pts,
                              double tol) {
  WorstTracker w;
  double maxr = 0;
  for (const ChartPoint& cp : pts) {
    const StatePair sp = chart_to_states(mp, cp);
    const auto [r1, r2] = rh_residual(mp, sp);
    const auto [f1, g1] = flux_eval(mp, sp.u, sp.v);
    const auto [f2, g2] = flux_eval(mp, sp.up, sp.vp);
    const double scale = std::abs(f1) + std::abs(f2) + std::abs(g1) + std::abs(g2) +
                         std::abs(sp.s) * (std::abs(sp.u - sp.up) + std::abs(sp.v - sp.vp));
    const double r = (std::abs(r1) + std::abs(r2)) / (1.0 + scale);
    if (r > maxr) maxr = r;
    if (r > tol)
      w.offer(r, "rh residual " + format_double(r) + " at z=" + format_double(cp.z) +
                     " t=" + format_double(cp.t) + " Y=" + format_double(cp.y));
  }
  return finish("rh-states", pts.size(), maxr, tol, w);
}

double oracle_fd_speed(const ModelParams& mp, const HugoniotCurve& cu, double z,
                       double h) {
  const auto d = [&](double hh) {
    return (speed_along(mp, cu, z + hh) - speed_along(mp, cu, z - hh)) / (2.0 * hh);
  };
  const double d1 = d(h);
  const double d2 = d(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;  // Richardson
}

// ---------------------------------------------------------------------------
// Registered checks
// ---------------------------------------------------------------------------
namespace {

OracleReport check_manifold_closure(const ModelParams& mp) {
  Rng rng(0x9d2c5680u);
  WorstTracker w;
  double maxr = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5), z = rng.uniform(-5, 5);
    const HugoniotCurve cu = curve_from_kl(mp, k, l, i % 2 == 1);
    const ChartPoint cp = eval_curve(mp, cu, z);
    const BlowupPoint bp = chart_to_blowup(mp, cp);
    const double g = manifold_residual(mp, bp);
    const double r = rel(g, std::abs(bp.utilde) + std::abs(bp.v1) + mp.c);
    if (r > maxr) maxr = r;
    if (r > 1e-12)
      w.offer(r, "G=" + format_double(g) + " at k=" + format_double(k) +
                     " l=" + format_double(l) + " z=" + format_double(z));
  }
  return finish("manifold-closure", n, maxr, 1e-12, w);
}

OracleReport check_rh_blowdown(const ModelParams& mp) {
  Rng rng(0xb5297a4du);
  std::vector<ChartPoint> pts;
  while (pts.size() < 10000) {
    ChartPoint cp{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    if (std::abs(cp.z * cp.y) <= 1e-6) continue;
    pts.push_back(cp);
  }
  OracleReport rep = oracle_rh_states(mp, pts, 1e-9);
  rep.name = "rh-blowdown";
  // The polynomial chart speed must agree with the RH-derived blow-up speed.
  double maxs = 0;
  for (const ChartPoint& cp : pts) {
    const double s1 = speed_at(mp, cp);
    const double s2 = blowup_speed(mp, chart_to_blowup(mp, cp));
    maxs = std::max(maxs, rel(s1 - s2, std::max(std::abs(s1), std::abs(s2))));
  }
  if (maxs > 1e-12) {
    rep.pass = false;
    rep.worst.push_back("speed form mismatch " + format_double(maxs));
  }
  rep.max_residual = std::max(rep.max_residual, maxs);
  return rep;
}

OracleReport check_chart_roundtrip(const ModelParams& mp) {
  Rng rng(0x1f83d9abu);
  WorstTracker w;
  double maxr = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) {
    const ChartPoint cp{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    if (cp.z == 0.0) continue;
    const ChartPoint back = chart_from_blowup(mp, chart_to_blowup(mp, cp));
    const double r = rel(back.z - cp.z, cp.z) + rel(back.t - cp.t, cp.t) +
                     rel(back.y - cp.y, cp.y);
    if (r > maxr) maxr = r;
    if (r > 1e-12) w.offer(r, "roundtrip drift at z=" + format_double(cp.z));
  }
  return finish("chart-roundtrip", n, maxr, 1e-12, w);
}

// Curves through (t0, z0, 0): transversality, speed gap, Fact 4 ordering,
// and the corrected closed-form cross-checks.
OracleReport check_speed_gap(const ModelParams& mp) {
  Rng rng(0x85a308d3u);
  WorstTracker w;
  double maxr = 0;
  bool ok = true;
  const std::size_t n = 1000;
  std::size_t done = 0;
  while (done < n) {
    const double z0 = rng.uniform(-3, 3);
    double t0 = rng.uniform(-3, 3);
    const bool tangent_case = done % 10 == 9;
    if (tangent_case) t0 = 0.0;
    const double w0 = z0 * z0 + 1.0;
    if (std::abs(t0 * z0 * w0 + 1.0) < 1e-3) continue;  // secondary-adjacent
    if (!tangent_case && std::abs(t0) < 1e-6) continue;
    const ChartPoint p0{z0, t0, 0.0};
    const HugoniotCurve cu = curve_through_point(mp, p0);
    const RealRoots rr = intersect_characteristic(mp, cu);
    if (tangent_case) {
      if (rr.roots.size() != 1 || rr.roots[0].multiplicity != 2) {
        ok = false;
        w.offer(1.0, "fold curve at z0=" + format_double(z0) + " not a double root");
      }
      ++done;
      continue;
    }
    if (rr.roots.size() != 2) {
      ok = false;
      w.offer(1.0, "expected two crossings at z0=" + format_double(z0) +
                       " t0=" + format_double(t0));
      ++done;
      continue;
    }
    const double za = rr.roots[0].x, zb = rr.roots[1].x;
    const double z1 = (std::abs(za - z0) < std::abs(zb - z0)) ? zb : za;
    const double s0 = speed_along(mp, cu, z0);
    const double s1 = speed_along(mp, cu, z1);
    const double gap = s0 - s1 - mp.c * w0 * t0;
    const double r = rel(gap, mp.c * w0 * t0);
    if (r > maxr) maxr = r;
    if (r > 1e-9)
      w.offer(r, "speed gap residual at z0=" + format_double(z0) +
                     " t0=" + format_double(t0));
    // Fact 4: the crossing with positive t carries the larger speed.
    const ChartPoint pa = eval_curve(mp, cu, za), pb = eval_curve(mp, cu, zb);
    const double sa = speed_at(mp, pa), sb = speed_at(mp, pb);
    const bool fact4 = (pa.t > pb.t) == (sa > sb);
    if (!fact4) {
      ok = false;
      w.offer(1.0, "fact4 violated at z0=" + format_double(z0) + " t0=" + format_double(t0));
    }
    // Cross-check closed forms against the composition.
    const double zq = rng.uniform(-3, 3);
    const double sc = speed_along(mp, cu, zq);
    const double d1 = rel(speed_along_point_form(mp, p0, zq) - sc, sc);
    const double d2 = rel(characteristic_speed_form(mp, z0, t0, zq) - sc, sc);
    if (std::max(d1, d2) > 1e-10) {
      ok = false;
      w.offer(std::max(d1, d2), "closed-form speed mismatch at z0=" + format_double(z0));
    }
    ++done;
  }
  return finish("lemma1-speed-gap", n, maxr, 1e-9, w, ok);
}

OracleReport check_char_intersections(const ModelParams& mp) {
  Rng rng(0x243f6a88u);
  WorstTracker w;
  double maxr = 0;
  bool ok = true;
  const std::size_t n = 1000;
  std::size_t done = 0;
  while (done < n) {
    const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
    if (std::abs(l + 2.0 * mp.c) < 0.5) continue;
    const HugoniotCurve cu = curve_from_kl(mp, k, l, false);
    const RealRoots closed = intersect_characteristic(mp, cu);
    bool close_pair = false;
    for (std::size_t i = 1; i < closed.roots.size(); ++i)
      if (closed.roots[i].x - closed.roots[i - 1].x < 0.05) close_pair = true;
    if (close_pair) continue;  // bracketing cannot be expected to separate
    const BracketedRoots oracle = oracle_intersections(mp, cu, SurfaceId::Characteristic,
                                                       -12.0, 12.0, 4000);
    std::size_t in_window = 0;
    for (const Root& r : closed.roots) {
      if (std::abs(r.x) > 11.5 || r.multiplicity != 1) continue;
      ++in_window;
      double best = 1e30;
      for (const Root& o : oracle.roots.roots) best = std::min(best, std::abs(o.x - r.x));
      if (best > maxr) maxr = best;
      if (best > 1e-8)
        w.offer(best, "characteristic root mismatch at k=" + format_double(k) +
                          " l=" + format_double(l));
    }
    if (oracle.roots.roots.size() != in_window) {
      ok = false;
      w.offer(1.0, "root count mismatch at k=" + format_double(k) + " l=" + format_double(l));
    }
    ++done;
  }
  return finish("characteristic-intersections", n, maxr, 1e-8, w, ok);
}

OracleReport check_son_critical(const ModelParams& mp) {
  Rng rng(0x452821e6u);
  WorstTracker w;
  double maxr = 0;
  const std::size_t n = 500;
  std::size_t done = 0, roots_seen = 0;
  while (done < n) {
    const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
    if (std::abs(l + 2.0 * mp.c) < 0.1) continue;
    const HugoniotCurve cu = curve_from_kl(mp, k, l, false);
    for (const Root& r : intersect_son(mp, cu).roots) {
      if (std::abs(r.x) > 10.0) continue;
      ++roots_seen;
      const double fd = oracle_fd_speed(mp, cu, r.x, 1e-3 * (1.0 + std::abs(r.x)));
      // Scale by the local speed curvature so steep curves are judged fairly.
      const double h = 0.1;
      const double curv = std::abs(speed_along(mp, cu, r.x + h) -
                                   2.0 * speed_along(mp, cu, r.x) +
                                   speed_along(mp, cu, r.x - h)) / (h * h);
      const double res = std::abs(fd) / (1.0 + curv);
      if (res > maxr) maxr = res;
      if (res > 1e-8)
        w.offer(res, "nonzero ds/dz " + format_double(fd) + " at son root z=" +
                         format_double(r.x) + " (k=" + format_double(k) +
                         " l=" + format_double(l) + ")");
    }
    ++done;
  }
  OracleReport rep = finish("son-critical-points", roots_seen, maxr, 1e-8, w);
  return rep;
}

OracleReport check_sonprime_counts(const ModelParams& mp) {
  Rng rng(0x038d01377u);
  WorstTracker w;
  bool ok = true;
  const std::size_t n = 1000;
  std::size_t done = 0;
  while (done < n) {
    const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
    if (std::abs(l + 2.0 * mp.c) < 0.1) continue;
    const HugoniotCurve cu = curve_from_kl(mp, k, l, false);
    const int count = intersect_sonprime(mp, cu).count_with_multiplicity();
    if (count != 0 && count != 2 && count != 4) {
      ok = false;
      w.offer(static_cast<double>(count), "son' count " + std::to_string(count) +
                                             " at k=" + format_double(k) +
                                             " l=" + format_double(l));
    }
    ++done;
  }
  return finish("sonprime-counts", n, ok ? 0.0 : 1.0, 0.5, w, ok);
}

OracleReport check_surface_forms(const ModelParams& mp) {
  Rng rng(0x13198a2eu);
  WorstTracker w;
  double maxr = 0;
  bool ok = true;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
    // son and son' restricted to Y = 0 are both -2 * inflection value.
    const double il = inflection_locus_value(mp, z, t);
    const double s0 = surface_value(mp, SurfaceId::Son, {z, t, 0.0});
    const double sp0 = surface_value(mp, SurfaceId::SonPrime, {z, t, 0.0});
    maxr = std::max(maxr, rel(s0 + 2.0 * il, il));
    maxr = std::max(maxr, rel(sp0 + 2.0 * il, il));
    // z = 0 lines of Son, Son' and Sigma.
    const auto [lson, lsonp] = son_sonprime_lines_z0(mp);
    maxr = std::max(maxr, rel(surface_value(mp, SurfaceId::Son, {0.0, t, lson.y}), mp.c));
    maxr = std::max(maxr,
                    rel(surface_value(mp, SurfaceId::SonPrime, {0.0, t, lsonp.y}), mp.c));
    maxr = std::max(maxr, rel(surface_value(mp, SurfaceId::Sigma, {0.0, t, lsonp.y}), mp.c));
    // Double sonic lines kill son and son' for any Y.
    const auto [dsp, dsm] = double_sonic_points(mp);
    const double yv = rng.uniform(-5, 5);
    for (const auto& line : {dsp, dsm}) {
      maxr = std::max(maxr, rel(surface_value(mp, SurfaceId::Son, {line.z, line.t, yv}), mp.c));
      maxr = std::max(maxr,
                      rel(surface_value(mp, SurfaceId::SonPrime, {line.z, line.t, yv}), mp.c));
    }
  }
  // Fold points: curves through (z, 0, 0) are tangent to the characteristic,
  // and Tf vanishes there with a double zero in t on the Y = 0 slice.
  for (int i = 0; i < 50; ++i) {
    const double z = rng.uniform(-3, 3);
    const ChartPoint fp = fold_curve(z);
    const HugoniotCurve cu = curve_through_point(mp, fp);
    const RealRoots rr = intersect_characteristic(mp, cu);
    if (rr.roots.size() != 1 || rr.roots[0].multiplicity != 2 ||
        std::abs(rr.roots[0].x - z) > 1e-6) {
      ok = false;
      w.offer(1.0, "fold tangency failed at z=" + format_double(z));
    }
    maxr = std::max(maxr, rel(surface_value(mp, SurfaceId::Tf, fp), 1.0));
    const double tt = rng.uniform(-2, 2);
    const double w3 = (z * z + 1.0);
    const double expect = 4.0 * mp.c * mp.c * tt * tt * w3 * w3 * w3;
    maxr = std::max(maxr,
                    rel(surface_value(mp, SurfaceId::Tf, {z, tt, 0.0}) - expect, expect));
  }
  if (maxr > 1e-10) ok = ok && false;
  return finish("surface-forms", n, maxr, 1e-10, w, ok);
}

OracleReport check_tf_tangency(const ModelParams& mp) {
  WorstTracker w;
  double maxr = 0;
  bool ok = true;
  const double zs = mp.double_sonic_z();
  int used = 0;
  for (int i = 0; i < 400 && used < 200; ++i) {
    const double z = -2.0 + 4.0 * (i + 0.5) / 400.0;
    if (std::abs(std::abs(z) - zs) < 0.05) continue;  // sonlizt poles
    ++used;
    // Clear son' solved for Y into the Tf quadratic: quadratic in t.
    const auto cleared = [&](double t) {
      const double q = detail::son_q(mp, z);
      const double y_num = 2.0 * mp.c * (detail::son_p(mp, z) * t +
                                         detail::son_r(mp, z));
      const TfQuadratic tf = tf_quadratic(mp, z, t);
      return tf.a * y_num * y_num + tf.b * y_num * q + tf.c * q * q;
    };
    const double q0 = cleared(0.0), q1 = cleared(1.0), qm1 = cleared(-1.0);
    const double a2 = 0.5 * (q1 + qm1) - q0;
    const double a1 = 0.5 * (q1 - qm1);
    const double a0 = q0;
    const double scale = std::abs(a2) + std::abs(a1) + std::abs(a0);
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    const double r = std::abs(disc) / (scale * scale);
    if (r > maxr) maxr = r;
    if (r > 1e-9) w.offer(r, "Tf|Son' discriminant " + format_double(disc) +
                                 " at z=" + format_double(z));
    // The double zero is the sonic' fold.
    const ChartPoint fold = sonic_prime_fold(mp, z);
    const double tstar = -a1 / (2.0 * a2);
    const double dr = rel(tstar - fold.t, fold.t);
    if (dr > 1e-9) {
      ok = false;
      w.offer(dr, "double zero off the sonic' fold at z=" + format_double(z));
    }
    // The fold point sits on Son' and on Tf; its Y is negative.
    const double r1 = rel(surface_value(mp, SurfaceId::SonPrime, fold), mp.c);
    const double r2 = rel(surface_value(mp, SurfaceId::Tf, fold), mp.c);
    if (std::max(r1, r2) > 1e-10) {
      ok = false;
      w.offer(std::max(r1, r2), "sonic' fold off its surfaces at z=" + format_double(z));
    }
    if (!(fold.y < 0.0)) {
      ok = false;
      w.offer(1.0, "sonic' fold left Y<0 at z=" + format_double(z));
    }
    // Tf' is the exact Y-reflection of Tf.
    const double ty = 0.7 * z - 0.3, tt = 0.4 * z + 0.1;
    const double refl = surface_value(mp, SurfaceId::TfPrime, {z, tt, ty}) -
                        surface_value(mp, SurfaceId::Tf, {z, tt, -ty});
    if (std::abs(refl) > 1e-12 * (1.0 + std::abs(ty))) {
      ok = false;
      w.offer(std::abs(refl), "Tf' reflection identity failed at z=" + format_double(z));
    }
  }
  return finish("tf-tangencies", used, maxr, 1e-9, w, ok);
}

OracleReport check_son_sonprime_intersection(const ModelParams& mp) {
  // son' - son = 2 Q(z) Y, so Son meets Son' exactly where Q Y = 0: on the
  // characteristic it is the inflection locus, and Q = 0 gives the double
  // sonic lines. Check both identifications plus the absence of strays.
  WorstTracker w;
  bool ok = true;
  double maxr = 0;
  const double zs = mp.double_sonic_z();
  std::size_t n = 0;
  // (a) On the characteristic: son = son' = -2 * inflection value, so their
  // common zero set there is exactly IL. Solve IL for t and substitute.
  for (int i = 1; i < 100; ++i) {
    const double z = -2.0 + 4.0 * (i + 0.5) / 100.0;
    if (std::abs(z) < 0.2) continue;  // IL runs to t = -inf near z = 0
    const double t_il = -detail::son_r(mp, z) / detail::son_p(mp, z);
    const ChartPoint p{z, t_il, 0.0};
    maxr = std::max(maxr, rel(surface_value(mp, SurfaceId::Son, p), t_il));
    maxr = std::max(maxr, rel(surface_value(mp, SurfaceId::SonPrime, p), t_il));
    ++n;
  }
  // (b) Away from IL and the double sonic lines, points of Son keep son'
  // bounded away from zero.
  for (int i = 0; i < 100; ++i) {
    const double z = -2.0 + 4.0 * (i + 0.5) / 100.0;
    if (std::abs(std::abs(z) - zs) < 0.1) continue;
    for (int j = 0; j < 100; ++j) {
      const double t = -3.0 + 6.0 * (j + 0.5) / 100.0;
      const double y = -sonprime_y_of_zt(mp, z, t);  // on Son
      if (std::abs(y) < 0.1) continue;               // near IL
      const double vp = surface_value(mp, SurfaceId::SonPrime, {z, t, y});
      ++n;
      if (std::abs(vp) < 1e-3) {
        ok = false;
        w.offer(std::abs(vp), "stray Son/Son' intersection at z=" + format_double(z) +
                                  " t=" + format_double(t));
      }
    }
  }
  if (maxr > 1e-10) ok = false;
  return finish("son-sonprime-intersection", n, maxr, 1e-10, w, ok);
}

OracleReport check_sigma_containment(const ModelParams& mp) {
  Rng rng(0x299f31d0u);
  WorstTracker w;
  double maxr = 0;
  bool ok = true;
  const std::size_t n = 100;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = rng.uniform(-5, 5);
    const HugoniotCurve cu = curve_from_kl(mp, k, -2.0 * mp.c, false);
    if (!sigma_contains(mp, cu)) {
      ok = false;
      w.offer(1.0, "sigma_contains rejected l=-2c");
    }
    for (int j = 0; j <= 200; ++j) {
      const double z = -6.0 + 12.0 * j / 200.0;
      const ChartPoint p = eval_curve(mp, cu, z);
      const double r = rel(surface_value(mp, SurfaceId::Sigma, p), p.y);
      if (r > maxr) maxr = r;
      if (r > 1e-10)
        w.offer(r, "sigma residual at k=" + format_double(k) + " z=" + format_double(z));
    }
    // Negative control: off the bifurcation the curve leaves Sigma.
    const HugoniotCurve other = curve_from_kl(mp, k, -2.0 * mp.c + 0.7, false);
    if (sigma_contains(mp, other)) {
      ok = false;
      w.offer(1.0, "sigma_contains accepted l != -2c");
    }
    double dev = 0;
    for (int j = 0; j <= 20; ++j) {
      const double z = -2.0 + 4.0 * j / 20.0;
      dev = std::max(dev, std::abs(surface_value(mp, SurfaceId::Sigma,
                                                 eval_curve(mp, other, z))));
    }
    if (dev < 1e-6) {
      ok = false;
      w.offer(dev, "non-sigma curve unexpectedly inside Sigma");
    }
  }
  return finish("sigma-containment", n, maxr, 1e-10, w, ok);
}

OracleReport check_sonprime_split(const ModelParams& mp) {
  Rng rng(0x082efa98u);
  WorstTracker w;
  double maxr = 0;
  bool ok = true;
  const std::size_t n = 1000;
  std::size_t done = 0, guard = 0;
  while (done < n && guard++ < 100000) {
    const double z0 = rng.uniform(-2, 2), y0 = rng.uniform(-4, 4);
    if (std::abs(z0) < 0.05 || std::abs(y0) < 0.05) continue;
    const double t0 = sonprime_t0(mp, z0, y0);
    const ChartPoint pt{z0, t0, y0};
    // Membership residual.
    const double memb = rel(surface_value(mp, SurfaceId::SonPrime, pt),
                            std::abs(y0) + std::abs(t0));
    maxr = std::max(maxr, memb);
    if (memb > 1e-10) w.offer(memb, "son' membership at z0=" + format_double(z0));
    // Speed identity against the plain curve's characteristic crossings.
    const HugoniotCurve cu = curve_through_point(mp, pt, false);
    if (is_secondary(mp, cu)) continue;
    const RealRoots rr = intersect_characteristic(mp, cu);
    if (rr.roots.size() != 2 || rr.roots[0].multiplicity != 1 ||
        rr.roots[1].multiplicity != 1)
      continue;  // Assumption 1 region only
    const double s_pt = speed_at(mp, pt);
    double best = 1e30, best_t = 0, other = 1e30;
    for (const Root& r : rr.roots) {
      const ChartPoint cx = eval_curve(mp, cu, r.x);
      const double d = std::abs(speed_at(mp, cx) - s_pt);
      if (d < best) {
        other = best;
        best = d;
        best_t = cx.t;
      } else {
        other = std::min(other, d);
      }
    }
    const double idr = best / (1.0 + std::abs(s_pt));
    maxr = std::max(maxr, idr);
    if (idr > 1e-9)
      w.offer(idr, "speed identity residual at z0=" + format_double(z0) +
                       " Y0=" + format_double(y0));
    // Tag agreement (skip ambiguous matches near the fold).
    if (other > 1e-6 * (1.0 + std::abs(s_pt)) && std::abs(best_t) > 1e-6) {
      const SonPrimeSide side = classify_sonprime_point(mp, z0, y0);
      if (side != SonPrimeSide::OnBoundary) {
        const bool slow = best_t < 0.0;
        if (slow != (side == SonPrimeSide::SlowSide)) {
          ok = false;
          w.offer(1.0, "slow/fast tag mismatch at z0=" + format_double(z0) +
                           " Y0=" + format_double(y0));
        }
      }
    }
    ++done;
  }
  return finish("sonprime-split", done, maxr, 1e-9, w, ok && done == n);
}

OracleReport check_l3_equivalence(const ModelParams& mp) {
  Rng rng(0xec4e6c89u);
  WorstTracker w;
  bool ok = true;
  const std::size_t n = 1000;
  std::size_t done = 0, guard = 0;
  while (done < n && guard++ < 200000) {
    const double z0 = rng.uniform(-2, 2), y0 = rng.uniform(-4, 4);
    if (std::abs(z0) < 0.05 || std::abs(y0) < 0.05) continue;
    if (std::abs((mp.b1 + 1.0) * z0 * z0 - 1.0) < 1e-3) continue;  // boundary band
    if (std::abs(y0 - mp.c) < 0.05) continue;  // prime curve secondary locus
    bool numeric;
    try {
      numeric = l3_numeric(mp, z0, y0);
    } catch (const std::domain_error&) {
      continue;  // Assumption 1/2 violated for this draw
    }
    const bool closed = l3_closed_form(mp, z0);
    if (numeric != closed) {
      ok = false;
      w.offer(1.0, "L3 mismatch at z0=" + format_double(z0) + " Y0=" + format_double(y0));
    }
    ++done;
  }
  return finish("l3-equivalence", done, ok ? 0.0 : 1.0, 0.5, w, ok && done == n);
}

OracleReport check_interval_condition(const ModelParams& mp) {
  (void)mp;
  Rng rng(0xfd955cb1u);
  WorstTracker w;
  bool ok = true;
  const std::size_t n = 10000;
  std::size_t done = 0;
  while (done < n) {
    const double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    const double c = rng.uniform(-3, 3), d = rng.uniform(-3, 3);
    const double f = rng.uniform(-3, 3), g = rng.uniform(-3, 3);
    const double h = rng.uniform(-3, 3), s = rng.uniform(-3, 3);
    if (std::abs(f) < 1e-3) continue;
    const double disc = g * g - 4.0 * f * h;
    if (disc < 1e-6) continue;
    const double sq = std::sqrt(disc);
    const double z1 = (-g - sq) / (2.0 * f), z2 = (-g + sq) / (2.0 * f);
    if (std::abs(c * z1 + d) < 1e-6 || std::abs(c * z2 + d) < 1e-6) continue;
    const double phi1 = (a * z1 + b) / (c * z1 + d);
    const double phi2 = (a * z2 + b) / (c * z2 + d);
    const bool direct = std::min(phi1, phi2) < s && s < std::max(phi1, phi2);
    bool closed;
    try {
      closed = interval_condition(a, b, c, d, f, g, h, s);
    } catch (const std::domain_error&) {
      continue;
    }
    if (closed != direct) {
      ok = false;
      w.offer(1.0, "interval condition mismatch");
    }
    ++done;
  }
  return finish("interval-condition", n, ok ? 0.0 : 1.0, 0.5, w, ok);
}

OracleReport check_local_derivatives(const ModelParams& mp) {
  Rng rng(0xbe5466cfu);
  WorstTracker w;
  double maxr = 0;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    const double z0 = rng.uniform(-3, 3), t0 = rng.uniform(-3, 3);
    const ChartPoint p0{z0, t0, 0.0};
    const HugoniotCurve cu = curve_through_point(mp, p0);
    const LocalDerivatives d = local_side_derivatives(mp, z0, t0);
    const double h = 1e-3 * (1.0 + std::abs(z0));
    const double fd_s = oracle_fd_speed(mp, cu, z0, h);
    const auto dy = [&](double hh) {
      return (eval_curve(mp, cu, z0 + hh).y - eval_curve(mp, cu, z0 - hh).y) / (2.0 * hh);
    };
    const double fd_y = (4.0 * dy(0.5 * h) - dy(h)) / 3.0;
    const double r =
        std::max(rel(fd_s - d.ds_dz, d.ds_dz), rel(fd_y - d.dy_dz, d.dy_dz));
    if (r > maxr) maxr = r;
    if (r > 1e-6)
      w.offer(r, "derivative mismatch at z0=" + format_double(z0) +
                     " t0=" + format_double(t0));
  }
  return finish("local-derivatives", n, maxr, 1e-6, w);
}

OracleReport check_floodfill(const ModelParams& mp) {
  GridSpec grid;
  WorstTracker w;
  bool ok = true;
  const FloodFillResult full = oracle_floodfill(mp, grid, false);
  if (full.component_count != 12) {
    ok = false;
    w.offer(static_cast<double>(full.component_count),
            "component count " + std::to_string(full.component_count) + " != 12");
  }
  std::set<RegionLabel> labels;
  for (const auto& c : full.components) {
    if (c.label == RegionLabel::Boundary || c.label == RegionLabel::Unclassified) {
      ok = false;
      w.offer(1.0, std::string("component mapped to ") + region_name(c.label));
    }
    if (!labels.insert(c.label).second) {
      ok = false;
      w.offer(1.0, std::string("duplicate label ") + region_name(c.label));
    }
  }
  const FloodFillResult pos = oracle_floodfill(mp, grid, true);
  if (pos.component_count != 6) {
    ok = false;
    w.offer(static_cast<double>(pos.component_count),
            "Y>0 component count " + std::to_string(pos.component_count) + " != 6");
  }
  OracleReport rep = finish("floodfill-regions", full.components.size(),
                            ok ? 0.0 : 1.0, 0.5, w, ok);
  return rep;
}

OracleReport check_arcs(const ModelParams& mp) {
  Rng rng(0x3f84d5b5u);
  WorstTracker w;
  bool ok = true;
  std::size_t arcs_seen = 0;
  const std::size_t n = 1000;
  std::size_t done = 0;
  while (done < n) {
    const double k = rng.uniform(-5, 5), l = rng.uniform(-5, 5);
    if (std::abs(l + 2.0 * mp.c) < 0.05) continue;
    const HugoniotCurve cu = curve_from_kl(mp, k, l, false);
    std::vector<ArcSegment> arcs;
    try {
      arcs = extract_arcs(mp, cu);
    } catch (const std::domain_error&) {
      continue;
    }
    ++done;
    // L2 reference: the slow crossing speed of this curve, when it exists.
    double s_slow = 0;
    bool have_slow = false;
    const RealRoots cx = intersect_characteristic(mp, cu);
    if (cx.roots.size() == 2 && cx.roots[0].multiplicity == 1 &&
        cx.roots[1].multiplicity == 1) {
      for (const Root& r : cx.roots) {
        const ChartPoint p = eval_curve(mp, cu, r.x);
        if (p.t < 0.0) {
          s_slow = speed_at(mp, p);
          have_slow = true;
        }
      }
    }
    for (const ArcSegment& a : arcs) {
      ++arcs_seen;
      double prev_s = speed_along(mp, cu, a.z_start);
      const double span = a.z_end - a.z_start;
      int tfp_signchg = 0;
      double prev_tfp = surface_value(mp, SurfaceId::TfPrime,
                                      eval_curve(mp, cu, a.z_start));
      for (int j = 1; j <= 100; ++j) {
        const double z = a.z_start + span * j / 101.0;
        const double s = speed_along(mp, cu, z);
        if (!(s < prev_s)) {
          ok = false;
          w.offer(s - prev_s, "speed not decreasing on arc of k=" + format_double(k) +
                                  " l=" + format_double(l));
          break;
        }
        prev_s = s;
        if (have_slow && !(s < s_slow + 1e-9)) {
          ok = false;
          w.offer(s - s_slow, "L2 violated on arc of k=" + format_double(k) +
                                  " l=" + format_double(l));
          break;
        }
        const double tfp = surface_value(mp, SurfaceId::TfPrime, eval_curve(mp, cu, z));
        if ((tfp < 0.0) != (prev_tfp < 0.0)) ++tfp_signchg;
        prev_tfp = tfp;
      }
      if (tfp_signchg != 0) {
        ok = false;
        w.offer(static_cast<double>(tfp_signchg),
                "arc crosses Tf' on k=" + format_double(k) + " l=" + format_double(l));
      }
      // Local arcs leave the characteristic into the half-space dictated by
      // the start derivatives.
      if (a.classification == ArcClass::Local) {
        const ChartPoint st = eval_curve(mp, cu, a.z_start);
        const LocalDerivatives d = local_side_derivatives(mp, st.z, st.t);
        const double y1 = eval_curve(mp, cu, a.z_start + span / 101.0).y;
        const bool expect_neg = d.ds_dz * d.dy_dz > 0.0;
        if (std::abs(y1) > 1e-12 && (y1 < 0.0) != expect_neg) {
          ok = false;
          w.offer(std::abs(y1), "local arc entered the wrong half-space, k=" +
                                    format_double(k) + " l=" + format_double(l));
        }
      }
    }
  }
  return finish("arc-validity", arcs_seen, ok ? 0.0 : 1.0, 0.5, w, ok);
}

OracleReport check_mesh_selfcheck(const ModelParams& mp) {
  WorstTracker w;
  double maxr = 0;
  MeshSpec spec;
  spec.nz = 60;
  spec.nt = 60;
  std::size_t rows = 0;
  for (SurfaceId id : {SurfaceId::Characteristic, SurfaceId::Son, SurfaceId::SonPrime,
                       SurfaceId::Tf, SurfaceId::TfPrime, SurfaceId::Sigma}) {
    for (const MeshRow& row : sample_surface(mp, id, spec)) {
      ++rows;
      const ChartPoint p{row.z, row.t, row.y};
      const double scale =
          (id == SurfaceId::Tf || id == SurfaceId::TfPrime)
              ? (1.0 + row.y * row.y) * (1.0 + row.t * row.t) * 100.0
              : 1.0 + std::abs(row.y) + std::abs(row.t);
      const double r = std::abs(surface_value(mp, id, p)) / scale;
      if (r > maxr) maxr = r;
      if (r > 1e-9)
        w.offer(r, std::string("mesh row off ") + surface_name(id) + " at z=" +
                       format_double(row.z) + " t=" + format_double(row.t));
    }
  }
  return finish("mesh-selfcheck", rows, maxr, 1e-9, w);
}

}  // namespace

const std::vector<OracleCheck>& oracle_registry() {
  static const std::vector<OracleCheck> registry = {
      {"manifold-closure",
       {"eval_curve", "curve_from_kl", "chart_to_blowup", "manifold_residual"},
       check_manifold_closure},
      {"rh-blowdown",
       {"chart_to_states", "rh_residual", "flux_eval", "speed_at", "blowup_speed"},
       check_rh_blowdown},
      {"chart-roundtrip", {"chart_from_blowup"}, check_chart_roundtrip},
      {"lemma1-speed-gap",
       {"kl_from_point", "curve_through_point", "speed_along",
        "classify_characteristic_point", "speed_along_point_form",
        "characteristic_speed_form"},
       check_speed_gap},
      {"characteristic-intersections", {"intersect_characteristic"},
       check_char_intersections},
      {"son-critical-points", {"intersect_son", "oracle_fd_speed"}, check_son_critical},
      {"sonprime-counts", {"intersect_sonprime"}, check_sonprime_counts},
      {"surface-forms",
       {"surface_value", "inflection_locus_value", "son_sonprime_lines_z0",
        "double_sonic_points", "fold_curve"},
       check_surface_forms},
      {"tf-tangencies",
       {"tf_quadratic", "sonic_prime_fold", "sonprime_y_of_zt"},
       check_tf_tangency},
      {"son-sonprime-intersection", {"surface_value"}, check_son_sonprime_intersection},
      {"sigma-containment", {"sigma_contains"}, check_sigma_containment},
      {"sonprime-split", {"sonprime_t0", "classify_sonprime_point"}, check_sonprime_split},
      {"l3-equivalence", {"l3_closed_form", "l3_numeric"}, check_l3_equivalence},
      {"interval-condition", {"interval_condition"}, check_interval_condition},
      {"local-derivatives", {"local_side_derivatives"}, check_local_derivatives},
      {"floodfill-regions", {"region_classify"}, check_floodfill},
      {"arc-validity", {"extract_arcs", "side_points"}, check_arcs},
      {"mesh-selfcheck", {"sample_surface"}, check_mesh_selfcheck},
  };
  return registry;
}

std::vector<std::string> uncovered_closed_forms() {
  static const std::vector<std::string> required = {
      // model
      "flux_eval", "rh_residual", "chart_to_blowup", "chart_from_blowup",
      "chart_to_states", "manifold_residual", "blowup_speed",
      // curves
      "speed_at", "curve_from_kl", "eval_curve", "kl_from_point",
      "curve_through_point", "speed_along", "intersect_characteristic",
      "intersect_son", "intersect_sonprime", "speed_along_point_form",
      "characteristic_speed_form",
      // surfaces
      "surface_value", "tf_quadratic", "fold_curve", "inflection_locus_value",
      "double_sonic_points", "sonic_prime_fold", "sonprime_y_of_zt",
      "son_sonprime_lines_z0", "sigma_contains", "sample_surface",
      // lax
      "classify_characteristic_point", "sonprime_t0", "classify_sonprime_point",
      "region_classify", "side_points", "l3_closed_form", "l3_numeric",
      "interval_condition", "local_side_derivatives", "extract_arcs",
      // oracle plumbing with closed-form content
      "oracle_fd_speed",
  };
  std::set<std::string> covered;
  for (const OracleCheck& c : oracle_registry())
    covered.insert(c.covers.begin(), c.covers.end());
  std::vector<std::string> missing;
  for (const std::string& r : required)
    if (!covered.count(r)) missing.push_back(r);
  return missing;
}

}  // namespace wavem
