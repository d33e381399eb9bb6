#include "wavem/lax.hpp"

#include "wavem/detail/forms.hpp"
#include "wavem/surfaces.hpp"

#include <algorithm>
#include <cmath>

namespace wavem {

using detail::son_p;
using detail::son_r;

const char* region_name(RegionLabel label) {
  switch (label) {
    case RegionLabel::SSPrimeZpYp: return "ss-prime z+ Y+";
    case RegionLabel::SSPrimeZpYm: return "ss-prime z+ Y-";
    case RegionLabel::SSPrimeZmYp: return "ss-prime z- Y+";
    case RegionLabel::SSPrimeZmYm: return "ss-prime z- Y-";
    case RegionLabel::LateralZpYp: return "lateral z+ Y+";
    case RegionLabel::LateralZpYm: return "lateral z+ Y-";
    case RegionLabel::LateralZmYp: return "lateral z- Y+";
    case RegionLabel::LateralZmYm: return "lateral z- Y-";
    case RegionLabel::AboveBridge: return "above-bridge";
    case RegionLabel::BelowBridge: return "below-bridge";
    case RegionLabel::AboveTunnel: return "above-tunnel";
    case RegionLabel::BelowTunnel: return "below-tunnel";
    case RegionLabel::Boundary: return "boundary";
    case RegionLabel::Unclassified: return "unclassified";
  }
  return "?";
}

const char* arc_start_name(ArcStart k) {
  return k == ArcStart::Cs ? "characteristic-slow" : "sonprime-slow";
}
const char* arc_end_name(ArcEnd k) { return k == ArcEnd::Son ? "son" : "infinity"; }
const char* arc_class_name(ArcClass k) { return k == ArcClass::Local ? "local" : "nonlocal"; }

CharSide classify_characteristic_point(const ModelParams& mp, double z, double t,
                                       double tol) {
  (void)mp;
  (void)z;
  if (t < -tol) return CharSide::Slow;
  if (t > tol) return CharSide::Fast;
  return CharSide::Fold;
}

double sonprime_t0(const ModelParams& mp, double z0, double y0) {
  if (z0 == 0.0)
    throw ZAxisDegenerate("sonprime_t0: t is free on the z = 0 line of Son'");
  const double b1 = mp.b1, c = mp.c;
  const double w = z0 * z0 + 1.0;
  const double num = y0 * w * ((b1 + 1.0) * z0 * z0 - 1.0) - 2.0 * c * son_r(mp, z0);
  const double den = 2.0 * c * z0 * w * ((b1 + 1.0) * z0 * z0 + 3.0);
  return num / den;
}

SonPrimeSide classify_sonprime_point(const ModelParams& mp, double z0, double y0,
                                     double tol) {
  if (std::abs(z0) < tol) return SonPrimeSide::OnBoundary;
  const double yfold = sonic_prime_fold(mp, z0).y;
  const double d = y0 - yfold;
  if (std::abs(d) < tol) return SonPrimeSide::OnBoundary;
  return (z0 * d > 0.0) ? SonPrimeSide::SlowSide : SonPrimeSide::FastSide;
}

RegionLabel region_classify(const ModelParams& mp, const ChartPoint& cp, double tol) {
  const double son = surface_value(mp, SurfaceId::Son, cp);
  const double sonp = surface_value(mp, SurfaceId::SonPrime, cp);
  if (std::abs(cp.y) < tol || std::abs(son) < tol || std::abs(sonp) < tol)
    return RegionLabel::Boundary;
  const double zs = mp.double_sonic_z();
  const bool yp = cp.y > 0.0;
  const bool sp = son > 0.0;
  const bool spp = sonp > 0.0;
  const bool inner = std::abs(cp.z) < zs;   // between the double sonic lines
  const bool zp = cp.z > 0.0;

  // Frozen from the flood-fill oracle at the default instance; see the
  // verify floodfill check for regeneration.
  if (yp && !sp && !spp) return RegionLabel::BelowBridge;
  if (!yp && !sp && !spp) return RegionLabel::AboveTunnel;
  if (yp && sp && !spp) return inner ? RegionLabel::AboveBridge : RegionLabel::Unclassified;
  if (!yp && !sp && spp) return inner ? RegionLabel::BelowTunnel : RegionLabel::Unclassified;
  if (yp && !sp && spp)
    return inner ? RegionLabel::Unclassified
                 : (zp ? RegionLabel::SSPrimeZpYp : RegionLabel::SSPrimeZmYp);
  if (!yp && sp && !spp)
    return inner ? RegionLabel::Unclassified
                 : (zp ? RegionLabel::SSPrimeZpYm : RegionLabel::SSPrimeZmYm);
  if (yp && sp && spp) return zp ? RegionLabel::LateralZpYp : RegionLabel::LateralZmYp;
  return zp ? RegionLabel::LateralZpYm : RegionLabel::LateralZmYm;
}

namespace {

struct TaggedCrossing {
  double z = 0;
  double t = 0;
  double s = 0;
  CharSide side = CharSide::Fold;
};

// Transversal characteristic crossings of a curve, tagged slow/fast.
std::vector<TaggedCrossing> characteristic_crossings(const ModelParams& mp,
                                                     const HugoniotCurve& cu,
                                                     double tol) {
  std::vector<TaggedCrossing> out;
  const RealRoots rr = intersect_characteristic(mp, cu);
  for (const Root& r : rr.roots) {
    if (r.multiplicity != 1) continue;  // tangency: no side
    const ChartPoint p = eval_curve(mp, cu, r.x);
    TaggedCrossing tc;
    tc.z = r.x;
    tc.t = p.t;
    tc.s = speed_at(mp, p);
    tc.side = classify_characteristic_point(mp, p.z, p.t, tol);
    out.push_back(tc);
  }
  return out;
}

}  // namespace

SidePoint side_points(const ModelParams& mp, const ChartPoint& cp) {
  const HugoniotCurve plain = curve_through_point(mp, cp, false);
  const HugoniotCurve prime = curve_through_point(mp, cp, true);
  if (is_secondary(mp, plain) || is_secondary(mp, prime))
    throw SecondaryBifurcation("side_points: curve through the secondary bifurcation");

  const auto mk = [&](const HugoniotCurve& cu, double z) {
    return eval_curve(mp, cu, z);
  };

  SidePoint sp;
  const auto plain_x = characteristic_crossings(mp, plain, 1e-9);
  const TaggedCrossing* ps = nullptr;
  const TaggedCrossing* pf = nullptr;
  for (const auto& x : plain_x) {
    if (x.side == CharSide::Slow) ps = &x;
    if (x.side == CharSide::Fast) pf = &x;
  }
  if (!ps || !pf)
    throw MissingSidePoint("side_points: plain curve lacks transversal slow/fast crossings");
  sp.slow = mk(plain, ps->z);
  sp.fast = mk(plain, pf->z);

  const auto prime_x = characteristic_crossings(mp, prime, 1e-9);
  for (const auto& x : prime_x) {
    if (x.side == CharSide::Slow) sp.slow_prime = mk(prime, x.z);
    if (x.side == CharSide::Fast) sp.fast_prime = mk(prime, x.z);
  }
  return sp;
}

bool l3_closed_form(const ModelParams& mp, double z0) {
  return (mp.b1 + 1.0) * z0 * z0 < 1.0;
}

bool l3_numeric(const ModelParams& mp, double z0, double y0) {
  const double t0 = sonprime_t0(mp, z0, y0);
  const ChartPoint pt{z0, t0, y0};
  const double s_pt = speed_at(mp, pt);
  const HugoniotCurve prime = curve_through_point(mp, pt, true);
  if (is_secondary(mp, prime))
    throw SecondaryBifurcation("l3_numeric: Hugoniot' curve through the secondary bifurcation");
  const auto xs = characteristic_crossings(mp, prime, 1e-9);
  const TaggedCrossing* s = nullptr;
  const TaggedCrossing* f = nullptr;
  for (const auto& x : xs) {
    if (x.side == CharSide::Slow) s = &x;
    if (x.side == CharSide::Fast) f = &x;
  }
  if (!s || !f)
    throw MissingSidePoint("l3_numeric: Hugoniot' curve lacks two transversal crossings");
  return s->s < s_pt && s_pt < f->s;
}

bool interval_condition(double a, double b, double c, double d, double f,
                        double g, double h, double s) {
  if (f == 0.0) throw NoRealRoots("interval_condition: f must be nonzero");
  const double disc = g * g - 4.0 * f * h;
  if (disc <= 0.0) throw NoRealRoots("interval_condition: no two real roots");
  const double den = c * c * h - d * c * g + d * d * f;  // f (c z1 + d)(c z2 + d)
  if (den == 0.0)
    throw DegenerateDenominator("interval_condition: c z + d vanishes at a root");
  const double num = den * s * s + (a * g * d + b * c * g - 2.0 * (a * c * h + b * d * f)) * s +
                     a * a * h - a * b * g + b * b * f;
  return num / den < 0.0;
}

LocalDerivatives local_side_derivatives(const ModelParams& mp, double z0, double t0) {
  const double w = z0 * z0 + 1.0;
  LocalDerivatives d;
  d.ds_dz = mp.c * (son_p(mp, z0) * t0 + son_r(mp, z0)) / (w * son_r(mp, z0));
  d.dy_dz = -2.0 * mp.c * w * t0 / son_r(mp, z0);
  return d;
}

std::vector<ArcSegment> extract_arcs(const ModelParams& mp, const HugoniotCurve& cu,
                                     const ArcOptions& opt) {
  if (cu.prime)
    throw DegenerateCurve("extract_arcs: arcs are extracted from plain curves");
  if (is_secondary(mp, cu))
    throw SecondaryBifurcation("extract_arcs: curve meets the secondary bifurcation");

  // Son roots partition the curve into monotone-speed pieces.
  std::vector<double> son_z;
  for (const Root& r : intersect_son(mp, cu, opt.root_tol).roots)
    if (std::abs(r.x) <= opt.z_max) son_z.push_back(r.x);
  std::sort(son_z.begin(), son_z.end());

  const auto ds_sign = [&](double z) {
    const double h = std::max(1e-7, 1e-7 * std::abs(z));
    return speed_along(mp, cu, z + h) - speed_along(mp, cu, z - h);
  };

  struct Start {
    double z;
    ArcStart kind;
  };
  std::vector<Start> starts;

  for (const auto& x : characteristic_crossings(mp, cu, opt.tol)) {
    if (std::abs(x.z) > opt.z_max) continue;
    if (x.side == CharSide::Slow) starts.push_back({x.z, ArcStart::Cs});
  }
  for (const Root& r : intersect_sonprime(mp, cu, opt.root_tol).roots) {
    if (r.multiplicity != 1 || std::abs(r.x) > opt.z_max) continue;
    const ChartPoint p = eval_curve(mp, cu, r.x);
    if (std::abs(p.z) < opt.tol) continue;  // z = 0 line is a boundary of Son'_s
    if (classify_sonprime_point(mp, p.z, p.y, opt.tol) != SonPrimeSide::SlowSide)
      continue;
    if (!l3_closed_form(mp, p.z)) continue;
    starts.push_back({r.x, ArcStart::SonPrimeS});
  }

  std::vector<ArcSegment> arcs;
  for (const Start& st : starts) {
    // Starts inside the trim band of a Son point have no reliable side.
    bool on_son = false;
    for (double zs : son_z)
      if (std::abs(zs - st.z) <= opt.trim) on_son = true;
    if (on_son) continue;
    const double d0 = ds_sign(st.z);
    if (d0 == 0.0) continue;
    const double dir = d0 > 0.0 ? -1.0 : 1.0;  // move toward decreasing s

    // Nearest Son root strictly beyond the start in the travel direction.
    double z_end = dir > 0.0 ? opt.z_max : -opt.z_max;
    ArcEnd end_kind = ArcEnd::Infinity;
    for (double zs : son_z) {
      if (dir > 0.0 && zs > st.z + opt.trim && zs < z_end) {
        z_end = zs;
        end_kind = ArcEnd::Son;
      }
      if (dir < 0.0 && zs < st.z - opt.trim && zs > z_end) {
        z_end = zs;
        end_kind = ArcEnd::Son;
      }
    }
    if (std::abs(z_end - st.z) <= opt.trim) continue;

    ArcSegment a;
    a.curve = cu;
    a.z_start = st.z;
    a.z_end = z_end;
    a.start_kind = st.kind;
    a.end_kind = end_kind;
    a.classification = st.kind == ArcStart::Cs ? ArcClass::Local : ArcClass::NonLocal;
    arcs.push_back(a);
  }

  std::sort(arcs.begin(), arcs.end(), [](const ArcSegment& a, const ArcSegment& b) {
    return a.z_start < b.z_start;
  });
  return arcs;
}

}  // namespace wavem
