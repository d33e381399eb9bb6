// Slow/fast splits of the characteristic and sonic' surfaces, the twelve-way
// region classification, the L1-L3 admissibility conditions, and extraction
// of admissible (local and non-local) arcs from Hugoniot curves.
#pragma once

#include "wavem/curves.hpp"
#include "wavem/model.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace wavem {

enum class CharSide { Slow, Fast, Fold };

enum class SonPrimeSide { SlowSide, FastSide, OnBoundary };

enum class RegionLabel {
  SSPrimeZpYp,
  SSPrimeZpYm,
  SSPrimeZmYp,
  SSPrimeZmYm,
  LateralZpYp,
  LateralZpYm,
  LateralZmYp,
  LateralZmYm,
  AboveBridge,
  BelowBridge,
  AboveTunnel,
  BelowTunnel,
  Boundary,
  Unclassified,
};

const char* region_name(RegionLabel label);

struct ZAxisDegenerate : std::domain_error {
  using std::domain_error::domain_error;
};
struct MissingSidePoint : std::domain_error {
  using std::domain_error::domain_error;
};
struct SecondaryBifurcation : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoRealRoots : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

// Side of a characteristic point (Y = 0): slow for t < 0, fast for t > 0,
// fold within tol of t = 0.
CharSide classify_characteristic_point(const ModelParams& mp, double z, double t,
                                       double tol = 1e-9);

// The t coordinate of the Son' point over (z0, Y0):
//   t0' = [Y0 (z0^2+1)((b1+1) z0^2 - 1) - 2c ((b1-1) z0^2 + 1)]
//         / (2c z0 (z0^2+1)((b1+1) z0^2 + 3)).
// ZAxisDegenerate at z0 = 0 (there Son' is the line Y = -2c, t free).
double sonprime_t0(const ModelParams& mp, double z0, double y0);

// Slow/fast side of Son' at (z0, Y0): slow iff z0 (Y0 - Yfold(z0)) > 0 where
// Yfold is the sonic'-fold Y(z). Boundary within tol of z0 = 0 or the fold.
SonPrimeSide classify_sonprime_point(const ModelParams& mp, double z0, double y0,
                                     double tol = 1e-9);

// One of the twelve region identities, from the sign vector
// (sgn Y, sgn son, sgn son') and the position of z relative to the critical
// values -1/sqrt(b1+1), 0, 1/sqrt(b1+1). Boundary when any sign is within
// tol of zero.
RegionLabel region_classify(const ModelParams& mp, const ChartPoint& cp,
                            double tol = 1e-9);

// Characteristic intersections of the curves through a point, tagged
// slow/fast. The plain pair must exist transversally (MissingSidePoint
// otherwise); the prime pair may be absent. SecondaryBifurcation when either
// curve meets the secondary bifurcation.
struct SidePoint {
  ChartPoint slow, fast;                          // on the plain curve
  std::optional<ChartPoint> slow_prime, fast_prime;  // on the prime curve
};
SidePoint side_points(const ModelParams& mp, const ChartPoint& cp);

// Appendix-style closed form: L3 holds at a Son' point iff (b1+1) z0^2 < 1.
bool l3_closed_form(const ModelParams& mp, double z0);

// Direct check of L3 at the Son' point over (z0, Y0): speeds at the two
// characteristic intersections of the Hugoniot' curve must bracket the
// Son'-point speed. Errors as side_points.
bool l3_numeric(const ModelParams& mp, double z0, double y0);

// Sign test for (a z1 + b)/(c z1 + d) < s < (a z2 + b)/(c z2 + d) with
// z1 < z2 the roots of f z^2 + g z + h, evaluated without computing the
// roots:
//   [(c^2 h - d c g + d^2 f) s^2 + (a g d + b c g - 2(a c h + b d f)) s
//    + a^2 h - a b g + b^2 f] / (c^2 h - d c g + d^2 f) < 0.
bool interval_condition(double a, double b, double c, double d, double f,
                        double g, double h, double s);

// ds/dz and dY/dz at a characteristic point (z0, t0) along the plain curve
// through it:
//   ds/dz = c [((b1+1) z0^5 + (b1+4) z0^3 + 3 z0) t0 + (b1-1) z0^2 + 1]
//           / ((z0^2+1)((b1-1) z0^2 + 1))
//   dY/dz = -2c (z0^2+1) t0 / ((b1-1) z0^2 + 1)
struct LocalDerivatives {
  double ds_dz = 0;
  double dy_dz = 0;
};
LocalDerivatives local_side_derivatives(const ModelParams& mp, double z0, double t0);

enum class ArcStart { Cs, SonPrimeS };
enum class ArcEnd { Son, Infinity };
enum class ArcClass { Local, NonLocal };

const char* arc_start_name(ArcStart k);
const char* arc_end_name(ArcEnd k);
const char* arc_class_name(ArcClass k);

// A maximal admissible piece of a curve: oriented from z_start to z_end with
// s strictly decreasing, no Son point in the interior.
struct ArcSegment {
  HugoniotCurve curve;
  double z_start = 0;
  double z_end = 0;
  ArcStart start_kind = ArcStart::Cs;
  ArcEnd end_kind = ArcEnd::Infinity;
  ArcClass classification = ArcClass::Local;
};

struct ArcOptions {
  double z_max = 50.0;     // clip window |z| <= z_max
  double tol = 1e-9;       // boundary band for classifications
  double trim = 1e-6;      // z-gap discarded around tangencies
  double root_tol = 1e-9;  // forwarded to the intersection root finder
};

// Admissible arcs of a plain curve: Local arcs start at transversal slow
// characteristic crossings, NonLocal arcs at slow Son' crossings satisfying
// L3; all are oriented toward decreasing s and end at the first Son point or
// at the clip boundary. SecondaryBifurcation / DegenerateCurve on bad input.
std::vector<ArcSegment> extract_arcs(const ModelParams& mp, const HugoniotCurve& cu,
                                     const ArcOptions& opt = {});

}  // namespace wavem
