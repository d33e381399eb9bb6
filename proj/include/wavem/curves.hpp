// Hugoniot and Hugoniot' curves as one-parameter families over z, the shock
// speed along them, and their intersections with the characteristic and
// sonic/sonic' surfaces.
#pragma once

#include "wavem/model.hpp"
#include "wavem/roots.hpp"

#include <stdexcept>
#include <utility>

namespace wavem {

// Invariants of a Hugoniot (prime = false) or Hugoniot' (prime = true)
// curve: k fixes 2*Utilde + b1*X, l fixes 2*Vtilde + Z*X (prime curves flip
// the sign of X, equivalently of Y).
struct HugoniotCurve {
  double k = 0;
  double l = 0;
  bool prime = false;
};

struct CurveSample {
  double z = 0, t = 0, y = 0, s = 0;
};

struct DegenerateCurve : std::domain_error {
  using std::domain_error::domain_error;
};

// Shock speed at a chart point,
//   s = c ((b1+1) t z^4 + b1 z^2 t + (b1+2) z - t) / (b1 (z^2+1)).
// Independent of Y; agrees with blowup_speed for the default offsets.
double speed_at(const ModelParams& mp, const ChartPoint& cp);

HugoniotCurve curve_from_kl(const ModelParams& mp, double k, double l,
                            bool prime = false);

// Parametrization over z:
//   Y(z) = -((l+2c) z^2 - k z - l) / ((b1-1) z^2 + 1)   (negated for prime)
//   t(z) = ((z^2+1)(b1 z l - k) + 2 c z (2 + b1 z^2)) / (2c ((b1-1) z^4 + b1 z^2 + 1))
ChartPoint eval_curve(const ModelParams& mp, const HugoniotCurve& cu, double z);

// Invariants of the plain curve through a point.
std::pair<double, double> kl_from_point(const ModelParams& mp, const ChartPoint& cp);

// Curve of the requested family through cp (prime negates Y and Y0).
HugoniotCurve curve_through_point(const ModelParams& mp, const ChartPoint& cp,
                                  bool prime = false);

// speed_at composed with eval_curve.
double speed_along(const ModelParams& mp, const HugoniotCurve& cu, double z);

CurveSample sample_curve(const ModelParams& mp, const HugoniotCurve& cu, double z);

// True when the curve meets the secondary bifurcation (l = -2c for its own
// family); such curves are not diffeomorphic to a line.
bool is_secondary(const ModelParams& mp, const HugoniotCurve& cu, double tol = 1e-9);

// Real z of the curve's intersections with the characteristic Y = 0.
// Quadratic: 0, 1 (tangency, multiplicity 2) or 2 roots. DegenerateCurve if
// the numerator vanishes identically. root_tol gates both the accepted
// imaginary part and the residual of reported roots.
RealRoots intersect_characteristic(const ModelParams& mp, const HugoniotCurve& cu,
                                   double root_tol = 1e-9);

// Real z where the curve meets Son (critical points of s along plain curves)
// resp. Son'. Degree <= 8 after clearing the positive denominators.
RealRoots intersect_son(const ModelParams& mp, const HugoniotCurve& cu,
                        double root_tol = 1e-9);
RealRoots intersect_sonprime(const ModelParams& mp, const HugoniotCurve& cu,
                             double root_tol = 1e-9);

// The son/son' composite polynomial itself (cleared of denominators), used
// by the arc extractor and the sampling oracle.
Poly curve_surface_poly(const ModelParams& mp, const HugoniotCurve& cu, bool prime_surface);

// Cross-check closed forms, re-derived from the composition (the printed
// coefficient lists contain transcription slips; these are the corrected
// ones). Primary evaluation always goes through speed_at(eval_curve(.)).
double speed_along_point_form(const ModelParams& mp, const ChartPoint& p0, double z);
double characteristic_speed_form(const ModelParams& mp, double z0, double t0, double z);

}  // namespace wavem
