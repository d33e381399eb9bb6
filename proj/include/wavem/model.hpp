// Quadratic two-equation conservation-law model (symmetric case), blow-up
// coordinates and the (z, t, Y) working chart of the wave manifold.
#pragma once

#include <stdexcept>
#include <utility>

namespace wavem {

// Flux pair
//   f(u,v) = v^2/2 + (b1+1) u^2/2 + a1 u + a2 v
//   g(u,v) = u v + a3 u + a4 v
// with b1 > 1 and c = a3 - a2 > 0.
struct ModelParams {
  double b1 = 2.0;
  double c = 1.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 1.0;
  double a4 = 0.0;

  // Canonical instance for a given (b1, c): a1 = a2 = a4 = 0, a3 = c.
  static ModelParams standard(double b1 = 2.0, double c = 1.0);

  void validate() const;  // throws std::invalid_argument on a bad instance

  // z-coordinate of the double sonic lines, 1/sqrt(b1+1).
  double double_sonic_z() const;
};

// Two states (u,v), (u',v') plus a candidate shock speed s.
struct StatePair {
  double u = 0, v = 0;
  double up = 0, vp = 0;
  double s = 0;
};

// Blow-up coordinates restricted to the z-chart: Utilde = b1 U + a1 - a4,
// V1 = V + a3, X = u - u', and z = 1/Z (Z = Y/X). The plane at z = infinity
// is not representable here.
struct BlowupPoint {
  double utilde = 0;
  double v1 = 0;
  double x = 0;
  double z = 0;
};

// Working chart of the manifold minus the plane at infinity. The surface
// Y = 0 is the characteristic; t measures displacement from the fold curve.
struct ChartPoint {
  double z = 0;
  double t = 0;
  double y = 0;
};

struct NotOnManifold : std::domain_error {
  using std::domain_error::domain_error;
};

// Flux components (f, g) at a state.
std::pair<double, double> flux_eval(const ModelParams& mp, double u, double v);

// F(W) - F(W') - s (W - W'); both components vanish exactly on shock data.
std::pair<double, double> rh_residual(const ModelParams& mp, const StatePair& sp);

// G = (z^2 - 1) V1 - z Utilde + c. Zero on the manifold.
double manifold_residual(const ModelParams& mp, const BlowupPoint& bp);

// Chart parametrization: Utilde = 2cz/(z^2+1) + c t (z^2-1),
// V1 = c/(z^2+1) + c t z, X = z Y. Exact right inverse of chart_from_blowup.
BlowupPoint chart_to_blowup(const ModelParams& mp, const ChartPoint& cp);

// Inverse chart. Requires the manifold residual below `tol` (NotOnManifold
// otherwise) and z != 0: at z = 0 the stored X = zY is identically zero and Y
// cannot be recovered.
ChartPoint chart_from_blowup(const ModelParams& mp, const BlowupPoint& bp,
                             double tol = 1e-9);

// Blow-down to state space. The speed field is the shock speed of the chart
// point, s = Utilde/b1 + V1 z + ((b1+1) a4 - a1)/b1.
StatePair chart_to_states(const ModelParams& mp, const ChartPoint& cp);

// Shock speed in blow-up coordinates (the RH-derived expression; the curves
// module carries the equivalent polynomial chart form).
double blowup_speed(const ModelParams& mp, const BlowupPoint& bp);

}  // namespace wavem
