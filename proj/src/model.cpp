#include "wavem/model.hpp"

#include <cmath>

namespace wavem {

ModelParams ModelParams::standard(double b1, double c) {
  ModelParams mp;
  mp.b1 = b1;
  mp.c = c;
  mp.a1 = mp.a2 = mp.a4 = 0.0;
  mp.a3 = c;
  mp.validate();
  return mp;
}

void ModelParams::validate() const {
  if (!(b1 > 1.0)) throw std::invalid_argument("ModelParams: b1 must exceed 1");
  if (!(c > 0.0)) throw std::invalid_argument("ModelParams: c must be positive");
  if (std::abs((a3 - a2) - c) > 1e-12 * (1.0 + std::abs(c)))
    throw std::invalid_argument("ModelParams: c must equal a3 - a2");
}

double ModelParams::double_sonic_z() const { return 1.0 / std::sqrt(b1 + 1.0); }

std::pair<double, double> flux_eval(const ModelParams& mp, double u, double v) {
  const double f = 0.5 * v * v + 0.5 * (mp.b1 + 1.0) * u * u + mp.a1 * u + mp.a2 * v;
  const double g = u * v + mp.a3 * u + mp.a4 * v;
  return {f, g};
}

std::pair<double, double> rh_residual(const ModelParams& mp, const StatePair& sp) {
  const auto [f1, g1] = flux_eval(mp, sp.u, sp.v);
  const auto [f2, g2] = flux_eval(mp, sp.up, sp.vp);
  const double r1 = f1 - f2 - sp.s * (sp.u - sp.up);
  const double r2 = g1 - g2 - sp.s * (sp.v - sp.vp);
  return {r1, r2};
}

double manifold_residual(const ModelParams& mp, const BlowupPoint& bp) {
  return (bp.z * bp.z - 1.0) * bp.v1 - bp.z * bp.utilde + mp.c;
}

BlowupPoint chart_to_blowup(const ModelParams& mp, const ChartPoint& cp) {
  const double z = cp.z, t = cp.t;
  const double w = z * z + 1.0;
  BlowupPoint bp;
  bp.utilde = 2.0 * mp.c * z / w + mp.c * t * (z * z - 1.0);
  bp.v1 = mp.c / w + mp.c * t * z;
  bp.x = z * cp.y;
  bp.z = z;
  return bp;
}

ChartPoint chart_from_blowup(const ModelParams& mp, const BlowupPoint& bp,
                             double tol) {
  const double g = manifold_residual(mp, bp);
  const double scale = 1.0 + std::abs(bp.utilde) + std::abs(bp.v1) + std::abs(mp.c);
  if (std::abs(g) > tol * scale)
    throw NotOnManifold("chart_from_blowup: manifold residual " + std::to_string(g));
  const double z = bp.z;
  if (z == 0.0)
    throw std::domain_error("chart_from_blowup: Y is not recoverable at z = 0 (X = zY = 0)");
  const double w = z * z + 1.0;
  ChartPoint cp;
  cp.z = z;
  // Two equivalent expressions for t on the manifold; take the better
  // conditioned denominator (|z| vs |z^2 - 1|).
  if (std::abs(z) >= std::abs(z * z - 1.0))
    cp.t = (bp.v1 - mp.c / w) / (mp.c * z);
  else
    cp.t = (bp.utilde - 2.0 * mp.c * z / w) / (mp.c * (z * z - 1.0));
  cp.y = bp.x / z;
  return cp;
}

double blowup_speed(const ModelParams& mp, const BlowupPoint& bp) {
  const double kappa = ((mp.b1 + 1.0) * mp.a4 - mp.a1) / mp.b1;
  return bp.utilde / mp.b1 + bp.v1 * bp.z + kappa;
}

StatePair chart_to_states(const ModelParams& mp, const ChartPoint& cp) {
  const BlowupPoint bp = chart_to_blowup(mp, cp);
  const double bigU = (bp.utilde - mp.a1 + mp.a4) / mp.b1;
  const double bigV = bp.v1 - mp.a3;
  const double x = bp.x, y = cp.y;
  StatePair sp;
  sp.u = bigU + 0.5 * x;
  sp.up = bigU - 0.5 * x;
  sp.v = bigV + 0.5 * y;
  sp.vp = bigV - 0.5 * y;
  sp.s = blowup_speed(mp, bp);
  return sp;
}

}  // namespace wavem
