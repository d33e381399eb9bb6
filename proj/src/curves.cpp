#include "wavem/curves.hpp"

#include "wavem/detail/forms.hpp"

#include <cmath>

namespace wavem {

using detail::curve_denom;
using detail::son_r;

double speed_at(const ModelParams& mp, const ChartPoint& cp) {
  const double z = cp.z, t = cp.t, b1 = mp.b1;
  const double z2 = z * z;
  return mp.c * ((b1 + 1.0) * t * z2 * z2 + b1 * z2 * t + (b1 + 2.0) * z - t) /
         (b1 * (z2 + 1.0));
}

HugoniotCurve curve_from_kl(const ModelParams& mp, double k, double l, bool prime) {
  (void)mp;
  return HugoniotCurve{k, l, prime};
}

ChartPoint eval_curve(const ModelParams& mp, const HugoniotCurve& cu, double z) {
  const double b1 = mp.b1, c = mp.c, k = cu.k, l = cu.l;
  const double z2 = z * z;
  ChartPoint cp;
  cp.z = z;
  cp.y = -((l + 2.0 * c) * z2 - k * z - l) / son_r(mp, z);
  if (cu.prime) cp.y = -cp.y;
  cp.t = ((z2 + 1.0) * (b1 * z * l - k) + 2.0 * c * z * (2.0 + b1 * z2)) /
         (2.0 * c * curve_denom(mp, z));
  return cp;
}

std::pair<double, double> kl_from_point(const ModelParams& mp, const ChartPoint& cp) {
  const double b1 = mp.b1, c = mp.c, z = cp.z, t = cp.t, y = cp.y;
  const double w = z * z + 1.0;
  const double k = (4.0 * c * z + 2.0 * c * t * (z * z * z * z - 1.0) + b1 * z * w * y) / w;
  const double l = (2.0 * c * z * w * t + y * w - 2.0 * c * z * z) / w;
  return {k, l};
}

HugoniotCurve curve_through_point(const ModelParams& mp, const ChartPoint& cp,
                                  bool prime) {
  ChartPoint q = cp;
  if (prime) q.y = -q.y;
  const auto [k, l] = kl_from_point(mp, q);
  return HugoniotCurve{k, l, prime};
}

double speed_along(const ModelParams& mp, const HugoniotCurve& cu, double z) {
  return speed_at(mp, eval_curve(mp, cu, z));
}

CurveSample sample_curve(const ModelParams& mp, const HugoniotCurve& cu, double z) {
  const ChartPoint cp = eval_curve(mp, cu, z);
  return CurveSample{cp.z, cp.t, cp.y, speed_at(mp, cp)};
}

bool is_secondary(const ModelParams& mp, const HugoniotCurve& cu, double tol) {
  return std::abs(cu.l + 2.0 * mp.c) < tol;
}

RealRoots intersect_characteristic(const ModelParams& mp, const HugoniotCurve& cu,
                                   double root_tol) {
  // The prime sign flip does not move the zero set of Y.
  Poly num = detail::curve_y_num(mp, cu.k, cu.l);
  if (num.degree() < 0)
    throw DegenerateCurve("intersect_characteristic: Y numerator vanishes identically");
  return real_roots(num, root_tol, 1e-6, root_tol);
}

Poly curve_surface_poly(const ModelParams& mp, const HugoniotCurve& cu,
                        bool prime_surface) {
  // Substitute (t(z), Y(z)) into son (prime_surface = false) or son'
  // (= true) and clear the positive denominator D(z) = R(z)(z^2+1):
  //   F = -P Nt + sigma (z^2+1) Q Ny - 2c (z^2+1) R^2,
  // sigma = +1 picks the surface whose Y-term sign matches the curve family.
  const Poly P = detail::son_p_poly(mp);
  const Poly Q = detail::son_q_poly(mp);
  const Poly R = detail::son_r_poly(mp);
  const Poly w = detail::z2p1_poly();
  const Poly Nt = detail::curve_t_num(mp, cu.k, cu.l);
  const Poly Ny = detail::curve_y_num(mp, cu.k, cu.l);
  // son' has +Q Y; the curve's Y carries a sign flip when prime. Both flips
  // compose into sigma.
  double sigma = prime_surface ? 1.0 : -1.0;
  if (cu.prime) sigma = -sigma;
  return (-1.0 * (P * Nt)) + sigma * (w * (Q * Ny)) + (-2.0 * mp.c) * (w * (R * R));
}

namespace {

RealRoots intersect_surface(const ModelParams& mp, const HugoniotCurve& cu,
                            bool prime_surface, double root_tol) {
  Poly F = curve_surface_poly(mp, cu, prime_surface);
  if (F.degree() < 0) throw DegenerateCurve("intersect_son: composite polynomial vanishes");
  return real_roots(F, root_tol, 1e-6, root_tol);
}

}  // namespace

RealRoots intersect_son(const ModelParams& mp, const HugoniotCurve& cu,
                        double root_tol) {
  return intersect_surface(mp, cu, false, root_tol);
}

RealRoots intersect_sonprime(const ModelParams& mp, const HugoniotCurve& cu,
                             double root_tol) {
  return intersect_surface(mp, cu, true, root_tol);
}

double speed_along_point_form(const ModelParams& mp, const ChartPoint& p0, double z) {
  const double b1 = mp.b1, c = mp.c;
  const double z0 = p0.z, t0 = p0.t, y0 = p0.y;
  const double w0 = z0 * z0 + 1.0;
  const double z04 = z0 * z0 * z0 * z0;
  const double sp3 = b1 * (b1 + 1.0) * (y0 * w0 + 2.0 * c * (1.0 + z0 * t0 * w0));
  const double sp2 = (b1 + 1.0) * (b1 * z0 * y0 * w0 + 2.0 * c * (2.0 * z0 + t0 * z04 - t0));
  const double sp1 = b1 * (y0 * w0 + 2.0 * c * (z0 * t0 * w0 - 2.0 * z0 * z0 - 1.0));
  const double sp0 = b1 * z0 * y0 * w0 + 2.0 * c * (2.0 * z0 + t0 * z04 - t0);
  return (((sp3 * z - sp2) * z - sp1) * z + sp0) /
         (2.0 * b1 * w0 * son_r(mp, z));
}

double characteristic_speed_form(const ModelParams& mp, double z0, double t0, double z) {
  const double b1 = mp.b1, c = mp.c;
  const double w0 = z0 * z0 + 1.0;
  const double z04 = z0 * z0 * z0 * z0;
  const double sc3 = b1 * c * (t0 * z0 * w0 + 1.0) * (1.0 + b1);
  const double sc2 = c * (t0 * z04 + 2.0 * z0 - t0) * (1.0 + b1);
  const double sc1 = b1 * c * (t0 * z0 * z0 * z0 - 2.0 * z0 * z0 + t0 * z0 - 1.0);
  const double sc0 = c * (t0 * z04 + 2.0 * z0 - t0);
  return (((sc3 * z - sc2) * z - sc1) * z + sc0) / (b1 * w0 * son_r(mp, z));
}

}  // namespace wavem
