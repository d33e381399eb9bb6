// Recurring polynomial pieces of the son/son' equations and the curve
// parametrization, shared between the curves and surfaces modules.
//
//   P(z) = (b1+1) z^5 + (b1+4) z^3 + 3 z        = z (z^2+1) ((b1+1) z^2 + 3)
//   Q(z) = (b1+1) z^4 + b1 z^2 - 1              = ((b1+1) z^2 - 1)(z^2 + 1)
//   R(z) = (b1-1) z^2 + 1                        (> 0 for b1 > 1)
//   D(z) = (b1-1) z^4 + b1 z^2 + 1              = R(z)(z^2 + 1)
#pragma once

#include "wavem/model.hpp"
#include "wavem/roots.hpp"

namespace wavem::detail {

inline double son_p(const ModelParams& mp, double z) {
  const double z2 = z * z;
  return ((mp.b1 + 1.0) * z2 * z2 + (mp.b1 + 4.0) * z2 + 3.0) * z;
}

inline double son_q(const ModelParams& mp, double z) {
  const double z2 = z * z;
  return (mp.b1 + 1.0) * z2 * z2 + mp.b1 * z2 - 1.0;
}

inline double son_r(const ModelParams& mp, double z) {
  return (mp.b1 - 1.0) * z * z + 1.0;
}

inline double curve_denom(const ModelParams& mp, double z) {
  const double z2 = z * z;
  return (mp.b1 - 1.0) * z2 * z2 + mp.b1 * z2 + 1.0;
}

inline Poly son_p_poly(const ModelParams& mp) {
  return Poly{{0.0, 3.0, 0.0, mp.b1 + 4.0, 0.0, mp.b1 + 1.0}};
}

inline Poly son_q_poly(const ModelParams& mp) {
  return Poly{{-1.0, 0.0, mp.b1, 0.0, mp.b1 + 1.0}};
}

inline Poly son_r_poly(const ModelParams& mp) {
  return Poly{{1.0, 0.0, mp.b1 - 1.0}};
}

inline Poly z2p1_poly() { return Poly{{1.0, 0.0, 1.0}}; }

// Numerator of the curve's Y(z): -(l+2c) z^2 + k z + l over R(z).
inline Poly curve_y_num(const ModelParams& mp, double k, double l) {
  return Poly{{l, k, -(l + 2.0 * mp.c)}};
}

// Numerator of the curve's t(z): (z^2+1)(b1 l z - k) + 2 c z (2 + b1 z^2)
// over 2 c D(z).
inline Poly curve_t_num(const ModelParams& mp, double k, double l) {
  const double b1 = mp.b1, c = mp.c;
  return Poly{{-k, b1 * l + 4.0 * c, -k, b1 * l + 2.0 * c * b1}};
}

}  // namespace wavem::detail
