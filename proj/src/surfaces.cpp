#include "wavem/surfaces.hpp"

#include "wavem/detail/forms.hpp"

#include <cmath>

namespace wavem {

using detail::son_p;
using detail::son_q;
using detail::son_r;

const char* surface_name(SurfaceId id) {
  switch (id) {
    case SurfaceId::Characteristic: return "characteristic";
    case SurfaceId::Son: return "son";
    case SurfaceId::SonPrime: return "sonprime";
    case SurfaceId::Tf: return "tf";
    case SurfaceId::TfPrime: return "tfprime";
    case SurfaceId::Sigma: return "sigma";
  }
  return "?";
}

std::optional<SurfaceId> surface_from_name(std::string_view name) {
  for (SurfaceId id : {SurfaceId::Characteristic, SurfaceId::Son, SurfaceId::SonPrime,
                       SurfaceId::Tf, SurfaceId::TfPrime, SurfaceId::Sigma})
    if (name == surface_name(id)) return id;
  return std::nullopt;
}

TfQuadratic tf_quadratic(const ModelParams& mp, double z, double t) {
  const double b1 = mp.b1, c = mp.c;
  const double w = z * z + 1.0;
  TfQuadratic q;
  q.a = w * (b1 * b1 * z * z + 4.0);
  q.b = 4.0 * c * (z * w * (b1 * z * z - b1 + 4.0) * t + 2.0 * son_r(mp, z));
  q.c = 4.0 * c * c * t * t * w * w * w;
  return q;
}

double surface_value(const ModelParams& mp, SurfaceId id, const ChartPoint& cp) {
  const double z = cp.z, t = cp.t, y = cp.y;
  switch (id) {
    case SurfaceId::Characteristic:
      return y;
    case SurfaceId::Son:
      return -2.0 * mp.c * son_p(mp, z) * t - son_q(mp, z) * y - 2.0 * mp.c * son_r(mp, z);
    case SurfaceId::SonPrime:
      return -2.0 * mp.c * son_p(mp, z) * t + son_q(mp, z) * y - 2.0 * mp.c * son_r(mp, z);
    case SurfaceId::Tf: {
      const TfQuadratic q = tf_quadratic(mp, z, t);
      return (q.a * y + q.b) * y + q.c;
    }
    case SurfaceId::TfPrime: {
      const TfQuadratic q = tf_quadratic(mp, z, t);
      return (q.a * y - q.b) * y + q.c;
    }
    case SurfaceId::Sigma:
      return y + 2.0 * mp.c * (t * z * z * z + t * z + 1.0) / (z * z + 1.0);
  }
  return 0.0;
}

ChartPoint fold_curve(double z) { return ChartPoint{z, 0.0, 0.0}; }

double inflection_locus_value(const ModelParams& mp, double z, double t) {
  return mp.c * (son_p(mp, z) * t + son_r(mp, z));
}

std::pair<DoubleSonicLine, DoubleSonicLine> double_sonic_points(const ModelParams& mp) {
  const double zs = mp.double_sonic_z();
  const double ts = mp.b1 * std::sqrt(mp.b1 + 1.0) / (2.0 * (mp.b1 + 2.0));
  return {DoubleSonicLine{zs, -ts}, DoubleSonicLine{-zs, ts}};
}

ChartPoint sonic_prime_fold(const ModelParams& mp, double z) {
  const double b1 = mp.b1;
  const double z2 = z * z;
  const double den = (b1 + 1.0) * (b1 + 1.0) * z2 * z2 + 2.0 * (b1 + 3.0) * z2 + 1.0;
  ChartPoint cp;
  cp.z = z;
  cp.t = -(b1 + 2.0) * z * son_r(mp, z) / ((z2 + 1.0) * den);
  cp.y = -2.0 * mp.c * son_r(mp, z) / den;
  return cp;
}

double sonprime_y_of_zt(const ModelParams& mp, double z, double t) {
  return 2.0 * mp.c * (son_p(mp, z) * t + son_r(mp, z)) / son_q(mp, z);
}

std::pair<HorizontalLine, HorizontalLine> son_sonprime_lines_z0(const ModelParams& mp) {
  return {HorizontalLine{0.0, 2.0 * mp.c}, HorizontalLine{0.0, -2.0 * mp.c}};
}

ChartPoint curve_on_surface_point(const ModelParams& mp, CurveOnSurface id,
                                  double param) {
  switch (id) {
    case CurveOnSurface::FoldCurve:
      return fold_curve(param);
    case CurveOnSurface::InflectionLocus: {
      // IL branch over z (z != 0): P(z) t + R(z) = 0 inside Y = 0.
      if (param == 0.0)
        throw std::domain_error("inflection locus does not meet z = 0");
      return ChartPoint{param, -son_r(mp, param) / son_p(mp, param), 0.0};
    }
    case CurveOnSurface::DoubleSonicPlus: {
      const auto line = double_sonic_points(mp).first;
      return ChartPoint{line.z, line.t, param};
    }
    case CurveOnSurface::DoubleSonicMinus: {
      const auto line = double_sonic_points(mp).second;
      return ChartPoint{line.z, line.t, param};
    }
    case CurveOnSurface::SonicPrimeFold:
      return sonic_prime_fold(mp, param);
    case CurveOnSurface::SonPrimeLineZ0:
      return ChartPoint{0.0, param, -2.0 * mp.c};
    case CurveOnSurface::SonLineZ0:
      return ChartPoint{0.0, param, 2.0 * mp.c};
  }
  throw std::invalid_argument("curve_on_surface_point: bad id");
}

bool sigma_contains(const ModelParams& mp, const HugoniotCurve& cu, double tol) {
  return !cu.prime && std::abs(cu.l + 2.0 * mp.c) < tol;
}

std::vector<MeshRow> sample_surface(const ModelParams& mp, SurfaceId id,
                                    const MeshSpec& spec) {
  std::vector<MeshRow> rows;
  const double zs = mp.double_sonic_z();
  const int nz = std::max(spec.nz, 2), nt = std::max(spec.nt, 2);
  for (int i = 0; i < nz; ++i) {
    const double z = spec.z_min + (spec.z_max - spec.z_min) * i / (nz - 1);
    const bool near_pole = std::abs(std::abs(z) - zs) < spec.guard;
    for (int j = 0; j < nt; ++j) {
      const double t = spec.t_min + (spec.t_max - spec.t_min) * j / (nt - 1);
      switch (id) {
        case SurfaceId::Characteristic:
          rows.push_back({z, t, 0.0});
          break;
        case SurfaceId::Son:
        case SurfaceId::SonPrime: {
          if (near_pole) break;
          const double y = sonprime_y_of_zt(mp, z, t);
          rows.push_back({z, t, id == SurfaceId::Son ? -y : y});
          break;
        }
        case SurfaceId::Tf:
        case SurfaceId::TfPrime: {
          const TfQuadratic q = tf_quadratic(mp, z, t);
          const double disc = q.discriminant();
          if (disc < 0.0) break;
          const double sq = std::sqrt(disc);
          for (double y : {(-q.b - sq) / (2.0 * q.a), (-q.b + sq) / (2.0 * q.a)})
            rows.push_back({z, t, id == SurfaceId::Tf ? y : -y});
          break;
        }
        case SurfaceId::Sigma:
          rows.push_back({z, t, -2.0 * mp.c * (t * z * z * z + t * z + 1.0) / (z * z + 1.0)});
          break;
      }
    }
  }
  return rows;
}

}  // namespace wavem
