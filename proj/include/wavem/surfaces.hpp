// Closed-form evaluation and sampling of the named surfaces (characteristic,
// Son, Son', Tf, Tf', Sigma) and the distinguished curves living on them.
#pragma once

#include "wavem/curves.hpp"
#include "wavem/model.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace wavem {

enum class SurfaceId { Characteristic, Son, SonPrime, Tf, TfPrime, Sigma };

enum class CurveOnSurface {
  FoldCurve,
  InflectionLocus,
  DoubleSonicPlus,
  DoubleSonicMinus,
  SonicPrimeFold,
  SonPrimeLineZ0,
  SonLineZ0,
};

const char* surface_name(SurfaceId id);
std::optional<SurfaceId> surface_from_name(std::string_view name);

// Parametrization of a distinguished curve. The fold curve, inflection
// locus, sonic' fold and double sonic lines run over z (the inflection locus
// solves for t, the double sonic lines leave the parameter as Y); the z = 0
// lines of Son and Son' run over t.
ChartPoint curve_on_surface_point(const ModelParams& mp, CurveOnSurface id,
                                  double param);

// Defining function of the surface at cp, with fixed sign conventions:
//   Characteristic: Y
//   Son:     -2c P(z) t - Q(z) Y - 2c R(z)
//   SonPrime:-2c P(z) t + Q(z) Y - 2c R(z)      (son'(origin) = -2c)
//   Tf:      tf1 Y^2 + tf2 Y + tf3
//   TfPrime: the same with Y -> -Y
//   Sigma:   Y + 2c (t z^3 + t z + 1)/(z^2 + 1)
// The zero set is the surface.
double surface_value(const ModelParams& mp, SurfaceId id, const ChartPoint& cp);

// Coefficients of the Tf quadratic in Y at fixed (z, t).
struct TfQuadratic {
  double a = 0, b = 0, c = 0;  // a Y^2 + b Y + c
  double discriminant() const { return b * b - 4.0 * a * c; }
};
TfQuadratic tf_quadratic(const ModelParams& mp, double z, double t);

// Fold (coincidence) curve: (z, 0, 0).
ChartPoint fold_curve(double z);

// c [((b1+1) z^5 + (b1+4) z^3 + 3 z) t + (b1-1) z^2 + 1]: the common Y = 0
// specialization of son and son' (up to the factor -2) and the numerator of
// ds_ch/dz. Zero set is the inflection locus inside the characteristic.
double inflection_locus_value(const ModelParams& mp, double z, double t);

// Vertical lines z = +-1/sqrt(b1+1), t = -+ b1 sqrt(b1+1)/(2(b1+2)), Y free.
struct DoubleSonicLine {
  double z = 0, t = 0;
};
std::pair<DoubleSonicLine, DoubleSonicLine> double_sonic_points(const ModelParams& mp);

// Sonic' fold: the curve along which Hugoniot curves are tangent to Son';
// lies on Son' and on Tf, contained in Y < 0.
ChartPoint sonic_prime_fold(const ModelParams& mp, double z);

// Son' solved for Y at fixed (z, t); valid away from the double-sonic pole
// set Q(z) = 0.
double sonprime_y_of_zt(const ModelParams& mp, double z, double t);

// Horizontal lines at z = 0: (t, 0, 2c) on Son and (t, 0, -2c) on Son'.
struct HorizontalLine {
  double z = 0, y = 0;  // parametrized by free t
};
std::pair<HorizontalLine, HorizontalLine> son_sonprime_lines_z0(const ModelParams& mp);

// True when a plain curve lies inside Sigma (l = -2c within tol).
bool sigma_contains(const ModelParams& mp, const HugoniotCurve& cu, double tol = 1e-9);

// Uniform (z, t) sampling with Y solved per surface. Poles and the
// double-sonic z-values are excluded by `guard` (half-width in z); Tf cells
// with negative discriminant are skipped; both Tf branches are emitted.
struct MeshSpec {
  double z_min = -2.0, z_max = 2.0;
  double t_min = -3.0, t_max = 3.0;
  int nz = 40, nt = 40;
  double guard = 1e-3;
};

struct MeshRow {
  double z = 0, t = 0, y = 0;
};

std::vector<MeshRow> sample_surface(const ModelParams& mp, SurfaceId id,
                                    const MeshSpec& spec);

}  // namespace wavem
