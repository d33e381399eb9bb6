// Independent brute-force verifiers: dense-sampling intersection finding,
// finite-difference derivatives, state-space Rankine-Hugoniot validation,
// flood-fill region counting, and the registry the verification suite runs.
#pragma once

#include "wavem/curves.hpp"
#include "wavem/lax.hpp"
#include "wavem/model.hpp"
#include "wavem/surfaces.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wavem {

struct OracleReport {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::vector<std::string> worst;  // offending inputs and values, worst first
};

struct GridSpec {
  double z_min = -2.0, z_max = 2.0;
  double t_min = -3.0, t_max = 3.0;
  double y_min = -6.0, y_max = 6.0;
  int nz = 120, nt = 120, ny = 120;
  int guard_cells = 2;

  void validate() const;  // resolutions >= 8, finite bounds, guard > 0
};

// Roots of surface_value(id, eval_curve(.)) over [z_lo, z_hi] by sign-change
// bracketing on a dense sample, refined by bisection. |value| minima below
// 1e-10 without a sign change are reported as tangency candidates.
struct BracketedRoots {
  RealRoots roots;
  std::vector<double> tangency_candidates;
};
BracketedRoots oracle_intersections(const ModelParams& mp, const HugoniotCurve& cu,
                                    SurfaceId id, double z_lo, double z_hi,
                                    int samples = 4000);

// 6-connected flood fill over grid cells whose (sgn Y, sgn son, sgn son')
// stays constant within guard_cells along every axis. `positive_y_only`
// restricts to the Y > 0 half-grid.
struct FloodFillComponent {
  ChartPoint representative;
  int sign_y = 0, sign_son = 0, sign_sonprime = 0;
  double z_lo = 0, z_hi = 0;
  std::size_t cells = 0;
  RegionLabel label = RegionLabel::Unclassified;
};
struct FloodFillResult {
  int component_count = 0;
  std::vector<FloodFillComponent> components;  // deterministic scan order
};
FloodFillResult oracle_floodfill(const ModelParams& mp, const GridSpec& grid,
                                 bool positive_y_only = false);

// Maps chart points to states and checks the Rankine-Hugoniot residual.
OracleReport oracle_rh_states(const ModelParams& mp, std::span<const ChartPoint> pts,
                              double tol = 1e-9);

// Richardson-extrapolated centered difference of speed_along at z.
double oracle_fd_speed(const ModelParams& mp, const HugoniotCurve& cu, double z,
                       double h);

// Verification registry. Every closed-form operation must be covered by at
// least one registered check; uncovered_closed_forms() lists gaps.
struct OracleCheck {
  std::string name;
  std::vector<std::string> covers;
  std::function<OracleReport(const ModelParams&)> run;
};
const std::vector<OracleCheck>& oracle_registry();
std::vector<std::string> uncovered_closed_forms();

}  // namespace wavem
