#include "wavem/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace wavem {

double Poly::operator()(double z) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

Poly Poly::derivative() const {
  Poly d;
  if (coeffs.size() <= 1) return d;
  d.coeffs.resize(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d.coeffs[i - 1] = static_cast<double>(i) * coeffs[i];
  return d;
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (double a : coeffs) m = std::max(m, std::abs(a));
  return m;
}

int Poly::degree() const {
  const double m = max_abs_coeff();
  if (m == 0.0) return -1;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (std::abs(coeffs[i]) > 1e-13 * m) return static_cast<int>(i);
  return -1;
}

bool Poly::is_zero(double rel_tol) const {
  (void)rel_tol;
  return degree() < 0;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0 * b); }

Poly operator*(double s, const Poly& a) {
  Poly r = a;
  for (double& x : r.coeffs) x *= s;
  return r;
}

int RealRoots::count_with_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

namespace {

// A few Newton steps from x0; returns the polished abscissa (x0 on failure).
double newton_polish(const Poly& p, const Poly& dp, double x0) {
  double x = x0;
  double best = x;
  double best_res = std::abs(p(x));
  for (int it = 0; it < 30; ++it) {
    const double f = p(x);
    const double d = dp(x);
    if (d == 0.0) break;
    const double step = f / d;
    x -= step;
    if (!std::isfinite(x)) return best;
    const double res = std::abs(p(x));
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
  }
  return best;
}

void solve_linear(const Poly& p, int dlo, std::vector<double>& out) {
  out.push_back(-p.coeffs[dlo - 1] / p.coeffs[dlo]);
}

void solve_quadratic(double a, double b, double c, std::vector<double>& out) {
  const double disc = b * b - 4.0 * a * c;
  const double disc_scale = b * b + std::abs(4.0 * a * c);
  if (std::abs(disc) <= 4e-12 * disc_scale) {
    // Roundoff-level discriminant: a double root.
    out.push_back(-0.5 * b / a);
    out.push_back(-0.5 * b / a);
    return;
  }
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  // Avoid cancellation: compute the large-magnitude root first.
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  const double r1 = q / a;
  const double r2 = (q != 0.0) ? c / q : r1;
  out.push_back(r1);
  out.push_back(r2);
}

}  // namespace

RealRoots real_roots(const Poly& p, double imag_tol, double cluster_tol,
                     double residual_tol) {
  RealRoots rr;
  const int deg = p.degree();
  if (deg <= 0) return rr;

  std::vector<double> cand;
  if (deg == 1) {
    solve_linear(p, 1, cand);
  } else if (deg == 2) {
    solve_quadratic(p.coeffs[2], p.coeffs[1], p.coeffs[0], cand);
  } else {
    // Monic companion matrix of the trimmed polynomial.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = p.coeffs[deg];
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p.coeffs[i] / lead;
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    const Poly dp = p.derivative();
    const double res_scale = residual_tol * (1.0 + p.max_abs_coeff());
    for (int i = 0; i < deg; ++i) {
      const auto ev = es.eigenvalues()[i];
      const double scale = 1.0 + std::abs(ev.real());
      // A plain double root surfaces as a conjugate pair with |imag| of order
      // sqrt(eps); admit generously and let the residual gate decide.
      if (std::abs(ev.imag()) > std::max(imag_tol, 1e-5) * scale) continue;
      const double x = newton_polish(p, dp, ev.real());
      if (std::abs(ev.imag()) > imag_tol * scale && std::abs(p(x)) > res_scale)
        continue;
      cand.push_back(x);
    }
  }

  if (cand.empty()) return rr;
  std::sort(cand.begin(), cand.end());

  for (double x : cand) {
    if (!rr.roots.empty() &&
        std::abs(x - rr.roots.back().x) <= cluster_tol * (1.0 + std::abs(x))) {
      rr.roots.back().multiplicity += 1;
      continue;
    }
    Root r;
    r.x = x;
    r.residual = std::abs(p(x));
    rr.roots.push_back(r);
  }
  for (auto& r : rr.roots) r.residual = std::abs(p(r.x));
  return rr;
}

double bisect_root(const Poly& p, double lo, double hi, double tol) {
  double flo = p(lo);
  if (flo == 0.0) return lo;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p(mid);
    if (fm == 0.0 || (hi - lo) < tol * (1.0 + std::abs(mid))) return mid;
    if ((flo < 0.0) != (fm < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace wavem
