// Dense real-coefficient polynomials and real-root extraction for the small
// (degree <= 8) intersection polynomials arising from curve/surface geometry.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wavem {

// coeffs[i] multiplies z^i. The zero polynomial is an empty or all-zero list.
struct Poly {
  std::vector<double> coeffs;

  Poly() = default;
  explicit Poly(std::vector<double> c) : coeffs(std::move(c)) {}

  double operator()(double z) const;  // Horner
  Poly derivative() const;
  int degree() const;                 // -1 for the (numerically) zero polynomial
  double max_abs_coeff() const;
  bool is_zero(double rel_tol = 1e-13) const;
};

Poly operator*(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(double s, const Poly& a);

struct Root {
  double x = 0;
  int multiplicity = 1;
  double residual = 0;  // |p(x)|
};

struct RealRoots {
  std::vector<Root> roots;  // ascending in x
  int count_with_multiplicity() const;
  bool empty() const { return roots.empty(); }
};

// All real roots of p, ascending, with multiplicities.
//
// Degree 1 and 2 are solved in closed form (numerically stable quadratic);
// higher degrees go through the balanced companion matrix. Eigenvalues with
// small imaginary part are Newton-polished in real arithmetic and kept when
// the polished residual is below residual_tol * (1 + max |coeff|); roots
// closer than cluster_tol are merged into one root with multiplicity.
RealRoots real_roots(const Poly& p, double imag_tol = 1e-9,
                     double cluster_tol = 1e-6, double residual_tol = 1e-9);

// Sign-change bisection on [lo, hi]; p(lo) and p(hi) must have opposite signs.
double bisect_root(const Poly& p, double lo, double hi, double tol = 1e-12);

}  // namespace wavem
