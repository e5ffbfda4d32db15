#pragma once

// Finite-time height statistics of the exclusion process with two-sided
// Bernoulli data. The characteristic function of the height N(x,t) is
//
//   < e^{lambda N(x,t)} > = det(1 + omega K_{x,t}) * M0(lambda)
//
// with the contour kernel
//
//   K_{x,t}(xi1, xi2) = xi1^{|x|} e^{eps(xi1) t} / (xi1*xi2 + 1 - 2*xi2),
//   eps(xi) = xi + 1/xi - 2,
//
// omega = rho+ (e^l - 1) + rho- (e^-l - 1) + rho+ rho- (e^l - 1)(e^-l - 1),
// and M0 = (1 + rho+(e^l - 1))^x for x >= 0, (1 + rho-(e^-l - 1))^{-x} else.
//
// Two equivalent evaluation routes are provided:
//  * Nystrom discretization of the contour operator (complex LU), valid
//    while the integrand's dynamic range fits double precision;
//  * a positive symmetric time-domain kernel sqrt(4ab')-weighted
//    e^{-(a+b)} I_x(2 sqrt(ab)) on [0,t], obtained by integrating the
//    kernel's energy factor in time. It has the same traces and Fredholm
//    determinant, stays O(1) at any t, and is used automatically once the
//    contour route would lose too many digits.

#include <complex>
#include <memory>
#include <vector>

#include "sepldf/contour.hpp"

namespace sepldf {

struct DensityPair {
  double rho_minus = 0.0;
  double rho_plus = 0.0;

  DensityPair(double rm, double rp);

  double theta_minus() const; // rho-/(1-rho-); +inf at density 1
  double theta_plus() const;
  double r_plus() const { return rho_plus * (1.0 - rho_minus); }
  double r_minus() const { return rho_minus * (1.0 - rho_plus); }
};

// Largest circle radius around the origin that keeps the kernel's xi2-pole
// strictly outside: r < 1/(2+r), i.e. r < sqrt(2)-1.
inline constexpr double kMaxKernelRadius = 0.41;

struct KernelSpec {
  int x = 0;
  double t = 0.0;
  Contour contour;

  KernelSpec(int x_, double t_, const Contour& c);
  KernelSpec(int x_, double t_); // default contour, radius 0.25, 64 nodes
};

// K_{x,t}(xi1, xi2). Throws std::domain_error when the denominator modulus
// falls below 1e-12 (pole proximity).
cplx kernel_K(int x, double t, cplx xi1, cplx xi2);

cplx omega_of_lambda(cplx lambda, const DensityPair& d);

// Nystrom discretization D[j][k] = w_k K(xi_j, xi_k) on spec's contour.
struct NystromMatrix {
  int dim = 0;
  std::vector<double> re, im; // row-major
};

NystromMatrix build_nystrom(const KernelSpec& spec);
cplx nystrom_trace(const NystromMatrix& m);
cplx nystrom_det_1p(const NystromMatrix& m, cplx omega);
std::vector<cplx> nystrom_trace_powers(const NystromMatrix& m, int kmax);

// Tr K^n with node doubling; the imaginary part must stay below 1e-9 and
// is discarded. Routes to the time-domain engine when the contour route
// would be cancellation-dominated.
double trace_power_In(const KernelSpec& spec, int n);

// Tr K^1 .. Tr K^nmax sharing one discretization.
std::vector<double> trace_powers_In(const KernelSpec& spec, int nmax);

// n-fold integral J_n (J_0 = 1) by tensor-product quadrature of
//   prod_{i<j} (xi_i - xi_j)/(1 + xi_i xi_j - 2 xi_j)
//   prod_i xi_i^x e^{eps t} / (1 - xi_i)^2.
// n <= 4.
double multi_integral_Jn(const KernelSpec& spec, int n);

// det(1 + omega K) by Nystrom + complex LU, node doubling to rel. 1e-10.
cplx fredholm_det(const KernelSpec& spec, cplx omega);

// Positive time-domain route: eigenvalues of the symmetric kernel on [0,t].
// Shares traces and determinant with the contour operator.
class TimeKernelEigen {
 public:
  TimeKernelEigen(int x, double t);
  const std::vector<double>& eigenvalues() const { return ev_; }
  double trace_power(int n) const;
  cplx det_1p(cplx omega) const; // prod_i (1 + omega * lambda_i)
  int nodes_used() const { return nodes_; }

 private:
  std::vector<double> ev_;
  int nodes_ = 0;
};

// Evaluator for the characteristic function at fixed (x, t, densities);
// caches the discretization across calls with different lambda (or z).
class GfEvaluator {
 public:
  GfEvaluator(int x, double t, const DensityPair& d);
  ~GfEvaluator();
  cplx gf(cplx lambda) const;
  // Substitution e^{-lambda} = z (z away from 0).
  cplx gf_at_z(cplx z) const;
  bool uses_time_kernel() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// < e^{lambda N(x,t)} >.
cplx gf_height(int x, double t, cplx lambda, const DensityPair& d);

// P[N(x,t) = n], via a z-contour around the origin. |n| <= 64.
double height_pmf(int x, double t, const DensityPair& d, int n);

// P[N = n] for all n in [n_lo, n_hi] sharing one set of GF evaluations.
std::vector<double> height_pmf_range(int x, double t, const DensityPair& d,
                                     int n_lo, int n_hi);

// P[X_t <= x] for the tracer (first particle at a site >= 1); requires
// rho+ > 0. Consistency with sum_{n>=1} P[N=n] is enforced to 1e-6.
double tagged_cdf(int x, double t, const DensityPair& d);

// Radius minimizing the integrand's dynamic range, clamped to the legal
// window; log-range estimate at that radius (in nats).
double suggest_radius(int x, double t);
double contour_log_range(int x, double t, double r);

} // namespace sepldf
