#pragma once

// Circle contours around a center with trapezoid quadrature. The weights
// absorb the 1/(2*pi*i) factor: for nodes xi_j = c + r*e^{2*pi*i*j/n},
// w_j = (xi_j - c)/n, so that sum_j w_j f(xi_j) approximates the contour
// integral of f with measure dxi/(2*pi*i). On a circle this rule converges
// geometrically for integrands analytic in an annulus around the contour.

#include <complex>
#include <functional>
#include <vector>

namespace sepldf {

using cplx = std::complex<double>;

struct Contour {
  double radius = 0.25;
  cplx center{0.0, 0.0};
  int n_nodes = 64;
  std::vector<double> node_re, node_im;     // xi_j
  std::vector<double> weight_re, weight_im; // w_j = (xi_j - center)/n

  cplx node(int j) const { return {node_re[j], node_im[j]}; }
  cplx weight(int j) const { return {weight_re[j], weight_im[j]}; }
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double est_error = 0.0; // |value(n) - value(n/2)| of the accepted level
  long n_nodes_used = 0;  // total nodes of the accepted level (n^d)
  bool converged = true;  // false when the node cap was hit first
};

// Counterclockwise circle around `center`. Requires radius > 0, n_nodes >= 8.
Contour make_contour(double radius, int n_nodes, cplx center = {0.0, 0.0});

inline constexpr int kQuadNodeCap1d = 4096;

// Contour integral of f with node doubling until |delta| < tol (absolute)
// or the node cap; a cap hit is reported via converged=false, not an error.
// Throws std::runtime_error if f is non-finite at a node.
QuadResult integrate_1d(const std::function<cplx(cplx)>& f, const Contour& c,
                        double tol);

// d-fold tensor-product contour integral, all variables on the same circle.
// f receives a pointer to d node values. d must be in 1..4. The per-axis
// node count doubles until convergence, subject to the per-axis cap and a
// total-evaluation budget (results flagged, not fatal, when exceeded).
QuadResult integrate_nd(const std::function<cplx(const cplx*, int)>& f,
                        const Contour& c, int d, double tol);

} // namespace sepldf
