#include "sepldf/contour.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sepldf {

Contour make_contour(double radius, int n_nodes, cplx center) {
  if (!(radius > 0.0)) throw std::invalid_argument("make_contour: radius must be positive");
  if (n_nodes < 8) throw std::invalid_argument("make_contour: need at least 8 nodes");
  Contour c;
  c.radius = radius;
  c.center = center;
  c.n_nodes = n_nodes;
  c.node_re.resize(n_nodes);
  c.node_im.resize(n_nodes);
  c.weight_re.resize(n_nodes);
  c.weight_im.resize(n_nodes);
  const double step = 2.0 * M_PI / n_nodes;
  for (int j = 0; j < n_nodes; ++j) {
    const double th = step * j;
    const double xr = radius * std::cos(th);
    const double xi = radius * std::sin(th);
    c.node_re[j] = center.real() + xr;
    c.node_im[j] = center.imag() + xi;
    c.weight_re[j] = xr / n_nodes;
    c.weight_im[j] = xi / n_nodes;
  }
  return c;
}

namespace {

cplx trapezoid_sum(const std::function<cplx(cplx)>& f, const Contour& c) {
  cplx acc{0.0, 0.0};
  for (int j = 0; j < c.n_nodes; ++j) {
    const cplx v = f(c.node(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("integrate_1d: non-finite integrand value");
    acc += c.weight(j) * v;
  }
  return acc;
}

} // namespace

QuadResult integrate_1d(const std::function<cplx(cplx)>& f, const Contour& c,
                        double tol) {
  QuadResult r;
  int n = c.n_nodes;
  cplx prev = trapezoid_sum(f, c);
  double last_delta = std::numeric_limits<double>::infinity();
  while (true) {
    if (2 * n > kQuadNodeCap1d) {
      r.value = prev;
      r.est_error = last_delta;
      r.n_nodes_used = n;
      r.converged = false;
      return r;
    }
    n *= 2;
    const cplx next = trapezoid_sum(f, make_contour(c.radius, n, c.center));
    last_delta = std::abs(next - prev);
    if (last_delta < tol) {
      r.value = next;
      r.est_error = last_delta;
      r.n_nodes_used = n;
      r.converged = true;
      return r;
    }
    prev = next;
  }
}

QuadResult integrate_nd(const std::function<cplx(const cplx*, int)>& f,
                        const Contour& c, int d, double tol) {
  if (d < 1 || d > 4) throw std::invalid_argument("integrate_nd: d must be 1..4");
  constexpr long kBudget = 1L << 28;

  auto tensor_sum = [&](const Contour& cc) {
    cplx acc{0.0, 0.0};
    const int n = cc.n_nodes;
    std::vector<int> idx(d, 0);
    std::vector<cplx> xi(d);
    while (true) {
      cplx w{1.0, 0.0};
      for (int k = 0; k < d; ++k) {
        xi[k] = cc.node(idx[k]);
        w *= cc.weight(idx[k]);
      }
      const cplx v = f(xi.data(), d);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("integrate_nd: non-finite integrand value");
      acc += w * v;
      int k = d - 1;
      while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
      if (k < 0) break;
    }
    return acc;
  };

  QuadResult r;
  int n = c.n_nodes;
  cplx prev = tensor_sum(c);
  double last_delta = std::numeric_limits<double>::infinity();
  while (true) {
    const double next_cost = std::pow(2.0 * n, d);
    if (2 * n > kQuadNodeCap1d || next_cost > static_cast<double>(kBudget)) {
      r.value = prev;
      r.est_error = last_delta;
      r.n_nodes_used = static_cast<long>(std::pow(n, d));
      r.converged = false;
      return r;
    }
    n *= 2;
    const cplx next = tensor_sum(make_contour(c.radius, n, c.center));
    last_delta = std::abs(next - prev);
    if (last_delta < tol) {
      r.value = next;
      r.est_error = last_delta;
      r.n_nodes_used = static_cast<long>(std::pow(n, d));
      r.converged = true;
      return r;
    }
    prev = next;
  }
}

} // namespace sepldf
