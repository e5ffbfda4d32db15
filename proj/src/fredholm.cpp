#include "sepldf/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sepldf/bessel.hpp"
#include "sepldf/linalg.hpp"
#include "sepldf/simd/kernels.hpp"

namespace sepldf {

namespace {

// Switch from the contour route to the time-domain route once the contour
// integrand spans more than ~e^25 between its peak and the answer.
constexpr double kLogRangeLimit = 25.0;
constexpr int kNystromCap = 2048;

cplx eps_energy(cplx xi) { return xi + 1.0 / xi - 2.0; }

} // namespace

DensityPair::DensityPair(double rm, double rp) : rho_minus(rm), rho_plus(rp) {
  if (!(rm >= 0.0 && rm <= 1.0 && rp >= 0.0 && rp <= 1.0))
    throw std::invalid_argument("DensityPair: densities must lie in [0,1]");
}

double DensityPair::theta_minus() const {
  return rho_minus == 1.0 ? std::numeric_limits<double>::infinity()
                          : rho_minus / (1.0 - rho_minus);
}

double DensityPair::theta_plus() const {
  return rho_plus == 1.0 ? std::numeric_limits<double>::infinity()
                         : rho_plus / (1.0 - rho_plus);
}

KernelSpec::KernelSpec(int x_, double t_, const Contour& c)
    : x(x_), t(t_), contour(c) {
  if (t < 0.0) throw std::invalid_argument("KernelSpec: t < 0");
  if (std::abs(c.center) != 0.0)
    throw std::invalid_argument("KernelSpec: contour must be centered at 0");
  // Pole-distance guard: the xi2-pole 1/(2 - xi1) has modulus >= 1/(2+r).
  if (!(c.radius < 1.0 / (2.0 + c.radius)))
    throw std::invalid_argument("KernelSpec: contour radius too large (pole guard)");
}

KernelSpec::KernelSpec(int x_, double t_)
    : KernelSpec(x_, t_, make_contour(0.25, 64)) {}

cplx kernel_K(int x, double t, cplx xi1, cplx xi2) {
  const cplx den = xi1 * xi2 + 1.0 - 2.0 * xi2;
  if (std::abs(den) < 1e-12)
    throw std::domain_error("kernel_K: evaluation too close to a pole");
  if (xi1 == cplx{0.0, 0.0})
    throw std::domain_error("kernel_K: xi1 = 0");
  const int ax = x < 0 ? -x : x;
  return std::pow(xi1, ax) * std::exp(eps_energy(xi1) * t) / den;
}

cplx omega_of_lambda(cplx lambda, const DensityPair& d) {
  const cplx ep = std::exp(lambda) - 1.0;
  const cplx em = std::exp(-lambda) - 1.0;
  return d.rho_plus * ep + d.rho_minus * em + d.rho_plus * d.rho_minus * ep * em;
}

double suggest_radius(int x, double t) {
  const int ax = x < 0 ? -x : x;
  if (t <= 0.0) return 0.25;
  // Minimize ax*log r + (r + 1/r - 2) t over r: t r^2 + ax r - t = 0.
  const double r = (-ax + std::sqrt(static_cast<double>(ax) * ax + 4.0 * t * t)) / (2.0 * t);
  return std::clamp(r, 0.05, kMaxKernelRadius);
}

double contour_log_range(int x, double t, double r) {
  const int ax = x < 0 ? -x : x;
  return ax * std::log(r) + (r + 1.0 / r - 2.0) * t;
}

// ---------------------------------------------------------------------------
// Nystrom route
// ---------------------------------------------------------------------------

NystromMatrix build_nystrom(const KernelSpec& spec) {
  const int n = spec.contour.n_nodes;
  NystromMatrix m;
  m.dim = n;
  m.re.resize(static_cast<size_t>(n) * n);
  m.im.resize(static_cast<size_t>(n) * n);
  // row factor a(xi_j) = xi_j^{|x|} e^{eps(xi_j) t}, column factor w_k.
  std::vector<cplx> rowf(n);
  const int ax = spec.x < 0 ? -spec.x : spec.x;
  for (int j = 0; j < n; ++j) {
    const cplx xi = spec.contour.node(j);
    rowf[j] = std::pow(xi, ax) * std::exp(eps_energy(xi) * spec.t);
  }
  for (int j = 0; j < n; ++j) {
    const cplx xj = spec.contour.node(j);
    for (int k = 0; k < n; ++k) {
      const cplx xk = spec.contour.node(k);
      const cplx den = xj * xk + 1.0 - 2.0 * xk;
      const cplx v = spec.contour.weight(k) * rowf[j] / den;
      const size_t off = static_cast<size_t>(j) * n + k;
      m.re[off] = v.real();
      m.im[off] = v.imag();
    }
  }
  return m;
}

cplx nystrom_trace(const NystromMatrix& m) {
  cplx t{0.0, 0.0};
  for (int i = 0; i < m.dim; ++i) {
    const size_t off = static_cast<size_t>(i) * m.dim + i;
    t += cplx{m.re[off], m.im[off]};
  }
  return t;
}

cplx nystrom_det_1p(const NystromMatrix& m, cplx omega) {
  ZMatrix a(m.dim);
  a.re = m.re;
  a.im = m.im;
  return zdet_1p(a, omega);
}

std::vector<cplx> nystrom_trace_powers(const NystromMatrix& m, int kmax) {
  ZMatrix a(m.dim);
  a.re = m.re;
  a.im = m.im;
  return ztrace_powers(a, kmax);
}

// ---------------------------------------------------------------------------
// Time-domain route
// ---------------------------------------------------------------------------

namespace {

// Symmetric positive kernel on [0, sqrt(t)] after substituting a = s^2:
//   T(s, s') = 2 sqrt(s s') e^{-(s-s')^2} [e^{-2 s s'} I_x(2 s s')].
// Its spectrum matches the contour operator's.
std::vector<double> time_kernel_eigen(int x, double t, int n) {
  std::vector<double> sig, wt;
  gauss_legendre(n, 0.0, std::sqrt(t), sig, wt);
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double z = 2.0 * sig[i] * sig[j];
      const double diff = sig[i] - sig[j];
      const double bes = bessel_i_scaled(x, z);
      const double tkij = 2.0 * std::sqrt(sig[i] * sig[j]) * std::exp(-diff * diff) * bes;
      const double v = std::sqrt(wt[i] * wt[j]) * tkij;
      a[static_cast<size_t>(i) * n + j] = v;
      a[static_cast<size_t>(j) * n + i] = v;
    }
  }
  return sym_eigenvalues(a, n);
}

} // namespace

TimeKernelEigen::TimeKernelEigen(int x, double t) {
  if (t < 0.0) throw std::invalid_argument("TimeKernelEigen: t < 0");
  const int ax = x < 0 ? -x : x;
  if (t == 0.0) {
    nodes_ = 0;
    return;
  }
  int n = std::max(48, static_cast<int>(6.0 * std::sqrt(t)) + 32);
  std::vector<double> ev = time_kernel_eigen(ax, t, n);
  // Adaptive refinement: accept once trace and a reference determinant agree.
  for (int round = 0; round < 6; ++round) {
    const int n2 = static_cast<int>(n * 1.4) + 16;
    std::vector<double> ev2 = time_kernel_eigen(ax, t, n2);
    auto tr = [](const std::vector<double>& e, int p) {
      double s = 0.0;
      for (double v : e) s += std::pow(v, p);
      return s;
    };
    auto logdet = [](const std::vector<double>& e, double w) {
      double s = 0.0;
      for (double v : e) s += std::log1p(w * v);
      return s;
    };
    const double d1 = std::abs(tr(ev, 1) - tr(ev2, 1));
    const double d2 = std::abs(tr(ev, 2) - tr(ev2, 2));
    const double d3 = std::abs(logdet(ev, 0.5) - logdet(ev2, 0.5));
    const double scale = std::max(1.0, std::abs(tr(ev2, 1)));
    ev = std::move(ev2);
    n = n2;
    if (d1 < 1e-9 * scale && d2 < 1e-9 * scale && d3 < 1e-10 * scale) break;
  }
  // Clip tiny negative eigenvalues produced by roundoff on a PSD kernel.
  for (double& v : ev)
    if (v < 0.0 && v > -1e-12) v = 0.0;
  ev_ = std::move(ev);
  nodes_ = n;
}

double TimeKernelEigen::trace_power(int n) const {
  double s = 0.0;
  for (double v : ev_) s += std::pow(v, n);
  return s;
}

cplx TimeKernelEigen::det_1p(cplx omega) const {
  // Accumulate in log space to avoid overflow for large t.
  cplx logdet{0.0, 0.0};
  for (double v : ev_) logdet += std::log(1.0 + omega * v);
  return std::exp(logdet);
}

// ---------------------------------------------------------------------------
// Trace powers and J_n
// ---------------------------------------------------------------------------

std::vector<double> trace_powers_In(const KernelSpec& spec, int nmax) {
  if (nmax < 1) throw std::invalid_argument("trace_powers_In: nmax < 1");
  if (spec.t == 0.0) return std::vector<double>(nmax, 0.0);
  const double lr = contour_log_range(spec.x, spec.t, spec.contour.radius);
  if (lr > kLogRangeLimit) {
    TimeKernelEigen eng(spec.x, spec.t);
    std::vector<double> out(nmax);
    for (int k = 1; k <= nmax; ++k) out[k - 1] = eng.trace_power(k);
    return out;
  }
  int nodes = spec.contour.n_nodes;
  std::vector<cplx> prev;
  while (true) {
    KernelSpec cur(spec.x, spec.t, make_contour(spec.contour.radius, nodes));
    const std::vector<cplx> val = nystrom_trace_powers(build_nystrom(cur), nmax);
    bool close = !prev.empty();
    if (close) {
      for (int k = 0; k < nmax; ++k)
        close = close &&
                std::abs(val[k] - prev[k]) < 1e-11 * std::max(1.0, std::abs(val[k]));
    }
    if (close || 2 * nodes > kNystromCap) {
      std::vector<double> out(nmax);
      for (int k = 0; k < nmax; ++k) {
        if (std::abs(val[k].imag()) > 1e-9)
          throw std::runtime_error("trace_powers_In: imaginary residue exceeds 1e-9");
        out[k] = val[k].real();
      }
      return out;
    }
    prev = val;
    nodes *= 2;
  }
}

double trace_power_In(const KernelSpec& spec, int n) {
  return trace_powers_In(spec, n).back();
}

namespace {

// J_n tensor sum at a fixed node count. Pairwise factor
//   F[a][b] = (xi_a - xi_b)/(1 + xi_a xi_b - 2 xi_b)
// indexed by (first variable, second variable); per-node factor
//   g[a] = w_a xi_a^x e^{eps t} / (1 - xi_a)^2.
cplx jn_tensor(const KernelSpec& spec, int n, int nodes) {
  const Contour c = make_contour(spec.contour.radius, nodes);
  const int m = nodes;
  std::vector<double> gr(m), gi(m);
  const int ax = spec.x; // J_n defined for x >= 0 (parity handled upstream)
  for (int a = 0; a < m; ++a) {
    const cplx xi = c.node(a);
    const cplx one_m = 1.0 - xi;
    const cplx g = c.weight(a) * std::pow(xi, ax) * std::exp(eps_energy(xi) * spec.t) /
                   (one_m * one_m);
    gr[a] = g.real();
    gi[a] = g.imag();
  }
  if (n == 1) {
    double sr = 0.0, si = 0.0;
    for (int a = 0; a < m; ++a) {
      sr += gr[a];
      si += gi[a];
    }
    return {sr, si};
  }
  std::vector<double> fr(static_cast<size_t>(m) * m), fi(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    const cplx xa = c.node(a);
    for (int b = 0; b < m; ++b) {
      const cplx xb = c.node(b);
      const cplx den = 1.0 + xa * xb - 2.0 * xb;
      const cplx f = (xa - xb) / den;
      fr[static_cast<size_t>(a) * m + b] = f.real();
      fi[static_cast<size_t>(a) * m + b] = f.imag();
    }
  }
  auto frow = [&](int a) { return fr.data() + static_cast<size_t>(a) * m; };
  auto firow = [&](int a) { return fi.data() + static_cast<size_t>(a) * m; };

  if (n == 2) {
    cplx acc{0.0, 0.0};
    for (int a = 0; a < m; ++a) {
      const cplx inner = simd::zdotu(m, frow(a), firow(a), gr.data(), gi.data());
      acc += cplx{gr[a], gi[a]} * inner;
    }
    return acc;
  }
  if (n == 3) {
    cplx acc{0.0, 0.0};
    for (int a = 0; a < m; ++a) {
      cplx acc_b{0.0, 0.0};
      for (int b = 0; b < m; ++b) {
        const cplx fab{fr[static_cast<size_t>(a) * m + b], fi[static_cast<size_t>(a) * m + b]};
        if (fab == cplx{0.0, 0.0}) continue;
        const cplx inner =
            simd::zdot3(m, frow(a), firow(a), frow(b), firow(b), gr.data(), gi.data());
        acc_b += cplx{gr[b], gi[b]} * fab * inner;
      }
      acc += cplx{gr[a], gi[a]} * acc_b;
    }
    return acc;
  }
  // n == 4: H[c][d] = F[c][d] * g[d]
  std::vector<double> hr(static_cast<size_t>(m) * m), hi(static_cast<size_t>(m) * m);
  for (int cidx = 0; cidx < m; ++cidx) {
    simd::zmul(m, frow(cidx), firow(cidx), gr.data(), gi.data(),
               hr.data() + static_cast<size_t>(cidx) * m,
               hi.data() + static_cast<size_t>(cidx) * m);
  }
  cplx acc{0.0, 0.0};
  for (int a = 0; a < m; ++a) {
    cplx acc_b{0.0, 0.0};
    for (int b = 0; b < m; ++b) {
      const cplx fab{fr[static_cast<size_t>(a) * m + b], fi[static_cast<size_t>(a) * m + b]};
      if (fab == cplx{0.0, 0.0}) continue;
      cplx acc_c{0.0, 0.0};
      for (int cc = 0; cc < m; ++cc) {
        const cplx fac{fr[static_cast<size_t>(a) * m + cc], fi[static_cast<size_t>(a) * m + cc]};
        const cplx fbc{fr[static_cast<size_t>(b) * m + cc], fi[static_cast<size_t>(b) * m + cc]};
        const cplx inner =
            simd::zdot3(m, frow(a), firow(a), frow(b), firow(b),
                        hr.data() + static_cast<size_t>(cc) * m,
                        hi.data() + static_cast<size_t>(cc) * m);
        acc_c += fac * fbc * cplx{gr[cc], gi[cc]} * inner;
      }
      acc_b += fab * cplx{gr[b], gi[b]} * acc_c;
    }
    acc += cplx{gr[a], gi[a]} * acc_b;
  }
  return acc;
}

} // namespace

double multi_integral_Jn(const KernelSpec& spec, int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("multi_integral_Jn: n must be 0..4");
  if (spec.x < 0) throw std::invalid_argument("multi_integral_Jn: x must be >= 0");
  if (n == 0) return 1.0;
  int nodes = std::max(16, spec.contour.n_nodes / (n >= 3 ? 2 : 1));
  cplx prev = jn_tensor(spec, n, nodes);
  const long budget = (n == 4) ? 256 : (n == 3 ? 512 : kQuadNodeCap1d);
  while (2 * nodes <= budget) {
    nodes *= 2;
    const cplx next = jn_tensor(spec, n, nodes);
    if (std::abs(next - prev) < 1e-10 * std::max(1.0, std::abs(next))) {
      if (std::abs(next.imag()) > 1e-9)
        throw std::runtime_error("multi_integral_Jn: imaginary residue exceeds 1e-9");
      return next.real();
    }
    prev = next;
  }
  if (std::abs(prev.imag()) > 1e-9)
    throw std::runtime_error("multi_integral_Jn: imaginary residue exceeds 1e-9");
  return prev.real();
}

cplx fredholm_det(const KernelSpec& spec, cplx omega) {
  if (spec.t == 0.0 || omega == cplx{0.0, 0.0}) return {1.0, 0.0};
  int nodes = spec.contour.n_nodes;
  cplx prev;
  bool have_prev = false;
  while (true) {
    KernelSpec cur(spec.x, spec.t, make_contour(spec.contour.radius, nodes));
    const cplx val = nystrom_det_1p(build_nystrom(cur), omega);
    if (have_prev && std::abs(val - prev) < 1e-10 * std::max(1.0, std::abs(val)))
      return val;
    prev = val;
    have_prev = true;
    if (2 * nodes > kNystromCap) return val;
    nodes *= 2;
  }
}

// ---------------------------------------------------------------------------
// Characteristic function, pmf, tracer CDF
// ---------------------------------------------------------------------------

namespace {

cplx m0_factor(int x, cplx lambda, const DensityPair& d) {
  if (x >= 0)
    return std::pow(1.0 + d.rho_plus * (std::exp(lambda) - 1.0), x);
  return std::pow(1.0 + d.rho_minus * (std::exp(-lambda) - 1.0), -x);
}

} // namespace

struct GfEvaluator::Impl {
  int x;
  double t;
  DensityPair d;
  bool time_route = false;
  std::unique_ptr<TimeKernelEigen> eng;
  // Nystrom ladder: kernel matrices cached per node count.
  double radius = 0.25;
  mutable std::vector<NystromMatrix> ladder;
  mutable std::vector<int> ladder_nodes;

  Impl(int x_, double t_, const DensityPair& d_) : x(x_), t(t_), d(d_) {
    const int ax = x < 0 ? -x : x;
    if (t > 0.0) {
      radius = suggest_radius(ax, t);
      time_route = contour_log_range(ax, t, radius) > kLogRangeLimit;
      if (time_route) eng = std::make_unique<TimeKernelEigen>(ax, t);
    }
  }

  const NystromMatrix& level(int idx) const {
    while (static_cast<int>(ladder.size()) <= idx) {
      const int nodes = 64 << ladder.size();
      KernelSpec spec(x, t, make_contour(radius, nodes));
      ladder.push_back(build_nystrom(spec));
      ladder_nodes.push_back(nodes);
    }
    return ladder[idx];
  }

  cplx det(cplx omega) const {
    if (t == 0.0 || omega == cplx{0.0, 0.0}) return {1.0, 0.0};
    if (time_route) return eng->det_1p(omega);
    cplx prev;
    bool have_prev = false;
    for (int idx = 0;; ++idx) {
      if ((64 << idx) > kNystromCap) return prev;
      const cplx val = nystrom_det_1p(level(idx), omega);
      if (have_prev && std::abs(val - prev) < 1e-10 * std::max(1.0, std::abs(val)))
        return val;
      prev = val;
      have_prev = true;
    }
  }
};

GfEvaluator::GfEvaluator(int x, double t, const DensityPair& d)
    : impl_(std::make_unique<Impl>(x, t, d)) {}
GfEvaluator::~GfEvaluator() = default;

bool GfEvaluator::uses_time_kernel() const { return impl_->time_route; }

cplx GfEvaluator::gf(cplx lambda) const {
  const cplx omega = omega_of_lambda(lambda, impl_->d);
  return impl_->det(omega) * m0_factor(impl_->x, lambda, impl_->d);
}

cplx GfEvaluator::gf_at_z(cplx z) const {
  const cplx lambda = -std::log(z);
  return gf(lambda);
}

cplx gf_height(int x, double t, cplx lambda, const DensityPair& d) {
  if (t < 0.0) throw std::invalid_argument("gf_height: t < 0");
  GfEvaluator ev(x, t, d);
  return ev.gf(lambda);
}

namespace {

// pmf(n) = contour integral of z^{n-1} GF(z) dz/(2 pi i). The integrand has
// no pole away from the origin, so the radius is free; radii above 1 keep
// the z^{n-1} factor small for n <= 0.
double pmf_quadrature(const GfEvaluator& ev, int n, double radius, double* err) {
  int nodes = 64;
  auto ring = [&](int m) {
    const Contour c = make_contour(radius, m);
    cplx acc{0.0, 0.0};
    for (int j = 0; j < m; ++j) {
      const cplx z = c.node(j);
      acc += c.weight(j) * std::pow(z, n - 1) * ev.gf_at_z(z);
    }
    return acc;
  };
  cplx prev = ring(nodes);
  while (2 * nodes <= kQuadNodeCap1d) {
    nodes *= 2;
    const cplx next = ring(nodes);
    if (std::abs(next - prev) < 1e-11 * std::max(1.0, std::abs(next))) {
      if (err) *err = std::abs(next - prev);
      return next.real();
    }
    prev = next;
  }
  if (err) *err = std::numeric_limits<double>::quiet_NaN();
  return prev.real();
}

double clip_unit_interval(double v, const char* what) {
  if (v < -1e-8 || v > 1.0 + 1e-8)
    throw std::runtime_error(std::string(what) + ": value outside [0,1] beyond tolerance");
  return std::clamp(v, 0.0, 1.0);
}

} // namespace

double height_pmf(int x, double t, const DensityPair& d, int n) {
  if (n < -64 || n > 64) throw std::invalid_argument("height_pmf: |n| > 64");
  GfEvaluator ev(x, t, d);
  const std::vector<double> radii =
      (n >= 1) ? std::vector<double>{0.5, 0.7, 0.3} : std::vector<double>{1.6, 2.5, 1.1};
  std::string last_err;
  for (double r : radii) {
    try {
      const double v = pmf_quadrature(ev, n, r, nullptr);
      return clip_unit_interval(v, "height_pmf");
    } catch (const std::exception& e) {
      last_err = e.what();
    }
  }
  throw std::runtime_error("height_pmf: all contour radii failed: " + last_err);
}

std::vector<double> height_pmf_range(int x, double t, const DensityPair& d,
                                     int n_lo, int n_hi) {
  if (n_lo > n_hi) throw std::invalid_argument("height_pmf_range: empty range");
  if (n_lo < -64 || n_hi > 64) throw std::invalid_argument("height_pmf_range: |n| > 64");
  GfEvaluator ev(x, t, d);
  std::vector<double> out;
  out.reserve(n_hi - n_lo + 1);
  // Share GF evaluations per radius: evaluate the ring once at a fixed node
  // count ladder, then form all n simultaneously.
  auto batch = [&](double radius, int m, std::vector<double>& vals) {
    const Contour c = make_contour(radius, m);
    std::vector<cplx> gfv(m);
    for (int j = 0; j < m; ++j) gfv[j] = ev.gf_at_z(c.node(j));
    vals.assign(n_hi - n_lo + 1, 0.0);
    std::vector<cplx> acc(n_hi - n_lo + 1, cplx{0.0, 0.0});
    for (int j = 0; j < m; ++j) {
      const cplx z = c.node(j);
      const cplx w = c.weight(j);
      cplx zp = std::pow(z, n_lo - 1);
      for (int n = n_lo; n <= n_hi; ++n) {
        acc[n - n_lo] += w * zp * gfv[j];
        zp *= z;
      }
    }
    for (size_t i = 0; i < acc.size(); ++i) vals[i] = acc[i].real();
  };
  auto compute_side = [&](int lo, int hi, double radius) {
    std::vector<double> prev, next;
    int m = 128;
    batch(radius, m, prev);
    while (2 * m <= kQuadNodeCap1d) {
      m *= 2;
      batch(radius, m, next);
      double delta = 0.0;
      for (int n = lo; n <= hi; ++n)
        delta = std::max(delta, std::abs(next[n - n_lo] - prev[n - n_lo]));
      prev = next;
      if (delta < 1e-10) break;
    }
    for (int n = lo; n <= hi; ++n)
      out[n - n_lo] = clip_unit_interval(prev[n - n_lo], "height_pmf_range");
  };
  out.assign(n_hi - n_lo + 1, 0.0);
  if (n_lo <= 0) compute_side(n_lo, std::min(0, n_hi), 1.6);
  if (n_hi >= 1) compute_side(std::max(1, n_lo), n_hi, 0.5);
  return out;
}

double tagged_cdf(int x, double t, const DensityPair& d) {
  if (!(d.rho_plus > 0.0))
    throw std::invalid_argument("tagged_cdf: requires rho+ > 0");
  GfEvaluator ev(x, t, d);
  auto attempt = [&](double radius) {
    int nodes = 64;
    auto ring = [&](int m) {
      const Contour c = make_contour(radius, m);
      cplx acc{0.0, 0.0};
      for (int j = 0; j < m; ++j) {
        const cplx z = c.node(j);
        acc += c.weight(j) * ev.gf_at_z(z) / (1.0 - z);
      }
      return acc;
    };
    cplx prev = ring(nodes);
    while (2 * nodes <= kQuadNodeCap1d) {
      nodes *= 2;
      const cplx next = ring(nodes);
      if (std::abs(next - prev) < 1e-11 * std::max(1.0, std::abs(next)))
        return next.real();
      prev = next;
    }
    return prev.real();
  };
  double value = std::numeric_limits<double>::quiet_NaN();
  std::string last_err;
  for (double r : {0.5, 0.7, 0.3}) {
    try {
      value = clip_unit_interval(attempt(r), "tagged_cdf");
      break;
    } catch (const std::exception& e) {
      last_err = e.what();
    }
  }
  if (std::isnan(value))
    throw std::runtime_error("tagged_cdf: all contour radii failed: " + last_err);
  // Cross-check against the pmf sum over n >= 1 (identical up to tail mass).
  const std::vector<double> pmf = height_pmf_range(x, t, d, 1, 64);
  double sum = 0.0;
  for (double p : pmf) sum += p;
  if (std::abs(sum - value) > 1e-6)
    throw std::runtime_error("tagged_cdf: pmf-sum consistency check failed");
  return value;
}

} // namespace sepldf
