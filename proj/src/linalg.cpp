#include "sepldf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sepldf/simd/kernels.hpp"

namespace sepldf {

std::complex<double> zdet(ZMatrix a) {
  const int n = a.n;
  double* re = a.re.data();
  double* im = a.im.data();
  std::complex<double> det{1.0, 0.0};
  int swaps = 0;
  for (int k = 0; k < n; ++k) {
    // partial pivot on |a_ik|
    int piv = k;
    double best = 0.0;
    for (int i = k; i < n; ++i) {
      const size_t off = static_cast<size_t>(i) * n + k;
      const double m = re[off] * re[off] + im[off] * im[off];
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best == 0.0) throw std::runtime_error("zdet: singular matrix (zero pivot)");
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(re[static_cast<size_t>(piv) * n + j], re[static_cast<size_t>(k) * n + j]);
        std::swap(im[static_cast<size_t>(piv) * n + j], im[static_cast<size_t>(k) * n + j]);
      }
      ++swaps;
    }
    const size_t kk = static_cast<size_t>(k) * n + k;
    const std::complex<double> pivval{re[kk], im[kk]};
    det *= pivval;
    const int tail = n - k - 1;
    if (tail <= 0) continue;
    double* krow_re = re + kk + 1;
    double* krow_im = im + kk + 1;
    for (int i = k + 1; i < n; ++i) {
      const size_t ik = static_cast<size_t>(i) * n + k;
      const std::complex<double> m = std::complex<double>{re[ik], im[ik]} / pivval;
      re[ik] = 0.0;
      im[ik] = 0.0;
      if (m == std::complex<double>{0.0, 0.0}) continue;
      simd::zaxpy(tail, -m.real(), -m.imag(), krow_re, krow_im, re + ik + 1, im + ik + 1);
    }
  }
  return (swaps % 2 == 0) ? det : -det;
}

std::complex<double> zdet_1p(const ZMatrix& a, std::complex<double> omega) {
  ZMatrix b(a.n);
  const size_t total = static_cast<size_t>(a.n) * a.n;
  for (size_t k = 0; k < total; ++k) {
    b.re[k] = omega.real() * a.re[k] - omega.imag() * a.im[k];
    b.im[k] = omega.real() * a.im[k] + omega.imag() * a.re[k];
  }
  for (int i = 0; i < a.n; ++i) {
    const size_t ii = static_cast<size_t>(i) * a.n + i;
    b.re[ii] += 1.0;
  }
  return zdet(std::move(b));
}

namespace {

void zgemm(const ZMatrix& a, const ZMatrix& b, ZMatrix& c) {
  const int n = a.n;
  std::fill(c.re.begin(), c.re.end(), 0.0);
  std::fill(c.im.begin(), c.im.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    const size_t irow = static_cast<size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
      const size_t ik = irow + k;
      const double ar = a.re[ik], ai = a.im[ik];
      if (ar == 0.0 && ai == 0.0) continue;
      const size_t krow = static_cast<size_t>(k) * n;
      simd::zaxpy(n, ar, ai, b.re.data() + krow, b.im.data() + krow,
                  c.re.data() + irow, c.im.data() + irow);
    }
  }
}

std::complex<double> ztrace(const ZMatrix& a) {
  std::complex<double> t{0.0, 0.0};
  for (int i = 0; i < a.n; ++i) t += a.at(i, i);
  return t;
}

} // namespace

std::vector<std::complex<double>> ztrace_powers(const ZMatrix& a, int kmax) {
  std::vector<std::complex<double>> out;
  out.reserve(kmax);
  if (kmax <= 0) return out;
  ZMatrix p = a;
  out.push_back(ztrace(p));
  ZMatrix q(a.n);
  for (int k = 2; k <= kmax; ++k) {
    zgemm(p, a, q);
    std::swap(p, q);
    out.push_back(ztrace(p));
  }
  return out;
}

std::vector<double> sym_eigenvalues(const std::vector<double>& a_in, int n) {
  if (static_cast<int>(a_in.size()) != n * n)
    throw std::invalid_argument("sym_eigenvalues: size mismatch");
  std::vector<double> a = a_in;
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-30 * n * n) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p), arq = at(r, q);
          const double nrp = c * arp - s * arq;
          const double nrq = s * arp + c * arq;
          at(r, p) = nrp;
          at(p, r) = nrp;
          at(r, q) = nrq;
          at(q, r) = nrq;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

void gauss_legendre(int n, double a, double b,
                    std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  x.resize(n);
  w.resize(n);
  const int m = (n + 1) / 2;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  for (int i = 0; i < m; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = xm - xl * z;
    x[n - 1 - i] = xm + xl * z;
    w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

} // namespace sepldf
