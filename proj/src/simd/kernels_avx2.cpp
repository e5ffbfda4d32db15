#include "sepldf/simd/kernels.hpp"

#if SEPLDF_HAVE_AVX2_BACKEND

#include <immintrin.h>

namespace sepldf::simd::avx2 {

namespace {
inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}
} // namespace

void zaxpy(std::size_t n, double ar, double ai,
           const double* xr, const double* xi, double* yr, double* yi) {
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vxr = _mm256_loadu_pd(xr + k);
    __m256d vxi = _mm256_loadu_pd(xi + k);
    __m256d vyr = _mm256_loadu_pd(yr + k);
    __m256d vyi = _mm256_loadu_pd(yi + k);
    vyr = _mm256_fmadd_pd(var, vxr, _mm256_fnmadd_pd(vai, vxi, vyr));
    vyi = _mm256_fmadd_pd(var, vxi, _mm256_fmadd_pd(vai, vxr, vyi));
    _mm256_storeu_pd(yr + k, vyr);
    _mm256_storeu_pd(yi + k, vyi);
  }
  for (; k < n; ++k) {
    yr[k] += ar * xr[k] - ai * xi[k];
    yi[k] += ar * xi[k] + ai * xr[k];
  }
}

void zmul(std::size_t n, const double* xr, const double* xi,
          const double* yr, const double* yi, double* outr, double* outi) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vxr = _mm256_loadu_pd(xr + k);
    __m256d vxi = _mm256_loadu_pd(xi + k);
    __m256d vyr = _mm256_loadu_pd(yr + k);
    __m256d vyi = _mm256_loadu_pd(yi + k);
    __m256d re = _mm256_fnmadd_pd(vxi, vyi, _mm256_mul_pd(vxr, vyr));
    __m256d im = _mm256_fmadd_pd(vxr, vyi, _mm256_mul_pd(vxi, vyr));
    _mm256_storeu_pd(outr + k, re);
    _mm256_storeu_pd(outi + k, im);
  }
  for (; k < n; ++k) {
    const double re = xr[k] * yr[k] - xi[k] * yi[k];
    const double im = xr[k] * yi[k] + xi[k] * yr[k];
    outr[k] = re;
    outi[k] = im;
  }
}

std::complex<double> zdotu(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi) {
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vxr = _mm256_loadu_pd(xr + k);
    __m256d vxi = _mm256_loadu_pd(xi + k);
    __m256d vyr = _mm256_loadu_pd(yr + k);
    __m256d vyi = _mm256_loadu_pd(yi + k);
    sr = _mm256_fmadd_pd(vxr, vyr, _mm256_fnmadd_pd(vxi, vyi, sr));
    si = _mm256_fmadd_pd(vxr, vyi, _mm256_fmadd_pd(vxi, vyr, si));
  }
  double accr = hsum(sr), acci = hsum(si);
  for (; k < n; ++k) {
    accr += xr[k] * yr[k] - xi[k] * yi[k];
    acci += xr[k] * yi[k] + xi[k] * yr[k];
  }
  return {accr, acci};
}

std::complex<double> zdot3(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi,
                           const double* zr, const double* zi) {
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vxr = _mm256_loadu_pd(xr + k);
    __m256d vxi = _mm256_loadu_pd(xi + k);
    __m256d vyr = _mm256_loadu_pd(yr + k);
    __m256d vyi = _mm256_loadu_pd(yi + k);
    __m256d pr = _mm256_fnmadd_pd(vxi, vyi, _mm256_mul_pd(vxr, vyr));
    __m256d pi = _mm256_fmadd_pd(vxr, vyi, _mm256_mul_pd(vxi, vyr));
    __m256d vzr = _mm256_loadu_pd(zr + k);
    __m256d vzi = _mm256_loadu_pd(zi + k);
    sr = _mm256_fmadd_pd(pr, vzr, _mm256_fnmadd_pd(pi, vzi, sr));
    si = _mm256_fmadd_pd(pr, vzi, _mm256_fmadd_pd(pi, vzr, si));
  }
  double accr = hsum(sr), acci = hsum(si);
  for (; k < n; ++k) {
    const double pr = xr[k] * yr[k] - xi[k] * yi[k];
    const double pi = xr[k] * yi[k] + xi[k] * yr[k];
    accr += pr * zr[k] - pi * zi[k];
    acci += pr * zi[k] + pi * zr[k];
  }
  return {accr, acci};
}

double ddot(std::size_t n, const double* x, const double* y) {
  __m256d s = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    s = _mm256_fmadd_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k), s);
  }
  double acc = hsum(s);
  for (; k < n; ++k) acc += x[k] * y[k];
  return acc;
}

void daxpy(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vy = _mm256_loadu_pd(y + k);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), vy);
    _mm256_storeu_pd(y + k, vy);
  }
  for (; k < n; ++k) y[k] += a * x[k];
}

} // namespace sepldf::simd::avx2

#endif // SEPLDF_HAVE_AVX2_BACKEND
