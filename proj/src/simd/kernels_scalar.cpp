#include "sepldf/simd/kernels.hpp"

namespace sepldf::simd::scalar {

void zaxpy(std::size_t n, double ar, double ai,
           const double* xr, const double* xi, double* yr, double* yi) {
  for (std::size_t k = 0; k < n; ++k) {
    yr[k] += ar * xr[k] - ai * xi[k];
    yi[k] += ar * xi[k] + ai * xr[k];
  }
}

void zmul(std::size_t n, const double* xr, const double* xi,
          const double* yr, const double* yi, double* outr, double* outi) {
  for (std::size_t k = 0; k < n; ++k) {
    const double re = xr[k] * yr[k] - xi[k] * yi[k];
    const double im = xr[k] * yi[k] + xi[k] * yr[k];
    outr[k] = re;
    outi[k] = im;
  }
}

std::complex<double> zdotu(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi) {
  double sr = 0.0, si = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sr += xr[k] * yr[k] - xi[k] * yi[k];
    si += xr[k] * yi[k] + xi[k] * yr[k];
  }
  return {sr, si};
}

std::complex<double> zdot3(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi,
                           const double* zr, const double* zi) {
  double sr = 0.0, si = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double pr = xr[k] * yr[k] - xi[k] * yi[k];
    const double pi = xr[k] * yi[k] + xi[k] * yr[k];
    sr += pr * zr[k] - pi * zi[k];
    si += pr * zi[k] + pi * zr[k];
  }
  return {sr, si};
}

double ddot(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += x[k] * y[k];
  return s;
}

void daxpy(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

} // namespace sepldf::simd::scalar
