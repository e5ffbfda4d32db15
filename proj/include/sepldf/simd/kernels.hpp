#pragma once

// Data-parallel inner loops used by the quadrature and linear-algebra core.
//
// Complex vectors are stored split (SoA): one array of real parts, one of
// imaginary parts. Each primitive has a scalar reference implementation and
// an AVX2 variant; the top-level functions dispatch at runtime based on CPU
// capabilities. The two backends are equivalence-tested against each other.

#include <complex>
#include <cstddef>

namespace sepldf::simd {

// Name of the backend selected at runtime ("avx2" or "scalar").
// Overridable with the environment variable SEPLDF_SIMD=scalar.
const char* active_backend();

// y += a * x  (complex, split layout)
void zaxpy(std::size_t n, double ar, double ai,
           const double* xr, const double* xi, double* yr, double* yi);

// out = x .* y  (elementwise complex product)
void zmul(std::size_t n, const double* xr, const double* xi,
          const double* yr, const double* yi, double* outr, double* outi);

// sum_k x_k * y_k  (unconjugated complex dot)
std::complex<double> zdotu(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi);

// sum_k x_k * y_k * z_k
std::complex<double> zdot3(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi,
                           const double* zr, const double* zi);

// real primitives
double ddot(std::size_t n, const double* x, const double* y);
void daxpy(std::size_t n, double a, const double* x, double* y);

namespace scalar {
void zaxpy(std::size_t n, double ar, double ai,
           const double* xr, const double* xi, double* yr, double* yi);
void zmul(std::size_t n, const double* xr, const double* xi,
          const double* yr, const double* yi, double* outr, double* outi);
std::complex<double> zdotu(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi);
std::complex<double> zdot3(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi,
                           const double* zr, const double* zi);
double ddot(std::size_t n, const double* x, const double* y);
void daxpy(std::size_t n, double a, const double* x, double* y);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SEPLDF_HAVE_AVX2_BACKEND 1
namespace avx2 {
void zaxpy(std::size_t n, double ar, double ai,
           const double* xr, const double* xi, double* yr, double* yi);
void zmul(std::size_t n, const double* xr, const double* xi,
          const double* yr, const double* yi, double* outr, double* outi);
std::complex<double> zdotu(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi);
std::complex<double> zdot3(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi,
                           const double* zr, const double* zi);
double ddot(std::size_t n, const double* x, const double* y);
void daxpy(std::size_t n, double a, const double* x, double* y);
} // namespace avx2
#else
#define SEPLDF_HAVE_AVX2_BACKEND 0
#endif

} // namespace sepldf::simd
