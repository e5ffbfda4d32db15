#include "sepldf/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sepldf::simd {

namespace {

struct Backend {
  void (*zaxpy)(std::size_t, double, double, const double*, const double*, double*, double*);
  void (*zmul)(std::size_t, const double*, const double*, const double*, const double*, double*, double*);
  std::complex<double> (*zdotu)(std::size_t, const double*, const double*, const double*, const double*);
  std::complex<double> (*zdot3)(std::size_t, const double*, const double*, const double*, const double*,
                                const double*, const double*);
  double (*ddot)(std::size_t, const double*, const double*);
  void (*daxpy)(std::size_t, double, const double*, double*);
  const char* name;
};

constexpr Backend kScalar{scalar::zaxpy, scalar::zmul, scalar::zdotu,
                          scalar::zdot3, scalar::ddot, scalar::daxpy, "scalar"};

#if SEPLDF_HAVE_AVX2_BACKEND
constexpr Backend kAvx2{avx2::zaxpy, avx2::zmul, avx2::zdotu,
                        avx2::zdot3, avx2::ddot, avx2::daxpy, "avx2"};
#endif

const Backend& select() {
  static const Backend& chosen = []() -> const Backend& {
    const char* env = std::getenv("SEPLDF_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return kScalar;
#if SEPLDF_HAVE_AVX2_BACKEND
    if (env && std::strcmp(env, "avx2") == 0) return kAvx2;
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return kAvx2;
#endif
    return kScalar;
  }();
  return chosen;
}

} // namespace

const char* active_backend() { return select().name; }

void zaxpy(std::size_t n, double ar, double ai,
           const double* xr, const double* xi, double* yr, double* yi) {
  select().zaxpy(n, ar, ai, xr, xi, yr, yi);
}

void zmul(std::size_t n, const double* xr, const double* xi,
          const double* yr, const double* yi, double* outr, double* outi) {
  select().zmul(n, xr, xi, yr, yi, outr, outi);
}

std::complex<double> zdotu(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi) {
  return select().zdotu(n, xr, xi, yr, yi);
}

std::complex<double> zdot3(std::size_t n, const double* xr, const double* xi,
                           const double* yr, const double* yi,
                           const double* zr, const double* zi) {
  return select().zdot3(n, xr, xi, yr, yi, zr, zi);
}

double ddot(std::size_t n, const double* x, const double* y) {
  return select().ddot(n, x, y);
}

void daxpy(std::size_t n, double a, const double* x, double* y) {
  select().daxpy(n, a, x, y);
}

} // namespace sepldf::simd
