#pragma once

// Dense kernels for the Nystrom machinery: complex matrices in split (SoA)
// row-major storage with LU determinants and trace powers, a real symmetric
// Jacobi eigensolver, and Gauss-Legendre rules. Inner loops run on the
// sepldf::simd primitives.

#include <complex>
#include <vector>

namespace sepldf {

struct ZMatrix {
  int n = 0;
  std::vector<double> re, im; // row-major n*n

  ZMatrix() = default;
  explicit ZMatrix(int dim) : n(dim), re(static_cast<size_t>(dim) * dim, 0.0),
                              im(static_cast<size_t>(dim) * dim, 0.0) {}
  std::complex<double> at(int i, int j) const {
    const size_t k = static_cast<size_t>(i) * n + j;
    return {re[k], im[k]};
  }
  void set(int i, int j, std::complex<double> v) {
    const size_t k = static_cast<size_t>(i) * n + j;
    re[k] = v.real();
    im[k] = v.imag();
  }
};

// det(A) by in-place LU with partial pivoting (A passed by value).
// Throws std::runtime_error on exact breakdown (zero pivot column).
std::complex<double> zdet(ZMatrix a);

// det(I + omega*A).
std::complex<double> zdet_1p(const ZMatrix& a, std::complex<double> omega);

// Traces of A^k for k = 1..kmax (dense repeated multiplication).
std::vector<std::complex<double>> ztrace_powers(const ZMatrix& a, int kmax);

// Eigenvalues of a real symmetric matrix (full storage, row-major),
// ascending. Cyclic Jacobi; the input is copied.
std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n);

// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b,
                    std::vector<double>& x, std::vector<double>& w);

} // namespace sepldf
