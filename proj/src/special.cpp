#include "sepldf/special.hpp"

#include <cmath>
#include <stdexcept>

namespace sepldf {

namespace {
constexpr double kInvSqrtPi = 0.5641895835477562869; // 1/sqrt(pi)
}

double A_func(double u) {
  return kInvSqrtPi * std::exp(-u * u) + u * std::erf(u);
}

double Xi_func(double u) {
  // For large positive u both terms of A(u) - u nearly cancel; use
  // Xi(u) = e^{-u^2}/sqrt(pi) - u*erfc(u) which is cancellation-free.
  return kInvSqrtPi * std::exp(-u * u) - u * std::erfc(u);
}

double Xi_n(int n, double u) {
  if (n < 1) throw std::invalid_argument("Xi_n: n < 1");
  const double s = std::sqrt(static_cast<double>(n));
  return Xi_func(s * u) / s;
}

} // namespace sepldf
