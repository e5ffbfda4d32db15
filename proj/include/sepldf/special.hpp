#pragma once

// Error-function integrals controlling the long-time statistics:
//
//   A(u)     = e^{-u^2}/sqrt(pi) + u*erf(u)          (even in u)
//   Xi(u)    = A(u) - u = int_u^inf erfc(v) dv
//   Xi_n(u)  = Xi(sqrt(n) u)/sqrt(n)
//
// Xi satisfies Xi(u) - Xi(-u) = -2u.

namespace sepldf {

double A_func(double u);
double Xi_func(double u);
double Xi_n(int n, double u);

} // namespace sepldf
