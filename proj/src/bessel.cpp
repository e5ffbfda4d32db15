#include "sepldf/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace sepldf {

namespace {

// Start index for the downward recurrence. Contamination by the growing
// solution shrinks like exp(-(M^2 - nu^2)/z) between orders M and nu, so
// M = sqrt(nu^2 + c*z) with c ~ 42 leaves < 1e-18 relative error.
int miller_start(int nu_max, double z) {
  const double m2 = static_cast<double>(nu_max) * nu_max + 42.0 * z;
  int m = static_cast<int>(std::ceil(std::sqrt(m2))) + 12;
  if (m < nu_max + 12) m = nu_max + 12;
  return m;
}

// One downward pass. Fills win[0..nu_max] with unnormalized p_k and returns
// the unnormalized value of p_0 + 2*sum_{k>=1} p_k, which equals e^z times
// the overall scale by the identity I_0 + 2*sum I_k = e^z.
double miller_pass(int nu_max, double z, std::vector<double>* win) {
  const int m0 = miller_start(nu_max, z);
  double pkp1 = 0.0;  // p_{k+1}
  double pk = 1e-280; // p_k, arbitrary small seed at k = m0
  double total = 2.0 * pk;
  for (int k = m0; k >= 1; --k) {
    const double pkm1 = pkp1 + (2.0 * k / z) * pk;
    pkp1 = pk;
    pk = pkm1; // now pk == p_{k-1}
    if (k - 1 >= 1) {
      total += 2.0 * pk;
    } else {
      total += pk; // p_0 counted once
    }
    if (win && k - 1 <= nu_max) (*win)[k - 1] = pk;
    if (pk > 1e260) {
      pk *= 1e-260;
      pkp1 *= 1e-260;
      total *= 1e-260;
      if (win)
        for (double& v : *win) v *= 1e-260;
    }
  }
  return total;
}

} // namespace

std::vector<double> bessel_i_scaled_array(int nu_max, double z) {
  if (nu_max < 0) throw std::invalid_argument("bessel_i_scaled_array: nu_max < 0");
  if (z < 0.0) throw std::invalid_argument("bessel_i_scaled_array: z < 0");
  std::vector<double> out(nu_max + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double total = miller_pass(nu_max, z, &out);
  const double inv = 1.0 / total;
  for (double& v : out) v *= inv;
  return out;
}

double bessel_i_scaled(int nu, double z) {
  if (nu < 0) nu = -nu;
  if (z < 0.0) throw std::invalid_argument("bessel_i_scaled: z < 0");
  if (z == 0.0) return nu == 0 ? 1.0 : 0.0;
  // Allocation-free variant of miller_pass tracking only order nu.
  const int m0 = miller_start(nu, z);
  double pkp1 = 0.0, pk = 1e-280, pnu = 0.0;
  double total = 2.0 * pk;
  for (int k = m0; k >= 1; --k) {
    const double pkm1 = pkp1 + (2.0 * k / z) * pk;
    pkp1 = pk;
    pk = pkm1;
    total += (k - 1 >= 1) ? 2.0 * pk : pk;
    if (k - 1 == nu) pnu = pk;
    if (pk > 1e260) {
      pk *= 1e-260;
      pkp1 *= 1e-260;
      pnu *= 1e-260;
      total *= 1e-260;
    }
  }
  return pnu / total;
}

} // namespace sepldf
