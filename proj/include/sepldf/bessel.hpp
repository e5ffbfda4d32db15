#pragma once

// Exponentially scaled modified Bessel functions of integer order,
//   bessel_i_scaled(nu, z) = e^{-z} I_nu(z),  z >= 0.
//
// Evaluated by downward (Miller) recurrence with the normalization
// I_0(z) + 2 sum_{k>=1} I_k(z) = e^z. The start index is chosen so that the
// contaminating second solution is damped below double precision.

#include <vector>

namespace sepldf {

// e^{-z} I_nu(z) for integer nu >= 0, z >= 0.
double bessel_i_scaled(int nu, double z);

// All orders 0..nu_max at once (shares one downward pass).
std::vector<double> bessel_i_scaled_array(int nu_max, double z);

} // namespace sepldf
