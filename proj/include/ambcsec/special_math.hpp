// SPDX-License-Identifier: Apache-2.0
//
// Special functions used by the closed-form outage/intercept expressions:
// the exponential integral Ei on the negative axis, the overflow-safe
// product x*e^x*Ei(-x), the modified Bessel functions K0/K1, and the
// Gauss-Chebyshev node set.

#pragma once

#include <stdexcept>
#include <vector>

namespace ambcsec {

/// Nodes of the N-point Gauss-Chebyshev rule (first kind),
/// theta_k = cos((2k-1)*pi/(2N)), k = 1..N.  The caller supplies the
/// pi/N weight factor and the sqrt(1-theta^2) terms of the rule.
struct ChebyshevNodes {
    int n = 0;
    std::vector<double> nodes;
};

/// Exponential integral Ei(x) for x < 0.
///
/// Power series in -x below the crossover, continued fraction above it;
/// both branches are good to ~1e-14 relative.  Throws std::domain_error
/// for x >= 0 (the closed forms never evaluate Ei there).
double exp_integral_ei(double x);

/// delta * e^delta * Ei(-delta) for delta > 0, without ever forming
/// e^delta.  The value lies in (-1, 0) and tends to 0- as delta -> 0+
/// and to -1+ as delta -> inf.  Stable for delta up to at least 1e6.
double scaled_ei_product(double delta);

/// Modified Bessel function of the second kind, order 0, for x > 0.
/// Ascending series below x = 2, Temme-style continued fraction above.
double bessel_k0(double x);

/// Modified Bessel function of the second kind, order 1, for x > 0.
/// Shares the continued-fraction branch with bessel_k0; the small-x
/// branch uses the Wronskian I0(x)K1(x) + I1(x)K0(x) = 1/x.
double bessel_k1(double x);

/// The N cosine-spaced quadrature nodes.  Throws for n < 1.
ChebyshevNodes chebyshev_nodes(int n);

} // namespace ambcsec
