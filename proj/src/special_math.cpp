// SPDX-License-Identifier: Apache-2.0

#include "ambcsec/special_math.hpp"

#include <cmath>
#include <limits>

namespace ambcsec {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// E1(t) for 0 < t <= 2 via the alternating power series
// E1(t) = -gamma - ln t + sum_{k>=1} (-1)^{k+1} t^k / (k * k!).
double e1_series(double t) {
    double sum = 0.0;
    double term = 1.0; // t^k / k! running factor
    for (int k = 1; k <= 60; ++k) {
        term *= t / k;
        const double contrib = (k % 2 ? term : -term) / k;
        sum += contrib;
        if (std::abs(contrib) < kEps * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(t) + sum;
}

// Continued fraction for e^t * E1(t), t >= 2 (modified Lentz):
// e^t E1(t) = 1/(t+1- 1^2/(t+3- 2^2/(t+5- ...))).
double e1_cf_scaled(double t) {
    const double tiny = 1e-300;
    double b = t + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

struct K01 {
    double k0;
    double k1;
};

// Ascending-series branch, x <= 2.  I0/I1 series converge rapidly; K1
// follows from the Wronskian I0*K1 + I1*K0 = 1/x.
K01 bessel_k01_series(double x) {
    const double q = 0.25 * x * x;
    double i0 = 1.0, i1 = 0.5 * x;
    double k0sum = 0.0;
    double term = 1.0;  // q^k / (k!)^2
    double hk = 0.0;    // harmonic number
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += term;
        i1 += term * (0.5 * x) / (k + 1.0);
        k0sum += term * hk;
        if (term < kEps) break;
    }
    const double lg = std::log(0.5 * x) + kEulerGamma;
    const double k0 = -lg * i0 + k0sum;
    const double k1 = (1.0 / x - i1 * k0) / i0;
    return {k0, k1};
}

// Temme/Thompson-Barnett continued fraction (CF2) for K_nu at nu = 0,
// valid for x >= 2; returns K0 and K1 together to machine precision.
K01 bessel_k01_cf(double x) {
    const double a1 = 0.25; // 0.25 - nu^2 at nu = 0
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double a = -a1;
    double c = a1, q = a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 300; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h = a1 * h;
    const double k0 = std::sqrt(3.14159265358979323846 / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

K01 bessel_k01(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: argument must be positive");
    return x <= 2.0 ? bessel_k01_series(x) : bessel_k01_cf(x);
}

} // namespace

double exp_integral_ei(double x) {
    if (!(x < 0.0)) throw std::domain_error("exp_integral_ei: argument must be negative");
    const double t = -x;
    if (t <= 2.0) return -e1_series(t);
    return -std::exp(-t) * e1_cf_scaled(t);
}

double scaled_ei_product(double delta) {
    if (!(delta > 0.0)) throw std::domain_error("scaled_ei_product: argument must be positive");
    if (delta <= 2.0) return delta * std::exp(delta) * (-e1_series(delta));
    return -delta * e1_cf_scaled(delta);
}

double bessel_k0(double x) { return bessel_k01(x).k0; }

double bessel_k1(double x) { return bessel_k01(x).k1; }

ChebyshevNodes chebyshev_nodes(int n) {
    if (n < 1) throw std::domain_error("chebyshev_nodes: n must be >= 1");
    ChebyshevNodes out;
    out.n = n;
    out.nodes.resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        out.nodes[static_cast<size_t>(k - 1)] =
            std::cos((2.0 * k - 1.0) * 3.14159265358979323846 / (2.0 * n));
    return out;
}

} // namespace ambcsec
