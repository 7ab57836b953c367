// SPDX-License-Identifier: Apache-2.0

#include "ambcsec/channel.hpp"
#include "ambcsec/special_math.hpp"

#include <cmath>

namespace ambcsec {

void SystemParams::validate() const {
    if (!(a1 > 0.0 && a1 < 0.5))
        throw std::invalid_argument("params: need 0 < a1 < a2 < 1, i.e. a1 in (0, 0.5)");
    if (!(beta > 0.0 && beta <= 1.0))
        throw std::invalid_argument("params: beta must be in (0, 1]");
    for (double l : lambda)
        if (!(l > 0.0)) throw std::invalid_argument("params: channel variances must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("params: transmit SNR must be positive");
    for (double th : {th_x2, th_x1, th_c, th_e_far, th_e_near, th_e_bd})
        if (!(th > 0.0)) throw std::invalid_argument("params: thresholds must be positive");
    iqi.tx_s.validate();
    iqi.tx_bd.validate();
    iqi.rx_bd.validate();
    iqi.rx_dn.validate();
    iqi.rx_df.validate();
    iqi.rx_e.validate();
}

ReceiverComposites SystemParams::composites(Receiver r) const {
    const MismatchParams& rx_m = r == Receiver::near_user  ? iqi.rx_dn
                                 : r == Receiver::far_user ? iqi.rx_df
                                                           : iqi.rx_e;
    return receiver_composites(tx_coefficients(iqi.tx_s), tx_coefficients(iqi.tx_bd),
                               rx_coefficients(iqi.rx_bd), rx_coefficients(rx_m), a1, beta);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

FadingSample sample_fading(const SystemParams& p, FadingRng& rng) {
    FadingSample s;
    s.rho_dn = rng.exponential(p.lam_h_dn());
    s.rho_df = rng.exponential(p.lam_h_df());
    s.rho_e = rng.exponential(p.lam_h_e());
    s.rho_g_dn = rng.exponential(p.lam_g_dn());
    s.rho_g_df = rng.exponential(p.lam_g_df());
    s.rho_g_e = rng.exponential(p.lam_g_e());
    s.rho_b = rng.exponential(p.lam_h_b());
    return s;
}

double product_exp_pdf(double y, double la, double lb) {
    if (!(y > 0.0)) throw std::domain_error("product_exp_pdf: y must be positive");
    if (!(la > 0.0 && lb > 0.0)) throw std::domain_error("product_exp_pdf: means must be positive");
    const double ab = la * lb;
    return 2.0 / ab * bessel_k0(2.0 * std::sqrt(y / ab));
}

double product_exp_tail(double z, double la, double lb) {
    if (!(la > 0.0 && lb > 0.0)) throw std::domain_error("product_exp_tail: means must be positive");
    if (z < 0.0) throw std::domain_error("product_exp_tail: z must be >= 0");
    if (z == 0.0) return 1.0;
    const double u = 2.0 * std::sqrt(z / (la * lb));
    if (u > 1400.0) return 0.0; // K1 underflows; tail < 1e-300
    return u * bessel_k1(u);
}

} // namespace ambcsec
