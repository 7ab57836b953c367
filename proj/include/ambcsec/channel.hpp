// SPDX-License-Identifier: Apache-2.0
//
// System parameterization and Rayleigh-fading statistics: exponential
// power-gain sampling and the K0 density of a product of two exponentials.

#pragma once

#include "ambcsec/iqi.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ambcsec {

/// Receivers that decode (or wiretap) the downlink.
enum class Receiver { near_user, far_user, eavesdropper };

/// One I/Q chain per transmitting or receiving front end.  The source
/// transmits, the backscatter device both receives and re-transmits, and
/// the three receivers listen.
struct IqiProfile {
    MismatchParams tx_s;
    MismatchParams tx_bd;
    MismatchParams rx_bd;
    MismatchParams rx_dn;
    MismatchParams rx_df;
    MismatchParams rx_e;

    /// Common mismatch levels on every TX chain and every RX chain.
    static IqiProfile shared(double eps_t, double phi_t, double eps_r, double phi_r) {
        IqiProfile q;
        q.tx_s = q.tx_bd = MismatchParams{eps_t, phi_t};
        q.rx_bd = q.rx_dn = q.rx_df = q.rx_e = MismatchParams{eps_r, phi_r};
        return q;
    }

    [[nodiscard]] bool all_ideal() const {
        return tx_s.ideal() && tx_bd.ideal() && rx_bd.ideal() && rx_dn.ideal() &&
               rx_df.ideal() && rx_e.ideal();
    }
};

/// Full system parameterization.
///
/// Channel-variance index mapping (kept in this one table; everything else
/// derives from it):
///   lambda1 <-> h_Dn   (source -> near user)
///   lambda2 <-> h_Df   (source -> far user)
///   lambda3 <-> h_E    (source -> eavesdropper)
///   lambda4 <-> g_Dn   (backscatter device -> near user)
///   lambda5 <-> g_Df   (backscatter device -> far user)
///   lambda6 <-> g_E    (backscatter device -> eavesdropper)
///   lambda7 <-> h_b    (source -> backscatter device)
struct SystemParams {
    double a1 = 0.1;                   // power allocation of x1 (near user's signal)
    double beta = 0.1;                 // reflection coefficient, power factor beta^2
    std::array<double, 7> lambda{1.0, 0.1, 1.0, 0.5, 0.8, 0.2, 0.1}; // lambda1..lambda7
    double gamma = 100.0;              // transmit SNR, linear (dB only at boundaries)
    double th_x2 = 1.0;                // decode threshold for x2
    double th_x1 = 2.0;                // decode threshold for x1
    double th_c = 0.1;                 // decode threshold for the backscatter signal
    double th_e_far = 1.2;             // eavesdrop threshold on x2
    double th_e_near = 1.0;            // eavesdrop threshold on x1
    double th_e_bd = 0.8;              // eavesdrop threshold on c(t)
    IqiProfile iqi;                    // per-node front ends, ideal by default

    [[nodiscard]] double a2() const { return 1.0 - a1; }

    // lambda accessors by role, 1-based paper indices in the comments above
    [[nodiscard]] double lam_h_dn() const { return lambda[0]; }
    [[nodiscard]] double lam_h_df() const { return lambda[1]; }
    [[nodiscard]] double lam_h_e() const { return lambda[2]; }
    [[nodiscard]] double lam_g_dn() const { return lambda[3]; }
    [[nodiscard]] double lam_g_df() const { return lambda[4]; }
    [[nodiscard]] double lam_g_e() const { return lambda[5]; }
    [[nodiscard]] double lam_h_b() const { return lambda[6]; }

    void validate() const;

    /// Composites of one receiver's chain against the source/BD chains.
    [[nodiscard]] ReceiverComposites composites(Receiver r) const;
};

/// One realization of all channel power gains.
struct FadingSample {
    double rho_dn = 0, rho_df = 0, rho_e = 0;       // |h_i|^2
    double rho_g_dn = 0, rho_g_df = 0, rho_g_e = 0; // |g_i|^2
    double rho_b = 0;                               // |h_b|^2

    [[nodiscard]] double rho(Receiver r) const {
        switch (r) {
            case Receiver::near_user: return rho_dn;
            case Receiver::far_user: return rho_df;
            default: return rho_e;
        }
    }
    [[nodiscard]] double rho_g(Receiver r) const {
        switch (r) {
            case Receiver::near_user: return rho_g_dn;
            case Receiver::far_user: return rho_g_df;
            default: return rho_g_e;
        }
    }
};

/// Identity string of the random number machinery, recorded in output
/// metadata so runs can be reproduced across machines.
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-block-streams/inverse-cdf-exp";

/// SplitMix64 stream derivation: the seed of sub-stream `stream` under a
/// master `seed`.  Used to give every trial block its own generator.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded fading source.  Draws are exponential via inverse CDF on a
/// 53-bit uniform in (0,1], so the sequence is fully determined by the
/// mt19937_64 stream.
class FadingRng {
public:
    explicit FadingRng(std::uint64_t seed) : eng_(seed) {}

    double exponential(double mean) {
        const double u = ((eng_() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
        return -mean * std::log(u);
    }

private:
    std::mt19937_64 eng_;
};

/// Draws all seven power gains, independent, exponential with the mapped
/// means, in a fixed documented order (rho_dn, rho_df, rho_e, rho_g_dn,
/// rho_g_df, rho_g_e, rho_b).
FadingSample sample_fading(const SystemParams& p, FadingRng& rng);

/// Density of the product X*Y of independent exponentials with means la,
/// lb: f(y) = 2*K0(2*sqrt(y/(la*lb)))/(la*lb).
double product_exp_pdf(double y, double la, double lb);

/// Pr(X*Y > z) = u*K1(u) with u = 2*sqrt(z/(la*lb)); equals the integral
/// of product_exp_pdf over (z, inf) to well below 1e-8 absolute.
double product_exp_tail(double z, double la, double lb);

} // namespace ambcsec
