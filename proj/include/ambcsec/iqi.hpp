// SPDX-License-Identifier: Apache-2.0
//
// I/Q-imbalance front-end model: the complex (mu, nu) coefficient pair of
// each transmit/receive chain and the per-receiver composite scalars that
// appear in every SINR and closed form.

#pragma once

#include <complex>
#include <stdexcept>

namespace ambcsec {

/// Amplitude/phase mismatch of one I/Q chain.  epsilon = 1, phi = 0 is an
/// ideal front end.  phi is stored in radians; degree conversion happens
/// at the CLI/config boundary.
struct MismatchParams {
    double epsilon = 1.0;
    double phi = 0.0;

    [[nodiscard]] bool ideal() const { return epsilon == 1.0 && phi == 0.0; }
    void validate() const {
        if (!(epsilon > 0.0)) throw std::invalid_argument("mismatch: epsilon must be > 0");
        if (!std::isfinite(phi)) throw std::invalid_argument("mismatch: phi must be finite");
    }
};

/// Direct-path (mu) and image-path (nu) coefficients of one chain.
/// Both constructions satisfy mu + conj(nu) = 1 and
/// |mu|^2 + |nu|^2 = (1 + epsilon^2)/2.
struct IqPair {
    std::complex<double> mu{1.0, 0.0};
    std::complex<double> nu{0.0, 0.0};
};

/// TX chain: mu = (1 + eps*e^{j*phi})/2, nu = (1 - eps*e^{-j*phi})/2.
IqPair tx_coefficients(const MismatchParams& m);

/// RX chain: mu = (1 + eps*e^{-j*phi})/2, nu = (1 - eps*e^{j*phi})/2.
/// Note the phase sign is opposite to the TX chain.
IqPair rx_coefficients(const MismatchParams& m);

/// The seven per-receiver scalars derived from the chain coefficients.
/// All are nonnegative; an ideal link reduces them to
/// (xi, A, Q, B, C, D, M) = (1, 0, beta^2, 0, a1, 1, 0).
struct ReceiverComposites {
    double xi = 1.0;       // desired-signal gain
    double a_coeff = 0.0;  // backscatter image interference (A)
    double q_coeff = 0.0;  // backscatter signal gain (Q)
    double b_coeff = 0.0;  // SIC residual of the x2 stage (B)
    double c_coeff = 0.0;  // x1 + mirror interference while decoding x2 (C)
    double d_coeff = 1.0;  // noise scaling (D)
    double m_coeff = 0.0;  // source mirror leakage (M)
};

/// Evaluates the seven composites for one receiver chain rx_i given the
/// source TX chain, the backscatter device's TX/RX chains, the power
/// split a1 and the reflection coefficient beta.
ReceiverComposites receiver_composites(const IqPair& tx_s, const IqPair& tx_bd,
                                       const IqPair& rx_bd, const IqPair& rx_i,
                                       double a1, double beta);

} // namespace ambcsec
