// SPDX-License-Identifier: Apache-2.0

#include "ambcsec/iqi.hpp"

#include <cmath>

namespace ambcsec {

IqPair tx_coefficients(const MismatchParams& m) {
    m.validate();
    const std::complex<double> rot = std::polar(m.epsilon, m.phi);
    return {0.5 * (1.0 + rot), 0.5 * (1.0 - std::conj(rot))};
}

IqPair rx_coefficients(const MismatchParams& m) {
    m.validate();
    const std::complex<double> rot = std::polar(m.epsilon, m.phi);
    return {0.5 * (1.0 + std::conj(rot)), 0.5 * (1.0 - rot)};
}

ReceiverComposites receiver_composites(const IqPair& tx_s, const IqPair& tx_bd,
                                       const IqPair& rx_bd, const IqPair& rx_i,
                                       double a1, double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("composites: beta must be in (0,1]");
    if (!(a1 > 0.0 && a1 < 1.0)) throw std::invalid_argument("composites: a1 must be in (0,1)");

    const double mu_ts = std::norm(tx_s.mu), nu_ts = std::norm(tx_s.nu);
    const double mu_tb = std::norm(tx_bd.mu), nu_tb = std::norm(tx_bd.nu);
    const double mu_rb = std::norm(rx_bd.mu), nu_rb = std::norm(rx_bd.nu);
    const double mu_ri = std::norm(rx_i.mu), nu_ri = std::norm(rx_i.nu);

    const double b2 = beta * beta;
    const double src = mu_ts + nu_ts; // |mu_tS|^2 + |nu_tS|^2

    ReceiverComposites c;
    // Four summands each; conjugated symbols enter as plain squared moduli.
    c.a_coeff = b2 * src * (mu_ri * mu_rb * nu_tb + mu_ri * nu_rb * nu_tb +
                            nu_ri * mu_rb * mu_tb + nu_ri * nu_rb * mu_tb);
    c.q_coeff = b2 * src * (mu_ri * mu_rb * mu_tb + mu_ri * nu_rb * mu_tb +
                            nu_ri * mu_rb * nu_tb + nu_ri * nu_rb * nu_tb);
    c.xi = mu_ri * mu_ts + nu_ri * nu_ts;
    c.b_coeff = std::norm(rx_i.mu * tx_s.mu - 1.0) + nu_ri * nu_ts;
    c.m_coeff = mu_ri * nu_ts + nu_ri * mu_ts;
    c.c_coeff = a1 * c.xi + c.m_coeff;
    c.d_coeff = mu_ri + nu_ri;
    return c;
}

} // namespace ambcsec
