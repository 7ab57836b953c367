// SPDX-License-Identifier: Apache-2.0

#include "ambcsec/sinr.hpp"

namespace ambcsec {

double sinr_x2(Receiver i, const FadingSample& s, const ReceiverComposites& c,
               const SystemParams& p) {
    const double rho = s.rho(i);
    const double y = s.rho_g(i) * s.rho_b;
    const double g = p.gamma;
    return c.xi * p.a2() * rho * g /
           (y * (c.a_coeff + c.q_coeff) * g + rho * c.c_coeff * g + c.d_coeff);
}

double sinr_far_x2(const FadingSample& s, const ReceiverComposites& c_df,
                   const SystemParams& p) {
    return sinr_x2(Receiver::far_user, s, c_df, p);
}

double sinr_x1(Receiver i, const FadingSample& s, const ReceiverComposites& c,
               const SystemParams& p) {
    const double rho = s.rho(i);
    const double y = s.rho_g(i) * s.rho_b;
    const double g = p.gamma;
    return c.xi * p.a1 * rho * g /
           (y * (c.a_coeff + c.q_coeff) * g +
            rho * (p.a2() * c.b_coeff + c.m_coeff) * g + c.d_coeff);
}

double sinr_c(Receiver i, const FadingSample& s, const ReceiverComposites& c,
              const SystemParams& p) {
    const double rho = s.rho(i);
    const double y = s.rho_g(i) * s.rho_b;
    const double g = p.gamma;
    return c.q_coeff * y * g /
           (y * c.a_coeff * g + rho * (c.b_coeff + c.m_coeff) * g + c.d_coeff);
}

} // namespace ambcsec
