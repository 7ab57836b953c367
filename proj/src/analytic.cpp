// SPDX-License-Identifier: Apache-2.0

#include "ambcsec/analytic.hpp"
#include "ambcsec/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ambcsec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// int_0^c exp(-a*y) * f_prod(y; ab) dy by the N-node Gauss-Chebyshev rule
// in the substituted variable y = z^2.  The substitution removes the
// K0 log singularity at y = 0; without it the rule needs thousands of
// nodes once c spans several decades.
double product_head_integral(double c, double a, double ab, const ChebyshevNodes& nodes) {
    if (c <= 0.0) return 0.0;
    const double s = std::sqrt(c);
    const double rtab = 1.0 / std::sqrt(ab);
    double sum = 0.0;
    for (double t : nodes.nodes) {
        const double z = s * (t + 1.0) * 0.5;
        if (z <= 0.0) continue;
        sum += 2.0 * z * std::exp(-a * z * z) * (2.0 / ab) * bessel_k0(2.0 * z * rtab) *
               std::sqrt(1.0 - t * t);
    }
    return std::numbers::pi * s / (2.0 * nodes.n) * sum;
}

// int_{ylo}^inf exp(-p*(y - y0)) * f_prod(y; ab) dy with ylo >= y0 > 0,
// truncated where the integrand has decayed by e^-45 and evaluated by the
// same substituted Chebyshev rule.  Keeping the exponential in this
// factored form avoids the cancellation the full-Laplace-minus-head
// arrangement suffers when p*y0 is large.
double product_tail_integral(double ylo, double p, double y0, double ab,
                             const ChebyshevNodes& nodes) {
    const double rtab = 1.0 / std::sqrt(ab);
    const double e_lo = p * (ylo - y0) + 2.0 * std::sqrt(ylo) * rtab;
    const double target = e_lo + 45.0 + p * y0;
    const double zhi = (-rtab + std::sqrt(rtab * rtab + p * target)) / p;
    const double zlo = std::sqrt(ylo);
    if (!(zhi > zlo)) return 0.0;
    double sum = 0.0;
    for (double t : nodes.nodes) {
        const double z = zlo + (zhi - zlo) * (t + 1.0) * 0.5;
        sum += 2.0 * z * std::exp(-p * (z * z - y0)) * (2.0 / ab) * bessel_k0(2.0 * z * rtab) *
               std::sqrt(1.0 - t * t);
    }
    return std::numbers::pi * (zhi - zlo) / (2.0 * nodes.n) * sum;
}

struct NearGuard {
    Feasibility feas;
    double varsigma = kNaN;
};

// Joint x2 + x1 feasibility at one receiver: both SINR ceilings must
// exceed their thresholds, otherwise the event is impossible.
NearGuard near_guard(const SystemParams& p, const ReceiverComposites& c, double th1, double th2) {
    NearGuard g;
    const double den1 = c.xi * p.a1 - (p.a2() * c.b_coeff + c.m_coeff) * th1;
    if (den1 <= 0.0) {
        g.feas = {false, GuardReason::x1_ceiling_below_threshold};
        return g;
    }
    const double den2 = c.xi * p.a2() - c.c_coeff * th2;
    if (den2 <= 0.0) {
        g.feas = {false, GuardReason::x2_ceiling_below_threshold};
        return g;
    }
    g.varsigma = std::max(th1 / den1, th2 / den2);
    return g;
}

double varsigma_ideal(const SystemParams& p) {
    const double den2 = p.a2() - p.a1 * p.th_x2;
    if (den2 <= 0.0) return kNaN;
    return std::max(p.th_x2 / den2, p.th_x1 / p.a1);
}

} // namespace

const char* guard_reason_name(GuardReason r) {
    switch (r) {
        case GuardReason::none: return "none";
        case GuardReason::x2_ceiling_below_threshold: return "x2-ceiling-below-threshold";
        case GuardReason::x1_ceiling_below_threshold: return "x1-ceiling-below-threshold";
        case GuardReason::bd_ceiling_below_threshold: return "bd-ceiling-below-threshold";
        case GuardReason::bd_joint_region_empty: return "bd-joint-region-empty";
    }
    return "unknown";
}

namespace detail {

double op_far_raw(const SystemParams& p) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::far_user);
    const double den = c.xi * p.a2() - c.c_coeff * p.th_x2;
    if (den <= 0.0) return 1.0;
    const double a1c = p.th_x2 / den;
    const double d1 = p.lam_h_df() / (p.lam_h_b() * p.lam_g_df() * a1c * (c.a_coeff + c.q_coeff));
    return 1.0 + scaled_ei_product(d1) * std::exp(-c.d_coeff * a1c / (p.lam_h_df() * p.gamma));
}

double op_near_raw(const SystemParams& p) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::near_user);
    const NearGuard g = near_guard(p, c, p.th_x1, p.th_x2);
    if (!g.feas.ok) return 1.0;
    const double d2 =
        p.lam_h_dn() / (p.lam_h_b() * p.lam_g_dn() * g.varsigma * (c.a_coeff + c.q_coeff));
    return 1.0 + scaled_ei_product(d2) *
                     std::exp(-g.varsigma * c.d_coeff / (p.lam_h_dn() * p.gamma));
}

double op_bd_ideal_raw(const SystemParams& p, int n_nodes) {
    p.validate();
    const double vs = varsigma_ideal(p);
    if (std::isnan(vs)) return 1.0;
    const double b2 = p.beta * p.beta;
    const double ab = p.lam_h_b() * p.lam_g_dn();
    const double d3 = p.lam_h_dn() / (ab * vs * b2);
    const double pref = std::exp(-vs / (p.lam_h_dn() * p.gamma));
    const ChebyshevNodes nodes = chebyshev_nodes(n_nodes);
    const double head =
        product_head_integral(p.th_c / (b2 * p.gamma), vs * b2 / p.lam_h_dn(), ab, nodes);
    return 1.0 + scaled_ei_product(d3) * pref + pref * head;
}

double op_bd_nonideal_raw(const SystemParams& p, int n_nodes) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::near_user);
    const NearGuard g = near_guard(p, c, p.th_x1, p.th_x2);
    if (!g.feas.ok) return 1.0;
    const double qa = c.q_coeff - c.a_coeff * p.th_c;
    if (qa <= 0.0) return 1.0;
    const double vs = g.varsigma;
    const double S = c.a_coeff + c.q_coeff;
    const double T = c.b_coeff + c.m_coeff;
    const double W = p.th_c / qa;
    const double l1 = p.lam_h_dn();
    const double ab = p.lam_h_b() * p.lam_g_dn();
    const double y0 = W * c.d_coeff / p.gamma;

    // Crossing point of the x1/x2 and backscatter constraint boundaries;
    // below it no (rho, y) pair satisfies all three decode conditions.
    double ystar = y0;
    if (T > 0.0) {
        const double room = 1.0 - vs * S * W * T;
        if (room <= 0.0) return 1.0;
        ystar = W * c.d_coeff * (1.0 + vs * T) / (p.gamma * room);
    }

    const double d5 = l1 / (ab * vs * S);
    const ChebyshevNodes nodes = chebyshev_nodes(n_nodes);
    const double lap5 = -scaled_ei_product(d5);
    const double head = product_head_integral(ystar, vs * S / l1, ab, nodes);
    const double succ1 = std::exp(-vs * c.d_coeff / (l1 * p.gamma)) * (lap5 - head);
    const double succ2 =
        T > 0.0 ? product_tail_integral(ystar, 1.0 / (W * T * l1), y0, ab, nodes) : 0.0;
    return 1.0 - succ1 + succ2;
}

double ip_far_raw(const SystemParams& p) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::eavesdropper);
    const double den = c.xi * p.a2() - c.c_coeff * p.th_e_far;
    if (den <= 0.0) return 0.0;
    const double a2c = p.th_e_far / den;
    const double d9 = p.lam_h_e() / (p.lam_h_b() * p.lam_g_e() * a2c * (c.a_coeff + c.q_coeff));
    return -scaled_ei_product(d9) * std::exp(-c.d_coeff * a2c / (p.lam_h_e() * p.gamma));
}

double ip_near_raw(const SystemParams& p, IpNearNumerator num) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::eavesdropper);
    double gain = c.xi;
    if (num == IpNearNumerator::mu_product)
        gain = std::norm(rx_coefficients(p.iqi.rx_e).mu) * std::norm(tx_coefficients(p.iqi.tx_s).mu);
    const double den = gain * p.a1 - (p.a2() * c.b_coeff + c.m_coeff) * p.th_e_near;
    if (den <= 0.0) return 0.0;
    const double r = p.th_e_near / den;
    const double d10 = p.lam_h_e() / (p.lam_h_b() * p.lam_g_e() * r * (c.a_coeff + c.q_coeff));
    return -scaled_ei_product(d10) * std::exp(-c.d_coeff * r / (p.lam_h_e() * p.gamma));
}

double ip_bd_raw(const SystemParams& p, BdBranch branch, int n_nodes) {
    p.validate();
    const double ab = p.lam_h_b() * p.lam_g_e();
    const ChebyshevNodes nodes = chebyshev_nodes(n_nodes);
    if (branch == BdBranch::ideal) {
        const double cup = p.th_e_bd / (p.beta * p.beta * p.gamma);
        return 1.0 - product_head_integral(cup, 0.0, ab, nodes);
    }
    const ReceiverComposites c = p.composites(Receiver::eavesdropper);
    const double qa = c.q_coeff - c.a_coeff * p.th_e_bd;
    if (qa <= 0.0) return 0.0;
    const double W = p.th_e_bd / qa;
    const double T = c.b_coeff + c.m_coeff;
    const double y0 = W * c.d_coeff / p.gamma;
    const double head = product_head_integral(y0, 0.0, ab, nodes);
    const double cross =
        T > 0.0 ? product_tail_integral(y0, 1.0 / (W * T * p.lam_h_e()), y0, ab, nodes) : 0.0;
    return 1.0 - head - cross;
}

} // namespace detail

double op_far(const SystemParams& p) { return clamp01(detail::op_far_raw(p)); }

double op_far_asymptotic(const SystemParams& p) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::far_user);
    const double den = c.xi * p.a2() - c.c_coeff * p.th_x2;
    if (den <= 0.0) return 1.0;
    const double a1c = p.th_x2 / den;
    const double d1 = p.lam_h_df() / (p.lam_h_b() * p.lam_g_df() * a1c * (c.a_coeff + c.q_coeff));
    return clamp01(1.0 + scaled_ei_product(d1));
}

double op_near(const SystemParams& p) { return clamp01(detail::op_near_raw(p)); }

double op_near_asymptotic(const SystemParams& p) {
    p.validate();
    const ReceiverComposites c = p.composites(Receiver::near_user);
    const NearGuard g = near_guard(p, c, p.th_x1, p.th_x2);
    if (!g.feas.ok) return 1.0;
    const double d2 =
        p.lam_h_dn() / (p.lam_h_b() * p.lam_g_dn() * g.varsigma * (c.a_coeff + c.q_coeff));
    return clamp01(1.0 + scaled_ei_product(d2));
}

double op_bd_ideal(const SystemParams& p, int n_nodes) {
    return clamp01(detail::op_bd_ideal_raw(p, n_nodes));
}

double op_bd_nonideal(const SystemParams& p, int n_nodes) {
    return clamp01(detail::op_bd_nonideal_raw(p, n_nodes));
}

double op_bd_asymptotic(const SystemParams& p, BdBranch branch) {
    p.validate();
    if (branch == BdBranch::ideal) {
        const double vs = varsigma_ideal(p);
        if (std::isnan(vs)) return 1.0;
        const double d3 =
            p.lam_h_dn() / (p.lam_h_b() * p.lam_g_dn() * vs * p.beta * p.beta);
        return clamp01(1.0 + scaled_ei_product(d3));
    }
    const ReceiverComposites c = p.composites(Receiver::near_user);
    const NearGuard g = near_guard(p, c, p.th_x1, p.th_x2);
    if (!g.feas.ok) return 1.0;
    const double qa = c.q_coeff - c.a_coeff * p.th_c;
    if (qa <= 0.0) return 1.0;
    const double S = c.a_coeff + c.q_coeff;
    const double T = c.b_coeff + c.m_coeff;
    const double W = p.th_c / qa;
    const double ab = p.lam_h_b() * p.lam_g_dn();
    const double d5 = p.lam_h_dn() / (ab * g.varsigma * S);
    if (T <= 0.0) return clamp01(1.0 + scaled_ei_product(d5));
    if (1.0 - g.varsigma * S * W * T <= 0.0) return 1.0;
    const double d4 = p.lam_h_dn() * T * W / ab;
    return clamp01(1.0 + scaled_ei_product(d5) - scaled_ei_product(d4));
}

double ip_far(const SystemParams& p) { return clamp01(detail::ip_far_raw(p)); }

double ip_near(const SystemParams& p, IpNearNumerator num) {
    return clamp01(detail::ip_near_raw(p, num));
}

double ip_bd(const SystemParams& p, BdBranch branch, int n_nodes) {
    return clamp01(detail::ip_bd_raw(p, branch, n_nodes));
}

double diversity_order(const std::function<double(double)>& op_of_gamma,
                       double gamma_lo_db, double gamma_hi_db) {
    if (!(gamma_hi_db > gamma_lo_db))
        throw std::invalid_argument("diversity_order: need gamma_hi_db > gamma_lo_db");
    const double lo = op_of_gamma(std::pow(10.0, gamma_lo_db / 10.0));
    const double hi = op_of_gamma(std::pow(10.0, gamma_hi_db / 10.0));
    if (lo == hi) return 0.0;
    if (!(lo > 0.0) || !(hi > 0.0))
        throw std::invalid_argument("diversity_order: outage probabilities must be positive");
    return (std::log10(lo) - std::log10(hi)) / ((gamma_hi_db - gamma_lo_db) / 10.0);
}

AnalyticIntermediates analytic_intermediates(const SystemParams& p) {
    p.validate();
    AnalyticIntermediates out;
    out.delta.fill(kNaN);
    const ReceiverComposites cdf = p.composites(Receiver::far_user);
    const ReceiverComposites cdn = p.composites(Receiver::near_user);
    const ReceiverComposites ce = p.composites(Receiver::eavesdropper);
    const double ab_dn = p.lam_h_b() * p.lam_g_dn();
    const double ab_e = p.lam_h_b() * p.lam_g_e();

    // far user
    {
        const double den = cdf.xi * p.a2() - cdf.c_coeff * p.th_x2;
        if (den > 0.0) {
            out.a1_coef = p.th_x2 / den;
            out.delta[1] = p.lam_h_df() /
                           (p.lam_h_b() * p.lam_g_df() * out.a1_coef * (cdf.a_coeff + cdf.q_coeff));
        } else {
            out.a1_coef = kNaN;
            out.feas_op_far = {false, GuardReason::x2_ceiling_below_threshold};
        }
    }
    // near user
    {
        const NearGuard g = near_guard(p, cdn, p.th_x1, p.th_x2);
        out.feas_op_near = g.feas;
        out.varsigma = g.varsigma;
        if (g.feas.ok)
            out.delta[2] = p.lam_h_dn() / (ab_dn * g.varsigma * (cdn.a_coeff + cdn.q_coeff));
    }
    // backscatter device, ideal and non-ideal
    out.varsigma_id = varsigma_ideal(p);
    if (!std::isnan(out.varsigma_id))
        out.delta[3] = p.lam_h_dn() / (ab_dn * out.varsigma_id * p.beta * p.beta);
    {
        const NearGuard g = near_guard(p, cdn, p.th_x1, p.th_x2);
        const double qa = cdn.q_coeff - cdn.a_coeff * p.th_c;
        if (!g.feas.ok) {
            out.feas_op_bd = g.feas;
        } else if (qa <= 0.0) {
            out.feas_op_bd = {false, GuardReason::bd_ceiling_below_threshold};
        } else {
            const double S = cdn.a_coeff + cdn.q_coeff;
            const double T = cdn.b_coeff + cdn.m_coeff;
            const double W = p.th_c / qa;
            if (T > 0.0 && 1.0 - g.varsigma * S * W * T <= 0.0)
                out.feas_op_bd = {false, GuardReason::bd_joint_region_empty};
            out.delta[4] = p.lam_h_dn() * T * W / ab_dn;
            out.delta[5] = p.lam_h_dn() / (ab_dn * g.varsigma * S);
            out.delta[6] = cdn.d_coeff * W / p.gamma; // quadrature upper limit scalar
        }
    }
    // eavesdropper
    {
        const double den = ce.xi * p.a2() - ce.c_coeff * p.th_e_far;
        if (den > 0.0) {
            out.a2_coef = p.th_e_far / den;
            out.delta[9] = p.lam_h_e() / (ab_e * out.a2_coef * (ce.a_coeff + ce.q_coeff));
        } else {
            out.a2_coef = kNaN;
            out.feas_ip_far = {false, GuardReason::x2_ceiling_below_threshold};
        }
        const double den1 = ce.xi * p.a1 - (p.a2() * ce.b_coeff + ce.m_coeff) * p.th_e_near;
        if (den1 > 0.0) {
            out.delta[10] =
                p.lam_h_e() / (ab_e * (p.th_e_near / den1) * (ce.a_coeff + ce.q_coeff));
        } else {
            out.feas_ip_near = {false, GuardReason::x1_ceiling_below_threshold};
        }
        const double qa = ce.q_coeff - ce.a_coeff * p.th_e_bd;
        if (qa > 0.0) {
            const double W = p.th_e_bd / qa;
            out.delta[11] = ce.d_coeff * W / (p.gamma * ab_e);
            out.delta[12] = p.lam_h_e() * (ce.b_coeff + ce.m_coeff) * W / ab_e;
        } else {
            out.feas_ip_bd = {false, GuardReason::bd_ceiling_below_threshold};
        }
    }
    return out;
}

} // namespace ambcsec
