// SPDX-License-Identifier: Apache-2.0
//
// Closed-form outage and intercept probabilities, their high-SNR
// asymptotes, and the diversity-order estimator.
//
// The recurring building blocks are the Laplace transform of the
// product-exponential density, int_0^inf e^{-p*y} f(y) dy =
// Delta*e^Delta*E1(Delta) with Delta = 1/(p*la*lb), and Gauss-Chebyshev
// quadrature for the finite pieces.  Every Delta*e^Delta*Ei(-Delta) motif
// routes through scaled_ei_product; e^Delta is never formed.

#pragma once

#include "ambcsec/channel.hpp"

#include <functional>

namespace ambcsec {

/// Why a metric collapsed to its certain value (outage probability 1,
/// intercept probability 0).  Each cause is an SINR ceiling sitting at or
/// below the decode/eavesdrop threshold, so no fading realization can
/// cross it.
enum class GuardReason {
    none,
    x2_ceiling_below_threshold,
    x1_ceiling_below_threshold,
    bd_ceiling_below_threshold,
    bd_joint_region_empty,
};

struct Feasibility {
    bool ok = true;
    GuardReason reason = GuardReason::none;
};

const char* guard_reason_name(GuardReason r);

/// Which closed-form branch of the backscatter-device metrics to use.
enum class BdBranch { ideal, nonideal };

/// Numerator variant for the near-user intercept probability: the xi_E
/// form is consistent with the x1 SINR; mu_product drops the small
/// |nu_rE|^2|nu_tS|^2 term.  Monte Carlo agrees with xi.
enum class IpNearNumerator { xi, mu_product };

/// Scalars shared by the closed forms, for diagnostics and tests.
/// delta indices follow the order the expressions introduce them; the
/// node-dependent quadrature arguments (7, 8, 13) are not scalars and are
/// reported as NaN.  Infeasible metrics leave their deltas NaN.
struct AnalyticIntermediates {
    double a1_coef = 0;      // th_x2 / (xi_Df*a2 - C_Df*th_x2)
    double a2_coef = 0;      // th_e_far / (xi_E*a2 - C_E*th_e_far)
    double varsigma = 0;     // max of the near user's two threshold ratios
    double varsigma_id = 0;  // its ideal-front-end reduction
    std::array<double, 14> delta{}; // 1-based; [0] unused
    Feasibility feas_op_far, feas_op_near, feas_op_bd, feas_ip_far, feas_ip_near, feas_ip_bd;
};

AnalyticIntermediates analytic_intermediates(const SystemParams& p);

/// Outage probability of the far user (decode x2 only).
double op_far(const SystemParams& p);
/// Its SNR -> infinity limit (the error floor).
double op_far_asymptotic(const SystemParams& p);

/// Outage probability of the near user (decode x2 then x1).
double op_near(const SystemParams& p);
double op_near_asymptotic(const SystemParams& p);

/// Outage probability of the backscatter device's signal at the near
/// user (decode x2, x1, then c).  The ideal branch evaluates the
/// ideal-front-end reduction regardless of p's mismatch settings.
double op_bd_ideal(const SystemParams& p, int n_nodes = 200);
double op_bd_nonideal(const SystemParams& p, int n_nodes = 200);
double op_bd_asymptotic(const SystemParams& p, BdBranch branch);

/// Intercept probabilities at the eavesdropper, one SIC stage each.
double ip_far(const SystemParams& p);
double ip_near(const SystemParams& p, IpNearNumerator num = IpNearNumerator::xi);
double ip_bd(const SystemParams& p, BdBranch branch, int n_nodes = 200);

/// Numeric diversity order -dlog10(OP)/dlog10(gamma) between two SNR
/// points, from a sampler mapping linear SNR to an outage probability.
/// A constant curve returns exactly 0.
double diversity_order(const std::function<double(double)>& op_of_gamma,
                       double gamma_lo_db, double gamma_hi_db);

namespace detail {
/// Unclamped values (the public functions clamp to [0,1]).  A raw value
/// outside [-1e-9, 1+1e-9] would indicate a transcription bug; the tests
/// check this across the validation grid.
double op_far_raw(const SystemParams& p);
double op_near_raw(const SystemParams& p);
double op_bd_ideal_raw(const SystemParams& p, int n_nodes);
double op_bd_nonideal_raw(const SystemParams& p, int n_nodes);
double ip_far_raw(const SystemParams& p);
double ip_near_raw(const SystemParams& p, IpNearNumerator num);
double ip_bd_raw(const SystemParams& p, BdBranch branch, int n_nodes);
} // namespace detail

} // namespace ambcsec
