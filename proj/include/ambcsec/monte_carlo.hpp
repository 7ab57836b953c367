// SPDX-License-Identifier: Apache-2.0
//
// Ground-truth estimator: simulates fading realizations, applies the
// outage/intercept event definitions on the instantaneous SINRs, and
// returns estimates with binomial standard errors.
//
// Trials are split into fixed-size blocks; block b draws from an
// mt19937_64 seeded with substream_seed(seed, b).  Results are exact
// integer counts summed over blocks, so they are bit-identical for any
// worker count and any OpenMP schedule.  run_trials_serial is the plain
// reference implementation the parallel kernel is tested against.

#pragma once

#include "ambcsec/channel.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ambcsec {

enum class MetricId { op_far, op_near, op_bd, ip_far, ip_near, ip_bd };

inline constexpr std::array<MetricId, 6> kAllMetrics{
    MetricId::op_far, MetricId::op_near, MetricId::op_bd,
    MetricId::ip_far, MetricId::ip_near, MetricId::ip_bd,
};

const char* metric_name(MetricId m);
bool metric_is_outage(MetricId m);

/// Per-metric event counts out of a number of trials.
struct TrialCounts {
    std::array<long long, 6> events{}; // indexed by MetricId
    long long trials = 0;
};

struct MetricEstimate {
    double value = 0.0;
    double std_error = 0.0; // binomial SE; rule-of-three bound 3/n at 0 or n events
    long long trials = 0;
    std::uint64_t seed = 0;
    MetricId metric_id = MetricId::op_far;
};

/// Number of trials per RNG block (one substream each).
inline constexpr long long kTrialBlock = 8192;

TrialCounts run_trials_serial(const SystemParams& p, long long trials, std::uint64_t seed);
TrialCounts run_trials_parallel(const SystemParams& p, long long trials, std::uint64_t seed);

MetricEstimate make_estimate(const TrialCounts& counts, MetricId m, std::uint64_t seed);

/// All six metrics from one fading stream (one pass over the trials).
std::array<MetricEstimate, 6> estimate_all(const SystemParams& p, long long trials,
                                           std::uint64_t seed);

MetricEstimate estimate_op_far(const SystemParams& p, long long trials, std::uint64_t seed);
MetricEstimate estimate_op_near(const SystemParams& p, long long trials, std::uint64_t seed);
MetricEstimate estimate_op_bd(const SystemParams& p, long long trials, std::uint64_t seed);

enum class IpUser { far, near, bd };
MetricEstimate estimate_ip(IpUser user, const SystemParams& p, long long trials,
                           std::uint64_t seed);

enum class SweepAxis { gamma_db, beta, a1 };
const char* sweep_axis_name(SweepAxis a);

/// Applies one grid value of the axis to a copy of the parameters.
SystemParams with_axis_value(const SystemParams& p, SweepAxis axis, double value);

struct SweepPoint {
    double axis_value = 0.0;
    std::array<MetricEstimate, 6> estimates{}; // entries for unrequested metrics are zeroed
};

/// One estimate per (metric, grid point).  Common random numbers: every
/// grid point replays the same substream family (same seed), which makes
/// pointwise-monotone trends exactly monotone in the estimates.
std::vector<SweepPoint> sweep(const std::vector<MetricId>& metrics, const SystemParams& p,
                              SweepAxis axis, const std::vector<double>& grid, long long trials,
                              std::uint64_t seed);

} // namespace ambcsec
