// SPDX-License-Identifier: Apache-2.0

#include "ambcsec/monte_carlo.hpp"
#include "ambcsec/sinr.hpp"

#include <cmath>
#include <stdexcept>

namespace ambcsec {

namespace {

struct Composites3 {
    ReceiverComposites dn, df, e;
};

// One block of trials with its own substream.  The event definitions:
// outage of the far user is failure on x2; outage of the near user is
// failure on x2 or x1; outage of the backscatter signal adds the c(t)
// stage (all at the near user).  Intercepts are single-threshold events
// at the eavesdropper, one per SIC stage.
TrialCounts count_block(const SystemParams& p, const Composites3& c, std::uint64_t block_seed,
                        long long block_len) {
    TrialCounts out;
    out.trials = block_len;
    FadingRng rng(block_seed);
    for (long long i = 0; i < block_len; ++i) {
        const FadingSample s = sample_fading(p, rng);

        const bool far_x2 = sinr_far_x2(s, c.df, p) > p.th_x2;
        const bool dn_x2 = sinr_x2(Receiver::near_user, s, c.dn, p) > p.th_x2;
        const bool dn_x1 = sinr_x1(Receiver::near_user, s, c.dn, p) > p.th_x1;
        const bool dn_c = sinr_c(Receiver::near_user, s, c.dn, p) > p.th_c;

        out.events[0] += !far_x2;
        out.events[1] += !(dn_x2 && dn_x1);
        out.events[2] += !(dn_x2 && dn_x1 && dn_c);
        out.events[3] += sinr_x2(Receiver::eavesdropper, s, c.e, p) > p.th_e_far;
        out.events[4] += sinr_x1(Receiver::eavesdropper, s, c.e, p) > p.th_e_near;
        out.events[5] += sinr_c(Receiver::eavesdropper, s, c.e, p) > p.th_e_bd;
    }
    return out;
}

Composites3 all_composites(const SystemParams& p) {
    return {p.composites(Receiver::near_user), p.composites(Receiver::far_user),
            p.composites(Receiver::eavesdropper)};
}

void check_trials(long long trials) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
}

} // namespace

const char* metric_name(MetricId m) {
    switch (m) {
        case MetricId::op_far: return "op_far";
        case MetricId::op_near: return "op_near";
        case MetricId::op_bd: return "op_bd";
        case MetricId::ip_far: return "ip_far";
        case MetricId::ip_near: return "ip_near";
        case MetricId::ip_bd: return "ip_bd";
    }
    return "unknown";
}

bool metric_is_outage(MetricId m) {
    return m == MetricId::op_far || m == MetricId::op_near || m == MetricId::op_bd;
}

TrialCounts run_trials_serial(const SystemParams& p, long long trials, std::uint64_t seed) {
    check_trials(trials);
    p.validate();
    const Composites3 c = all_composites(p);
    const long long nblocks = (trials + kTrialBlock - 1) / kTrialBlock;
    TrialCounts total;
    for (long long b = 0; b < nblocks; ++b) {
        const long long len = std::min(kTrialBlock, trials - b * kTrialBlock);
        const TrialCounts bc = count_block(p, c, substream_seed(seed, (std::uint64_t)b), len);
        for (int m = 0; m < 6; ++m) total.events[m] += bc.events[m];
        total.trials += bc.trials;
    }
    return total;
}

TrialCounts run_trials_parallel(const SystemParams& p, long long trials, std::uint64_t seed) {
    check_trials(trials);
    p.validate();
    const Composites3 c = all_composites(p);
    const long long nblocks = (trials + kTrialBlock - 1) / kTrialBlock;
    long long e0 = 0, e1 = 0, e2 = 0, e3 = 0, e4 = 0, e5 = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : e0, e1, e2, e3, e4, e5)
    for (long long b = 0; b < nblocks; ++b) {
        const long long len = std::min(kTrialBlock, trials - b * kTrialBlock);
        const TrialCounts bc = count_block(p, c, substream_seed(seed, (std::uint64_t)b), len);
        e0 += bc.events[0];
        e1 += bc.events[1];
        e2 += bc.events[2];
        e3 += bc.events[3];
        e4 += bc.events[4];
        e5 += bc.events[5];
    }
    TrialCounts total;
    total.events = {e0, e1, e2, e3, e4, e5};
    total.trials = trials;
    return total;
}

MetricEstimate make_estimate(const TrialCounts& counts, MetricId m, std::uint64_t seed) {
    MetricEstimate est;
    est.metric_id = m;
    est.trials = counts.trials;
    est.seed = seed;
    const long long k = counts.events[static_cast<int>(m)];
    const double n = static_cast<double>(counts.trials);
    est.value = static_cast<double>(k) / n;
    if (k == 0 || k == counts.trials)
        est.std_error = 3.0 / n; // one-sided 95% bound, rule of three
    else
        est.std_error = std::sqrt(est.value * (1.0 - est.value) / n);
    return est;
}

std::array<MetricEstimate, 6> estimate_all(const SystemParams& p, long long trials,
                                           std::uint64_t seed) {
    const TrialCounts counts = run_trials_parallel(p, trials, seed);
    std::array<MetricEstimate, 6> out;
    for (int m = 0; m < 6; ++m) out[m] = make_estimate(counts, static_cast<MetricId>(m), seed);
    return out;
}

MetricEstimate estimate_op_far(const SystemParams& p, long long trials, std::uint64_t seed) {
    return make_estimate(run_trials_parallel(p, trials, seed), MetricId::op_far, seed);
}

MetricEstimate estimate_op_near(const SystemParams& p, long long trials, std::uint64_t seed) {
    return make_estimate(run_trials_parallel(p, trials, seed), MetricId::op_near, seed);
}

MetricEstimate estimate_op_bd(const SystemParams& p, long long trials, std::uint64_t seed) {
    return make_estimate(run_trials_parallel(p, trials, seed), MetricId::op_bd, seed);
}

MetricEstimate estimate_ip(IpUser user, const SystemParams& p, long long trials,
                           std::uint64_t seed) {
    const MetricId m = user == IpUser::far    ? MetricId::ip_far
                       : user == IpUser::near ? MetricId::ip_near
                                              : MetricId::ip_bd;
    return make_estimate(run_trials_parallel(p, trials, seed), m, seed);
}

const char* sweep_axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::gamma_db: return "gamma_db";
        case SweepAxis::beta: return "beta";
        case SweepAxis::a1: return "a1";
    }
    return "unknown";
}

SystemParams with_axis_value(const SystemParams& p, SweepAxis axis, double value) {
    SystemParams q = p;
    switch (axis) {
        case SweepAxis::gamma_db: q.gamma = std::pow(10.0, value / 10.0); break;
        case SweepAxis::beta: q.beta = value; break;
        case SweepAxis::a1: q.a1 = value; break;
    }
    return q;
}

std::vector<SweepPoint> sweep(const std::vector<MetricId>& metrics, const SystemParams& p,
                              SweepAxis axis, const std::vector<double>& grid, long long trials,
                              std::uint64_t seed) {
    if (metrics.empty()) throw std::invalid_argument("sweep: metric set must be nonempty");
    if (grid.empty()) throw std::invalid_argument("sweep: grid must be nonempty");
    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (double v : grid) {
        const SystemParams q = with_axis_value(p, axis, v);
        const TrialCounts counts = run_trials_parallel(q, trials, seed);
        SweepPoint pt;
        pt.axis_value = v;
        for (MetricId m : metrics) pt.estimates[static_cast<int>(m)] = make_estimate(counts, m, seed);
        out.push_back(pt);
    }
    return out;
}

} // namespace ambcsec
