#include "nec/randomcode.hpp"

#include <algorithm>
#include <cmath>

#include "nec/analysis.hpp"

namespace nec {

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t draw64(std::uint64_t seed, std::uint64_t trial, std::uint64_t index,
                     std::uint64_t salt) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ (trial + 0x517cc1b727220a95ULL));
    h = mix64(h ^ (index + 0x2545f4914f6cdd1dULL));
    h = mix64(h ^ salt);
    return h;
}

} // namespace

Scalar uniform_scalar(const Field& f, std::uint64_t seed, std::uint64_t trial,
                      std::uint64_t index) {
    const std::uint64_t q = f.size();
    const std::uint64_t limit = (~std::uint64_t(0) / q) * q; // rejection threshold
    for (std::uint64_t salt = 0;; ++salt) {
        const std::uint64_t x = draw64(seed, trial, index, salt);
        if (x < limit) return x % q;
    }
}

Scalar uniform_nonzero_scalar(const Field& f, std::uint64_t seed, std::uint64_t trial,
                              std::uint64_t index) {
    const std::uint64_t q = f.size();
    const std::uint64_t span = q - 1;
    const std::uint64_t limit = (~std::uint64_t(0) / span) * span;
    for (std::uint64_t salt = 0;; ++salt) {
        const std::uint64_t x = draw64(seed, trial, index, salt ^ 0x5bd1e995ULL);
        if (x < limit) return 1 + x % span;
    }
}

Code random_code(const std::shared_ptr<const Network>& net, int w, const Field& f,
                 std::uint64_t seed, std::uint64_t trial) {
    LocalKernels lk(*net, w);
    std::uint64_t index = 0;
    for (int pos = 0; pos < net->channel_count(); ++pos)
        for (int in : lk.inputs_of(pos)) lk.set(in, pos, uniform_scalar(f, seed, trial, index++));
    return make_code(net, w, f, std::move(lk));
}

double mds_failure_bound_sink(std::uint64_t family_size, int internal_nodes, std::uint64_t q) {
    const double ratio = static_cast<double>(family_size) / static_cast<double>(q - 1);
    return 1.0 - std::pow(1.0 - ratio, internal_nodes + 1);
}

double mds_failure_bound_network(std::uint64_t family_sum, int internal_nodes, std::uint64_t q) {
    return mds_failure_bound_sink(family_sum, internal_nodes, q);
}

double beta_failure_bound_sink(std::uint64_t family_size_beta, int delta, int beta,
                               int internal_nodes, std::uint64_t q) {
    const int gap = delta - beta;
    const double numer = static_cast<double>(family_size_beta) *
                         static_cast<double>(binomial(static_cast<std::uint64_t>(gap + internal_nodes + 1),
                                                      static_cast<std::uint64_t>(internal_nodes)));
    return numer / std::pow(static_cast<double>(q - 1), gap + 1);
}

double dmin_tail_bound(std::uint64_t family_size_delta_minus_d, int d, int internal_nodes,
                       std::uint64_t q) {
    const double numer = static_cast<double>(family_size_delta_minus_d) *
                         static_cast<double>(binomial(static_cast<std::uint64_t>(d + internal_nodes + 1),
                                                      static_cast<std::uint64_t>(internal_nodes)));
    return numer / std::pow(static_cast<double>(q - 1), d + 1);
}

FailureReport estimate_failures(const std::shared_ptr<const Network>& net, int w, const Field& f,
                                const std::map<std::string, int>& betas, std::uint64_t trials,
                                std::uint64_t seed, std::uint64_t ceiling) {
    if (trials < 1) fail(errc::bad_params, "at least one trial required");
    FailureReport report;
    report.trials = trials;
    report.seed = seed;
    report.w = w;
    report.field_size = f.size();
    report.internal_nodes = net->internal_node_count();

    std::uint64_t family_sum_delta = 0;
    double network_beta_bound = 0.0; // the network bound is the plain sum of sink bounds
    for (const std::string& t : net->sinks()) {
        auto it = betas.find(t);
        if (it == betas.end()) fail(errc::bad_params, "no beta given for sink '" + t + "'");
        SinkFailureStats stats;
        stats.sink = t;
        stats.min_cut = net->min_cut_capacity(net->source(), t);
        stats.delta = stats.min_cut - w;
        stats.beta = it->second;
        if (stats.beta < 0 || stats.beta > stats.delta)
            fail(errc::bad_params, "beta for '" + t + "' outside [0, delta]");
        stats.family_size_delta = enumerate_R(*net, t, stats.delta, ceiling).members.size();
        stats.family_size_beta = enumerate_R(*net, t, stats.beta, ceiling).members.size();
        stats.dmin_counts.assign(static_cast<std::size_t>(stats.delta) + 2, 0);
        stats.dmin_counts_regular.assign(static_cast<std::size_t>(stats.delta) + 2, 0);
        stats.bound_mds = mds_failure_bound_sink(stats.family_size_delta, report.internal_nodes,
                                                 f.size());
        stats.bound_beta = beta_failure_bound_sink(stats.family_size_beta, stats.delta, stats.beta,
                                                   report.internal_nodes, f.size());
        for (int d = 0; d <= stats.delta; ++d) {
            const std::uint64_t family =
                enumerate_R(*net, t, stats.delta - d, ceiling).members.size();
            stats.bound_dmin_tail.push_back(
                dmin_tail_bound(family, d, report.internal_nodes, f.size()));
        }
        family_sum_delta += stats.family_size_delta;
        network_beta_bound += stats.bound_beta;
        report.sinks.push_back(std::move(stats));
    }
    report.bound_network_mds =
        mds_failure_bound_network(family_sum_delta, report.internal_nodes, f.size());
    report.bound_network_beta = network_beta_bound;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const Code code = random_code(net, w, f, seed, trial);
        bool any_mds_failure = false;
        bool any_beta_failure = false;
        for (SinkFailureStats& stats : report.sinks) {
            const SinkReport sr = sink_report(code, stats.sink);
            int dmin_value = 0; // convention: non-regular counts as D_min = 0
            if (!sr.regular) {
                ++stats.non_regular;
                ++stats.mds_failures;
                ++stats.beta_failures;
                any_mds_failure = any_beta_failure = true;
            } else {
                dmin_value = *sr.d_min;
                ++stats.dmin_counts_regular[static_cast<std::size_t>(dmin_value)];
                if (dmin_value < stats.delta + 1) {
                    ++stats.mds_failures;
                    any_mds_failure = true;
                }
                if (dmin_value < stats.beta + 1) {
                    ++stats.beta_failures;
                    any_beta_failure = true;
                }
            }
            ++stats.dmin_counts[static_cast<std::size_t>(dmin_value)];
        }
        if (any_mds_failure) ++report.network_mds_failures;
        if (any_beta_failure) ++report.network_beta_failures;
    }
    return report;
}

FieldSizeRecommendation field_size_recommendation(const Network& net, int w, int d,
                                                  std::uint64_t ceiling) {
    FieldSizeRecommendation rec;
    rec.degradation = d;
    const int internal = net.internal_node_count();
    for (const std::string& t : net.sinks()) {
        const int delta = net.min_cut_capacity(net.source(), t) - w;
        if (d < 0 || d > delta)
            fail(errc::bad_params, "degradation exceeds redundancy at sink '" + t + "'");
        rec.family_sum += enumerate_R(net, t, delta - d, ceiling).members.size();
    }
    rec.branch_count = static_cast<double>(rec.family_sum);
    const double weighted =
        static_cast<double>(rec.family_sum) *
        static_cast<double>(binomial(static_cast<std::uint64_t>(d + internal + 1),
                                     static_cast<std::uint64_t>(internal)));
    rec.branch_root = 2.0 + std::pow(weighted, 1.0 / (d + 1));
    rec.minimum = std::min(rec.branch_count, rec.branch_root);
    rec.recommended_prime = next_prime(static_cast<std::uint64_t>(std::ceil(rec.minimum)));
    return rec;
}

SpanTrialReport lemma4_check(int n, int k0, int k1, std::uint64_t q, std::uint64_t trials,
                             std::uint64_t seed) {
    if (n < 0 || k0 < 0 || k1 < 0 || k0 > n || k1 > n)
        fail(errc::bad_params, "subspace dimensions out of range");
    if (k0 + k1 < n) fail(errc::bad_params, "subspaces cannot span the whole space");
    if (trials < 1) fail(errc::bad_params, "at least one trial required");
    const Field f(q);

    SpanTrialReport report;
    report.n = n;
    report.k0 = k0;
    report.k1 = k1;
    report.q = q;
    report.trials = trials;
    report.seed = seed;

    const int m = n - k0;
    report.exact = 1.0;
    for (int i = 1; i <= m; ++i)
        report.exact *= 1.0 - 1.0 / std::pow(static_cast<double>(q), i);

    // L0 spans the first k0 coordinates, L1 the last k1; the overlap has
    // dimension k0 + k1 - n as in the canonical construction.
    std::vector<Vec> base;
    for (int i = 0; i < k0; ++i) {
        Vec u(static_cast<std::size_t>(n), 0);
        u[static_cast<std::size_t>(i)] = 1;
        base.push_back(std::move(u));
    }

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<Vec> rows = base;
        std::uint64_t index = 0;
        for (int v = 0; v < m; ++v) {
            Vec draw(static_cast<std::size_t>(n), 0);
            for (int c = n - k1; c < n; ++c)
                draw[static_cast<std::size_t>(c)] = uniform_scalar(f, seed, trial, index++);
            rows.push_back(std::move(draw));
        }
        if (rank_of(f, rows) == n) ++report.successes;
    }
    report.empirical = static_cast<double>(report.successes) / static_cast<double>(trials);
    return report;
}

} // namespace nec
