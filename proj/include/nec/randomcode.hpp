#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nec/construct.hpp"
#include "nec/patterns.hpp"

namespace nec {

/// Counter-based uniform residues: every draw is a pure function of
/// (seed, trial, index), so trials can run in any order, or in parallel,
/// and still reproduce bit-identically.
std::uint64_t mix64(std::uint64_t x);
Scalar uniform_scalar(const Field& f, std::uint64_t seed, std::uint64_t trial, std::uint64_t index);
Scalar uniform_nonzero_scalar(const Field& f, std::uint64_t seed, std::uint64_t trial,
                              std::uint64_t index);

/// Code with every local coefficient drawn i.i.d. uniform over the field.
Code random_code(const std::shared_ptr<const Network>& net, int w, const Field& f,
                 std::uint64_t seed, std::uint64_t trial = 0);

// Closed-form upper bounds; raw values, not clamped to [0, 1].
double mds_failure_bound_sink(std::uint64_t family_size, int internal_nodes, std::uint64_t q);
double mds_failure_bound_network(std::uint64_t family_sum, int internal_nodes, std::uint64_t q);
double beta_failure_bound_sink(std::uint64_t family_size_beta, int delta, int beta,
                               int internal_nodes, std::uint64_t q);
double dmin_tail_bound(std::uint64_t family_size_delta_minus_d, int d, int internal_nodes,
                       std::uint64_t q);

struct SinkFailureStats {
    std::string sink;
    int min_cut = 0;
    int delta = 0;
    int beta = 0;
    std::uint64_t family_size_delta = 0; // |R_t(delta)|
    std::uint64_t family_size_beta = 0;  // |R_t(beta)|

    std::uint64_t non_regular = 0;  // trials with deficient message rank at t
    std::uint64_t mds_failures = 0; // non-regular or d_min < delta+1
    std::uint64_t beta_failures = 0;

    // histogram of D_min over {0..delta+1}; non-regular trials land in 0
    std::vector<std::uint64_t> dmin_counts;
    // same conditioned on full message rank at t
    std::vector<std::uint64_t> dmin_counts_regular;

    double bound_mds = 0.0;                  // failure bound for this sink
    double bound_beta = 0.0;                 // general-code failure bound
    std::vector<double> bound_dmin_tail;     // per d = 0..delta
};

struct FailureReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int w = 0;
    std::uint64_t field_size = 0;
    int internal_nodes = 0;

    std::vector<SinkFailureStats> sinks;

    std::uint64_t network_mds_failures = 0;  // some sink fails the MDS event
    std::uint64_t network_beta_failures = 0;
    double bound_network_mds = 0.0;
    double bound_network_beta = 0.0;
};

FailureReport estimate_failures(const std::shared_ptr<const Network>& net, int w, const Field& f,
                                const std::map<std::string, int>& betas, std::uint64_t trials,
                                std::uint64_t seed,
                                std::uint64_t ceiling = kDefaultEnumerationCeiling);

struct FieldSizeRecommendation {
    int degradation = 0;
    std::uint64_t family_sum = 0;   // sum over sinks of |R_t(delta_t - d)|
    double branch_count = 0.0;      // the family-sum branch
    double branch_root = 0.0;       // 2 + (sum * C(d+|J|+1, |J|))^(1/(d+1))
    double minimum = 0.0;
    std::uint64_t recommended_prime = 0;
};

/// Field size sufficient for degradation at most d at all sinks: minimum of
/// the counting branch and the root branch, then the next prime.
FieldSizeRecommendation field_size_recommendation(const Network& net, int w, int d,
                                                  std::uint64_t ceiling = kDefaultEnumerationCeiling);

struct SpanTrialReport {
    int n = 0, k0 = 0, k1 = 0;
    std::uint64_t q = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
    double empirical = 0.0;
    double exact = 0.0; // product over i=1..n-k0 of (1 - q^-i)
};

/// Draws n-k0 uniform vectors from a k1-dimensional coordinate subspace and
/// measures how often they complete a fixed k0-dimensional subspace to full
/// dimension, against the exact product formula.
SpanTrialReport lemma4_check(int n, int k0, int k1, std::uint64_t q, std::uint64_t trials,
                             std::uint64_t seed);

} // namespace nec
