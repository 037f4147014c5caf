#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nec/network.hpp"

namespace nec {

/// C(a, b) with the convention C(a, b) = 0 for a < b. Saturates at 2^63-1
/// instead of overflowing.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

constexpr std::uint64_t kDefaultEnumerationCeiling = 10'000'000;

/// R_t(beta): every error pattern with |rho| = rank_t(rho) = beta.
struct PatternFamily {
    std::string sink;
    int beta = 0;
    std::vector<ErrorPattern> members; // lexicographic by channel id
};

/// Brute-force enumeration over size-beta subsets of the connective set;
/// refuses (EnumerationTooLarge) when the subset count exceeds `ceiling`.
PatternFamily enumerate_R(const Network& net, const std::string& t, int beta,
                          std::uint64_t ceiling = kDefaultEnumerationCeiling);

struct FamilySizeRow {
    std::string sink;
    int min_cut = 0;
    int delta = 0;
    int beta = 0;
    std::uint64_t connective_size = 0;    // |E_t|
    std::uint64_t family_size = 0;        // |R_t(beta)|
    std::uint64_t choose_connective = 0;  // C(|E_t|, beta)
    std::uint64_t choose_all = 0;         // C(|E|, beta)
};

struct FamilySizeReport {
    int w = 0;
    std::vector<FamilySizeRow> rows; // sink order of the network
    std::uint64_t sum_family = 0;
    std::uint64_t sum_choose_connective = 0;
    std::uint64_t sum_choose_all = 0;
    std::uint64_t recommended_field = 0; // smallest prime >= sum_family
};

FamilySizeReport family_sizes(const Network& net, int w, const std::map<std::string, int>& betas,
                              std::uint64_t ceiling = kDefaultEnumerationCeiling);

} // namespace nec
