#include "nec/patterns.hpp"

#include <algorithm>
#include <limits>

#include "nec/field.hpp"

namespace nec {

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    const std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        // result * (a - b + i) / i stays integral at every step
        const std::uint64_t num = a - b + i;
        if (result > cap / num) return cap; // saturate
        result = result * num / i;
    }
    return result;
}

PatternFamily enumerate_R(const Network& net, const std::string& t, int beta,
                          std::uint64_t ceiling) {
    if (!net.is_sink(t)) fail(errc::bad_params, "'" + t + "' is not a sink");
    if (beta < 0) fail(errc::bad_params, "negative beta");

    PatternFamily family;
    family.sink = t;
    family.beta = beta;
    if (beta == 0) {
        family.members.push_back(ErrorPattern{});
        return family;
    }

    // Patterns touching non-connective channels never reach full rank, so
    // the search space is the connective set ordered by channel id.
    std::vector<int> pool = net.connective_set(t);
    std::sort(pool.begin(), pool.end(), [&](int a, int b) {
        return net.channels()[static_cast<std::size_t>(a)].id <
               net.channels()[static_cast<std::size_t>(b)].id;
    });
    const std::uint64_t subsets = binomial(pool.size(), static_cast<std::uint64_t>(beta));
    if (subsets > ceiling)
        fail(errc::enumeration_too_large,
             std::to_string(subsets) + " candidate patterns exceed ceiling " + std::to_string(ceiling));
    if (static_cast<std::size_t>(beta) > pool.size()) return family;

    std::vector<int> pick(static_cast<std::size_t>(beta));
    for (int i = 0; i < beta; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(pool.size());
    while (true) {
        ErrorPattern rho;
        for (int i : pick) rho.channels.push_back(pool[static_cast<std::size_t>(i)]);
        std::sort(rho.channels.begin(), rho.channels.end());
        if (net.pattern_rank(rho, t) == beta) family.members.push_back(std::move(rho));

        int k = beta - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - beta + k) --k;
        if (k < 0) break;
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < beta; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return family;
}

FamilySizeReport family_sizes(const Network& net, int w, const std::map<std::string, int>& betas,
                              std::uint64_t ceiling) {
    if (w < 1) fail(errc::bad_params, "rate must be positive");
    FamilySizeReport report;
    report.w = w;
    for (const std::string& t : net.sinks()) {
        auto it = betas.find(t);
        if (it == betas.end()) fail(errc::bad_params, "no beta given for sink '" + t + "'");
        const int beta = it->second;
        const int c_t = net.min_cut_capacity(net.source(), t);
        if (beta < 0 || beta > c_t - w)
            fail(errc::bad_params, "beta for '" + t + "' outside [0, C_t - w]");

        FamilySizeRow row;
        row.sink = t;
        row.min_cut = c_t;
        row.delta = c_t - w;
        row.beta = beta;
        row.connective_size = net.connective_set(t).size();
        row.family_size = enumerate_R(net, t, beta, ceiling).members.size();
        row.choose_connective = binomial(row.connective_size, static_cast<std::uint64_t>(beta));
        row.choose_all =
            binomial(static_cast<std::uint64_t>(net.channel_count()), static_cast<std::uint64_t>(beta));
        report.sum_family += row.family_size;
        report.sum_choose_connective += row.choose_connective;
        report.sum_choose_all += row.choose_all;
        report.rows.push_back(std::move(row));
    }
    report.recommended_field = next_prime(report.sum_family);
    return report;
}

} // namespace nec
