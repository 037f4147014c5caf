#include "nec/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace nec {

namespace {

std::vector<Vec> message_rows(const Code& code, const std::string& t) {
    std::vector<Vec> rows;
    for (int i = 0; i < code.w; ++i) rows.push_back(code.decoding_row(t, message_coord(i)));
    return rows;
}

std::vector<Vec> pattern_rows(const Code& code, const std::string& t, const ErrorPattern& rho) {
    std::vector<Vec> rows;
    for (int pos : rho.channels)
        rows.push_back(code.decoding_row(t, channel_coord(code.w, pos)));
    return rows;
}

bool regular_at(const Code& code, const std::string& t) {
    return rank_of(code.field, message_rows(code, t)) == code.w;
}

void require_regular(const Code& code, const std::string& t) {
    if (!regular_at(code, t))
        fail(errc::not_regular, "message space at '" + t + "' has deficient rank");
}

// Nontrivial intersection of the message space with the span of the
// pattern rows, tested as one rank comparison.
bool spaces_intersect(const Code& code, const std::string& t, const std::vector<Vec>& msg_rows,
                      int msg_rank, const ErrorPattern& rho) {
    std::vector<Vec> rho_rows = pattern_rows(code, t, rho);
    const int rho_rank = rank_of(code.field, rho_rows);
    if (rho_rank == 0) return false;
    std::vector<Vec> stacked = msg_rows;
    stacked.insert(stacked.end(), rho_rows.begin(), rho_rows.end());
    return rank_of(code.field, stacked) < msg_rank + rho_rank;
}

// All size-k subsets of pool, visitor returns true to stop early.
template <typename Fn>
bool for_each_subset(const std::vector<int>& pool, int k, Fn&& visit) {
    const int n = static_cast<int>(pool.size());
    if (k > n) return false;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        ErrorPattern rho;
        for (int i : pick) rho.channels.push_back(pool[static_cast<std::size_t>(i)]);
        std::sort(rho.channels.begin(), rho.channels.end());
        if (visit(rho)) return true;
        int j = k - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - k + j) --j;
        if (j < 0) return false;
        ++pick[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l)
            pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
    }
}

} // namespace

bool is_regular(const Code& code) {
    return std::all_of(code.net->sinks().begin(), code.net->sinks().end(),
                       [&](const std::string& t) { return regular_at(code, t); });
}

Subspace message_space(const Code& code, const std::string& t) {
    const int ambient = static_cast<int>(code.net->in_of(t).size());
    return Subspace::span(code.field, message_rows(code, t), ambient);
}

Subspace error_space(const Code& code, const std::string& t, const ErrorPattern& rho) {
    const int ambient = static_cast<int>(code.net->in_of(t).size());
    return Subspace::span(code.field, pattern_rows(code, t, rho), ambient);
}

bool dominates(const Code& code, const std::string& t, const ErrorPattern& rho1,
               const ErrorPattern& rho2) {
    return error_space(code, t, rho2).contains(error_space(code, t, rho1));
}

int min_distance(const Code& code, const std::string& t) {
    require_regular(code, t);
    const int c_t = code.net->min_cut_capacity(code.net->source(), t);
    const int delta = c_t - code.w;
    const std::vector<int> pool = code.net->connective_set(t);
    const std::vector<Vec> msg = message_rows(code, t);

    for (int k = 1; k <= delta + 1; ++k) {
        bool found = for_each_subset(pool, k, [&](const ErrorPattern& rho) {
            return spaces_intersect(code, t, msg, code.w, rho);
        });
        if (found) return k;
    }
    // The refined Singleton bound caps the search for regular codes.
    throw std::logic_error("no intersecting pattern up to delta+1 at sink '" + t + "'");
}

bool prop2_consistency(const Code& code, const std::string& t) {
    require_regular(code, t);
    const int c_t = code.net->min_cut_capacity(code.net->source(), t);
    const int delta = c_t - code.w;
    const std::vector<int> pool = code.net->connective_set(t);
    const std::vector<Vec> msg = message_rows(code, t);

    int best_rank = -1, best_size = -1, best_dim = -1;
    for (int k = 1; k <= delta + 1; ++k) {
        for_each_subset(pool, k, [&](const ErrorPattern& rho) {
            if (!spaces_intersect(code, t, msg, code.w, rho)) return false;
            const int rank = code.net->pattern_rank(rho, t);
            const int dim = rank_of(code.field, pattern_rows(code, t, rho));
            if (best_rank < 0 || rank < best_rank) best_rank = rank;
            if (best_size < 0 || rho.size() < best_size) best_size = rho.size();
            if (best_dim < 0 || dim < best_dim) best_dim = dim;
            return false; // keep scanning, minima need the whole family
        });
    }
    return best_rank >= 0 && best_rank == best_size && best_size == best_dim;
}

SinkReport sink_report(const Code& code, const std::string& t) {
    SinkReport report;
    report.sink = t;
    report.min_cut = code.net->min_cut_capacity(code.net->source(), t);
    report.delta = report.min_cut - code.w;
    report.regular = regular_at(code, t);
    if (report.regular) {
        const int d = min_distance(code, t);
        if (d > report.delta + 1)
            throw std::logic_error("refined Singleton bound violated at '" + t + "'");
        report.d_min = d;
        report.singleton_slack = report.delta + 1 - d;
        report.is_mds = (*report.singleton_slack == 0);
    }
    return report;
}

std::vector<SinkReport> full_report(const Code& code) {
    std::vector<SinkReport> reports;
    for (const std::string& t : code.net->sinks()) reports.push_back(sink_report(code, t));
    return reports;
}

} // namespace nec
