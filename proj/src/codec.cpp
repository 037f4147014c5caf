#include "nec/codec.hpp"

#include <algorithm>
#include <map>

#include "nec/analysis.hpp"
#include "nec/randomcode.hpp"

namespace nec {

std::vector<Scalar> encode(const Code& code, const Vec& message, const Vec& errors) {
    const Network& net = *code.net;
    if (static_cast<int>(message.size()) != code.w)
        fail(errc::dimension_mismatch, "message length differs from rate");
    if (static_cast<int>(errors.size()) != net.channel_count())
        fail(errc::dimension_mismatch, "error vector length differs from channel count");
    const Field& f = code.field;

    std::vector<Scalar> out(static_cast<std::size_t>(net.channel_count()), 0);
    for (int pos = 0; pos < net.channel_count(); ++pos) {
        const Vec& kernel = code.extended[static_cast<std::size_t>(pos)];
        Scalar acc = 0;
        for (int i = 0; i < code.w; ++i)
            acc = f.add(acc, f.mul(message[static_cast<std::size_t>(i)],
                                   kernel[static_cast<std::size_t>(message_coord(i))]));
        for (int e = 0; e < net.channel_count(); ++e) {
            const Scalar z = errors[static_cast<std::size_t>(e)];
            if (z == 0) continue;
            acc = f.add(acc, f.mul(z, kernel[static_cast<std::size_t>(channel_coord(code.w, e))]));
        }
        out[static_cast<std::size_t>(pos)] = acc;
    }
    return out;
}

std::vector<Scalar> simulate_transmission(const Code& code, const Vec& message, const Vec& errors) {
    const Network& net = *code.net;
    if (static_cast<int>(message.size()) != code.w)
        fail(errc::dimension_mismatch, "message length differs from rate");
    if (static_cast<int>(errors.size()) != net.channel_count())
        fail(errc::dimension_mismatch, "error vector length differs from channel count");
    const Field& f = code.field;

    // Channels settle in canonical order, each combining the corrupted
    // outputs already observed on its tail's in-channels.
    std::vector<Scalar> observed(static_cast<std::size_t>(net.channel_count()), 0);
    for (int pos = 0; pos < net.channel_count(); ++pos) {
        Scalar acc = 0;
        for (int in : code.local.inputs_of(pos)) {
            const Scalar coeff = code.local.get(in, pos);
            if (coeff == 0) continue;
            const Scalar symbol = in < code.w ? message[static_cast<std::size_t>(in)]
                                              : observed[static_cast<std::size_t>(in - code.w)];
            acc = f.add(acc, f.mul(coeff, symbol));
        }
        observed[static_cast<std::size_t>(pos)] = f.add(acc, errors[static_cast<std::size_t>(pos)]);
    }
    return observed;
}

namespace {

struct Candidate {
    int rank;
    ErrorPattern rho;
};

// Connective subsets ordered by (rank, cardinality, lexicographic), capped
// at rank limit. The pool stays small on the networks this decoder serves.
std::vector<Candidate> candidate_patterns(const Code& code, const std::string& t, int rank_limit) {
    const std::vector<int> pool = code.net->connective_set(t);
    if (pool.size() > 20)
        fail(errc::enumeration_too_large, "connective set too large for brute-force decoding");
    std::vector<Candidate> out;
    const std::uint64_t total = std::uint64_t(1) << pool.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ErrorPattern rho;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) rho.channels.push_back(pool[i]);
        std::sort(rho.channels.begin(), rho.channels.end());
        const int rank = code.net->pattern_rank(rho, t);
        if (rank <= rank_limit) out.push_back({rank, std::move(rho)});
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.rho.size() != b.rho.size()) return a.rho.size() < b.rho.size();
        return a.rho.channels < b.rho.channels;
    });
    return out;
}

} // namespace

DecodeOutcome decode(const Code& code, const std::string& t, const std::vector<Scalar>& received) {
    const Network& net = *code.net;
    const std::vector<int>& in = net.in_of(t);
    if (received.size() != in.size())
        fail(errc::dimension_mismatch, "received tuple length differs from |In(t)|");

    std::vector<Vec> msg_rows;
    for (int i = 0; i < code.w; ++i) msg_rows.push_back(code.decoding_row(t, message_coord(i)));
    if (rank_of(code.field, msg_rows) != code.w)
        fail(errc::not_regular, "message space at '" + t + "' has deficient rank");

    const int delta = net.min_cut_capacity(net.source(), t) - code.w;
    const std::vector<Candidate> candidates = candidate_patterns(code, t, delta + 1);

    for (int radius = 0; radius <= delta + 1; ++radius) {
        bool any_solution = false;
        bool multiple = false;
        Vec recovered;
        for (const Candidate& cand : candidates) {
            if (cand.rank != radius) continue;
            std::vector<Vec> rows = msg_rows;
            for (int pos : cand.rho.channels)
                rows.push_back(code.decoding_row(t, channel_coord(code.w, pos)));
            const LinearSolution sol = solve_row_system(code.field, rows, received);
            if (!sol.consistent) continue;

            Vec x(sol.particular.begin(), sol.particular.begin() + code.w);
            bool free_message = false;
            for (const Vec& nb : sol.null_basis) {
                for (int i = 0; i < code.w; ++i)
                    if (nb[static_cast<std::size_t>(i)] != 0) free_message = true;
            }
            if (free_message) {
                multiple = true;
                break;
            }
            if (!any_solution) {
                any_solution = true;
                recovered = std::move(x);
            } else if (x != recovered) {
                multiple = true;
                break;
            }
        }
        if (multiple) return {DecodeStatus::ambiguous, {}, radius, false};
        if (any_solution) return {DecodeStatus::ok, std::move(recovered), radius, true};
    }
    return {DecodeStatus::undecodable, {}, -1, false};
}

std::vector<SinkVerdict> roundtrip(const Code& code, const Vec& message,
                                   const ErrorPattern& pattern, std::uint64_t seed) {
    const Network& net = *code.net;
    Vec errors(static_cast<std::size_t>(net.channel_count()), 0);
    std::uint64_t index = 0;
    for (int pos : pattern.channels)
        errors[static_cast<std::size_t>(pos)] = uniform_nonzero_scalar(code.field, seed, 0, index++);

    const std::vector<Scalar> symbols = encode(code, message, errors);

    std::vector<SinkVerdict> verdicts;
    for (const std::string& t : net.sinks()) {
        SinkVerdict verdict;
        verdict.sink = t;
        std::vector<Scalar> received;
        for (int pos : net.in_of(t)) received.push_back(symbols[static_cast<std::size_t>(pos)]);
        const DecodeOutcome outcome = decode(code, t, received);
        verdict.status = outcome.status;
        verdict.radius = outcome.radius;
        verdict.recovered = outcome.status == DecodeStatus::ok && outcome.message == message;
        const SinkReport report = sink_report(code, t);
        if (report.d_min) {
            const int capability = (*report.d_min - 1) / 2;
            verdict.guaranteed = net.pattern_rank(pattern, t) <= capability;
        }
        verdicts.push_back(std::move(verdict));
    }
    return verdicts;
}

} // namespace nec
