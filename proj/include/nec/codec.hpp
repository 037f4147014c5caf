#pragma once

#include <string>
#include <vector>

#include "nec/construct.hpp"

namespace nec {

/// Channel outputs (X, Z) . f_e for every channel, canonical order.
std::vector<Scalar> encode(const Code& code, const Vec& message, const Vec& errors);

/// Same outputs produced by walking the nodes and applying the local
/// kernels with additive error injection; agrees with encode() everywhere.
std::vector<Scalar> simulate_transmission(const Code& code, const Vec& message, const Vec& errors);

enum class DecodeStatus { ok, ambiguous, undecodable };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::undecodable;
    Vec message;     // recovered source symbols when status == ok
    int radius = -1; // smallest pattern rank admitting a solution
    bool unique = false;
};

/// Brute-force minimum-rank decoding: finds the smallest r such that some
/// (X, Z) with pattern rank at most r satisfies the decoding equation.
/// `received` carries the symbols on In(t) in canonical order. Candidate
/// patterns are searched in (rank, cardinality, lexicographic) order up to
/// rank delta_t + 1. Throws NotRegular when the message rank at t is
/// deficient.
DecodeOutcome decode(const Code& code, const std::string& t, const std::vector<Scalar>& received);

struct SinkVerdict {
    std::string sink;
    DecodeStatus status = DecodeStatus::undecodable;
    bool recovered = false;  // decoded message equals the transmitted one
    bool guaranteed = false; // pattern rank within half the minimum distance
    int radius = -1;
};

/// Draws nonzero error values on `pattern`, transmits `message`, and
/// decodes at every sink.
std::vector<SinkVerdict> roundtrip(const Code& code, const Vec& message,
                                   const ErrorPattern& pattern, std::uint64_t seed);

} // namespace nec
