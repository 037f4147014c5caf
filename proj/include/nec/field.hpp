#pragma once

#include <cstdint>

#include "nec/errors.hpp"

namespace nec {

/// A field element, kept as the canonical residue in [0, q). All Field
/// operations normalize, so equality of scalars is plain integer equality.
using Scalar = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Smallest prime >= n (n >= 0; values below 2 map to 2).
std::uint64_t next_prime(std::uint64_t n);

/// The prime field F_q with exact modular arithmetic. Immutable; cheap to
/// copy and safe to share between threads.
class Field {
public:
    explicit Field(std::uint64_t q);

    std::uint64_t size() const { return q_; }

    Scalar from_int(long long v) const {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += static_cast<long long>(q_);
        return static_cast<Scalar>(r);
    }

    Scalar add(Scalar a, Scalar b) const { return (a + b) % q_; }
    Scalar sub(Scalar a, Scalar b) const { return (a + q_ - b) % q_; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % q_; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : q_ - a; }

    Scalar pow(Scalar base, std::uint64_t exp) const;

    /// Multiplicative inverse via Fermat: a^(q-2). Throws on zero.
    Scalar inv(Scalar a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of zero");
        return pow(a, q_ - 2);
    }

    Scalar div(Scalar a, Scalar b) const {
        if (b == 0) fail(errc::division_by_zero, "division by zero");
        return mul(a, inv(b));
    }

    bool operator==(const Field& other) const { return q_ == other.q_; }
    bool operator!=(const Field& other) const { return q_ != other.q_; }

private:
    std::uint64_t q_;
};

} // namespace nec
