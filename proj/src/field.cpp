#include "nec/field.hpp"

namespace nec {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

Field::Field(std::uint64_t q) : q_(q) {
    if (q < 2) fail(errc::composite_modulus, "modulus must be at least 2");
    // Residue products must fit in 64 bits.
    if (q > (std::uint64_t(1) << 31))
        fail(errc::bad_params, "modulus too large");
    if (!is_prime(q))
        fail(errc::composite_modulus, "modulus " + std::to_string(q) + " is not prime");
}

Scalar Field::pow(Scalar base, std::uint64_t exp) const {
    Scalar result = 1 % q_;
    base %= q_;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

} // namespace nec
