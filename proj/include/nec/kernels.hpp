#pragma once

#include <string>
#include <vector>

#include "nec/linalg.hpp"
#include "nec/network.hpp"

namespace nec {

/// Extended kernels live in F^(w+|E|). Coordinates 0..w-1 belong to the
/// imaginary message channels d'_1..d'_w; coordinate w+p belongs to the
/// channel at canonical position p.
inline int message_coord(int i) { return i; }
inline int channel_coord(int w, int pos) { return w + pos; }
inline int kernel_len(int w, const Network& net) { return w + net.channel_count(); }

/// Coordinate names in the fixed order: d'1..d'w then the channel ids.
std::vector<std::string> index_legend(const Network& net, int w);

/// Local encoding coefficients k_{d,e} for every adjacent channel pair.
/// For e out of the source the in-channels are the w imaginary message
/// channels; entries are addressed by extended coordinate of d.
class LocalKernels {
public:
    LocalKernels(const Network& net, int w); // all coefficients zero

    int rate() const { return w_; }

    /// Coefficient for (in-coordinate, out-channel position).
    Scalar get(int in_coord, int out_pos) const;
    void set(int in_coord, int out_pos, Scalar value);

    /// In-coordinates feeding channel `pos`: message coords for source
    /// channels, w+p for each in-channel of the tail otherwise. Canonical
    /// order.
    const std::vector<int>& inputs_of(int pos) const { return inputs_[static_cast<std::size_t>(pos)]; }

private:
    int w_;
    std::vector<std::vector<int>> inputs_;      // per channel
    std::vector<std::vector<Scalar>> coeffs_;   // parallel to inputs_
};

/// All extended global encoding kernels, indexed by canonical channel
/// position.
using KernelMap = std::vector<Vec>;

/// Kernels by the recursion f_e = sum k_{d,e} f_d + 1_e in canonical order.
KernelMap propagate(const Network& net, int w, const LocalKernels& lk, const Field& f);

/// Same kernels through the closed form (B over I)(I - F)^{-1}; the system
/// matrix I - F is unitriangular under the canonical order.
KernelMap transfer_matrix_kernels(const Network& net, int w, const LocalKernels& lk, const Field& f);

enum class RestrictMode {
    compact,    // drop coordinates outside In(s) and rho; length w+|rho|
    zeroed,     // zero coordinates outside In(s) and rho
    complement, // zero coordinates inside In(s) and rho
};

Vec restrict_kernel(const Vec& kernel, const Network& net, int w, const ErrorPattern& rho,
                    RestrictMode mode);

} // namespace nec
