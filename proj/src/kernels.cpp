#include "nec/kernels.hpp"

#include <algorithm>

namespace nec {

std::vector<std::string> index_legend(const Network& net, int w) {
    std::vector<std::string> legend;
    legend.reserve(static_cast<std::size_t>(kernel_len(w, net)));
    for (int i = 0; i < w; ++i) legend.push_back("d'" + std::to_string(i + 1));
    for (const Channel& c : net.channels()) legend.push_back(c.id);
    return legend;
}

LocalKernels::LocalKernels(const Network& net, int w) : w_(w) {
    if (w < 1) fail(errc::bad_params, "rate must be positive");
    inputs_.resize(static_cast<std::size_t>(net.channel_count()));
    coeffs_.resize(static_cast<std::size_t>(net.channel_count()));
    for (int pos = 0; pos < net.channel_count(); ++pos) {
        const Channel& c = net.channels()[static_cast<std::size_t>(pos)];
        std::vector<int>& ins = inputs_[static_cast<std::size_t>(pos)];
        if (c.tail == net.source()) {
            for (int i = 0; i < w; ++i) ins.push_back(message_coord(i));
        } else {
            for (int d : net.in_of(c.tail)) ins.push_back(channel_coord(w, d));
        }
        coeffs_[static_cast<std::size_t>(pos)].assign(ins.size(), 0);
    }
}

Scalar LocalKernels::get(int in_coord, int out_pos) const {
    const auto& ins = inputs_[static_cast<std::size_t>(out_pos)];
    auto it = std::find(ins.begin(), ins.end(), in_coord);
    if (it == ins.end())
        fail(errc::incomplete_kernels, "coordinate " + std::to_string(in_coord) +
                                           " does not feed channel at position " + std::to_string(out_pos));
    return coeffs_[static_cast<std::size_t>(out_pos)][static_cast<std::size_t>(it - ins.begin())];
}

void LocalKernels::set(int in_coord, int out_pos, Scalar value) {
    const auto& ins = inputs_[static_cast<std::size_t>(out_pos)];
    auto it = std::find(ins.begin(), ins.end(), in_coord);
    if (it == ins.end())
        fail(errc::incomplete_kernels, "coordinate " + std::to_string(in_coord) +
                                           " does not feed channel at position " + std::to_string(out_pos));
    coeffs_[static_cast<std::size_t>(out_pos)][static_cast<std::size_t>(it - ins.begin())] = value;
}

KernelMap propagate(const Network& net, int w, const LocalKernels& lk, const Field& f) {
    if (lk.rate() != w) fail(errc::incomplete_kernels, "kernel rate mismatch");
    const int len = kernel_len(w, net);
    KernelMap kernels(static_cast<std::size_t>(net.channel_count()));
    for (int pos = 0; pos < net.channel_count(); ++pos) {
        Vec k(static_cast<std::size_t>(len), 0);
        const auto& ins = lk.inputs_of(pos);
        for (std::size_t j = 0; j < ins.size(); ++j) {
            const Scalar coeff = lk.get(ins[j], pos);
            if (coeff == 0) continue;
            if (ins[j] < w) {
                // upstream kernel of an imaginary message channel is 1_{d'}
                k[static_cast<std::size_t>(ins[j])] = f.add(k[static_cast<std::size_t>(ins[j])], coeff);
            } else {
                const Vec& up = kernels[static_cast<std::size_t>(ins[j] - w)];
                for (int c = 0; c < len; ++c)
                    k[static_cast<std::size_t>(c)] =
                        f.add(k[static_cast<std::size_t>(c)], f.mul(coeff, up[static_cast<std::size_t>(c)]));
            }
        }
        const int self = channel_coord(w, pos);
        k[static_cast<std::size_t>(self)] = f.add(k[static_cast<std::size_t>(self)], 1);
        kernels[static_cast<std::size_t>(pos)] = std::move(k);
    }
    return kernels;
}

KernelMap transfer_matrix_kernels(const Network& net, int w, const LocalKernels& lk, const Field& f) {
    if (lk.rate() != w) fail(errc::incomplete_kernels, "kernel rate mismatch");
    const int m = net.channel_count();

    // B holds the source coefficients, F the channel adjacency coefficients.
    std::vector<Vec> B(static_cast<std::size_t>(w), Vec(static_cast<std::size_t>(m), 0));
    std::vector<Vec> sys(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(m), 0)); // I - F
    for (int e = 0; e < m; ++e) {
        sys[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] = 1;
        for (int d : lk.inputs_of(e)) {
            const Scalar coeff = lk.get(d, e);
            if (d < w)
                B[static_cast<std::size_t>(d)][static_cast<std::size_t>(e)] = coeff;
            else
                sys[static_cast<std::size_t>(d - w)][static_cast<std::size_t>(e)] =
                    f.neg(coeff); // (I - F)_{d,e}
        }
    }

    // Invert I - F by Gauss-Jordan; nilpotency of F under the canonical
    // order makes it unitriangular, hence always invertible.
    std::vector<Vec> inv(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        while (pivot < m && sys[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0)
            ++pivot;
        if (pivot == m) fail(errc::incomplete_kernels, "singular system matrix");
        std::swap(sys[static_cast<std::size_t>(pivot)], sys[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        const Scalar scale = f.inv(sys[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
        for (int c = 0; c < m; ++c) {
            sys[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] =
                f.mul(sys[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)], scale);
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] =
                f.mul(inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)], scale);
        }
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            const Scalar factor = sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = 0; c < m; ++c) {
                sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    f.sub(sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                          f.mul(factor, sys[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]));
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    f.sub(inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                          f.mul(factor, inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]));
            }
        }
    }

    // Stack (B over I) times the inverse; column e is the kernel of e.
    KernelMap kernels(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(kernel_len(w, net)), 0));
    for (int e = 0; e < m; ++e) {
        Vec& k = kernels[static_cast<std::size_t>(e)];
        for (int r = 0; r < w; ++r) {
            Scalar acc = 0;
            for (int j = 0; j < m; ++j)
                acc = f.add(acc, f.mul(B[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                                       inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]));
            k[static_cast<std::size_t>(message_coord(r))] = acc;
        }
        for (int r = 0; r < m; ++r)
            k[static_cast<std::size_t>(channel_coord(w, r))] =
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(e)];
    }
    return kernels;
}

Vec restrict_kernel(const Vec& kernel, const Network& net, int w, const ErrorPattern& rho,
                    RestrictMode mode) {
    const int len = kernel_len(w, net);
    if (static_cast<int>(kernel.size()) != len)
        fail(errc::dimension_mismatch, "kernel length does not match network");
    switch (mode) {
    case RestrictMode::compact: {
        Vec out;
        out.reserve(static_cast<std::size_t>(w + rho.size()));
        for (int i = 0; i < w; ++i) out.push_back(kernel[static_cast<std::size_t>(i)]);
        for (int pos : rho.channels)
            out.push_back(kernel[static_cast<std::size_t>(channel_coord(w, pos))]);
        return out;
    }
    case RestrictMode::zeroed: {
        Vec out(static_cast<std::size_t>(len), 0);
        for (int i = 0; i < w; ++i) out[static_cast<std::size_t>(i)] = kernel[static_cast<std::size_t>(i)];
        for (int pos : rho.channels)
            out[static_cast<std::size_t>(channel_coord(w, pos))] =
                kernel[static_cast<std::size_t>(channel_coord(w, pos))];
        return out;
    }
    case RestrictMode::complement: {
        Vec out = kernel;
        for (int i = 0; i < w; ++i) out[static_cast<std::size_t>(i)] = 0;
        for (int pos : rho.channels) out[static_cast<std::size_t>(channel_coord(w, pos))] = 0;
        return out;
    }
    }
    fail(errc::bad_params, "unknown restriction mode");
}

} // namespace nec
