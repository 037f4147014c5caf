#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nec/kernels.hpp"
#include "nec/network.hpp"
#include "nec/patterns.hpp"

namespace nec {

/// A linear network error correction code: field, rate, local kernels and
/// the extended global kernels they induce.
struct Code {
    Field field;
    int w;
    std::shared_ptr<const Network> net;
    LocalKernels local;
    KernelMap extended;

    /// Decoding matrix at t: rows indexed by extended coordinate, one
    /// column per channel of In(t) in canonical order.
    std::vector<Vec> decoding_rows(const std::string& t) const;

    /// Row of the decoding matrix for one extended coordinate.
    Vec decoding_row(const std::string& t, int coord) const;
};

/// Builds a Code whose kernels are propagate(net, w, local); throws when
/// the two disagree (internal consistency guard).
Code make_code(std::shared_ptr<const Network> net, int w, const Field& f, LocalKernels local);

/// Like make_code but trusts precomputed kernels.
Code make_code(std::shared_ptr<const Network> net, int w, const Field& f, LocalKernels local,
               KernelMap extended);

/// Dynamic state for one (sink, pattern) pair during construction: the
/// moving channel cut, its path family and predecessor links.
struct CutState {
    std::string sink;
    ErrorPattern rho;
    PathFamily family;
    std::vector<int> member_channels; // channels covered by the family, sorted
    std::vector<int> pred;            // per channel position: previous token, -1 off-family
    std::vector<int> cut;             // tokens, |cut| = w + |rho| throughout
};

/// Greedy constructor: walks channels in canonical order and picks each
/// kernel outside the forbidden subspace unions, keeping every cut at full
/// restricted rank. Stepwise interface so the invariant can be observed
/// mid-run.
class CodeBuilder {
public:
    CodeBuilder(std::shared_ptr<const Network> net, int w,
                const std::map<std::string, int>& betas, const Field& f,
                std::uint64_t ceiling = kDefaultEnumerationCeiling);

    bool done() const { return next_channel_ >= net_->channel_count(); }
    /// Processes one channel; throws FieldTooSmall on exhaustion.
    void step();

    /// True iff every cut currently has restricted rank w + beta_t.
    bool cut_invariant_holds() const;

    /// Final cuts must land inside In(t); exposed for verification.
    const std::vector<CutState>& cuts() const { return cuts_; }
    const KernelMap& kernels_so_far() const { return kernels_; }

    /// Test hook: overwrite a kernel without bookkeeping.
    void set_kernel_unchecked(int pos, Vec kernel);

    /// Runs to completion and packages the code.
    Code finish();

private:
    std::shared_ptr<const Network> net_;
    int w_;
    Field field_;
    LocalKernels local_;
    KernelMap kernels_;
    std::vector<CutState> cuts_;
    std::vector<std::vector<int>> touching_; // per channel: indices into cuts_
    int next_channel_ = 0;

    Vec token_kernel(int token) const;
    int token_for_error_channel(int pos) const { return w_ + net_->channel_count() + pos; }
};

/// One-shot construction with error correction capacity beta_t + 1 at every
/// sink (network MDS when beta_t = delta_t).
Code construct_code(std::shared_ptr<const Network> net, int w,
                    const std::map<std::string, int>& betas, const Field& f,
                    std::uint64_t ceiling = kDefaultEnumerationCeiling);

} // namespace nec
