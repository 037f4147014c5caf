#include "nec/construct.hpp"

#include <algorithm>

namespace nec {

std::vector<Vec> Code::decoding_rows(const std::string& t) const {
    const std::vector<int>& in = net->in_of(t);
    const int len = kernel_len(w, *net);
    std::vector<Vec> rows(static_cast<std::size_t>(len), Vec(in.size(), 0));
    for (std::size_t col = 0; col < in.size(); ++col) {
        const Vec& k = extended[static_cast<std::size_t>(in[col])];
        for (int r = 0; r < len; ++r) rows[static_cast<std::size_t>(r)][col] = k[static_cast<std::size_t>(r)];
    }
    return rows;
}

Vec Code::decoding_row(const std::string& t, int coord) const {
    const std::vector<int>& in = net->in_of(t);
    Vec row(in.size(), 0);
    for (std::size_t col = 0; col < in.size(); ++col)
        row[col] = extended[static_cast<std::size_t>(in[col])][static_cast<std::size_t>(coord)];
    return row;
}

Code make_code(std::shared_ptr<const Network> net, int w, const Field& f, LocalKernels local) {
    KernelMap kernels = propagate(*net, w, local, f);
    return Code{f, w, std::move(net), std::move(local), std::move(kernels)};
}

Code make_code(std::shared_ptr<const Network> net, int w, const Field& f, LocalKernels local,
               KernelMap extended) {
    return Code{f, w, std::move(net), std::move(local), std::move(extended)};
}

CodeBuilder::CodeBuilder(std::shared_ptr<const Network> net, int w,
                         const std::map<std::string, int>& betas, const Field& f,
                         std::uint64_t ceiling)
    : net_(std::move(net)), w_(w), field_(f), local_(*net_, w),
      kernels_(static_cast<std::size_t>(net_->channel_count())),
      touching_(static_cast<std::size_t>(net_->channel_count())) {
    if (w < 1) fail(errc::bad_params, "rate must be positive");
    for (const std::string& t : net_->sinks()) {
        const int c_t = net_->min_cut_capacity(net_->source(), t);
        if (w > c_t)
            fail(errc::rate_too_high, "rate " + std::to_string(w) + " exceeds min cut " +
                                          std::to_string(c_t) + " of sink '" + t + "'");
        auto it = betas.find(t);
        if (it == betas.end()) fail(errc::bad_params, "no beta given for sink '" + t + "'");
        if (it->second < 0 || it->second > c_t - w)
            fail(errc::bad_params, "beta for '" + t + "' outside [0, C_t - w]");
    }

    // Pattern families and their disjoint paths, sinks in network order.
    for (const std::string& t : net_->sinks()) {
        const int beta = betas.at(t);
        PatternFamily family = enumerate_R(*net_, t, beta, ceiling);
        for (ErrorPattern& rho : family.members) {
            CutState state;
            state.sink = t;
            state.family = net_->disjoint_paths(t, rho, w);
            state.pred.assign(static_cast<std::size_t>(net_->channel_count()), -1);
            for (const DisjointPath& path : state.family.paths) {
                int prev = path.message_index >= 0
                               ? message_coord(path.message_index)
                               : token_for_error_channel(path.error_channel);
                for (int pos : path.channels) {
                    state.pred[static_cast<std::size_t>(pos)] = prev;
                    state.member_channels.push_back(pos);
                    prev = channel_coord(w_, pos);
                }
            }
            std::sort(state.member_channels.begin(), state.member_channels.end());
            // initial cut: In(s) plus the imaginary error channels of rho
            for (int i = 0; i < w_; ++i) state.cut.push_back(message_coord(i));
            for (int pos : rho.channels) state.cut.push_back(token_for_error_channel(pos));
            state.rho = std::move(rho);
            for (int pos : state.member_channels)
                touching_[static_cast<std::size_t>(pos)].push_back(static_cast<int>(cuts_.size()));
            cuts_.push_back(std::move(state));
        }
    }
}

Vec CodeBuilder::token_kernel(int token) const {
    const int len = kernel_len(w_, *net_);
    if (token < w_) {
        Vec unit(static_cast<std::size_t>(len), 0);
        unit[static_cast<std::size_t>(token)] = 1;
        return unit;
    }
    if (token < w_ + net_->channel_count()) return kernels_[static_cast<std::size_t>(token - w_)];
    // imaginary error channel e': kernel is the indicator of e
    Vec unit(static_cast<std::size_t>(len), 0);
    unit[static_cast<std::size_t>(token - net_->channel_count())] = 1;
    return unit;
}

void CodeBuilder::step() {
    if (done()) fail(errc::bad_params, "construction already complete");
    const int pos = next_channel_++;
    const Channel& ch = net_->channels()[static_cast<std::size_t>(pos)];
    const int len = kernel_len(w_, *net_);
    const int self = channel_coord(w_, pos);
    const std::vector<int>& affected = touching_[static_cast<std::size_t>(pos)];

    if (affected.empty()) {
        // off every path family: kernel is the bare indicator
        Vec k(static_cast<std::size_t>(len), 0);
        k[static_cast<std::size_t>(self)] = 1;
        kernels_[static_cast<std::size_t>(pos)] = std::move(k);
        return;
    }

    // Ambient generators: kernels of In(tail) (message channels at the
    // source) followed by the imaginary error channel of this channel.
    std::vector<int> gen_coords = local_.inputs_of(pos);
    std::vector<Vec> generators;
    for (int c : gen_coords) generators.push_back(token_kernel(c));
    generators.push_back(token_kernel(token_for_error_channel(pos)));

    std::vector<Subspace> forbidden;
    for (int ci : affected) {
        const CutState& state = cuts_[static_cast<std::size_t>(ci)];
        std::vector<Vec> gens;
        const int prev = state.pred[static_cast<std::size_t>(pos)];
        for (int token : state.cut) {
            if (token == prev) continue;
            gens.push_back(restrict_kernel(token_kernel(token), *net_, w_, state.rho,
                                           RestrictMode::zeroed));
        }
        for (std::size_t g = 0; g < generators.size(); ++g)
            gens.push_back(restrict_kernel(generators[g], *net_, w_, state.rho,
                                           RestrictMode::complement));
        forbidden.push_back(Subspace::span(field_, gens, len));
    }

    CombinationChoice choice;
    try {
        choice = pick_avoiding_combination(field_, generators, forbidden);
    } catch (const error& e) {
        if (e.code() == errc::exhausted)
            fail(errc::field_too_small, "no admissible kernel for channel '" + ch.id +
                                            "' over F_" + std::to_string(field_.size()));
        throw;
    }

    // Normalize so the own coordinate becomes 1, then read the local
    // coefficients back off the combination.
    Vec kernel = choice.vector;
    const Scalar self_coeff = kernel[static_cast<std::size_t>(self)];
    Scalar rescale = 1;
    if (self_coeff == 0) {
        kernel[static_cast<std::size_t>(self)] = 1;
    } else {
        rescale = field_.inv(self_coeff);
        for (Scalar& v : kernel) v = field_.mul(v, rescale);
    }
    for (std::size_t j = 0; j < gen_coords.size(); ++j)
        local_.set(gen_coords[j], pos, field_.mul(choice.coefficients[j], rescale));
    kernels_[static_cast<std::size_t>(pos)] = std::move(kernel);

    for (int ci : affected) {
        CutState& state = cuts_[static_cast<std::size_t>(ci)];
        const int prev = state.pred[static_cast<std::size_t>(pos)];
        auto it = std::find(state.cut.begin(), state.cut.end(), prev);
        if (it == state.cut.end())
            throw std::logic_error("predecessor missing from cut while updating channel " + ch.id);
        *it = self;
    }

    if (!cut_invariant_holds())
        throw std::logic_error("cut rank dropped after updating channel " + ch.id);
}

bool CodeBuilder::cut_invariant_holds() const {
    for (const CutState& state : cuts_) {
        std::vector<Vec> restricted;
        for (int token : state.cut)
            restricted.push_back(restrict_kernel(token_kernel(token), *net_, w_, state.rho,
                                                 RestrictMode::compact));
        if (rank_of(field_, restricted) != w_ + state.rho.size()) return false;
    }
    return true;
}

void CodeBuilder::set_kernel_unchecked(int pos, Vec kernel) {
    kernels_[static_cast<std::size_t>(pos)] = std::move(kernel);
}

Code CodeBuilder::finish() {
    while (!done()) step();
    for (const CutState& state : cuts_) {
        const std::vector<int>& in = net_->in_of(state.sink);
        for (int token : state.cut) {
            const bool in_sink = token >= w_ && token < w_ + net_->channel_count() &&
                                 std::find(in.begin(), in.end(), token - w_) != in.end();
            if (!in_sink)
                throw std::logic_error("final cut for sink '" + state.sink +
                                       "' escaped In(t)");
        }
    }
    // The greedy choices must agree with plain propagation.
    KernelMap check = propagate(*net_, w_, local_, field_);
    if (check != kernels_)
        throw std::logic_error("constructed kernels disagree with local-kernel propagation");
    return Code{field_, w_, net_, local_, std::move(check)};
}

Code construct_code(std::shared_ptr<const Network> net, int w,
                    const std::map<std::string, int>& betas, const Field& f,
                    std::uint64_t ceiling) {
    CodeBuilder builder(std::move(net), w, betas, f, ceiling);
    return builder.finish();
}

} // namespace nec
