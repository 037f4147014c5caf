#pragma once

#include <stdexcept>
#include <string>

namespace nec {

enum class errc {
    composite_modulus,
    division_by_zero,
    bad_document,
    cyclic_graph,
    dangling_endpoint,
    source_has_inputs,
    sink_has_outputs,
    duplicate_channel_id,
    insufficient_flow,
    incomplete_kernels,
    exhausted,
    field_too_small,
    rate_too_high,
    not_regular,
    ambiguous,
    dimension_mismatch,
    enumeration_too_large,
    bad_params,
    unknown_id,
};

const char* errc_name(errc c);

/// Exception carrying a machine-checkable error code next to the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace nec
