#include "nec/errors.hpp"

namespace nec {

const char* errc_name(errc c) {
    switch (c) {
    case errc::composite_modulus: return "CompositeModulus";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::bad_document: return "BadDocument";
    case errc::cyclic_graph: return "CyclicGraph";
    case errc::dangling_endpoint: return "DanglingEndpoint";
    case errc::source_has_inputs: return "SourceHasInputs";
    case errc::sink_has_outputs: return "SinkHasOutputs";
    case errc::duplicate_channel_id: return "DuplicateChannelId";
    case errc::insufficient_flow: return "InsufficientFlow";
    case errc::incomplete_kernels: return "IncompleteKernels";
    case errc::exhausted: return "Exhausted";
    case errc::field_too_small: return "FieldTooSmall";
    case errc::rate_too_high: return "RateTooHigh";
    case errc::not_regular: return "NotRegular";
    case errc::ambiguous: return "Ambiguous";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::bad_params: return "BadParams";
    case errc::unknown_id: return "UnknownId";
    }
    return "Error";
}

} // namespace nec
