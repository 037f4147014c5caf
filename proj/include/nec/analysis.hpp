#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nec/construct.hpp"

namespace nec {

struct SinkReport {
    std::string sink;
    int min_cut = 0;
    int delta = 0; // redundancy C_t - w
    bool regular = false;
    std::optional<int> d_min;           // defined only for regular codes
    std::optional<int> singleton_slack; // delta + 1 - d_min
    bool is_mds = false;
};

/// Span of the top w rows of the decoding matrix at t.
Subspace message_space(const Code& code, const std::string& t);

/// Span of the rows of the decoding matrix picked out by rho.
Subspace error_space(const Code& code, const std::string& t, const ErrorPattern& rho);

/// Per-code dominance: error_space(rho1) contained in error_space(rho2).
bool dominates(const Code& code, const std::string& t, const ErrorPattern& rho1,
               const ErrorPattern& rho2);

/// Smallest |rho| whose error space meets the message space nontrivially,
/// searched over connective patterns of growing size. Requires the message
/// space at t to have full rank w (NotRegular otherwise).
int min_distance(const Code& code, const std::string& t);

/// Evaluates the three equivalent minimum-distance formulas (pattern rank,
/// cardinality, error-space dimension) independently; true iff they agree.
bool prop2_consistency(const Code& code, const std::string& t);

SinkReport sink_report(const Code& code, const std::string& t);
std::vector<SinkReport> full_report(const Code& code);

bool is_regular(const Code& code); // full message rank at every sink

} // namespace nec
