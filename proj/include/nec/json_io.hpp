#pragma once

#include <string>

#include <json.hpp>

#include "nec/analysis.hpp"
#include "nec/construct.hpp"
#include "nec/patterns.hpp"
#include "nec/randomcode.hpp"

namespace nec {

using json = nlohmann::ordered_json;

json network_to_json(const Network& net);
Network network_from_json(const json& doc);

/// Parses the network document format: {nodes, source, sinks, channels}.
/// Channel declaration order is significant; it feeds the canonical order.
Network parse_network(const std::string& text);
std::string network_document(const Network& net);

json code_to_json(const Code& code);
Code code_from_json(const json& doc);
Code parse_code(const std::string& text);
std::string code_document(const Code& code);

json family_size_report_to_json(const FamilySizeReport& report);
json sink_reports_to_json(const std::vector<SinkReport>& reports);
json failure_report_to_json(const FailureReport& report);
json recommendation_to_json(const FieldSizeRecommendation& rec);

} // namespace nec
