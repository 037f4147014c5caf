#include "nec/json_io.hpp"

#include <algorithm>

namespace nec {

namespace {

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(errc::bad_document, "malformed JSON");
    return doc;
}

const json& field_of(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(errc::bad_document, std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::string> string_array(const json& value, const char* what) {
    if (!value.is_array()) fail(errc::bad_document, std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const json& item : value) {
        if (!item.is_string()) fail(errc::bad_document, std::string(what) + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

json network_to_json(const Network& net) {
    json doc;
    doc["nodes"] = net.nodes();
    doc["source"] = net.source();
    doc["sinks"] = net.sinks();
    json channels = json::array();
    for (const Channel& c : net.channels())
        channels.push_back({{"id", c.id}, {"tail", c.tail}, {"head", c.head}});
    doc["channels"] = std::move(channels);
    return doc;
}

Network network_from_json(const json& doc) {
    if (!doc.is_object()) fail(errc::bad_document, "network document must be an object");
    std::vector<std::string> nodes = string_array(field_of(doc, "nodes"), "nodes");
    const json& src = field_of(doc, "source");
    if (!src.is_string()) fail(errc::bad_document, "source must be a string");
    std::vector<std::string> sinks = string_array(field_of(doc, "sinks"), "sinks");
    const json& chans = field_of(doc, "channels");
    if (!chans.is_array()) fail(errc::bad_document, "channels must be an array");
    std::vector<Channel> channels;
    for (const json& c : chans) {
        if (!c.is_object()) fail(errc::bad_document, "channel entries must be objects");
        Channel ch;
        ch.id = field_of(c, "id").get<std::string>();
        ch.tail = field_of(c, "tail").get<std::string>();
        ch.head = field_of(c, "head").get<std::string>();
        channels.push_back(std::move(ch));
    }
    return Network::build(std::move(nodes), src.get<std::string>(), std::move(sinks),
                          std::move(channels));
}

Network parse_network(const std::string& text) { return network_from_json(parse_text(text)); }

std::string network_document(const Network& net) { return network_to_json(net).dump(2) + "\n"; }

json code_to_json(const Code& code) {
    const Network& net = *code.net;
    json doc;
    doc["field"] = code.field.size();
    doc["rate"] = code.w;
    doc["network"] = network_to_json(net);
    doc["index_legend"] = index_legend(net, code.w);

    json locals = json::object();
    for (const std::string& node : net.nodes()) {
        if (net.is_sink(node)) continue;
        const bool at_source = node == net.source();
        json per_node = json::object();
        bool any = false;
        // in-channel -> out-channel -> residue, canonical order throughout
        const int in_count = at_source ? code.w : static_cast<int>(net.in_of(node).size());
        for (int j = 0; j < in_count; ++j) {
            const int coord = at_source ? message_coord(j)
                                        : channel_coord(code.w, net.in_of(node)[static_cast<std::size_t>(j)]);
            const std::string in_name =
                at_source ? "d'" + std::to_string(j + 1)
                          : net.channels()[static_cast<std::size_t>(net.in_of(node)[static_cast<std::size_t>(j)])].id;
            json per_in = json::object();
            for (int out : net.out_of(node)) {
                per_in[net.channels()[static_cast<std::size_t>(out)].id] = code.local.get(coord, out);
            }
            if (!per_in.empty()) {
                per_node[in_name] = std::move(per_in);
                any = true;
            }
        }
        if (any) locals[node] = std::move(per_node);
    }
    doc["local_kernels"] = std::move(locals);

    json extended = json::object();
    for (int pos = 0; pos < net.channel_count(); ++pos)
        extended[net.channels()[static_cast<std::size_t>(pos)].id] =
            code.extended[static_cast<std::size_t>(pos)];
    doc["extended_kernels"] = std::move(extended);
    return doc;
}

Code code_from_json(const json& doc) {
    if (!doc.is_object()) fail(errc::bad_document, "code document must be an object");
    const Field field(field_of(doc, "field").get<std::uint64_t>());
    const int w = field_of(doc, "rate").get<int>();
    auto net = std::make_shared<const Network>(network_from_json(field_of(doc, "network")));

    LocalKernels local(*net, w);
    const json& locals = field_of(doc, "local_kernels");
    if (!locals.is_object()) fail(errc::bad_document, "local_kernels must be an object");
    for (auto node_it = locals.begin(); node_it != locals.end(); ++node_it) {
        const std::string& node = node_it.key();
        const bool at_source = node == net->source();
        for (auto in_it = node_it.value().begin(); in_it != node_it.value().end(); ++in_it) {
            int coord;
            if (at_source && in_it.key().rfind("d'", 0) == 0) {
                const int idx = std::stoi(in_it.key().substr(2));
                if (idx < 1 || idx > w) fail(errc::bad_document, "imaginary channel index out of range");
                coord = message_coord(idx - 1);
            } else {
                coord = channel_coord(w, net->channel_pos(in_it.key()));
            }
            for (auto out_it = in_it.value().begin(); out_it != in_it.value().end(); ++out_it) {
                const Scalar value = field.from_int(out_it.value().get<long long>());
                local.set(coord, net->channel_pos(out_it.key()), value);
            }
        }
    }

    Code code = make_code(net, w, field, std::move(local));

    // Stored extended kernels, when present, must match the propagation.
    auto ext_it = doc.find("extended_kernels");
    if (ext_it != doc.end()) {
        for (auto it = ext_it->begin(); it != ext_it->end(); ++it) {
            const int pos = net->channel_pos(it.key());
            const Vec& have = code.extended[static_cast<std::size_t>(pos)];
            const std::vector<std::uint64_t> want = it.value().get<std::vector<std::uint64_t>>();
            if (want.size() != have.size() || !std::equal(want.begin(), want.end(), have.begin()))
                fail(errc::bad_document, "stored kernel of '" + it.key() +
                                             "' disagrees with the local kernels");
        }
    }
    return code;
}

Code parse_code(const std::string& text) { return code_from_json(parse_text(text)); }

std::string code_document(const Code& code) { return code_to_json(code).dump(2) + "\n"; }

json family_size_report_to_json(const FamilySizeReport& report) {
    json doc;
    doc["rate"] = report.w;
    json rows = json::object();
    for (const FamilySizeRow& row : report.rows) {
        rows[row.sink] = {{"min_cut", row.min_cut},
                          {"delta", row.delta},
                          {"beta", row.beta},
                          {"connective_channels", row.connective_size},
                          {"family_size", row.family_size},
                          {"choose_connective", row.choose_connective},
                          {"choose_all", row.choose_all}};
    }
    doc["sinks"] = std::move(rows);
    doc["sum_family"] = report.sum_family;
    doc["sum_choose_connective"] = report.sum_choose_connective;
    doc["sum_choose_all"] = report.sum_choose_all;
    doc["recommended_field"] = report.recommended_field;
    return doc;
}

json sink_reports_to_json(const std::vector<SinkReport>& reports) {
    json rows = json::object();
    for (const SinkReport& r : reports) {
        json row = {{"min_cut", r.min_cut}, {"delta", r.delta}, {"regular", r.regular}};
        if (r.d_min) {
            row["d_min"] = *r.d_min;
            row["singleton_slack"] = *r.singleton_slack;
        } else {
            row["d_min"] = nullptr;
            row["singleton_slack"] = nullptr;
        }
        row["is_mds"] = r.is_mds;
        rows[r.sink] = std::move(row);
    }
    return rows;
}

json failure_report_to_json(const FailureReport& report) {
    auto clamp01 = [](double x) { return std::min(1.0, std::max(0.0, x)); };
    json doc;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["rate"] = report.w;
    doc["field"] = report.field_size;
    doc["internal_nodes"] = report.internal_nodes;

    const double n = static_cast<double>(report.trials);
    json sinks = json::object();
    for (const SinkFailureStats& s : report.sinks) {
        json row;
        row["min_cut"] = s.min_cut;
        row["delta"] = s.delta;
        row["beta"] = s.beta;
        row["family_size_delta"] = s.family_size_delta;
        row["family_size_beta"] = s.family_size_beta;
        row["non_regular_rate"] = static_cast<double>(s.non_regular) / n;
        row["mds_failure_rate"] = static_cast<double>(s.mds_failures) / n;
        row["mds_failure_bound"] = clamp01(s.bound_mds);
        row["mds_bound_vacuous"] = s.bound_mds >= 1.0;
        row["beta_failure_rate"] = static_cast<double>(s.beta_failures) / n;
        row["beta_failure_bound"] = clamp01(s.bound_beta);
        row["beta_bound_vacuous"] = s.bound_beta >= 1.0;
        row["dmin_histogram"] = s.dmin_counts;
        row["dmin_histogram_regular"] = s.dmin_counts_regular;
        json tails = json::array();
        for (std::size_t d = 0; d < s.bound_dmin_tail.size(); ++d) {
            std::uint64_t below = 0;
            for (std::size_t v = 0; v + d < s.dmin_counts.size() - 1; ++v) below += s.dmin_counts[v];
            tails.push_back({{"d", d},
                             {"empirical", static_cast<double>(below) / n},
                             {"bound", clamp01(s.bound_dmin_tail[d])},
                             {"vacuous", s.bound_dmin_tail[d] >= 1.0}});
        }
        row["dmin_tails"] = std::move(tails);
        sinks[s.sink] = std::move(row);
    }
    doc["sinks"] = std::move(sinks);
    doc["network_mds_failure_rate"] = static_cast<double>(report.network_mds_failures) / n;
    doc["network_mds_failure_bound"] = clamp01(report.bound_network_mds);
    doc["network_beta_failure_rate"] = static_cast<double>(report.network_beta_failures) / n;
    doc["network_beta_failure_bound"] = clamp01(report.bound_network_beta);
    return doc;
}

json recommendation_to_json(const FieldSizeRecommendation& rec) {
    return {{"degradation", rec.degradation},
            {"family_sum", rec.family_sum},
            {"branch_count", rec.branch_count},
            {"branch_root", rec.branch_root},
            {"minimum", rec.minimum},
            {"recommended_prime", rec.recommended_prime}};
}

} // namespace nec
