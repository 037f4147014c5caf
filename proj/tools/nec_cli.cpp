#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nec/analysis.hpp"
#include "nec/codec.hpp"
#include "nec/construct.hpp"
#include "nec/generators.hpp"
#include "nec/json_io.hpp"
#include "nec/patterns.hpp"
#include "nec/randomcode.hpp"

namespace {

using nec::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) nec::fail(nec::errc::bad_document, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) nec::fail(nec::errc::bad_document, "cannot write '" + path + "'");
    out << text;
}

// --beta accepts "max", a single integer, or per-sink "t1=2,t2=1".
std::map<std::string, int> parse_betas(const std::string& spec, const nec::Network& net, int w) {
    std::map<std::string, int> betas;
    auto delta_of = [&](const std::string& t) {
        return net.min_cut_capacity(net.source(), t) - w;
    };
    if (spec.empty() || spec == "max") {
        for (const std::string& t : net.sinks()) betas[t] = delta_of(t);
        return betas;
    }
    if (spec.find('=') == std::string::npos) {
        const int beta = std::stoi(spec);
        for (const std::string& t : net.sinks()) betas[t] = beta;
        return betas;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            nec::fail(nec::errc::bad_params, "expected sink=beta in '" + item + "'");
        betas[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    }
    for (const std::string& t : net.sinks())
        if (!betas.count(t)) nec::fail(nec::errc::bad_params, "no beta for sink '" + t + "'");
    return betas;
}

nec::Field resolve_field(const std::string& spec, const nec::Network& net, int w,
                         const std::map<std::string, int>& betas) {
    if (spec == "auto") {
        const nec::FamilySizeReport sizes = nec::family_sizes(net, w, betas);
        return nec::Field(sizes.recommended_field);
    }
    return nec::Field(std::stoull(spec));
}

std::vector<nec::Scalar> parse_scalars(const std::string& csv, const nec::Field& f) {
    std::vector<nec::Scalar> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(f.from_int(std::stoll(item)));
    return values;
}

int run_gen(const std::string& kind, int n, int k, const std::string& out) {
    nec::Network net = [&] {
        if (kind == "combination") return nec::make_combination(n, k);
        if (kind == "g1") return nec::make_g1();
        if (kind == "g2") return nec::make_g2();
        if (kind == "g3") return nec::make_g3();
        nec::fail(nec::errc::bad_params, "unknown network kind '" + kind + "'");
    }();
    write_output(out, nec::network_document(net));
    return 0;
}

int run_analyze(const std::string& path, int w, const std::string& beta_spec,
                std::optional<int> degradation, bool as_json, std::uint64_t ceiling) {
    const nec::Network net = nec::parse_network(read_file(path));
    const auto betas = parse_betas(beta_spec, net, w);
    const nec::FamilySizeReport report = nec::family_sizes(net, w, betas, ceiling);

    if (as_json) {
        json doc = nec::family_size_report_to_json(report);
        if (degradation)
            doc["recommendation"] =
                nec::recommendation_to_json(nec::field_size_recommendation(net, w, *degradation, ceiling));
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::printf("%-12s %6s %6s %6s %10s %12s %12s\n", "sink", "C_t", "delta", "beta", "|R_t(b)|",
                "C(|E_t|,b)", "C(|E|,b)");
    for (const nec::FamilySizeRow& row : report.rows)
        std::printf("%-12s %6d %6d %6d %10llu %12llu %12llu\n", row.sink.c_str(), row.min_cut,
                    row.delta, row.beta, static_cast<unsigned long long>(row.family_size),
                    static_cast<unsigned long long>(row.choose_connective),
                    static_cast<unsigned long long>(row.choose_all));
    std::printf("sums: |R| = %llu, C(|E_t|,b) = %llu, C(|E|,b) = %llu\n",
                static_cast<unsigned long long>(report.sum_family),
                static_cast<unsigned long long>(report.sum_choose_connective),
                static_cast<unsigned long long>(report.sum_choose_all));
    std::printf("smallest sufficient prime field: %llu\n",
                static_cast<unsigned long long>(report.recommended_field));
    if (degradation) {
        const auto rec = nec::field_size_recommendation(net, w, *degradation, ceiling);
        std::printf("degradation %d field bound: min(%g, %g) = %g -> prime %llu\n", rec.degradation,
                    rec.branch_count, rec.branch_root, rec.minimum,
                    static_cast<unsigned long long>(rec.recommended_prime));
    }
    return 0;
}

int run_construct(const std::string& path, int w, const std::string& beta_spec,
                  const std::string& field_spec, const std::string& out, std::uint64_t ceiling) {
    auto net = std::make_shared<const nec::Network>(nec::parse_network(read_file(path)));
    const auto betas = parse_betas(beta_spec, *net, w);
    const nec::Field field = resolve_field(field_spec, *net, w, betas);
    const nec::Code code = nec::construct_code(net, w, betas, field, ceiling);
    write_output(out, nec::code_document(code));
    return 0;
}

int run_verify(const std::string& path, bool as_json, bool check_prop2) {
    const nec::Code code = nec::parse_code(read_file(path));
    const std::vector<nec::SinkReport> reports = nec::full_report(code);

    bool prop2_all = true;
    if (check_prop2)
        for (const nec::SinkReport& r : reports)
            if (r.regular && !nec::prop2_consistency(code, r.sink)) prop2_all = false;

    if (as_json) {
        json doc;
        doc["field"] = code.field.size();
        doc["rate"] = code.w;
        doc["sinks"] = nec::sink_reports_to_json(reports);
        if (check_prop2) doc["distance_formulas_agree"] = prop2_all;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("%-12s %6s %6s %8s %6s %6s %6s\n", "sink", "C_t", "delta", "regular", "d_min",
                    "slack", "mds");
        for (const nec::SinkReport& r : reports) {
            std::printf("%-12s %6d %6d %8s %6s %6s %6s\n", r.sink.c_str(), r.min_cut, r.delta,
                        r.regular ? "yes" : "no", r.d_min ? std::to_string(*r.d_min).c_str() : "-",
                        r.singleton_slack ? std::to_string(*r.singleton_slack).c_str() : "-",
                        r.is_mds ? "yes" : "no");
        }
        if (check_prop2)
            std::printf("distance formulas agree: %s\n", prop2_all ? "yes" : "no");
    }

    const bool all_regular = std::all_of(reports.begin(), reports.end(),
                                         [](const nec::SinkReport& r) { return r.regular; });
    return all_regular && prop2_all ? 0 : 1;
}

int run_random(const std::string& path, int w, const std::string& field_spec,
               const std::string& beta_spec, std::uint64_t trials, std::uint64_t seed, bool as_json,
               std::uint64_t ceiling) {
    auto net = std::make_shared<const nec::Network>(nec::parse_network(read_file(path)));
    const auto betas = parse_betas(beta_spec, *net, w);
    const nec::Field field = resolve_field(field_spec, *net, w, betas);
    const nec::FailureReport report = nec::estimate_failures(net, w, field, betas, trials, seed, ceiling);
    const json doc = nec::failure_report_to_json(report);
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::printf("trials %llu, seed %llu, field %llu\n",
                static_cast<unsigned long long>(report.trials),
                static_cast<unsigned long long>(report.seed),
                static_cast<unsigned long long>(report.field_size));
    std::printf("%-12s %18s %18s %10s\n", "sink", "empirical", "bound", "margin");
    for (const nec::SinkFailureStats& s : report.sinks) {
        const double emp = static_cast<double>(s.mds_failures) / static_cast<double>(report.trials);
        const double bound = std::min(1.0, s.bound_mds);
        std::printf("%-12s %18.6f %18.6f %10.6f  (mds)\n", s.sink.c_str(), emp, bound, bound - emp);
        const double emp_b = static_cast<double>(s.beta_failures) / static_cast<double>(report.trials);
        const double bound_b = std::min(1.0, s.bound_beta);
        std::printf("%-12s %18.6f %18.6f %10.6f  (beta=%d)\n", s.sink.c_str(), emp_b, bound_b,
                    bound_b - emp_b, s.beta);
    }
    const double net_emp =
        static_cast<double>(report.network_mds_failures) / static_cast<double>(report.trials);
    std::printf("%-12s %18.6f %18.6f %10.6f  (mds)\n", "network", net_emp,
                std::min(1.0, report.bound_network_mds),
                std::min(1.0, report.bound_network_mds) - net_emp);
    return 0;
}

int run_simulate(const std::string& path, const std::string& message_csv,
                 const std::string& errors_spec, const std::string& pattern_spec,
                 std::uint64_t seed, bool as_text) {
    const nec::Code code = nec::parse_code(read_file(path));
    const nec::Network& net = *code.net;
    const nec::Vec message = parse_scalars(message_csv, code.field);

    nec::ErrorPattern pattern;
    nec::Vec errors(static_cast<std::size_t>(net.channel_count()), 0);
    bool explicit_errors = false;
    if (!errors_spec.empty()) {
        explicit_errors = true;
        std::stringstream ss(errors_spec);
        std::string item;
        std::vector<std::string> ids;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                nec::fail(nec::errc::bad_params, "expected channel=value in '" + item + "'");
            const int pos = net.channel_pos(item.substr(0, eq));
            errors[static_cast<std::size_t>(pos)] = code.field.from_int(std::stoll(item.substr(eq + 1)));
            if (errors[static_cast<std::size_t>(pos)] != 0) ids.push_back(item.substr(0, eq));
        }
        pattern = net.pattern_from_ids(ids);
    } else if (!pattern_spec.empty()) {
        std::stringstream ss(pattern_spec);
        std::string item;
        std::vector<std::string> ids;
        while (std::getline(ss, item, ',')) ids.push_back(item);
        pattern = net.pattern_from_ids(ids);
    }

    std::vector<nec::SinkVerdict> verdicts;
    if (explicit_errors) {
        const std::vector<nec::Scalar> symbols = nec::encode(code, message, errors);
        for (const std::string& t : net.sinks()) {
            nec::SinkVerdict v;
            v.sink = t;
            std::vector<nec::Scalar> received;
            for (int pos : net.in_of(t)) received.push_back(symbols[static_cast<std::size_t>(pos)]);
            const nec::DecodeOutcome outcome = nec::decode(code, t, received);
            v.status = outcome.status;
            v.radius = outcome.radius;
            v.recovered = outcome.status == nec::DecodeStatus::ok && outcome.message == message;
            const nec::SinkReport report = nec::sink_report(code, t);
            if (report.d_min)
                v.guaranteed = net.pattern_rank(pattern, t) <= (*report.d_min - 1) / 2;
            verdicts.push_back(std::move(v));
        }
    } else {
        verdicts = nec::roundtrip(code, message, pattern, seed);
    }

    json doc = json::array();
    bool all_ok = true;
    for (const nec::SinkVerdict& v : verdicts) {
        const char* status = v.status == nec::DecodeStatus::ok
                                 ? "ok"
                                 : v.status == nec::DecodeStatus::ambiguous ? "ambiguous"
                                                                            : "undecodable";
        doc.push_back({{"sink", v.sink},
                       {"status", status},
                       {"recovered", v.recovered},
                       {"guaranteed", v.guaranteed},
                       {"radius", v.radius}});
        if (!v.recovered) all_ok = false;
    }
    if (as_text)
        for (const json& row : doc)
            std::printf("%-12s status=%s recovered=%s guaranteed=%s radius=%d\n",
                        row["sink"].get<std::string>().c_str(),
                        row["status"].get<std::string>().c_str(),
                        row["recovered"].get<bool>() ? "yes" : "no",
                        row["guaranteed"].get<bool>() ? "yes" : "no", row["radius"].get<int>());
    else
        std::cout << doc.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear network error correction codes: construction, analysis, simulation"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a built-in network document");
    std::string gen_kind;
    int gen_n = 0, gen_k = 0;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "combination | g1 | g2 | g3")->required();
    gen->add_option("--n", gen_n, "relay count for combination networks");
    gen->add_option("--k", gen_k, "subset size for combination networks");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "pattern family sizes and field bounds");
    std::string an_path, an_beta = "max";
    int an_rate = 1;
    int an_degradation = -1;
    bool an_json = false;
    std::uint64_t an_ceiling = nec::kDefaultEnumerationCeiling;
    analyze->add_option("network", an_path, "network document")->required();
    analyze->add_option("--rate", an_rate, "information rate w")->required();
    analyze->add_option("--beta", an_beta, "uniform beta, sink=beta list, or 'max'");
    analyze->add_option("--degradation", an_degradation, "also bound the field for degradation d");
    analyze->add_flag("--json", an_json, "JSON output");
    analyze->add_option("--ceiling", an_ceiling, "pattern enumeration ceiling");

    // construct
    auto* construct = app.add_subcommand("construct", "build a code deterministically");
    std::string co_path, co_beta = "max", co_field = "auto", co_out;
    int co_rate = 1;
    std::uint64_t co_ceiling = nec::kDefaultEnumerationCeiling;
    construct->add_option("network", co_path, "network document")->required();
    construct->add_option("--rate", co_rate, "information rate w")->required();
    construct->add_option("--beta", co_beta, "uniform beta, sink=beta list, or 'max'");
    construct->add_option("--field", co_field, "prime size or 'auto'");
    construct->add_option("-o,--output", co_out, "code output path (default stdout)");
    construct->add_option("--ceiling", co_ceiling, "pattern enumeration ceiling");

    // verify
    auto* verify = app.add_subcommand("verify", "analyze a stored code");
    std::string ve_path;
    bool ve_json = false, ve_prop2 = false;
    verify->add_option("code", ve_path, "code document")->required();
    verify->add_flag("--json", ve_json, "JSON output");
    verify->add_flag("--prop2", ve_prop2, "also cross-check the distance formulas");

    // random
    auto* random = app.add_subcommand("random", "random-coding failure estimation");
    std::string ra_path, ra_beta = "max", ra_field;
    int ra_rate = 1;
    std::uint64_t ra_trials = 1000, ra_seed = 0, ra_ceiling = nec::kDefaultEnumerationCeiling;
    bool ra_json = false;
    random->add_option("network", ra_path, "network document")->required();
    random->add_option("--rate", ra_rate, "information rate w")->required();
    random->add_option("--field", ra_field, "prime size or 'auto'")->required();
    random->add_option("--beta", ra_beta, "uniform beta, sink=beta list, or 'max'");
    random->add_option("--trials", ra_trials, "number of random codes");
    random->add_option("--seed", ra_seed, "stream seed");
    random->add_flag("--json", ra_json, "JSON output");
    random->add_option("--ceiling", ra_ceiling, "pattern enumeration ceiling");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "encode, corrupt, and decode");
    std::string si_path, si_message, si_errors, si_pattern;
    std::uint64_t si_seed = 0;
    bool si_text = false;
    simulate->add_option("code", si_path, "code document")->required();
    simulate->add_option("--message", si_message, "comma-separated source symbols")->required();
    simulate->add_option("--errors", si_errors, "explicit channel=value list");
    simulate->add_option("--pattern", si_pattern, "channels drawing random nonzero errors");
    simulate->add_option("--seed", si_seed, "error value seed");
    simulate->add_flag("--text", si_text, "human-readable lines instead of JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_k, gen_out);
        if (analyze->parsed())
            return run_analyze(an_path, an_rate, an_beta,
                               an_degradation >= 0 ? std::optional<int>(an_degradation) : std::nullopt,
                               an_json, an_ceiling);
        if (construct->parsed())
            return run_construct(co_path, co_rate, co_beta, co_field, co_out, co_ceiling);
        if (verify->parsed()) return run_verify(ve_path, ve_json, ve_prop2);
        if (random->parsed())
            return run_random(ra_path, ra_rate, ra_field, ra_beta, ra_trials, ra_seed, ra_json,
                              ra_ceiling);
        if (simulate->parsed())
            return run_simulate(si_path, si_message, si_errors, si_pattern, si_seed, si_text);
    } catch (const nec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case nec::errc::field_too_small:
        case nec::errc::ambiguous:
        case nec::errc::insufficient_flow:
            return 1;
        default:
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
