#include <doctest.h>

#include "nec/analysis.hpp"
#include "nec/construct.hpp"
#include "nec/generators.hpp"
#include "testnets.hpp"

using namespace nec;

namespace {

std::shared_ptr<const Network> shared(Network net) {
    return std::make_shared<const Network>(std::move(net));
}

std::map<std::string, int> uniform_betas(const Network& net, int beta) {
    std::map<std::string, int> betas;
    for (const std::string& t : net.sinks()) betas[t] = beta;
    return betas;
}

} // namespace

TEST_CASE("relay network MDS construction") {
    auto net = shared(make_g1());
    const Code code = construct_code(net, 1, uniform_betas(*net, 1), Field(3));
    CHECK(is_regular(code));
    CHECK(min_distance(code, "t") == 2);
    const SinkReport report = sink_report(code, "t");
    CHECK(report.is_mds);

    // this deterministic run lands on the reference kernels
    const Code reference = necfix::reference_relay_code();
    CHECK(code.extended == reference.extended);
}

TEST_CASE("construction is deterministic") {
    auto net = shared(make_combination(3, 2));
    const Code a = construct_code(net, 1, uniform_betas(*net, 1), Field(13));
    const Code b = construct_code(net, 1, uniform_betas(*net, 1), Field(13));
    CHECK(a.extended == b.extended);
    for (int pos = 0; pos < net->channel_count(); ++pos)
        for (int in : a.local.inputs_of(pos)) CHECK(a.local.get(in, pos) == b.local.get(in, pos));
}

TEST_CASE("degenerate beta zero builds a linear multicast") {
    for (Network base : {make_g1(), make_g2(), make_combination(3, 2)}) {
        auto net = shared(std::move(base));
        const int w = net->min_cut_capacity("s", net->sinks().front());
        const Field f(next_prime(net->sinks().size()));
        const Code code = construct_code(net, w, uniform_betas(*net, 0), f);
        CHECK(is_regular(code));
        for (const std::string& t : code.net->sinks()) {
            const SinkReport report = sink_report(code, t);
            CHECK(report.delta == 0);
            CHECK(report.d_min == 1);
            CHECK(report.is_mds);
        }
    }
}

TEST_CASE("combination network MDS with the sufficient field") {
    auto net = shared(make_combination(3, 2));
    // sum of |R_t(1)| over the three sinks is 12; next prime is 13
    std::map<std::string, int> betas = uniform_betas(*net, 1);
    FamilySizeReport sizes = family_sizes(*net, 1, betas);
    CHECK(sizes.sum_family == 12);
    CHECK(sizes.recommended_field == 13);
    const Code code = construct_code(net, 1, betas, Field(13));
    for (const std::string& t : net->sinks()) {
        const SinkReport report = sink_report(code, t);
        CHECK(report.regular);
        CHECK(report.d_min == 2);
        CHECK(report.is_mds);
    }
}

TEST_CASE("per-sink beta assignments") {
    auto net = shared(make_combination(3, 2));
    std::map<std::string, int> betas;
    int toggle = 0;
    for (const std::string& t : net->sinks()) betas[t] = (toggle++ % 2);
    const Code code = construct_code(net, 1, betas, Field(11));
    for (const std::string& t : net->sinks()) {
        CHECK(min_distance(code, t) >= betas[t] + 1);
    }
}

TEST_CASE("stepwise builder keeps the cut invariant") {
    auto net = shared(make_g1());
    CodeBuilder builder(net, 1, uniform_betas(*net, 1), Field(3));
    CHECK(builder.cut_invariant_holds()); // identity initialization
    while (!builder.done()) {
        builder.step();
        CHECK(builder.cut_invariant_holds());
    }
    // final cuts inside In(t)
    for (const CutState& state : builder.cuts()) {
        for (int token : state.cut) {
            REQUIRE(token >= 1); // w = 1, so no message token may remain
            REQUIRE(token < 1 + net->channel_count());
            const int pos = token - 1;
            CHECK(net->channels()[static_cast<std::size_t>(pos)].head == state.sink);
        }
    }
    const Code code = builder.finish();
    CHECK(sink_report(code, "t").is_mds);
}

TEST_CASE("corrupting a kernel breaks the invariant") {
    auto net = shared(make_g1());
    CodeBuilder builder(net, 1, uniform_betas(*net, 1), Field(3));
    builder.step();
    builder.step();
    CHECK(builder.cut_invariant_holds());
    builder.set_kernel_unchecked(net->channel_pos("e1"), Vec(4, 0));
    CHECK_FALSE(builder.cut_invariant_holds());
}

TEST_CASE("rate above the min cut is rejected") {
    auto net = shared(make_g1());
    CHECK_THROWS_AS(construct_code(net, 3, uniform_betas(*net, 0), Field(3)), error);
    try {
        construct_code(net, 3, uniform_betas(*net, 0), Field(3));
    } catch (const error& e) {
        CHECK(e.code() == errc::rate_too_high);
    }
}

TEST_CASE("beta above the redundancy is rejected") {
    auto net = shared(make_g1());
    CHECK_THROWS_AS(construct_code(net, 1, uniform_betas(*net, 2), Field(7)), error);
}

TEST_CASE("a genuinely short field raises FieldTooSmall") {
    // the 4-relay combination multicast at rate 2 is known to need q > 2
    auto net = shared(make_combination(4, 2));
    try {
        construct_code(net, 2, uniform_betas(*net, 0), Field(2));
        FAIL("construction over F_2 should exhaust");
    } catch (const error& e) {
        CHECK(e.code() == errc::field_too_small);
    }
    // the same build over F_3 succeeds
    const Code code = construct_code(net, 2, uniform_betas(*net, 0), Field(3));
    CHECK(is_regular(code));
}

TEST_CASE("fields below the sufficient bound may still work") {
    // bound for the relay example is 3, yet F_2 happens to succeed
    auto net = shared(make_g1());
    const Code code = construct_code(net, 1, uniform_betas(*net, 1), Field(2));
    CHECK(sink_report(code, "t").is_mds);
}

TEST_CASE("constructed codes agree with propagation") {
    auto net = shared(make_g2());
    const Code code = construct_code(net, 2, uniform_betas(*net, 2), Field(29));
    CHECK(propagate(*net, 2, code.local, code.field) == code.extended);
    CHECK(is_regular(code));
    CHECK(min_distance(code, "t") == 3);
}
