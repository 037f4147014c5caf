#include <doctest.h>

#include "nec/generators.hpp"
#include "nec/kernels.hpp"
#include "testnets.hpp"

using namespace nec;

TEST_CASE("zero local kernels collapse to indicators") {
    const Network net = make_g2();
    const Field f5(5);
    const LocalKernels lk(net, 2);
    const KernelMap kernels = propagate(net, 2, lk, f5);
    for (int pos = 0; pos < net.channel_count(); ++pos) {
        Vec expect(static_cast<std::size_t>(kernel_len(2, net)), 0);
        expect[static_cast<std::size_t>(channel_coord(2, pos))] = 1;
        CHECK(kernels[static_cast<std::size_t>(pos)] == expect);
    }
}

TEST_CASE("single channel one-step recursion") {
    const Network net = Network::build({"s", "t"}, "s", {"t"}, {{"e", "s", "t"}});
    const Field f7(7);
    LocalKernels lk(net, 1);
    lk.set(message_coord(0), 0, 4);
    const KernelMap kernels = propagate(net, 1, lk, f7);
    CHECK(kernels[0] == Vec{4, 1});
}

TEST_CASE("the worked relay kernels") {
    const Code code = necfix::reference_relay_code();
    const Network& net = *code.net;
    CHECK(code.extended[static_cast<std::size_t>(net.channel_pos("e1"))] == Vec{1, 1, 0, 0});
    CHECK(code.extended[static_cast<std::size_t>(net.channel_pos("e2"))] == Vec{1, 0, 1, 0});
    CHECK(code.extended[static_cast<std::size_t>(net.channel_pos("e3"))] == Vec{1, 1, 0, 1});
}

TEST_CASE("transfer matrix route equals propagation") {
    const Field f3(3);
    {
        const Code code = necfix::reference_relay_code();
        const KernelMap via_matrix = transfer_matrix_kernels(*code.net, 1, code.local, f3);
        CHECK(via_matrix == code.extended);
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Network net = necfix::random_network(seed);
        const Field f(seed % 2 == 0 ? 5 : 7);
        const int w = 1 + static_cast<int>(seed % 3);
        const LocalKernels lk = necfix::random_local_kernels(net, w, f, seed * 31 + 1);
        CHECK(propagate(net, w, lk, f) == transfer_matrix_kernels(net, w, lk, f));
    }
}

TEST_CASE("causality: no coordinate on non-upstream channels") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Network net = necfix::random_network(seed);
        const Field f5(5);
        const LocalKernels lk = necfix::random_local_kernels(net, 1, f5, seed + 99);
        const KernelMap kernels = propagate(net, 1, lk, f5);
        for (int e = 0; e < net.channel_count(); ++e) {
            const Vec& k = kernels[static_cast<std::size_t>(e)];
            CHECK(k[static_cast<std::size_t>(channel_coord(1, e))] == 1);
            // channels at or after e in canonical order are never upstream
            for (int d = e + 1; d < net.channel_count(); ++d)
                CHECK(k[static_cast<std::size_t>(channel_coord(1, d))] == 0);
        }
    }
}

TEST_CASE("restriction modes") {
    const Code code = necfix::reference_relay_code();
    const Network& net = *code.net;
    const Vec& f_e3 = code.extended[static_cast<std::size_t>(net.channel_pos("e3"))];

    // compact over the empty pattern keeps the message coordinates
    CHECK(restrict_kernel(f_e3, net, 1, ErrorPattern{}, RestrictMode::compact) == Vec{1});

    // zeroing outside everything changes nothing
    ErrorPattern all;
    for (int pos = 0; pos < net.channel_count(); ++pos) all.channels.push_back(pos);
    CHECK(restrict_kernel(f_e3, net, 1, all, RestrictMode::zeroed) == f_e3);

    const ErrorPattern rho = net.pattern_from_ids({"e3"});
    CHECK(restrict_kernel(f_e3, net, 1, rho, RestrictMode::compact) == Vec{1, 1});
}

TEST_CASE("zeroed plus complement restores the kernel") {
    const Field f5(5);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Network net = necfix::random_network(seed);
        const LocalKernels lk = necfix::random_local_kernels(net, 2, f5, seed);
        const KernelMap kernels = propagate(net, 2, lk, f5);
        // a couple of patterns per network
        for (std::uint64_t pseed = 0; pseed < 3; ++pseed) {
            ErrorPattern rho;
            for (int pos = 0; pos < net.channel_count(); ++pos)
                if (necfix::rng_at(seed * 17 + pseed, static_cast<std::uint64_t>(pos)) % 3 == 0)
                    rho.channels.push_back(pos);
            for (const Vec& k : kernels) {
                const Vec z = restrict_kernel(k, net, 2, rho, RestrictMode::zeroed);
                const Vec c = restrict_kernel(k, net, 2, rho, RestrictMode::complement);
                Vec sum(k.size(), 0);
                for (std::size_t i = 0; i < k.size(); ++i) sum[i] = f5.add(z[i], c[i]);
                CHECK(sum == k);
            }
        }
    }
}

TEST_CASE("incomplete kernel coordinates are rejected") {
    const Network net = make_g1();
    LocalKernels lk(net, 1);
    // e3 is fed by e1, not by e2
    CHECK_THROWS_AS(lk.set(channel_coord(1, net.channel_pos("e2")), net.channel_pos("e3"), 1), error);
    CHECK_THROWS_AS(lk.get(channel_coord(1, net.channel_pos("e2")), net.channel_pos("e3")), error);
}

TEST_CASE("index legend order") {
    const Network net = make_g1();
    CHECK(index_legend(net, 2) ==
          std::vector<std::string>{"d'1", "d'2", "e1", "e2", "e3"});
}
