#include "nec/generators.hpp"

#include <string>
#include <vector>

namespace nec {

namespace {

std::string subset_name(const std::vector<int>& subset) {
    std::string name = "t";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) name += "_";
        name += std::to_string(subset[i]);
    }
    return name;
}

} // namespace

Network make_combination(int n, int k) {
    if (k < 1 || n < k) fail(errc::bad_params, "combination network needs N >= k >= 1");

    std::vector<std::string> nodes = {"s"};
    std::vector<std::string> sinks;
    std::vector<Channel> channels;
    for (int i = 1; i <= n; ++i) {
        const std::string relay = "i" + std::to_string(i);
        nodes.push_back(relay);
        channels.push_back({"s_" + relay, "s", relay});
    }

    // k-subsets of {1..n} in lexicographic order
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        const std::string sink = subset_name(pick);
        nodes.push_back(sink);
        sinks.push_back(sink);
        for (int relay : pick) {
            const std::string tail = "i" + std::to_string(relay);
            channels.push_back({tail + "_" + sink, tail, sink});
        }
        int j = k - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - k + j + 1) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l)
            pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
    }
    return Network::build(std::move(nodes), "s", std::move(sinks), std::move(channels));
}

Network make_g1() {
    return Network::build({"s", "i", "t"}, "s", {"t"},
                          {{"e1", "s", "i"}, {"e2", "s", "t"}, {"e3", "i", "t"}});
}

Network make_g2() {
    std::vector<Channel> channels;
    for (int i = 1; i <= 4; ++i) channels.push_back({"e" + std::to_string(i), "s", "i"});
    for (int i = 5; i <= 8; ++i) channels.push_back({"e" + std::to_string(i), "i", "t"});
    return Network::build({"s", "i", "t"}, "s", {"t"}, std::move(channels));
}

Network make_g3() {
    std::vector<std::string> nodes = {"s", "t"};
    std::vector<Channel> channels;
    for (int k = 1; k <= 4; ++k) {
        nodes.push_back("i" + std::to_string(k));
        nodes.push_back("j" + std::to_string(k));
    }
    for (int k = 1; k <= 4; ++k)
        channels.push_back({"e" + std::to_string(k), "s", "i" + std::to_string(k)});
    for (int k = 1; k <= 4; ++k)
        channels.push_back({"e" + std::to_string(4 + k), "i" + std::to_string(k), "j" + std::to_string(k)});
    for (int k = 1; k <= 4; ++k)
        channels.push_back({"e" + std::to_string(8 + k), "j" + std::to_string(k), "t"});
    return Network::build(std::move(nodes), "s", {"t"}, std::move(channels));
}

} // namespace nec
