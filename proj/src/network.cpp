#include "nec/network.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace nec {

bool ErrorPattern::contains(int pos) const {
    return std::binary_search(channels.begin(), channels.end(), pos);
}

namespace {

int lookup(const std::vector<std::pair<std::string, int>>& idx, const std::string& key,
           const char* what) {
    auto it = std::lower_bound(idx.begin(), idx.end(), key,
                               [](const auto& p, const std::string& k) { return p.first < k; });
    if (it == idx.end() || it->first != key)
        fail(errc::unknown_id, std::string(what) + " '" + key + "' not in network");
    return it->second;
}

// Unit-capacity max-flow by BFS augmentation. Arc scan order follows
// insertion order, so identical inputs produce identical flows.
class FlowGraph {
public:
    explicit FlowGraph(int n) : adj_(n) {}

    int add_arc(int from, int to, int cap) {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap, static_cast<int>(arcs_.size()) + 1});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, static_cast<int>(arcs_.size()) - 1});
        return static_cast<int>(arcs_.size()) - 2;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            std::vector<int> pred_arc(adj_.size(), -1);
            std::vector<char> seen(adj_.size(), 0);
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty() && !seen[t]) {
                int u = q.front();
                q.pop();
                for (int a : adj_[u]) {
                    const Arc& arc = arcs_[a];
                    if (arc.cap <= 0 || seen[arc.to]) continue;
                    seen[arc.to] = 1;
                    pred_arc[arc.to] = a;
                    q.push(arc.to);
                }
            }
            if (!seen[t]) break;
            // bottleneck along the path (capacities may exceed 1 on the
            // super-source arc)
            int aug = INT_MAX_BOTTLENECK;
            for (int v = t; v != s;) {
                const Arc& arc = arcs_[pred_arc[v]];
                aug = std::min(aug, arc.cap);
                v = arcs_[arc.rev].to;
            }
            for (int v = t; v != s;) {
                Arc& arc = arcs_[pred_arc[v]];
                arc.cap -= aug;
                arcs_[arc.rev].cap += aug;
                v = arcs_[arc.rev].to;
            }
            total += aug;
        }
        return total;
    }

    int flow_through(int arc_index) const { return arcs_[arc_index + 1].cap; }

    /// Nodes reachable from s in the residual graph (after max_flow).
    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : adj_[u]) {
                const Arc& arc = arcs_[a];
                if (arc.cap <= 0 || seen[arc.to]) continue;
                seen[arc.to] = 1;
                q.push(arc.to);
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    static constexpr int INT_MAX_BOTTLENECK = 1 << 30;
    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
};

} // namespace

Network Network::build(std::vector<std::string> nodes, std::string source,
                       std::vector<std::string> sinks, std::vector<Channel> channels) {
    if (nodes.empty()) fail(errc::bad_document, "no nodes");
    if (sinks.empty()) fail(errc::bad_document, "no sinks");

    std::set<std::string> node_set(nodes.begin(), nodes.end());
    if (node_set.size() != nodes.size()) fail(errc::bad_document, "duplicate node id");
    if (!node_set.count(source)) fail(errc::dangling_endpoint, "source '" + source + "' not a node");
    std::set<std::string> sink_set(sinks.begin(), sinks.end());
    for (const std::string& t : sinks)
        if (!node_set.count(t)) fail(errc::dangling_endpoint, "sink '" + t + "' not a node");
    if (sink_set.count(source)) fail(errc::bad_document, "source listed as sink");

    std::set<std::string> channel_ids;
    for (const Channel& c : channels) {
        if (!channel_ids.insert(c.id).second)
            fail(errc::duplicate_channel_id, "channel '" + c.id + "' declared twice");
        if (!node_set.count(c.tail))
            fail(errc::dangling_endpoint, "channel '" + c.id + "' tail '" + c.tail + "' not a node");
        if (!node_set.count(c.head))
            fail(errc::dangling_endpoint, "channel '" + c.id + "' head '" + c.head + "' not a node");
        if (c.head == source)
            fail(errc::source_has_inputs, "channel '" + c.id + "' enters the source");
        if (sink_set.count(c.tail))
            fail(errc::sink_has_outputs, "channel '" + c.id + "' leaves sink '" + c.tail + "'");
    }

    // Kahn's method with lexicographic tie-break gives the node order; the
    // canonical channel order follows from it with declaration order inside
    // each Out(i).
    std::map<std::string, int> indeg;
    std::map<std::string, std::vector<int>> out_decl; // declaration order
    for (const std::string& n : nodes) indeg[n] = 0;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        ++indeg[channels[i].head];
        out_decl[channels[i].tail].push_back(static_cast<int>(i));
    }
    std::set<std::string> ready;
    for (const auto& [n, d] : indeg)
        if (d == 0) ready.insert(n);
    std::vector<std::string> order;
    while (!ready.empty()) {
        std::string n = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(n);
        for (int ci : out_decl[n])
            if (--indeg[channels[static_cast<std::size_t>(ci)].head] == 0)
                ready.insert(channels[static_cast<std::size_t>(ci)].head);
    }
    if (order.size() != nodes.size()) fail(errc::cyclic_graph, "channel graph contains a cycle");

    Network net;
    net.node_order_ = std::move(order);
    net.source_ = std::move(source);
    net.sinks_ = std::move(sinks);
    for (const std::string& n : net.node_order_)
        for (int ci : out_decl[n]) net.channels_.push_back(channels[static_cast<std::size_t>(ci)]);

    for (std::size_t i = 0; i < net.node_order_.size(); ++i)
        net.node_idx_.emplace_back(net.node_order_[i], static_cast<int>(i));
    std::sort(net.node_idx_.begin(), net.node_idx_.end());
    for (std::size_t i = 0; i < net.channels_.size(); ++i)
        net.channel_idx_.emplace_back(net.channels_[i].id, static_cast<int>(i));
    std::sort(net.channel_idx_.begin(), net.channel_idx_.end());

    net.out_.resize(net.node_order_.size());
    net.in_.resize(net.node_order_.size());
    for (std::size_t i = 0; i < net.channels_.size(); ++i) {
        net.out_[static_cast<std::size_t>(net.node_index(net.channels_[i].tail))].push_back(
            static_cast<int>(i));
        net.in_[static_cast<std::size_t>(net.node_index(net.channels_[i].head))].push_back(
            static_cast<int>(i));
    }
    return net;
}

bool Network::is_sink(const std::string& node) const {
    return std::find(sinks_.begin(), sinks_.end(), node) != sinks_.end();
}

int Network::channel_pos(const std::string& id) const { return lookup(channel_idx_, id, "channel"); }
int Network::node_index(const std::string& id) const { return lookup(node_idx_, id, "node"); }

const std::vector<int>& Network::out_of(const std::string& node) const {
    return out_[static_cast<std::size_t>(node_index(node))];
}
const std::vector<int>& Network::in_of(const std::string& node) const {
    return in_[static_cast<std::size_t>(node_index(node))];
}

int Network::internal_node_count() const {
    return static_cast<int>(node_order_.size()) - 1 - static_cast<int>(sinks_.size());
}

int Network::min_cut_capacity(const std::string& from, const std::string& to) const {
    if (from == to) fail(errc::bad_params, "min cut endpoints coincide");
    FlowGraph graph(static_cast<int>(node_order_.size()));
    for (const Channel& c : channels_)
        graph.add_arc(node_index(c.tail), node_index(c.head), 1);
    return graph.max_flow(node_index(from), node_index(to));
}

std::vector<int> Network::min_cut_channels(const std::string& from, const std::string& to) const {
    if (from == to) fail(errc::bad_params, "min cut endpoints coincide");
    FlowGraph graph(static_cast<int>(node_order_.size()));
    std::vector<int> arc_of(channels_.size());
    for (std::size_t i = 0; i < channels_.size(); ++i)
        arc_of[i] = graph.add_arc(node_index(channels_[i].tail), node_index(channels_[i].head), 1);
    graph.max_flow(node_index(from), node_index(to));
    std::vector<char> source_side = graph.residual_reachable(node_index(from));
    std::vector<int> cut;
    for (std::size_t i = 0; i < channels_.size(); ++i) {
        if (source_side[static_cast<std::size_t>(node_index(channels_[i].tail))] &&
            !source_side[static_cast<std::size_t>(node_index(channels_[i].head))])
            cut.push_back(static_cast<int>(i));
    }
    return cut;
}

std::vector<int> Network::connective_set(const std::string& t) const {
    const int target = node_index(t);
    // nodes that reach t
    std::vector<char> reaches(node_order_.size(), 0);
    reaches[static_cast<std::size_t>(target)] = 1;
    // canonical order is topological, so one reverse sweep settles it
    for (int i = static_cast<int>(channels_.size()) - 1; i >= 0; --i) {
        const Channel& c = channels_[static_cast<std::size_t>(i)];
        if (reaches[static_cast<std::size_t>(node_index(c.head))])
            reaches[static_cast<std::size_t>(node_index(c.tail))] = 1;
    }
    std::vector<int> result;
    for (std::size_t i = 0; i < channels_.size(); ++i)
        if (reaches[static_cast<std::size_t>(node_index(channels_[i].head))])
            result.push_back(static_cast<int>(i));
    return result;
}

int Network::pattern_rank(const ErrorPattern& rho, const std::string& t) const {
    if (!is_sink(t)) fail(errc::bad_params, "'" + t + "' is not a sink");
    if (rho.empty()) return 0;
    const int n = static_cast<int>(node_order_.size());
    const int aux_source = n;
    FlowGraph graph(n + 1);
    for (std::size_t i = 0; i < channels_.size(); ++i) {
        if (rho.contains(static_cast<int>(i))) continue; // deleted
        graph.add_arc(node_index(channels_[i].tail), node_index(channels_[i].head), 1);
    }
    for (int pos : rho.channels)
        graph.add_arc(aux_source, node_index(channels_[static_cast<std::size_t>(pos)].head), 1);
    return graph.max_flow(aux_source, node_index(t));
}

PathFamily Network::disjoint_paths(const std::string& t, const ErrorPattern& rho, int w) const {
    if (!is_sink(t)) fail(errc::bad_params, "'" + t + "' is not a sink");
    if (w < 0) fail(errc::bad_params, "negative rate");
    for (int pos : rho.channels)
        if (pos < 0 || pos >= channel_count()) fail(errc::bad_params, "pattern channel out of range");

    const int n = static_cast<int>(node_order_.size());
    const int super = n;                  // super-source
    const int first_marker = n + 1;       // one marker node per pattern channel
    FlowGraph graph(n + 1 + rho.size());

    if (w > 0) graph.add_arc(super, node_index(source_), w);
    for (int k = 0; k < rho.size(); ++k) {
        const Channel& c = channels_[static_cast<std::size_t>(rho.channels[static_cast<std::size_t>(k)])];
        graph.add_arc(super, first_marker + k, 1);
        graph.add_arc(first_marker + k, node_index(c.head), 1);
    }
    std::vector<int> arc_of(channels_.size(), -1);
    for (std::size_t i = 0; i < channels_.size(); ++i) {
        if (rho.contains(static_cast<int>(i))) continue; // consumed by its own path
        arc_of[i] = graph.add_arc(node_index(channels_[i].tail), node_index(channels_[i].head), 1);
    }

    const int want = w + rho.size();
    const int flow = graph.max_flow(super, node_index(t));
    if (flow != want)
        fail(errc::insufficient_flow, "requested " + std::to_string(want) +
                                          " disjoint paths, achievable flow is " + std::to_string(flow));

    // Decompose: walk flow-carrying channels from each entry point,
    // preferring the canonically first unused channel at every node.
    std::vector<char> used(channels_.size(), 0);
    const int target = node_index(t);
    auto walk = [&](int start_node, std::vector<int>& hops) {
        int at = start_node;
        while (at != target) {
            bool advanced = false;
            for (int pos : out_[static_cast<std::size_t>(at)]) {
                if (used[static_cast<std::size_t>(pos)] || arc_of[static_cast<std::size_t>(pos)] < 0)
                    continue;
                if (graph.flow_through(arc_of[static_cast<std::size_t>(pos)]) <= 0) continue;
                used[static_cast<std::size_t>(pos)] = 1;
                hops.push_back(pos);
                at = node_index(channels_[static_cast<std::size_t>(pos)].head);
                advanced = true;
                break;
            }
            if (!advanced) fail(errc::insufficient_flow, "flow decomposition stalled");
        }
    };

    PathFamily family;
    for (int i = 0; i < w; ++i) {
        DisjointPath p;
        p.message_index = i;
        walk(node_index(source_), p.channels);
        family.paths.push_back(std::move(p));
    }
    for (int k = 0; k < rho.size(); ++k) {
        const int pos = rho.channels[static_cast<std::size_t>(k)];
        DisjointPath p;
        p.error_channel = pos;
        p.channels.push_back(pos);
        walk(node_index(channels_[static_cast<std::size_t>(pos)].head), p.channels);
        family.paths.push_back(std::move(p));
    }
    return family;
}

ErrorPattern Network::pattern_from_ids(const std::vector<std::string>& ids) const {
    ErrorPattern rho;
    for (const std::string& id : ids) rho.channels.push_back(channel_pos(id));
    std::sort(rho.channels.begin(), rho.channels.end());
    rho.channels.erase(std::unique(rho.channels.begin(), rho.channels.end()), rho.channels.end());
    return rho;
}

} // namespace nec
