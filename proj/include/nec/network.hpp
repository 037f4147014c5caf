#pragma once

#include <string>
#include <vector>

#include "nec/errors.hpp"

namespace nec {

/// A unit-capacity channel of the network. Parallel channels between the
/// same node pair are allowed; ids are unique.
struct Channel {
    std::string id;
    std::string tail;
    std::string head;
};

/// An error pattern: a set of channels, stored as canonical positions in
/// strictly increasing order.
struct ErrorPattern {
    std::vector<int> channels;

    bool operator==(const ErrorPattern& o) const { return channels == o.channels; }
    bool empty() const { return channels.empty(); }
    int size() const { return static_cast<int>(channels.size()); }
    bool contains(int pos) const;
};

/// One member of a channel-disjoint path family on the extended network.
/// A path starts either at an imaginary message channel d'_i (message_index
/// >= 0) or at the imaginary error channel of a real channel (error_channel
/// >= 0); `channels` is the walk of real channels, and for error paths
/// channels.front() == error_channel.
struct DisjointPath {
    int message_index = -1;
    int error_channel = -1;
    std::vector<int> channels;
};

struct PathFamily {
    std::vector<DisjointPath> paths;
};

/// Single-source acyclic directed multigraph with a canonical channel
/// order: nodes in Kahn topological order (ties broken by node id),
/// channels within Out(i) in declaration order. Immutable after
/// construction; all queries are const and thread-safe.
class Network {
public:
    /// Validates and canonicalizes. Throws CyclicGraph, DanglingEndpoint,
    /// SourceHasInputs, SinkHasOutputs, DuplicateChannelId, BadDocument.
    static Network build(std::vector<std::string> nodes, std::string source,
                         std::vector<std::string> sinks, std::vector<Channel> channels);

    const std::vector<std::string>& nodes() const { return node_order_; }
    const std::string& source() const { return source_; }
    const std::vector<std::string>& sinks() const { return sinks_; }
    bool is_sink(const std::string& node) const;

    /// Channels in canonical order; positions index this vector everywhere.
    const std::vector<Channel>& channels() const { return channels_; }
    int channel_count() const { return static_cast<int>(channels_.size()); }
    int channel_pos(const std::string& id) const; // throws UnknownId
    int node_index(const std::string& id) const;  // throws UnknownId

    const std::vector<int>& out_of(const std::string& node) const;
    const std::vector<int>& in_of(const std::string& node) const;

    int internal_node_count() const; // |J| = |V| - 1 - |T|

    /// Max-flow value between two nodes with every channel capacity 1.
    int min_cut_capacity(const std::string& from, const std::string& to) const;

    /// Channels of one minimum cut between `from` and `to`, canonical order
    /// (which is upstream-to-downstream along any path).
    std::vector<int> min_cut_channels(const std::string& from, const std::string& to) const;

    /// Channels from which a directed path to `t` exists (In(t) included).
    std::vector<int> connective_set(const std::string& t) const;

    /// Rank of an error pattern at sink t: min-cut from the auxiliary
    /// source that replaces every pattern channel.
    int pattern_rank(const ErrorPattern& rho, const std::string& t) const;

    /// w + |rho| channel-disjoint paths: w from the imaginary message
    /// channels and one through each channel of rho. Throws
    /// InsufficientFlow when no such family exists.
    PathFamily disjoint_paths(const std::string& t, const ErrorPattern& rho, int w) const;

    ErrorPattern pattern_from_ids(const std::vector<std::string>& ids) const;

private:
    Network() = default;

    std::vector<std::string> node_order_; // topological
    std::string source_;
    std::vector<std::string> sinks_;
    std::vector<Channel> channels_; // canonical order

    // lookups
    std::vector<std::vector<int>> out_; // indexed by node
    std::vector<std::vector<int>> in_;
    // id -> index maps kept sorted for binary search
    std::vector<std::pair<std::string, int>> node_idx_;
    std::vector<std::pair<std::string, int>> channel_idx_;
};

} // namespace nec
