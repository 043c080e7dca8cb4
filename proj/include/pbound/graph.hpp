#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pbound/error.hpp"
#include "pbound/rational.hpp"

namespace pbound {

// Nodes are named by non-empty whitespace-free tokens and ordered
// lexicographically throughout.
using NodeId = std::string;
using NodeSet = std::set<NodeId>;

// Undirected edge; endpoints are kept in lexicographic order.
struct Edge {
    NodeId a;
    NodeId b;
    Edge(NodeId u, NodeId v);
    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

struct Session {
    int id = 0;
    NodeId source;
    NodeId sink;
    auto operator<=>(const Session&) const = default;
    bool operator==(const Session&) const = default;
};

// Simple path stored as its node sequence; paths compare lexicographically.
struct Path {
    std::vector<NodeId> nodes;
    std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    std::vector<Edge> edges() const;
    auto operator<=>(const Path&) const = default;
    bool operator==(const Path&) const = default;
};

// Node bipartition in canonical form: `side` is the half that does NOT
// contain the lexicographically smallest node, so the two presentations
// of the same cut compare equal.
struct CutSet {
    NodeSet side;
    EdgeSet edges;
    auto operator<=>(const CutSet&) const = default;
    bool operator==(const CutSet&) const = default;
};

// Immutable undirected unicast network: simple graph, uniform edge
// capacity, and a list of (source, sink) sessions. All operations are
// pure and safe to call concurrently.
class Network {
public:
    // Parses the line-based description (see README for the grammar).
    // Throws Error with a line number on syntax problems and with the
    // offending entity on semantic ones.
    static Network parse(const std::string& text);

    static Network build(std::vector<NodeId> nodes, std::vector<Edge> edges,
                         std::vector<Session> sessions,
                         Rational capacity = Rational(1));

    // Emits nodes, edges, sessions (each block sorted) and the capacity;
    // parse(serialize()) reproduces the network exactly.
    std::string serialize() const;

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Session>& sessions() const { return sessions_; }
    const Rational& capacity() const { return capacity_; }

    std::size_t size() const { return nodes_.size(); }
    bool has_node(const NodeId& u) const;
    bool has_edge(const NodeId& u, const NodeId& v) const;
    int index_of(const NodeId& u) const;
    const NodeId& name_of(std::size_t i) const { return nodes_[i]; }
    std::uint64_t adjacency_mask(std::size_t i) const { return adj_[i]; }
    const Session& session(int id) const;
    int edge_index(const Edge& e) const;

    NodeSet neighbors(const NodeId& u) const;

    // True iff no edge has both endpoints in s.
    bool is_independent(const NodeSet& s) const;

    // Canonical cut-set of a nonempty proper side; cut_set(side) and
    // cut_set(complement) return identical values.
    CutSet cut_set(const NodeSet& side) const;

    // All 2^(|V|-1) - 1 distinct cut-sets, ordered by canonical side.
    std::vector<CutSet> enumerate_cut_sets() const;

    // Hop distance; -1 when disconnected.
    int distance(const NodeId& u, const NodeId& v) const;

    // Every simple u-v path of minimum length, in lexicographic order.
    std::vector<Path> shortest_paths(const NodeId& u, const NodeId& v) const;

    // Every simple u-v path (exhaustive DFS; intended for small networks).
    std::vector<Path> simple_paths(const NodeId& u, const NodeId& v) const;

    bool operator==(const Network& other) const;

    std::uint64_t node_mask(const NodeSet& s) const;

private:
    Network() = default;
    CutSet cut_from_mask(std::uint64_t side_mask) const;
    std::vector<int> bfs_distances(int start) const;

    std::vector<NodeId> nodes_;
    std::vector<Edge> edges_;
    std::vector<Session> sessions_;
    Rational capacity_{1};
    std::map<NodeId, int> index_;
    std::vector<std::uint64_t> adj_;
    std::map<int, std::size_t> session_by_id_;
};

}  // namespace pbound
