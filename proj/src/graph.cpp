#include "pbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace pbound {

namespace {

constexpr std::size_t kMaxNodes = 64;
// Materializing every cut-set is only meant for desk-scale networks.
constexpr std::size_t kMaxEnumerateNodes = 16;
constexpr std::size_t kMaxSimplePathNodes = 12;

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace

Edge::Edge(NodeId u, NodeId v) {
    if (u == v) throw Error("self-loop '" + u + " " + v + "'");
    if (v < u) std::swap(u, v);
    a = std::move(u);
    b = std::move(v);
}

std::vector<Edge> Path::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        out.emplace_back(nodes[i], nodes[i + 1]);
    return out;
}

Network Network::build(std::vector<NodeId> nodes, std::vector<Edge> edges,
                       std::vector<Session> sessions, Rational capacity) {
    Network net;
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].empty()) throw Error("empty node name");
        if (i > 0 && nodes[i] == nodes[i - 1])
            throw Error("duplicate node '" + nodes[i] + "'");
    }
    if (nodes.size() > kMaxNodes)
        throw Error("networks are limited to 64 nodes");
    net.nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < net.nodes_.size(); ++i)
        net.index_[net.nodes_[i]] = static_cast<int>(i);

    std::sort(edges.begin(), edges.end());
    net.adj_.assign(net.nodes_.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (i > 0 && e == edges[i - 1])
            throw Error("duplicate edge '" + e.a + " " + e.b + "'");
        if (!net.index_.count(e.a)) throw Error("unknown node '" + e.a + "'");
        if (!net.index_.count(e.b)) throw Error("unknown node '" + e.b + "'");
        net.adj_[net.index_[e.a]] |= std::uint64_t{1} << net.index_[e.b];
        net.adj_[net.index_[e.b]] |= std::uint64_t{1} << net.index_[e.a];
    }
    net.edges_ = std::move(edges);

    std::sort(sessions.begin(), sessions.end(),
              [](const Session& x, const Session& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < sessions.size(); ++i) {
        const Session& s = sessions[i];
        if (s.id <= 0)
            throw Error("session id must be a positive integer, got " +
                        std::to_string(s.id));
        if (i > 0 && s.id == sessions[i - 1].id)
            throw Error("duplicate session id " + std::to_string(s.id));
        if (!net.index_.count(s.source))
            throw Error("unknown node '" + s.source + "'");
        if (!net.index_.count(s.sink))
            throw Error("unknown node '" + s.sink + "'");
        if (s.source == s.sink)
            throw Error("session " + std::to_string(s.id) +
                        ": source equals sink '" + s.source + "'");
        net.session_by_id_[s.id] = i;
    }
    net.sessions_ = std::move(sessions);

    if (capacity <= 0) throw Error("capacity must be positive");
    net.capacity_ = std::move(capacity);
    return net;
}

Network Network::parse(const std::string& text) {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    std::vector<Session> sessions;
    Rational capacity(1);
    bool saw_capacity = false;

    std::set<NodeId> node_seen;
    std::set<Edge> edge_seen;
    std::set<int> id_seen;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;

        const std::string where = "line " + std::to_string(lineno) + ": ";
        const std::string& verb = tokens[0];
        auto expect = [&](std::size_t n) {
            if (tokens.size() != n + 1)
                throw Error(where + "'" + verb + "' expects " +
                            std::to_string(n) + " argument(s), got '" +
                            join_tokens(tokens) + "'");
        };

        if (verb == "node") {
            expect(1);
            if (!node_seen.insert(tokens[1]).second)
                throw Error(where + "duplicate node '" + tokens[1] + "'");
            nodes.push_back(tokens[1]);
        } else if (verb == "edge") {
            expect(2);
            if (tokens[1] == tokens[2])
                throw Error(where + "self-loop '" + tokens[1] + " " +
                            tokens[2] + "'");
            for (int i : {1, 2})
                if (!node_seen.count(tokens[i]))
                    throw Error(where + "unknown node '" + tokens[i] + "'");
            Edge e(tokens[1], tokens[2]);
            if (!edge_seen.insert(e).second)
                throw Error(where + "duplicate edge '" + e.a + " " + e.b + "'");
            edges.push_back(std::move(e));
        } else if (verb == "session") {
            expect(3);
            int id = 0;
            try {
                std::size_t pos = 0;
                id = std::stoi(tokens[1], &pos);
                if (pos != tokens[1].size()) id = 0;
            } catch (const std::exception&) {
                id = 0;
            }
            if (id <= 0)
                throw Error(where + "session id must be a positive integer, got '" +
                            tokens[1] + "'");
            if (!id_seen.insert(id).second)
                throw Error(where + "duplicate session id " + std::to_string(id));
            for (int i : {2, 3})
                if (!node_seen.count(tokens[i]))
                    throw Error(where + "unknown node '" + tokens[i] + "'");
            if (tokens[2] == tokens[3])
                throw Error(where + "session " + std::to_string(id) +
                            ": source equals sink '" + tokens[2] + "'");
            sessions.push_back({id, tokens[2], tokens[3]});
        } else if (verb == "capacity") {
            expect(1);
            if (saw_capacity) throw Error(where + "duplicate capacity");
            saw_capacity = true;
            try {
                capacity = parse_rational(tokens[1]);
            } catch (const Error& e) {
                throw Error(where + e.what());
            }
            if (capacity <= 0) throw Error(where + "capacity must be positive");
        } else {
            throw Error(where + "unknown directive '" + verb + "'");
        }
    }
    return build(std::move(nodes), std::move(edges), std::move(sessions),
                 std::move(capacity));
}

std::string Network::serialize() const {
    std::ostringstream out;
    for (const NodeId& n : nodes_) out << "node " << n << "\n";
    for (const Edge& e : edges_) out << "edge " << e.a << " " << e.b << "\n";
    for (const Session& s : sessions_)
        out << "session " << s.id << " " << s.source << " " << s.sink << "\n";
    out << "capacity " << rational_str(capacity_) << "\n";
    return out.str();
}

bool Network::has_node(const NodeId& u) const { return index_.count(u) != 0; }

bool Network::has_edge(const NodeId& u, const NodeId& v) const {
    if (u == v) return false;
    const int ui = index_of(u);
    const int vi = index_of(v);
    return (adj_[ui] >> vi) & 1;
}

int Network::index_of(const NodeId& u) const {
    const auto it = index_.find(u);
    if (it == index_.end()) throw Error("unknown node '" + u + "'");
    return it->second;
}

const Session& Network::session(int id) const {
    const auto it = session_by_id_.find(id);
    if (it == session_by_id_.end())
        throw Error("unknown session id " + std::to_string(id));
    return sessions_[it->second];
}

int Network::edge_index(const Edge& e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e))
        throw Error("unknown edge '" + e.a + " " + e.b + "'");
    return static_cast<int>(it - edges_.begin());
}

NodeSet Network::neighbors(const NodeId& u) const {
    const int ui = index_of(u);
    NodeSet out;
    std::uint64_t m = adj_[ui];
    while (m) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        out.insert(nodes_[v]);
    }
    return out;
}

std::uint64_t Network::node_mask(const NodeSet& s) const {
    std::uint64_t mask = 0;
    for (const NodeId& n : s) mask |= std::uint64_t{1} << index_of(n);
    return mask;
}

bool Network::is_independent(const NodeSet& s) const {
    const std::uint64_t mask = node_mask(s);
    std::uint64_t m = mask;
    while (m) {
        const int u = std::countr_zero(m);
        m &= m - 1;
        if (adj_[u] & mask) return false;
    }
    return true;
}

CutSet Network::cut_from_mask(std::uint64_t side_mask) const {
    // Keep the half that does not contain the smallest node.
    if (side_mask & 1) {
        const std::uint64_t full =
            nodes_.size() == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << nodes_.size()) - 1;
        side_mask = full & ~side_mask;
    }
    CutSet cs;
    std::uint64_t m = side_mask;
    while (m) {
        const int u = std::countr_zero(m);
        m &= m - 1;
        cs.side.insert(nodes_[u]);
    }
    for (const Edge& e : edges_) {
        const bool ina = (side_mask >> index_.at(e.a)) & 1;
        const bool inb = (side_mask >> index_.at(e.b)) & 1;
        if (ina != inb) cs.edges.insert(e);
    }
    return cs;
}

CutSet Network::cut_set(const NodeSet& side) const {
    if (side.empty()) throw Error("cut side must be nonempty");
    const std::uint64_t mask = node_mask(side);
    if (side.size() == nodes_.size())
        throw Error("cut side must be a proper subset of the nodes");
    return cut_from_mask(mask);
}

std::vector<CutSet> Network::enumerate_cut_sets() const {
    if (nodes_.size() < 2)
        throw Error("cut-set enumeration needs at least 2 nodes");
    if (nodes_.size() > kMaxEnumerateNodes)
        throw Error("cut-set enumeration is limited to 16 nodes");
    const std::size_t n = nodes_.size();
    std::vector<CutSet> out;
    out.reserve((std::size_t{1} << (n - 1)) - 1);
    // Sides excluding the smallest node are already canonical and cover
    // every cut exactly once.
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (n - 1)); ++m)
        out.push_back(cut_from_mask(m << 1));
    std::sort(out.begin(), out.end(),
              [](const CutSet& x, const CutSet& y) { return x.side < y.side; });
    return out;
}

std::vector<int> Network::bfs_distances(int start) const {
    std::vector<int> dist(nodes_.size(), -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        std::uint64_t m = adj_[u];
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int Network::distance(const NodeId& u, const NodeId& v) const {
    return bfs_distances(index_of(v))[index_of(u)];
}

std::vector<Path> Network::shortest_paths(const NodeId& u, const NodeId& v) const {
    const int ui = index_of(u);
    const int vi = index_of(v);
    if (ui == vi) throw Error("path endpoints must differ, got '" + u + "'");
    const std::vector<int> dist = bfs_distances(vi);
    if (dist[ui] < 0)
        throw Error("no path from '" + u + "' to '" + v + "': infinite distance");

    std::vector<Path> out;
    std::vector<NodeId> cur{nodes_[ui]};
    // Descending distance-to-target at each hop enumerates exactly the
    // shortest paths, in lexicographic order.
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == vi) {
            out.push_back(Path{cur});
            return;
        }
        std::uint64_t m = adj_[at];
        while (m) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            if (dist[w] != dist[at] - 1) continue;
            cur.push_back(nodes_[w]);
            self(self, w);
            cur.pop_back();
        }
    };
    dfs(dfs, ui);
    return out;
}

std::vector<Path> Network::simple_paths(const NodeId& u, const NodeId& v) const {
    const int ui = index_of(u);
    const int vi = index_of(v);
    if (ui == vi) throw Error("path endpoints must differ, got '" + u + "'");
    if (nodes_.size() > kMaxSimplePathNodes)
        throw Error("simple-path enumeration is limited to 12 nodes");

    std::vector<Path> out;
    std::vector<NodeId> cur{nodes_[ui]};
    std::uint64_t visited = std::uint64_t{1} << ui;
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == vi) {
            out.push_back(Path{cur});
            return;
        }
        std::uint64_t m = adj_[at] & ~visited;
        while (m) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            visited |= std::uint64_t{1} << w;
            cur.push_back(nodes_[w]);
            self(self, w);
            cur.pop_back();
            visited &= ~(std::uint64_t{1} << w);
        }
    };
    dfs(dfs, ui);
    return out;
}

bool Network::operator==(const Network& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_ &&
           sessions_ == other.sessions_ && capacity_ == other.capacity_;
}

}  // namespace pbound
