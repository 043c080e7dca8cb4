#include "pbound/properties.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace pbound {

namespace {

int crossings(const Path& p, const EdgeSet& f) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
        c += static_cast<int>(f.count(Edge(p.nodes[i], p.nodes[i + 1])));
    return c;
}

const Session& connected_session(const Network& net, int session_id) {
    const Session& s = net.session(session_id);
    if (net.distance(s.source, s.sink) < 0)
        throw Error("session " + std::to_string(session_id) +
                    ": endpoints are disconnected");
    return s;
}

void validate_edges(const Network& net, const EdgeSet& f) {
    for (const Edge& e : f) net.edge_index(e);
}

bool edge_disjoint(const EdgeSet& a, const EdgeSet& b) {
    const EdgeSet& small = a.size() <= b.size() ? a : b;
    const EdgeSet& large = a.size() <= b.size() ? b : a;
    return std::none_of(small.begin(), small.end(),
                        [&](const Edge& e) { return large.count(e) != 0; });
}

int max_shortest_crossings(const Network& net, const Session& s, const EdgeSet& f) {
    int best = 0;
    for (const Path& p : net.shortest_paths(s.source, s.sink))
        best = std::max(best, crossings(p, f));
    return best;
}

std::vector<int> mask_nodes(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

Network fig3_network() {
    const std::vector<std::vector<NodeId>> parts{
        {"v1", "v2"}, {"v3", "v4"}, {"v5", "v6", "v7"}};
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (const auto& part : parts) nodes.insert(nodes.end(), part.begin(), part.end());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (const NodeId& u : parts[i])
                for (const NodeId& v : parts[j]) edges.emplace_back(u, v);
    const std::vector<Session> sessions{{1, "v2", "v1"},
                                        {2, "v3", "v4"},
                                        {3, "v5", "v6"},
                                        {4, "v6", "v7"},
                                        {5, "v5", "v7"}};
    return Network::build(std::move(nodes), std::move(edges), sessions);
}

bool is_orthogonal(const Network& net, const EdgeSet& f, int session_id) {
    validate_edges(net, f);
    const Session& s = connected_session(net, session_id);
    for (const Path& p : net.shortest_paths(s.source, s.sink))
        if (crossings(p, f) > 1) return false;
    return true;
}

std::pair<int, int> crossing_profile(const Network& net, int session_id,
                                     const EdgeSet& f) {
    validate_edges(net, f);
    const Session& s = connected_session(net, session_id);
    const int max_shortest = max_shortest_crossings(net, s, f);
    int min_simple = -1;
    for (const Path& p : net.simple_paths(s.source, s.sink)) {
        const int c = crossings(p, f);
        if (min_simple < 0 || c < min_simple) min_simple = c;
        if (min_simple == 0) break;
    }
    return {max_shortest, min_simple};
}

bool is_compatible(const Network& net, const EdgeSet& f, int session_id) {
    const auto [max_shortest, min_simple] = crossing_profile(net, session_id, f);
    return max_shortest == min_simple;
}

std::pair<bool, std::vector<std::pair<CutSet, std::set<int>>>>
check_p1(const Network& net) {
    std::vector<std::pair<CutSet, std::set<int>>> rows;
    bool holds = true;
    for (CutSet& cs : net.enumerate_cut_sets()) {
        std::set<int> non_orth;
        for (const Session& s : net.sessions())
            if (!is_orthogonal(net, cs.edges, s.id)) non_orth.insert(s.id);
        if (non_orth.empty()) holds = false;
        rows.emplace_back(std::move(cs), std::move(non_orth));
    }
    return {holds, std::move(rows)};
}

std::vector<NodeSet> disjoint_cut_partners(const Network& net,
                                           const NodeSet& alpha) {
    const CutSet own = net.cut_set(alpha);
    std::vector<NodeSet> out;
    for (const CutSet& cs : net.enumerate_cut_sets()) {
        if (cs == own) continue;
        if (edge_disjoint(cs.edges, own.edges)) out.push_back(cs.side);
    }
    std::sort(out.begin(), out.end(), [](const NodeSet& x, const NodeSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

std::pair<bool, std::vector<P2Witness>> check_p2(const Network& net) {
    const std::vector<CutSet> cuts = net.enumerate_cut_sets();
    bool holds = true;
    std::vector<P2Witness> witnesses;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        for (std::size_t j = i + 1; j < cuts.size(); ++j) {
            if (!edge_disjoint(cuts[i].edges, cuts[j].edges)) continue;
            EdgeSet f = cuts[i].edges;
            f.insert(cuts[j].edges.begin(), cuts[j].edges.end());
            P2Witness w;
            w.alpha = cuts[i].side;
            w.beta = cuts[j].side;
            w.compatible_all = true;
            for (const Session& s : net.sessions()) {
                if (!is_compatible(net, f, s.id)) {
                    w.compatible_all = false;
                    break;
                }
            }
            for (const Session& s : net.sessions())
                if (max_shortest_crossings(net, s, f) > 2)
                    w.heavy_sessions.insert(s.id);
            if (w.compatible_all && w.heavy_sessions.size() < 2) holds = false;
            witnesses.push_back(std::move(w));
        }
    }
    return {holds, std::move(witnesses)};
}

namespace {

// Parts of a complete multipartite network, recovered as the connected
// components of the complement graph.
std::vector<std::vector<int>> multipartite_parts(const Network& net) {
    const std::size_t n = net.size();
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts;
    for (std::size_t start = 0; start < n; ++start) {
        if (part_of[start] >= 0) continue;
        std::vector<int> members;
        std::deque<int> queue{static_cast<int>(start)};
        part_of[start] = static_cast<int>(parts.size());
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            members.push_back(u);
            std::uint64_t m =
                full & ~net.adjacency_mask(u) & ~(std::uint64_t{1} << u);
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                if (part_of[v] < 0) {
                    part_of[v] = part_of[u];
                    queue.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        parts.push_back(std::move(members));
    }
    for (const auto& part : parts) {
        std::uint64_t mask = 0;
        for (int u : part) mask |= std::uint64_t{1} << u;
        for (int u : part)
            if (net.adjacency_mask(u) & mask)
                throw Error("table1 requires a complete multipartite network");
    }
    return parts;
}

std::vector<std::vector<int>> part_symmetry_group(
    const std::vector<std::vector<int>>& parts, std::size_t n) {
    std::vector<int> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);

    std::vector<std::vector<int>> gens;
    for (const auto& part : parts)
        for (std::size_t i = 0; i + 1 < part.size(); ++i) {
            std::vector<int> g = identity;
            std::swap(g[part[i]], g[part[i + 1]]);
            gens.push_back(std::move(g));
        }
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            if (parts[a].size() != parts[b].size()) continue;
            std::vector<int> g = identity;
            for (std::size_t i = 0; i < parts[a].size(); ++i) {
                g[parts[a][i]] = parts[b][i];
                g[parts[b][i]] = parts[a][i];
            }
            gens.push_back(std::move(g));
        }

    std::set<std::vector<int>> closed{identity};
    std::deque<std::vector<int>> queue{identity};
    while (!queue.empty()) {
        const std::vector<int> p = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<int> q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = g[p[i]];
            if (closed.insert(q).second) {
                if (closed.size() > 20000)
                    throw Error("table1 symmetry group is too large");
                queue.push_back(std::move(q));
            }
        }
    }
    return {closed.begin(), closed.end()};
}

}  // namespace

std::vector<OrthogonalityRow> table1_report(const Network& net) {
    const std::size_t n = net.size();
    if (n < 2 || n > 16)
        throw Error("table1 is limited to networks with 2 to 16 nodes");
    const auto parts = multipartite_parts(net);

    // Sessions must be exactly the intra-part pairs, once each.
    std::set<std::pair<int, int>> intra;
    for (const auto& part : parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                intra.insert({part[i], part[j]});
    std::set<std::pair<int, int>> covered;
    for (const Session& s : net.sessions()) {
        const int si = net.index_of(s.source);
        const int ti = net.index_of(s.sink);
        const std::pair<int, int> pair = std::minmax(si, ti);
        if (!intra.count(pair) || !covered.insert(pair).second)
            throw Error("table1 requires sessions to be exactly the intra-part "
                        "node pairs");
    }
    if (covered.size() != intra.size())
        throw Error("table1 requires sessions to be exactly the intra-part "
                    "node pairs");

    const auto group = part_symmetry_group(parts, n);
    auto apply = [&](const std::vector<int>& perm, std::uint64_t mask) {
        std::uint64_t out = 0;
        while (mask) {
            const int u = std::countr_zero(mask);
            mask &= mask - 1;
            out |= std::uint64_t{1} << perm[u];
        }
        return out;
    };

    // Group the sides containing the smallest node into symmetry classes;
    // the class key is the lexicographically smallest image that still
    // contains that node.
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::map<std::uint64_t, std::vector<std::uint64_t>> classes;
    for (std::uint64_t rest = 0; rest + 1 < (std::uint64_t{1} << (n - 1)); ++rest) {
        const std::uint64_t mask = (rest << 1) | 1;
        if (mask == full) continue;
        std::uint64_t key = mask;
        std::vector<int> key_nodes = mask_nodes(mask);
        for (const auto& perm : group) {
            const std::uint64_t image = apply(perm, mask);
            if (!(image & 1)) continue;
            std::vector<int> image_nodes = mask_nodes(image);
            if (image_nodes < key_nodes) {
                key = image;
                key_nodes = std::move(image_nodes);
            }
        }
        classes[key].push_back(mask);
    }

    auto side_of = [&](std::uint64_t mask) {
        NodeSet out;
        for (int u : mask_nodes(mask)) out.insert(net.name_of(u));
        return out;
    };

    std::vector<OrthogonalityRow> rows;
    for (const auto& [key, members] : classes) {
        OrthogonalityRow row;
        row.alpha = side_of(key);
        const CutSet cs = net.cut_set(row.alpha);
        for (const Session& s : net.sessions())
            if (!is_orthogonal(net, cs.edges, s.id)) row.non_orthogonal.insert(s.id);
        row.partners = disjoint_cut_partners(net, row.alpha);
        for (std::uint64_t member : members)
            if (member != key) row.symmetric_cases.push_back(side_of(member));
        std::sort(row.symmetric_cases.begin(), row.symmetric_cases.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const OrthogonalityRow& x, const OrthogonalityRow& y) {
                  if (x.alpha.size() != y.alpha.size())
                      return x.alpha.size() < y.alpha.size();
                  return x.alpha < y.alpha;
              });
    return rows;
}

}  // namespace pbound
