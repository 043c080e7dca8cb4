#include "support.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "pbound/bounds.hpp"

namespace pbound::testing {

namespace {

int find_root(std::vector<int>& parent, int u) {
    while (parent[u] != u) u = parent[u];
    return u;
}

}  // namespace

int oracle_opt_subsets(const Network& net) {
    const std::set<int> restricted = restrict_sessions(net);
    const std::vector<int> ids(restricted.begin(), restricted.end());
    const int m = static_cast<int>(ids.size());
    if (m > 15) throw std::runtime_error("subset oracle limited to 15 sessions");
    const int n = static_cast<int>(net.size());

    std::vector<std::pair<int, int>> endpoint;
    for (int id : ids) {
        const Session& s = net.session(id);
        endpoint.emplace_back(net.index_of(s.source), net.index_of(s.sink));
    }

    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        std::vector<int> parent(n);
        for (int u = 0; u < n; ++u) parent[u] = u;
        for (int i = 0; i < m; ++i)
            if ((subset >> i) & 1)
                parent[find_root(parent, endpoint[i].first)] =
                    find_root(parent, endpoint[i].second);
        std::vector<std::uint64_t> class_mask(n, 0);
        for (int u = 0; u < n; ++u)
            class_mask[find_root(parent, u)] |= std::uint64_t{1} << u;
        bool feasible = true;
        for (int u = 0; u < n && feasible; ++u)
            if (net.adjacency_mask(u) & class_mask[find_root(parent, u)])
                feasible = false;
        if (feasible) best = std::max(best, std::popcount(subset));
    }
    return best;
}

int oracle_opt_partitions(const Network& net) {
    const int n = static_cast<int>(net.size());
    std::vector<std::pair<int, int>> endpoint;
    for (const Session& s : net.sessions())
        endpoint.emplace_back(net.index_of(s.source), net.index_of(s.sink));

    std::vector<std::uint64_t> blocks;
    int best = 0;
    std::function<void(int)> assign = [&](int u) {
        if (u == n) {
            int realized = 0;
            for (const auto& [si, ti] : endpoint)
                for (std::uint64_t b : blocks)
                    if (((b >> si) & 1) && ((b >> ti) & 1)) {
                        ++realized;
                        break;
                    }
            best = std::max(best, realized);
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << u;
        // Index loop: recursive calls grow and shrink the vector, so
        // references must not be held across them.
        const std::size_t existing = blocks.size();
        for (std::size_t bi = 0; bi < existing; ++bi) {
            if (net.adjacency_mask(u) & blocks[bi]) continue;
            blocks[bi] |= bit;
            assign(u + 1);
            blocks[bi] &= ~bit;
        }
        blocks.push_back(bit);
        assign(u + 1);
        blocks.pop_back();
    };
    assign(0);
    return best;
}

long long oracle_simple_path_count(const Network& net, const NodeId& u,
                                   const NodeId& v) {
    NodeSet visited{u};
    long long count = 0;
    std::function<void(const NodeId&)> walk = [&](const NodeId& at) {
        if (at == v) {
            ++count;
            return;
        }
        for (const NodeId& next : net.neighbors(at)) {
            if (visited.count(next)) continue;
            visited.insert(next);
            walk(next);
            visited.erase(next);
        }
    };
    walk(u);
    return count;
}

Network random_network(std::mt19937& rng, int max_nodes, int max_sessions) {
    const int n = 2 + static_cast<int>(rng() % (max_nodes - 1));
    std::vector<NodeId> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(std::string(1, 'a' + i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) edges.emplace_back(nodes[i], nodes[j]);
    const int k = 1 + static_cast<int>(rng() % max_sessions);
    std::vector<Session> sessions;
    for (int i = 0; i < k; ++i) {
        const int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % (n - 1));
        if (b >= a) ++b;
        sessions.push_back({i + 1, nodes[a], nodes[b]});
    }
    return Network::build(std::move(nodes), std::move(edges), std::move(sessions));
}

Network random_graph(std::mt19937& rng, int max_nodes) {
    const int n = 2 + static_cast<int>(rng() % (max_nodes - 1));
    std::vector<NodeId> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(std::string(1, 'a' + i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) edges.emplace_back(nodes[i], nodes[j]);
    return Network::build(std::move(nodes), std::move(edges), {});
}

const std::vector<ExpectedRow>& fig3_expected_table() {
    static const std::vector<ExpectedRow> table{
        {{"v1"}, {2, 3, 4, 5}, {}, {{"v2"}}},
        {{"v1", "v2"}, {1, 2, 3, 4, 5}, {}, {}},
        {{"v1", "v3"}, {3, 4, 5}, {{"v1", "v4"}}, {}},
        {{"v1", "v5"}, {2, 4}, {{"v1", "v6"}, {"v1", "v7"}}, {}},
        {{"v1", "v2", "v3"},
         {1, 3, 4, 5},
         {{"v1", "v2", "v4"}, {"v1", "v3", "v4"}},
         {}},
        {{"v1", "v2", "v5"},
         {1, 2, 4},
         {{"v1", "v2", "v6"}, {"v1", "v2", "v7"}},
         {}},
        {{"v1", "v3", "v5"},
         {4},
         {{"v1", "v3", "v6"},
          {"v1", "v3", "v7"},
          {"v1", "v4", "v5"},
          {"v1", "v4", "v6"},
          {"v1", "v4", "v7"}},
         {}},
        {{"v1", "v5", "v6"},
         {2, 3},
         {{"v1", "v5", "v7"}, {"v1", "v6", "v7"}},
         {}},
        {{"v1", "v2", "v3", "v4"}, {1, 2, 3, 4, 5}, {}, {}},
        {{"v1", "v2", "v3", "v5"},
         {1, 4},
         {{"v1", "v2", "v3", "v6"},
          {"v1", "v2", "v3", "v7"},
          {"v1", "v2", "v4", "v5"},
          {"v1", "v2", "v4", "v6"},
          {"v1", "v2", "v4", "v7"},
          {"v1", "v3", "v4", "v5"},
          {"v1", "v3", "v4", "v6"},
          {"v1", "v3", "v4", "v7"}},
         {}},
        {{"v1", "v2", "v5", "v6"},
         {1, 2, 3},
         {{"v1", "v2", "v5", "v7"}, {"v1", "v2", "v6", "v7"}},
         {}},
        {{"v1", "v3", "v5", "v6"},
         {3},
         {{"v1", "v3", "v5", "v7"},
          {"v1", "v3", "v6", "v7"},
          {"v1", "v4", "v5", "v6"},
          {"v1", "v4", "v5", "v7"},
          {"v1", "v4", "v6", "v7"}},
         {}},
        {{"v1", "v5", "v6", "v7"}, {2, 3, 4, 5}, {}, {}},
        {{"v1", "v2", "v3", "v4", "v5"},
         {1, 2, 4},
         {{"v1", "v2", "v3", "v4", "v6"}, {"v1", "v2", "v3", "v4", "v7"}},
         {{"v5"}}},
        {{"v1", "v2", "v3", "v5", "v6"},
         {1, 3},
         {{"v1", "v2", "v3", "v5", "v7"},
          {"v1", "v2", "v3", "v6", "v7"},
          {"v1", "v2", "v4", "v5", "v6"},
          {"v1", "v2", "v4", "v5", "v7"},
          {"v1", "v2", "v4", "v6", "v7"},
          {"v1", "v3", "v4", "v5", "v6"},
          {"v1", "v3", "v4", "v5", "v7"},
          {"v1", "v3", "v4", "v6", "v7"}},
         {}},
        {{"v1", "v2", "v5", "v6", "v7"}, {1, 2, 3, 4, 5}, {}, {}},
        {{"v1", "v3", "v5", "v6", "v7"},
         {3, 4, 5},
         {{"v1", "v4", "v5", "v6", "v7"}},
         {}},
        {{"v1", "v2", "v3", "v4", "v5", "v6"},
         {1, 2},
         {{"v1", "v2", "v3", "v4", "v5", "v7"},
          {"v1", "v2", "v3", "v4", "v6", "v7"}},
         {{"v5"}, {"v6"}, {"v5", "v6"}}},
        {{"v1", "v2", "v3", "v5", "v6", "v7"},
         {1, 3, 4, 5},
         {{"v1", "v2", "v4", "v5", "v6", "v7"},
          {"v1", "v3", "v4", "v5", "v6", "v7"}},
         {{"v3"}}},
    };
    return table;
}

}  // namespace pbound::testing
