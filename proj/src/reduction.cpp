#include "pbound/reduction.hpp"

#include <bit>
#include <cstdint>
#include <functional>

#include "pbound/bounds.hpp"

namespace pbound {

std::vector<std::pair<NodeId, Network>> gadget_family(const Network& graph,
                                                      const NodeId& v) {
    if (!graph.sessions().empty())
        throw Error("reduction input must be a sessionless graph");
    graph.index_of(v);
    NodeSet anchors = graph.neighbors(v);
    anchors.insert(v);

    std::vector<std::pair<NodeId, Network>> out;
    for (const NodeId& x : anchors) {
        std::vector<Session> sessions;
        int id = 1;
        for (const NodeId& u : graph.nodes())
            if (u != x) sessions.push_back({id++, x, u});
        out.emplace_back(x, Network::build(graph.nodes(), graph.edges(),
                                           std::move(sessions), graph.capacity()));
    }
    return out;
}

std::pair<int, NodeSet> max_independent_set(const Network& graph) {
    const std::size_t n = graph.size();
    if (n > 20)
        throw Error("maximum independent set search is limited to 20 nodes");

    int best = -1;
    std::uint64_t best_mask = 0;
    std::function<void(std::uint64_t, std::uint64_t, int)> rec =
        [&](std::uint64_t remaining, std::uint64_t chosen, int count) {
            if (count + std::popcount(remaining) <= best) return;
            if (!remaining) {
                best = count;
                best_mask = chosen;
                return;
            }
            const int v = std::countr_zero(remaining);
            const std::uint64_t bit = std::uint64_t{1} << v;
            rec(remaining & ~(graph.adjacency_mask(v) | bit), chosen | bit,
                count + 1);
            rec(remaining & ~bit, chosen, count);
        };
    const std::uint64_t full =
        n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    rec(full, 0, 0);

    NodeSet witness;
    std::uint64_t m = best_mask;
    while (m) {
        const int u = std::countr_zero(m);
        m &= m - 1;
        witness.insert(graph.name_of(u));
    }
    return {best, std::move(witness)};
}

bool check_reduction(const Network& graph, const NodeId& v) {
    const auto [target, mis_witness] = max_independent_set(graph);
    const auto gadgets = gadget_family(graph, v);

    int best_opt = -1;
    std::size_t best_idx = 0;
    std::vector<PartitionSolution> solutions;
    for (std::size_t i = 0; i < gadgets.size(); ++i) {
        auto [opt, sol] = opt_exact(gadgets[i].second);
        if (opt > best_opt) {
            best_opt = opt;
            best_idx = i;
        }
        solutions.push_back(std::move(sol));
    }
    if (best_opt != target - 1) return false;

    // Recover the independent set from the winning gadget: the common
    // source plus the sinks of the realized sessions.
    const auto& [x, gadget] = gadgets[best_idx];
    NodeSet recovered{x};
    for (int id : solutions[best_idx].realized)
        recovered.insert(gadget.session(id).sink);
    return recovered.size() == static_cast<std::size_t>(target) &&
           graph.is_independent(recovered);
}

}  // namespace pbound
