#include "pbound/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace pbound {

std::set<int> restrict_sessions(const Network& net) {
    std::set<int> out;
    for (const Session& s : net.sessions())
        if (!net.has_edge(s.source, s.sink)) out.insert(s.id);
    return out;
}

std::set<int> conf(const Network& net, int k) {
    const std::set<int> restricted = restrict_sessions(net);
    if (!restricted.count(k))
        throw Error("session " + std::to_string(k) +
                    " is not in the restricted session set");
    const Session& sk = net.session(k);
    const NodeSet nb = net.neighbors(sk.source);
    std::set<int> out;
    for (int l : restricted) {
        const Session& sl = net.session(l);
        const bool sink_on_k = sl.sink == sk.source || sl.sink == sk.sink;
        const bool source_on_k = sl.source == sk.source || sl.source == sk.sink;
        if ((sink_on_k && nb.count(sl.source)) ||
            (source_on_k && nb.count(sl.sink)))
            out.insert(l);
    }
    return out;
}

int opt_recursion(const Network& net) {
    const std::set<int> restricted = restrict_sessions(net);
    const std::vector<int> ids(restricted.begin(), restricted.end());
    const int m = static_cast<int>(ids.size());
    if (m > 62) throw Error("opt recursion is limited to 62 restricted sessions");

    std::unordered_map<int, int> pos;
    for (int i = 0; i < m; ++i) pos[ids[i]] = i;
    std::vector<std::uint64_t> conflict(m, 0);
    for (int i = 0; i < m; ++i)
        for (int l : conf(net, ids[i]))
            conflict[i] |= std::uint64_t{1} << pos[l];

    std::unordered_map<std::uint64_t, int> memo;
    std::function<int(std::uint64_t)> rec = [&](std::uint64_t s) -> int {
        if (!s) return 0;
        const auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        const int k = std::countr_zero(s);  // smallest remaining id
        const std::uint64_t bit = std::uint64_t{1} << k;
        const int skip = rec(s & ~bit);
        const int take = 1 + rec(s & ~(conflict[k] | bit));
        const int best = std::max(skip, take);
        memo.emplace(s, best);
        return best;
    };
    return rec(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

namespace {

struct MergeState {
    std::vector<int> parent;
    std::vector<std::uint64_t> class_mask;

    int find(int u) const {
        while (parent[u] != u) u = parent[u];
        return u;
    }
};

}  // namespace

std::pair<int, PartitionSolution> opt_exact(const Network& net) {
    const std::size_t n = net.size();
    const std::set<int> restricted = restrict_sessions(net);
    const std::vector<int> ids(restricted.begin(), restricted.end());
    const int m = static_cast<int>(ids.size());

    std::vector<std::pair<int, int>> endpoint(m);
    for (int i = 0; i < m; ++i) {
        const Session& s = net.session(ids[i]);
        endpoint[i] = {net.index_of(s.source), net.index_of(s.sink)};
    }

    MergeState init;
    init.parent.resize(n);
    init.class_mask.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        init.parent[u] = static_cast<int>(u);
        init.class_mask[u] = std::uint64_t{1} << u;
    }

    auto independent = [&](std::uint64_t mask) {
        std::uint64_t rest = mask;
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (net.adjacency_mask(u) & mask) return false;
        }
        return true;
    };

    int best = -1;
    std::vector<int> best_parent;
    // Include-first branch and bound over the restricted sessions; a
    // session whose endpoints are already merged is taken for free.
    std::function<void(int, int, const MergeState&)> rec =
        [&](int idx, int count, const MergeState& st) {
            if (count + (m - idx) <= best) return;
            if (idx == m) {
                best = count;
                best_parent = st.parent;
                return;
            }
            const auto [si, ti] = endpoint[idx];
            const int ra = st.find(si);
            const int rb = st.find(ti);
            if (ra == rb) {
                rec(idx + 1, count + 1, st);
                return;
            }
            const std::uint64_t merged = st.class_mask[ra] | st.class_mask[rb];
            if (independent(merged)) {
                MergeState child = st;
                child.parent[ra] = rb;
                child.class_mask[rb] = merged;
                rec(idx + 1, count + 1, child);
            }
            rec(idx + 1, count, st);
        };
    rec(0, 0, init);

    MergeState final_state = init;
    final_state.parent = best_parent;
    std::map<int, NodeSet> classes;
    for (std::size_t u = 0; u < n; ++u)
        classes[final_state.find(static_cast<int>(u))].insert(net.name_of(u));

    PartitionSolution sol;
    for (auto& [root, members] : classes) sol.parts.push_back(std::move(members));
    std::sort(sol.parts.begin(), sol.parts.end(),
              [](const NodeSet& x, const NodeSet& y) {
                  return *x.begin() < *y.begin();
              });
    for (const Session& s : net.sessions())
        if (final_state.find(net.index_of(s.source)) ==
            final_state.find(net.index_of(s.sink)))
            sol.realized.insert(s.id);
    return {best, std::move(sol)};
}

BoundReport partition_bound(const Network& net) {
    if (net.sessions().empty()) throw Error("network has no sessions");
    const auto [opt, sol] = opt_exact(net);
    BoundReport report;
    report.edge_count = static_cast<int>(net.edges().size());
    report.session_count = static_cast<int>(net.sessions().size());
    report.opt_size = opt;
    report.bound = Rational(report.edge_count, report.session_count + opt);
    return report;
}

std::pair<Rational, CutSet> sparsest_cut(const Network& net) {
    const std::size_t n = net.size();
    if (n < 2) throw Error("sparsest cut needs at least 2 nodes");
    if (n > 24) throw Error("sparsest cut enumeration is limited to 24 nodes");

    std::vector<std::pair<int, int>> endpoint;
    for (const Session& s : net.sessions())
        endpoint.emplace_back(net.index_of(s.source), net.index_of(s.sink));

    auto side_nodes = [&](std::uint64_t mask) {
        std::vector<int> out;
        std::uint64_t m = mask;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    };

    long long best_cross = -1;
    long long best_sep = 0;
    std::uint64_t best_mask = 0;
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (n - 1)); ++m) {
        const std::uint64_t mask = m << 1;  // canonical: smallest node outside
        long long sep = 0;
        for (const auto& [si, ti] : endpoint)
            sep += ((mask >> si) ^ (mask >> ti)) & 1;
        if (!sep) continue;
        long long cross = 0;
        std::uint64_t rest = mask;
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            cross += std::popcount(net.adjacency_mask(u) & full & ~mask);
        }
        bool better = false;
        if (best_cross < 0 || cross * best_sep < best_cross * sep) {
            better = true;
        } else if (cross * best_sep == best_cross * sep) {
            better = side_nodes(mask) < side_nodes(best_mask);
        }
        if (better) {
            best_cross = cross;
            best_sep = sep;
            best_mask = mask;
        }
    }
    if (best_cross < 0) throw Error("no cut separates any session");

    NodeSet side;
    for (int u : side_nodes(best_mask)) side.insert(net.name_of(u));
    return {Rational(best_cross, best_sep), net.cut_set(side)};
}

}  // namespace pbound
