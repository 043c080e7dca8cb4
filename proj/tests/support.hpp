#pragma once

#include <random>
#include <set>
#include <vector>

#include "pbound/graph.hpp"

namespace pbound::testing {

// Brute-force reference for opt_exact: try every subset of the
// restricted sessions and keep the largest whose endpoint-pair merge
// produces only independent classes. Requires at most 15 restricted
// sessions.
int oracle_opt_subsets(const Network& net);

// Second, fully independent reference: enumerate every partition of the
// nodes into independent sets and maximize the number of sessions whose
// endpoints share a part.
int oracle_opt_partitions(const Network& net);

// Plain recursive DFS path counter, kept separate from the library
// implementation on purpose.
long long oracle_simple_path_count(const Network& net, const NodeId& u,
                                   const NodeId& v);

// Random instances for the oracle sweeps. Node names are single letters,
// edges appear with probability one half.
Network random_network(std::mt19937& rng, int max_nodes = 8,
                       int max_sessions = 6);
Network random_graph(std::mt19937& rng, int max_nodes = 9);

// Hand-transcribed expected cut-set summary for the 7-node fixture.
struct ExpectedRow {
    NodeSet alpha;
    std::set<int> non_orth;
    std::vector<NodeSet> symmetric_cases;
    std::vector<NodeSet> partners;
};
const std::vector<ExpectedRow>& fig3_expected_table();

}  // namespace pbound::testing
