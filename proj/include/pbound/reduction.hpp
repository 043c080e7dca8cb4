#pragma once

#include <utility>
#include <vector>

#include "pbound/graph.hpp"

namespace pbound {

// Reduction gadget family for a sessionless graph: X = {v} u ne(v), and
// for each x in X a network on the same graph with x as the source of
// |V|-1 sessions, one per remaining node in lexicographic order.
std::vector<std::pair<NodeId, Network>> gadget_family(const Network& graph,
                                                      const NodeId& v);

// Exhaustive branch-and-bound maximum independent set with witness;
// limited to 20 nodes.
std::pair<int, NodeSet> max_independent_set(const Network& graph);

// Checks the gadget equivalence for the maximum independent-set size k*:
// max over x of opt_exact equals k* - 1 and the recovered endpoint set
// is an independent set of size k*.
bool check_reduction(const Network& graph, const NodeId& v);

}  // namespace pbound
