#pragma once

#include <set>
#include <utility>
#include <vector>

#include "pbound/graph.hpp"

namespace pbound {

// Witness for an optimal co-location: a partition of the nodes into
// independent sets together with the sessions it realizes (both
// endpoints inside one part).
struct PartitionSolution {
    std::vector<NodeSet> parts;
    std::set<int> realized;
};

struct BoundReport {
    int edge_count = 0;
    int session_count = 0;
    int opt_size = 0;
    Rational bound;  // edge_count / (session_count + opt_size), reduced
};

// Sessions whose endpoints are not adjacent; only these can ever be
// co-located inside an independent part.
std::set<int> restrict_sessions(const Network& net);

// Conflicting subset of session k, evaluated literally: sessions l of
// the restricted set with one endpoint on k and the other endpoint a
// neighbour of k's source. Throws when k is not in the restricted set.
std::set<int> conf(const Network& net, int k);

// Size of the optimal co-location via the conflict-set recursion
//   f(S) = max(f(S \ {k}), 1 + f(S \ ({k} u conf(k)))),
// k = smallest remaining id, memoized on the remaining-session set.
// Exposed for comparison against opt_exact; not authoritative.
int opt_recursion(const Network& net);

// Authoritative optimum: largest set of restricted sessions whose
// endpoint-pair merge yields only independent classes, found by
// branch-and-bound, plus the witness partition.
std::pair<int, PartitionSolution> opt_exact(const Network& net);

// |E| / (|I| + opt). Requires at least one session.
BoundReport partition_bound(const Network& net);

// Minimum over cuts of crossing-edge count divided by separated-session
// count; cuts separating nothing are skipped, ties broken by canonical
// side order. Throws when no cut separates any session.
std::pair<Rational, CutSet> sparsest_cut(const Network& net);

}  // namespace pbound
