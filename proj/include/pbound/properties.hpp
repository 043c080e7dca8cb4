#pragma once

#include <set>
#include <utility>
#include <vector>

#include "pbound/graph.hpp"

namespace pbound {

// One row of the cut-set summary: a representative side containing the
// smallest node, the sessions its cut-set is not orthogonal to, the
// disjoint partner cut-sets, and the symmetry-equivalent sides it stands
// for.
struct OrthogonalityRow {
    NodeSet alpha;
    std::set<int> non_orthogonal;
    std::vector<NodeSet> partners;
    std::vector<NodeSet> symmetric_cases;
};

struct P2Witness {
    NodeSet alpha;
    NodeSet beta;
    bool compatible_all = false;
    std::set<int> heavy_sessions;  // some shortest path meets F more than twice
};

// The 7-node, 16-edge, 5-session 3-partite reference network with parts
// {v1,v2}, {v3,v4}, {v5,v6,v7}.
Network fig3_network();

// F is orthogonal to session i when every shortest source-sink path
// crosses F at most once.
bool is_orthogonal(const Network& net, const EdgeSet& f, int session_id);

// (max over shortest paths of |P n F|, min over all simple paths of
// |P n F|) for session i.
std::pair<int, int> crossing_profile(const Network& net, int session_id,
                                     const EdgeSet& f);

// F is compatible with session i when every shortest path meets F the
// minimum number of times over all simple paths.
bool is_compatible(const Network& net, const EdgeSet& f, int session_id);

// Property P1: every cut-set is non-orthogonal to at least one session.
// Returns the verdict plus the per-cut-set non-orthogonal session sets.
std::pair<bool, std::vector<std::pair<CutSet, std::set<int>>>>
check_p1(const Network& net);

// Canonical sides of all cut-sets edge-disjoint from cs(alpha),
// excluding alpha's own cut-set, ordered by size then lexicographically.
std::vector<NodeSet> disjoint_cut_partners(const Network& net,
                                           const NodeSet& alpha);

// Property P2: whenever the union of two disjoint cut-sets is compatible
// with all sessions, at least two sessions must have a shortest path
// meeting the union more than twice. Vacuously true when no pair is
// compatible with all sessions.
std::pair<bool, std::vector<P2Witness>> check_p2(const Network& net);

// Cut-set summary for a complete multipartite network whose sessions are
// exactly the intra-part pairs: one row per symmetry class of the sides
// containing the smallest node, sorted by representative.
std::vector<OrthogonalityRow> table1_report(const Network& net);

}  // namespace pbound
