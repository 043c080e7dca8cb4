#pragma once

#include <map>
#include <vector>

#include "pbound/graph.hpp"

namespace pbound {

struct PathFlow {
    int session = 0;
    Path path;
    Rational amount;
};

// Per-session path flows at one claimed symmetric rate, checked against
// one uniform per-edge capacity.
struct RoutingScheme {
    Rational capacity;
    Rational rate;
    std::vector<PathFlow> flows;

    static RoutingScheme parse(const std::string& text);
    std::string serialize() const;
};

struct VerificationReport {
    bool feasible = false;       // loads within capacity and rates uniform
    Rational achieved_rate;      // min over sessions of total flow
    std::map<Edge, Rational> per_edge_load;
    bool saturated = false;      // every edge loaded to exactly capacity
    bool uniform_rate = false;   // all sessions carry the same total
};

// Complete n-partite generators; part i node j is named p<i>_<j> and
// session ids follow the lexicographic order of the endpoint pairs.
// gen_type1 has one session per intra-part pair, gen_type2 one per node
// pair. All part sizes must be >= 2 and there must be >= 2 parts.
Network gen_type1(const std::vector<int>& sizes);
Network gen_type2(const std::vector<int>& sizes);

// |E| via the part-by-part recurrence and via the pairwise closed form.
long long edge_count_recurrence(const std::vector<int>& sizes);
long long edge_count_pairwise(const std::vector<int>& sizes);

// Inductive two-hop routing scheme for gen_type1(sizes): capacity
// sum_i |P_i|(|P_i|-1), symmetric rate |E|, every edge saturated.
RoutingScheme route_type1(const std::vector<int>& sizes);

// Scheme for gen_type2(sizes): the type-1 scheme for intra-part sessions
// plus one direct one-hop flow of |E| units per cross-part session, at
// capacity |E| + sum_i |P_i|(|P_i|-1).
RoutingScheme route_type2(const std::vector<int>& sizes);

// Exact per-edge loads and feasibility/saturation flags for a scheme
// against a network. Throws on unknown sessions or invalid paths.
VerificationReport verify_routing(const Network& net, const RoutingScheme& scheme);

}  // namespace pbound
