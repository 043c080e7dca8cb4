#include "pbound/npartite.hpp"

#include <algorithm>
#include <sstream>

namespace pbound {

namespace {

void validate_sizes(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw Error("size vector needs at least 2 parts");
    for (int s : sizes)
        if (s < 2) throw Error("every part size must be at least 2");
}

std::vector<std::vector<NodeId>> part_nodes(const std::vector<int>& sizes) {
    std::vector<std::vector<NodeId>> parts;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<NodeId> part;
        for (int j = 0; j < sizes[i]; ++j)
            part.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<Edge> cross_edges(const std::vector<std::vector<NodeId>>& parts) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (const NodeId& u : parts[i])
                for (const NodeId& v : parts[j]) edges.emplace_back(u, v);
    return edges;
}

// Pair drawn with (source, sink) = (larger, smaller) position; ids are
// assigned afterwards in lexicographic order of the unordered pair.
struct RawSession {
    NodeId source;
    NodeId sink;
};

std::vector<Session> number_sessions(std::vector<RawSession> raw) {
    std::sort(raw.begin(), raw.end(), [](const RawSession& x, const RawSession& y) {
        return std::minmax(x.source, x.sink) < std::minmax(y.source, y.sink);
    });
    std::vector<Session> out;
    for (std::size_t i = 0; i < raw.size(); ++i)
        out.push_back({static_cast<int>(i + 1), raw[i].source, raw[i].sink});
    return out;
}

std::vector<RawSession> intra_pairs(const std::vector<std::vector<NodeId>>& parts) {
    std::vector<RawSession> raw;
    for (const auto& part : parts)
        for (std::size_t j = 0; j < part.size(); ++j)
            for (std::size_t k = j + 1; k < part.size(); ++k)
                raw.push_back({part[k], part[j]});
    return raw;
}

std::vector<NodeId> flatten(const std::vector<std::vector<NodeId>>& parts) {
    std::vector<NodeId> nodes;
    for (const auto& part : parts) nodes.insert(nodes.end(), part.begin(), part.end());
    return nodes;
}

}  // namespace

Network gen_type1(const std::vector<int>& sizes) {
    validate_sizes(sizes);
    const auto parts = part_nodes(sizes);
    return Network::build(flatten(parts), cross_edges(parts),
                          number_sessions(intra_pairs(parts)));
}

Network gen_type2(const std::vector<int>& sizes) {
    validate_sizes(sizes);
    const auto parts = part_nodes(sizes);
    std::vector<RawSession> raw = intra_pairs(parts);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (const NodeId& u : parts[i])
                for (const NodeId& v : parts[j]) raw.push_back({v, u});
    return Network::build(flatten(parts), cross_edges(parts),
                          number_sessions(std::move(raw)));
}

long long edge_count_recurrence(const std::vector<int>& sizes) {
    validate_sizes(sizes);
    long long edges = 0;
    long long nodes_so_far = 0;
    for (int s : sizes) {
        edges += static_cast<long long>(s) * nodes_so_far;
        nodes_so_far += s;
    }
    return edges;
}

long long edge_count_pairwise(const std::vector<int>& sizes) {
    validate_sizes(sizes);
    long long edges = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            edges += static_cast<long long>(sizes[i]) * sizes[j];
    return edges;
}

RoutingScheme route_type1(const std::vector<int>& sizes) {
    validate_sizes(sizes);
    const auto all_parts = part_nodes(sizes);
    const std::size_t n = all_parts.size();
    const Network net = gen_type1(sizes);

    std::map<std::pair<NodeId, NodeId>, int> session_of;
    for (const Session& s : net.sessions())
        session_of[std::minmax(s.source, s.sink)] = s.id;

    // The induction adds parts in ascending size order. Growing into the
    // largest remaining part keeps the residual demand and the per-path
    // allocations nonnegative whenever the target rate is reachable at all.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
        return a < b;
    });
    std::vector<std::vector<NodeId>> parts;
    std::vector<int> size;
    for (std::size_t i : order) {
        parts.push_back(all_parts[i]);
        size.push_back(sizes[i]);
    }

    // Prefix edge counts and capacities over the first k processed parts.
    std::vector<long long> edge_prefix(n + 1, 0), cap_prefix(n + 1, 0);
    long long nodes_so_far = 0;
    for (std::size_t k = 0; k < n; ++k) {
        edge_prefix[k + 1] = edge_prefix[k] + size[k] * nodes_so_far;
        cap_prefix[k + 1] = cap_prefix[k] +
                            static_cast<long long>(size[k]) * (size[k] - 1);
        nodes_so_far += size[k];
    }

    std::vector<PathFlow> flows;
    auto add_flow = [&](const NodeId& src, const NodeId& via, const NodeId& snk,
                        const Rational& amount) {
        if (amount == 0) return;
        flows.push_back({session_of.at(std::minmax(src, snk)),
                         Path{{src, via, snk}}, amount});
    };
    auto each_pair = [&](std::size_t part, auto&& fn) {
        for (std::size_t j = 0; j < parts[part].size(); ++j)
            for (std::size_t k = j + 1; k < parts[part].size(); ++k)
                fn(parts[part][k], parts[part][j]);  // (source, sink)
    };

    // Two-part base: every intra-part session pushes |own part| units on
    // each two-hop path through the other part, which saturates each edge
    // at capacity |P1|(|P1|-1) + |P2|(|P2|-1) and reaches rate |P1||P2|.
    for (std::size_t a : {std::size_t{0}, std::size_t{1}}) {
        const std::size_t b = 1 - a;
        each_pair(a, [&](const NodeId& src, const NodeId& snk) {
            for (const NodeId& via : parts[b])
                add_flow(src, via, snk, Rational(size[a]));
        });
    }

    for (std::size_t k = 2; k < n; ++k) {
        // Rescale the k-part scheme to the (k+1)-part capacity, then route
        // the per-session deficit through the new part.
        const Rational scale(cap_prefix[k + 1], cap_prefix[k]);
        if (scale != 1)
            for (PathFlow& f : flows) f.amount *= scale;
        const Rational delta =
            Rational(edge_prefix[k + 1]) -
            Rational(cap_prefix[k + 1]) * Rational(edge_prefix[k], cap_prefix[k]);
        if (delta < 0)
            throw Error("type1 routing does not extend: negative residual "
                        "demand at part " + std::to_string(k + 1));
        const Rational per_path = delta / size[k];
        if (per_path > 0)
            for (std::size_t j = 0; j < k; ++j)
                each_pair(j, [&](const NodeId& src, const NodeId& snk) {
                    for (const NodeId& via : parts[k])
                        add_flow(src, via, snk, per_path);
                });
        for (std::size_t j = 0; j < k; ++j) {
            const Rational amount =
                (Rational(cap_prefix[k + 1]) - Rational(size[j] - 1) * per_path) /
                Rational(size[k] - 1);
            if (amount < 0)
                throw Error("type1 routing does not extend: negative per-path "
                            "allocation at part " + std::to_string(k + 1));
            each_pair(k, [&](const NodeId& src, const NodeId& snk) {
                for (const NodeId& via : parts[j]) add_flow(src, via, snk, amount);
            });
        }
    }

    std::sort(flows.begin(), flows.end(), [](const PathFlow& x, const PathFlow& y) {
        return std::tie(x.session, x.path) < std::tie(y.session, y.path);
    });
    return {Rational(cap_prefix[n]), Rational(edge_prefix[n]), std::move(flows)};
}

RoutingScheme route_type2(const std::vector<int>& sizes) {
    validate_sizes(sizes);
    const Network net = gen_type2(sizes);
    const RoutingScheme base = route_type1(sizes);

    std::map<std::pair<NodeId, NodeId>, int> session_of;
    for (const Session& s : net.sessions())
        session_of[std::minmax(s.source, s.sink)] = s.id;

    std::vector<PathFlow> flows;
    for (const PathFlow& f : base.flows)
        flows.push_back({session_of.at(std::minmax(f.path.nodes.front(),
                                                   f.path.nodes.back())),
                         f.path, f.amount});
    // Cross-part pairs are exactly the edges; each gets a one-hop flow of
    // |E| units on top of the intra-part scheme.
    for (const Session& s : net.sessions())
        if (net.has_edge(s.source, s.sink))
            flows.push_back({s.id, Path{{s.source, s.sink}}, base.rate});

    std::sort(flows.begin(), flows.end(), [](const PathFlow& x, const PathFlow& y) {
        return std::tie(x.session, x.path) < std::tie(y.session, y.path);
    });
    return {base.capacity + base.rate, base.rate, std::move(flows)};
}

VerificationReport verify_routing(const Network& net, const RoutingScheme& scheme) {
    VerificationReport report;
    for (const Edge& e : net.edges()) report.per_edge_load[e] = Rational(0);

    std::map<int, Rational> session_total;
    for (const Session& s : net.sessions()) session_total[s.id] = Rational(0);

    for (const PathFlow& f : scheme.flows) {
        const Session& s = net.session(f.session);
        const std::string tag = "flow for session " + std::to_string(f.session);
        if (f.amount <= 0) throw Error(tag + ": amount must be positive");
        if (f.path.nodes.size() < 2) throw Error(tag + ": path too short");
        NodeSet seen(f.path.nodes.begin(), f.path.nodes.end());
        if (seen.size() != f.path.nodes.size())
            throw Error(tag + ": path repeats a node");
        const NodeSet ends{f.path.nodes.front(), f.path.nodes.back()};
        if (ends != NodeSet{s.source, s.sink})
            throw Error(tag + ": path endpoints do not match the session");
        for (const Edge& e : f.path.edges()) {
            if (!net.has_edge(e.a, e.b))
                throw Error(tag + ": path uses missing edge '" + e.a + " " +
                            e.b + "'");
            report.per_edge_load[e] += f.amount;
        }
        session_total[f.session] += f.amount;
    }

    report.uniform_rate = true;
    bool first = true;
    for (const auto& [id, total] : session_total) {
        if (first) {
            report.achieved_rate = total;
            first = false;
        } else {
            if (total != report.achieved_rate) report.uniform_rate = false;
            report.achieved_rate = std::min(report.achieved_rate, total);
        }
    }

    bool within = true;
    report.saturated = !net.edges().empty();
    for (const auto& [edge, load] : report.per_edge_load) {
        if (load > scheme.capacity) within = false;
        if (load != scheme.capacity) report.saturated = false;
    }
    report.feasible = within && report.uniform_rate;
    return report;
}

RoutingScheme RoutingScheme::parse(const std::string& text) {
    RoutingScheme scheme;
    bool saw_capacity = false, saw_rate = false;
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
        try {
            if (verb == "capacity" && tokens.size() == 2) {
                if (saw_capacity) throw Error("duplicate capacity");
                saw_capacity = true;
                scheme.capacity = parse_rational(tokens[1]);
            } else if (verb == "rate" && tokens.size() == 2) {
                if (saw_rate) throw Error("duplicate rate");
                saw_rate = true;
                scheme.rate = parse_rational(tokens[1]);
            } else if (verb == "flow" && tokens.size() >= 5) {
                PathFlow f;
                std::size_t pos = 0;
                f.session = std::stoi(tokens[1], &pos);
                if (pos != tokens[1].size() || f.session <= 0)
                    throw Error("invalid session id '" + tokens[1] + "'");
                f.amount = parse_rational(tokens[2]);
                if (f.amount <= 0) throw Error("flow amount must be positive");
                f.path.nodes.assign(tokens.begin() + 3, tokens.end());
                scheme.flows.push_back(std::move(f));
            } else {
                throw Error("unknown or malformed directive '" + verb + "'");
            }
        } catch (const Error& e) {
            throw Error(where + e.what());
        } catch (const std::exception&) {
            throw Error(where + "invalid line '" + line + "'");
        }
    }
    if (!saw_capacity) throw Error("routing scheme is missing a capacity line");
    if (!saw_rate) throw Error("routing scheme is missing a rate line");
    return scheme;
}

std::string RoutingScheme::serialize() const {
    std::vector<PathFlow> sorted = flows;
    std::sort(sorted.begin(), sorted.end(), [](const PathFlow& x, const PathFlow& y) {
        return std::tie(x.session, x.path) < std::tie(y.session, y.path);
    });
    std::ostringstream out;
    out << "capacity " << rational_str(capacity) << "\n";
    out << "rate " << rational_str(rate) << "\n";
    for (const PathFlow& f : sorted) {
        out << "flow " << f.session << " " << rational_str(f.amount);
        for (const NodeId& n : f.path.nodes) out << " " << n;
        out << "\n";
    }
    return out.str();
}

}  // namespace pbound
