#include "pbound/cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "pbound/bounds.hpp"
#include "pbound/graph.hpp"
#include "pbound/npartite.hpp"
#include "pbound/properties.hpp"
#include "pbound/reduction.hpp"

namespace pbound {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::string set_str(const NodeSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += *it;
    }
    return out + "}";
}

std::string ids_str(const std::set<int>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

std::string sets_str(const std::vector<NodeSet>& sets) {
    if (sets.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ",";
        out += set_str(sets[i]);
    }
    return out;
}

std::string parts_str(const std::vector<NodeSet>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        out += set_str(parts[i]);
    }
    return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact partition-bound and routing tools for undirected "
                 "unicast networks"};
    app.name("pbound");
    bool kv = false;
    app.add_flag("--kv", kv, "Emit flat key=value lines instead of summary text");

    std::string bound_file, opt_file, check_file, table_file, reduce_file;
    std::string net_file, scheme_file;
    std::string method = "exact";
    std::string anchor;
    std::vector<int> sizes;

    auto* bound = app.add_subcommand("bound", "Rate upper bounds");
    bound->require_subcommand(1);
    auto* bound_partition =
        bound->add_subcommand("partition", "Partition bound |E|/(|I|+opt)");
    bound_partition->add_option("file", bound_file, "network file or -")->required();
    auto* bound_sparsest =
        bound->add_subcommand("sparsest-cut", "Brute-force sparsest cut");
    bound_sparsest->add_option("file", bound_file, "network file or -")->required();

    auto* opt_cmd = app.add_subcommand("opt", "Optimal co-located session count");
    opt_cmd->add_option("file", opt_file, "network file or -")->required();
    opt_cmd->add_option("--method", method, "exact (default) or recursion")
        ->check(CLI::IsMember({"exact", "recursion"}));

    auto* gen = app.add_subcommand("gen", "Generate complete n-partite networks");
    gen->require_subcommand(1);
    auto* gen1 = gen->add_subcommand("type1", "Sessions on intra-part pairs");
    gen1->add_option("sizes", sizes, "part sizes, each >= 2")->required()->expected(-2);
    auto* gen2 = gen->add_subcommand("type2", "Sessions on all node pairs");
    gen2->add_option("sizes", sizes, "part sizes, each >= 2")->required()->expected(-2);

    auto* route = app.add_subcommand("route", "Construct optimal routing schemes");
    route->require_subcommand(1);
    auto* route1 = route->add_subcommand("type1", "Two-hop scheme for gen type1");
    route1->add_option("sizes", sizes, "part sizes, each >= 2")->required()->expected(-2);
    auto* route2 = route->add_subcommand("type2", "Scheme for gen type2");
    route2->add_option("sizes", sizes, "part sizes, each >= 2")->required()->expected(-2);

    auto* verify = app.add_subcommand("verify", "Check a routing scheme");
    verify->add_option("network", net_file, "network file or -")->required();
    verify->add_option("scheme", scheme_file, "routing scheme file or -")->required();

    auto* check = app.add_subcommand("check", "Structural cut-set properties");
    check->require_subcommand(1);
    auto* check_p1_cmd = check->add_subcommand("p1", "Every cut-set non-orthogonal "
                                               "to some session");
    check_p1_cmd->add_option("file", check_file, "network file or -")->required();
    auto* check_p2_cmd = check->add_subcommand("p2", "Disjoint compatible cut-set "
                                               "pairs need two heavy sessions");
    check_p2_cmd->add_option("file", check_file, "network file or -")->required();

    auto* table = app.add_subcommand("table1", "Cut-set orthogonality summary "
                                     "grouped by symmetry");
    table->add_option("file", table_file,
                      "network file or - (default: built-in 7-node fixture)");

    auto* reduce = app.add_subcommand("reduce", "Independent-set reduction gadget");
    reduce->add_option("graph", reduce_file, "sessionless graph file or -")->required();
    reduce->add_option("--anchor", anchor, "gadget anchor node (default: max degree)");

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (bound_partition->parsed()) {
            const Network net = Network::parse(slurp(bound_file, in));
            const BoundReport r = partition_bound(net);
            if (kv)
                out << "edge_count=" << r.edge_count << "\n"
                    << "session_count=" << r.session_count << "\n"
                    << "opt=" << r.opt_size << "\n"
                    << "bound=" << rational_str(r.bound) << "\n";
            else
                out << "|E|=" << r.edge_count << " |I|=" << r.session_count
                    << " opt=" << r.opt_size << " bound=" << rational_str(r.bound)
                    << "\n";
        } else if (bound_sparsest->parsed()) {
            const Network net = Network::parse(slurp(bound_file, in));
            const auto [value, cut] = sparsest_cut(net);
            if (kv)
                out << "value=" << rational_str(value) << "\n"
                    << "alpha=" << set_str(cut.side) << "\n"
                    << "crossing=" << cut.edges.size() << "\n";
            else
                out << "sparsest-cut=" << rational_str(value)
                    << " alpha=" << set_str(cut.side)
                    << " crossing=" << cut.edges.size() << "\n";
        } else if (opt_cmd->parsed()) {
            const Network net = Network::parse(slurp(opt_file, in));
            if (method == "recursion") {
                const int value = opt_recursion(net);
                if (kv)
                    out << "opt=" << value << "\nmethod=recursion\n";
                else
                    out << "opt=" << value << "\n";
            } else {
                const auto [value, sol] = opt_exact(net);
                if (kv)
                    out << "opt=" << value << "\nmethod=exact\n"
                        << "parts=" << parts_str(sol.parts) << "\n"
                        << "realized=" << ids_str(sol.realized) << "\n";
                else
                    out << "opt=" << value << " parts=" << parts_str(sol.parts)
                        << " realized=" << ids_str(sol.realized) << "\n";
            }
        } else if (gen1->parsed()) {
            out << gen_type1(sizes).serialize();
        } else if (gen2->parsed()) {
            out << gen_type2(sizes).serialize();
        } else if (route1->parsed()) {
            out << route_type1(sizes).serialize();
        } else if (route2->parsed()) {
            out << route_type2(sizes).serialize();
        } else if (verify->parsed()) {
            const Network net = Network::parse(slurp(net_file, in));
            const RoutingScheme scheme = RoutingScheme::parse(slurp(scheme_file, in));
            const VerificationReport r = verify_routing(net, scheme);
            if (kv)
                out << "feasible=" << yesno(r.feasible) << "\n"
                    << "rate=" << rational_str(r.achieved_rate) << "\n"
                    << "uniform=" << yesno(r.uniform_rate) << "\n"
                    << "saturated=" << yesno(r.saturated) << "\n";
            else
                out << "feasible=" << yesno(r.feasible)
                    << " rate=" << rational_str(r.achieved_rate)
                    << " uniform=" << yesno(r.uniform_rate)
                    << " saturated=" << yesno(r.saturated) << "\n";
        } else if (check_p1_cmd->parsed()) {
            const Network net = Network::parse(slurp(check_file, in));
            const auto [holds, rows] = check_p1(net);
            if (holds) {
                std::size_t min_nonorth = net.sessions().size();
                for (const auto& [cut, ids] : rows)
                    min_nonorth = std::min(min_nonorth, ids.size());
                if (kv)
                    out << "p1=holds\ncutsets=" << rows.size()
                        << "\nmin_nonorth=" << min_nonorth << "\n";
                else
                    out << "P1: holds (" << rows.size()
                        << " cut-sets, min non-orthogonal sessions per cut-set: "
                        << min_nonorth << ")\n";
            } else {
                const auto witness =
                    std::find_if(rows.begin(), rows.end(),
                                 [](const auto& row) { return row.second.empty(); });
                if (kv)
                    out << "p1=violated\ncutsets=" << rows.size()
                        << "\nwitness=" << set_str(witness->first.side) << "\n";
                else
                    out << "P1: violated (witness alpha="
                        << set_str(witness->first.side)
                        << " orthogonal to all sessions)\n";
            }
        } else if (check_p2_cmd->parsed()) {
            const Network net = Network::parse(slurp(check_file, in));
            const auto [holds, witnesses] = check_p2(net);
            const auto compatible =
                std::count_if(witnesses.begin(), witnesses.end(),
                              [](const P2Witness& w) { return w.compatible_all; });
            if (holds) {
                if (kv)
                    out << "p2=holds\ndisjoint_pairs=" << witnesses.size()
                        << "\ncompatible_all=" << compatible << "\n";
                else
                    out << "P2: holds (" << witnesses.size()
                        << " disjoint cut-set pairs, " << compatible
                        << " compatible with all sessions)\n";
            } else {
                const auto bad = std::find_if(
                    witnesses.begin(), witnesses.end(), [](const P2Witness& w) {
                        return w.compatible_all && w.heavy_sessions.size() < 2;
                    });
                if (kv)
                    out << "p2=violated\nwitness_alpha=" << set_str(bad->alpha)
                        << "\nwitness_beta=" << set_str(bad->beta)
                        << "\nheavy=" << ids_str(bad->heavy_sessions) << "\n";
                else
                    out << "P2: violated (alpha=" << set_str(bad->alpha)
                        << " beta=" << set_str(bad->beta)
                        << " compatible with all sessions, heavy sessions: "
                        << ids_str(bad->heavy_sessions) << ")\n";
            }
        } else if (table->parsed()) {
            const Network net = table_file.empty()
                                    ? fig3_network()
                                    : Network::parse(slurp(table_file, in));
            for (const OrthogonalityRow& row : table1_report(net))
                out << "alpha=" << set_str(row.alpha)
                    << " nonorth=" << ids_str(row.non_orthogonal)
                    << " partners=" << sets_str(row.partners) << "\n";
        } else if (reduce->parsed()) {
            const Network graph = Network::parse(slurp(reduce_file, in));
            NodeId v = anchor;
            if (v.empty()) {
                if (graph.nodes().empty()) throw Error("graph has no nodes");
                int best_degree = -1;
                for (std::size_t i = 0; i < graph.size(); ++i) {
                    const int degree = std::popcount(graph.adjacency_mask(i));
                    if (degree > best_degree) {
                        best_degree = degree;
                        v = graph.name_of(i);
                    }
                }
            }
            const auto [k, witness] = max_independent_set(graph);
            int best_opt = -1;
            for (const auto& [x, gadget] : gadget_family(graph, v))
                best_opt = std::max(best_opt, opt_exact(gadget).first);
            const bool ok = check_reduction(graph, v);
            if (kv)
                out << "anchor=" << v << "\nindependent_set=" << k
                    << "\nwitness=" << set_str(witness)
                    << "\ngadget_opt=" << best_opt
                    << "\nequivalence=" << (ok ? "ok" : "FAILED") << "\n";
            else
                out << "anchor=" << v << " independent-set=" << k
                    << " witness=" << set_str(witness)
                    << " gadget-opt=" << best_opt
                    << " equivalence=" << (ok ? "ok" : "FAILED") << "\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pbound
