// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "certgraph/cycle_cert.hpp"
#include "certgraph/graph_file.hpp"
#include "certgraph/graph_view.hpp"
#include "certgraph/oracle.hpp"
#include "certgraph/path_check.hpp"

namespace certgraph::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string graph;
    std::string cert;
    std::string list;
    std::string src;
    std::string dst;
    std::string algo = "original";
    bool stats = false;

    std::uint64_t seed = 0;
    int vertices = 6;
    double prob = 0.3;
    bool undirected = false;
    bool self_loops = false;
    int labels = 2;
};

io::GraphFile load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw graph_error("io_error", "cannot open graph file '" + path + "'");
    }
    return io::parse_graph(in);
}

std::vector<std::string> load_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw graph_error("io_error", "cannot open list file '" + path + "'");
    }
    return io::parse_vertex_list(in);
}

void write_list(const std::string& path, const std::vector<std::string>& l) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << io::print_vertex_list(l);
    if (!out) {
        throw graph_error("io_error", "cannot write '" + path + "'");
    }
}

template <class F>
auto with_view(const io::GraphFile& file, F&& f) {
    return std::visit(
        [&](const auto& g) {
            if constexpr (std::is_same_v<std::decay_t<decltype(g)>, io::StringDigraph>) {
                return f(view_of_digraph(g));
            } else {
                return f(view_of_persistent(g));
            }
        },
        file.graph);
}

const io::StringDigraph& require_directed(const io::GraphFile& file) {
    if (!file.directed()) {
        throw unsupported_input_error("topological orders need a 'digraph' file");
    }
    return std::get<io::StringDigraph>(file.graph);
}

int emit(const json& verdict, std::ostream& out, int code) {
    out << verdict.dump() << '\n';
    return code;
}

int find_cycle_cmd(const Options& o, std::ostream& out) {
    const auto file = load_graph(o.graph);
    return with_view(file, [&](const auto& view) {
        json v{{"command", "find-cycle"}};
        const auto cert = find_cycle(view);
        if (!cert) {
            write_list(o.cert, {});
            v["result"] = false;
            return emit(v, out, exit_no);
        }
        if (!is_cycle(*cert, view)) {
            throw graph_error("internal_validation", "cycle certificate failed its own checker");
        }
        write_list(o.cert, cert->path);
        v["result"] = true;
        v["certificate"] = cert->path;
        return emit(v, out, exit_yes);
    });
}

int check_cycle_cmd(const Options& o, std::ostream& out) {
    const auto file = load_graph(o.graph);
    const auto list = load_list(o.list);
    return with_view(file, [&](const auto& view) {
        json v{{"command", "check-cycle"}};
        bool ok = false;
        try {
            ok = is_cycle(list, view);
        } catch (const precondition_error&) {
            v["result"] = false;
            v["reason"] = "rejected: vertex not in graph";
            return emit(v, out, exit_no);
        }
        v["result"] = ok;
        if (!ok) {
            v["reason"] = list.empty() ? "rejected: empty list is not a cycle" : "rejected: not a cycle";
        }
        return emit(v, out, ok ? exit_yes : exit_no);
    });
}

int check_path_cmd(const Options& o, std::ostream& out) {
    const auto file = load_graph(o.graph);
    const auto variant = o.algo == "marked" ? SearchVariant::marked : SearchVariant::original;
    return with_view(file, [&](const auto& view) {
        auto pc = make_path_checker(view);
        const bool found = pc.check(o.src, o.dst, variant);
        json v{{"command", "check-path"}, {"algo", to_string(variant)}, {"result", found}};
        if (o.stats) {
            const auto& s = pc.stats();
            v["pushes"] = s.pushes;
            v["pops"] = s.pops;
            v["max_queue"] = s.max_queue;
            v["cache_hits"] = s.cache_hits;
        }
        return emit(v, out, found ? exit_yes : exit_no);
    });
}

int topo_cmd(const Options& o, std::ostream& out) {
    const auto file = load_graph(o.graph);
    const auto view = view_of_digraph(require_directed(file));
    json v{{"command", "topo"}};
    if (const auto order = topo_witness(view)) {
        if (!check_topo(*order, view)) {
            throw graph_error("internal_validation", "topological order failed its own checker");
        }
        write_list(o.cert, order->order);
        v["result"] = true;
        v["order"] = order->order;
        return emit(v, out, exit_yes);
    }
    const auto cert = find_cycle(view);
    if (!cert || !is_cycle(*cert, view)) {
        throw graph_error("internal_validation", "no topological order and no valid cycle certificate");
    }
    write_list(o.cert, cert->path);
    v["result"] = false;
    v["certificate"] = cert->path;
    return emit(v, out, exit_no);
}

int check_topo_cmd(const Options& o, std::ostream& out) {
    const auto file = load_graph(o.graph);
    const auto view = view_of_digraph(require_directed(file));
    const auto list = load_list(o.list);
    const bool ok = check_topo(list, view);
    json v{{"command", "check-topo"}, {"result", ok}};
    if (!ok) {
        v["reason"] = "rejected: not a topological order";
    }
    return emit(v, out, ok ? exit_yes : exit_no);
}

int gen_cmd(const Options& o, std::ostream& out) {
    oracle::GraphParams p;
    p.seed = o.seed;
    p.vertices = o.vertices;
    p.edge_prob = o.prob;
    p.self_loops = o.self_loops;
    p.labels = o.labels;
    if (o.undirected) {
        out << io::print_graph(io::stringify(oracle::gen_persistent(p)));
    } else {
        out << io::print_graph(io::stringify(oracle::gen_digraph(p)));
    }
    return exit_yes;
}

int print_cmd(const Options& o, std::ostream& out) {
    out << io::print_graph(load_graph(o.graph));
    return exit_yes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certifying graph algorithms: cycle certificates, topological witnesses, path checks"};
    app.require_subcommand(1);
    Options o;

    auto* find_cycle_sub = app.add_subcommand("find-cycle", "Search for a cycle and print a checked certificate");
    find_cycle_sub->add_option("graph", o.graph, "Graph file")->required();
    find_cycle_sub->add_option("--cert", o.cert, "Write the certificate here, one vertex per line");

    auto* check_cycle_sub = app.add_subcommand("check-cycle", "Check a cycle certificate against a graph");
    check_cycle_sub->add_option("graph", o.graph, "Graph file")->required();
    check_cycle_sub->add_option("cert", o.list, "Certificate file")->required();

    auto* check_path_sub = app.add_subcommand("check-path", "Decide whether a path src ~> dst exists");
    check_path_sub->add_option("graph", o.graph, "Graph file")->required();
    check_path_sub->add_option("src", o.src, "Source vertex")->required();
    check_path_sub->add_option("dst", o.dst, "Target vertex")->required();
    check_path_sub->add_option("--algo", o.algo, "original or marked")
        ->check(CLI::IsMember({"original", "marked"}))
        ->capture_default_str();
    check_path_sub->add_flag("--stats", o.stats, "Include search counters in the verdict");

    auto* topo_sub = app.add_subcommand("topo", "Print a checked topological order, or a cycle certificate");
    topo_sub->add_option("graph", o.graph, "Graph file (digraph)")->required();
    topo_sub->add_option("--cert", o.cert, "Write the order or certificate here, one vertex per line");

    auto* check_topo_sub = app.add_subcommand("check-topo", "Check a topological order against a digraph");
    check_topo_sub->add_option("graph", o.graph, "Graph file (digraph)")->required();
    check_topo_sub->add_option("order", o.list, "Order file")->required();

    auto* gen_sub = app.add_subcommand("gen", "Print a seeded random graph file");
    gen_sub->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    gen_sub->add_option("--vertices", o.vertices, "Vertex count")->check(CLI::Range(0, 100000))->capture_default_str();
    gen_sub->add_option("--prob", o.prob, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    gen_sub->add_flag("--undirected", o.undirected, "Emit a labeled 'graph' file");
    gen_sub->add_flag("--self-loops", o.self_loops, "Allow self-loops");
    gen_sub->add_option("--labels", o.labels, "Label count for undirected graphs")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();

    auto* print_sub = app.add_subcommand("print", "Print a graph file in canonical form");
    print_sub->add_option("graph", o.graph, "Graph file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : exit_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "find-cycle") {
            return find_cycle_cmd(o, out);
        }
        if (command == "check-cycle") {
            return check_cycle_cmd(o, out);
        }
        if (command == "check-path") {
            return check_path_cmd(o, out);
        }
        if (command == "topo") {
            return topo_cmd(o, out);
        }
        if (command == "check-topo") {
            return check_topo_cmd(o, out);
        }
        if (command == "gen") {
            return gen_cmd(o, out);
        }
        return print_cmd(o, out);
    } catch (const graph_error& e) {
        err << "certgraph " << command << ": " << e.what() << '\n';
        json v{{"command", command}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
        return emit(v, out, exit_error);
    }
}

} // namespace certgraph::cli
