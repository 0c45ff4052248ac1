// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Text formats used by the command-line tool.
//
// Graph file:
//
//   digraph            <- header: "digraph" (directed) or "graph" (undirected, labeled)
//   v <id>             <- vertex
//   e <id> <id>        <- edge, default label
//   e <id> <id> <lbl>  <- labeled edge, "graph" files only
//
// Ids and labels are whitespace-free tokens. Blank lines are ignored; any
// other line kind is an error. print_graph emits a canonical form: header,
// every vertex in order, then every edge in order.
//
// Vertex list (cycle certificate or topological order): one id per line.
// An empty list is written as an empty file.

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "certgraph/digraph.hpp"
#include "certgraph/errors.hpp"
#include "certgraph/persistent_graph.hpp"

namespace certgraph::io {

using StringDigraph = Digraph<std::string>;
using StringGraph = PersistentGraph<std::string, std::string>;

struct GraphFile {
    std::variant<StringDigraph, StringGraph> graph;

    [[nodiscard]]
    bool directed() const noexcept {
        return std::holds_alternative<StringDigraph>(graph);
    }

    friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.emplace_back(line.substr(start, i - start));
        }
    }
    return out;
}

} // namespace detail

inline GraphFile parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<GraphFile> file;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = detail::tokenize(line);
        if (tok.empty()) {
            continue;
        }
        if (!file) {
            if (tok.size() == 1 && tok[0] == "digraph") {
                file = GraphFile{StringDigraph{}};
            } else if (tok.size() == 1 && tok[0] == "graph") {
                file = GraphFile{StringGraph{}};
            } else {
                throw parse_error(lineno, "expected header 'digraph' or 'graph'");
            }
            continue;
        }
        if (tok[0] == "v") {
            if (tok.size() != 2) {
                throw parse_error(lineno, "vertex line takes exactly one id");
            }
            std::visit(
                [&](auto& g) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(g)>, StringDigraph>) {
                        g.add_vertex(tok[1]);
                    } else {
                        g = g.add_vertex(tok[1]);
                    }
                },
                file->graph);
        } else if (tok[0] == "e") {
            if (tok.size() != 3 && tok.size() != 4) {
                throw parse_error(lineno, "edge line takes two ids and an optional label");
            }
            if (auto* dg = std::get_if<StringDigraph>(&file->graph)) {
                if (tok.size() == 4) {
                    throw parse_error(lineno, "labels are only allowed in 'graph' files");
                }
                dg->add_edge(tok[1], tok[2]);
            } else {
                auto& g = std::get<StringGraph>(file->graph);
                g = tok.size() == 4 ? g.add_edge_labeled(tok[1], tok[3], tok[2]) : g.add_edge(tok[1], tok[2]);
            }
        } else {
            throw parse_error(lineno, "unknown line kind '" + tok[0] + "'");
        }
    }
    if (!file) {
        throw parse_error(lineno + 1, "missing header 'digraph' or 'graph'");
    }
    return std::move(*file);
}

inline GraphFile parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

inline std::string print_graph(const StringDigraph& g) {
    std::string out = "digraph\n";
    for (const auto& v : g.vertices()) {
        out += "v " + v + "\n";
    }
    for (const auto& [a, b] : g.edges()) {
        out += "e " + a + " " + b + "\n";
    }
    return out;
}

inline std::string print_graph(const StringGraph& g) {
    std::string out = "graph\n";
    for (const auto& v : g.vertices()) {
        out += "v " + v + "\n";
    }
    const auto dflt = StringGraph::label_traits::default_value();
    for (const auto& e : g.edges()) {
        out += "e " + e.src + " " + e.dst;
        if (e.label != dflt) {
            out += " " + e.label;
        }
        out += "\n";
    }
    return out;
}

inline std::string print_graph(const GraphFile& f) {
    return std::visit([](const auto& g) { return print_graph(g); }, f.graph);
}

// Integer graphs (as made by the generators) rendered with string ids.
// Label 0 maps to the default label; label k to "l<k>".
inline StringDigraph stringify(const Digraph<int>& g) {
    StringDigraph out;
    for (int v : g.vertices()) {
        out.add_vertex(std::to_string(v));
    }
    for (const auto& [a, b] : g.edges()) {
        out.add_edge(std::to_string(a), std::to_string(b));
    }
    return out;
}

inline StringGraph stringify(const PersistentGraph<int, int>& g) {
    StringGraph out;
    for (int v : g.vertices()) {
        out = out.add_vertex(std::to_string(v));
    }
    for (const auto& e : g.edges()) {
        const std::string label = e.label == 0 ? StringGraph::label_traits::default_value() : "l" + std::to_string(e.label);
        out = out.add_edge_labeled(std::to_string(e.src), label, std::to_string(e.dst));
    }
    return out;
}

inline std::vector<std::string> parse_vertex_list(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = detail::tokenize(line);
        if (tok.empty()) {
            continue;
        }
        if (tok.size() != 1) {
            throw parse_error(lineno, "expected one vertex id per line");
        }
        out.push_back(tok[0]);
    }
    return out;
}

inline std::vector<std::string> parse_vertex_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_vertex_list(in);
}

inline std::string print_vertex_list(const std::vector<std::string>& l) {
    std::string out;
    for (const auto& v : l) {
        out += v + "\n";
    }
    return out;
}

} // namespace certgraph::io
