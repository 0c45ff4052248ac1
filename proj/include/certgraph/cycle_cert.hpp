// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Certifying cycle detection.
//
// A cycle certificate is a vertex list read as a path from its last element
// back to that same element: [2, 3, 1] certifies 1 -> 2 -> 3 -> 1. The empty
// list is never a cycle. find_cycle returns such a list and is_cycle checks
// one, so callers never have to trust the search. For acyclic directed graphs
// a topological order is the matching witness (topo_witness / check_topo).
//
// The checkers reject vertices outside the graph with precondition_error
// rather than answering false.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "certgraph/errors.hpp"
#include "certgraph/graph_view.hpp"

namespace certgraph {

template <class V>
struct CycleCertificate {
    std::vector<V> path;
};

template <class V>
struct TopoWitness {
    std::vector<V> order;
};

struct CycleSearchStats {
    // successor entries examined
    std::size_t expansions = 0;
};

namespace detail {

template <GraphView G>
void require_in_dom(const G& g, const vertex_of<G>& v, const char* what) {
    if (!g.mem_vertex(v)) {
        throw precondition_error(std::string(what) + ": vertex " + describe(v) + " is not in the graph");
    }
}

template <GraphView G>
void require_all_in_dom(const G& g, const std::vector<vertex_of<G>>& l, const char* what) {
    for (const auto& v : l) {
        require_in_dom(g, v, what);
    }
}

} // namespace detail

// Is `l` a path from v1 to v2? `l` omits v1 and ends with v2; the empty list
// is a path iff v1 = v2.
template <GraphView G>
bool is_path(const vertex_of<G>& v1, const std::vector<vertex_of<G>>& l, const vertex_of<G>& v2, const G& g) {
    using VT = typename G::vertex_traits;
    detail::require_in_dom(g, v1, "is_path");
    detail::require_in_dom(g, v2, "is_path");
    detail::require_all_in_dom(g, l, "is_path");
    if (l.empty()) {
        return VT::equal(v1, v2);
    }
    if (!is_succ<vertex_of<G>, VT>(l.front(), g.succ(v1))) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (!is_succ<vertex_of<G>, VT>(l[i + 1], g.succ(l[i]))) {
            return false;
        }
    }
    return VT::equal(l.back(), v2);
}

template <class V>
const V& get_last(const std::vector<V>& l) {
    if (l.empty()) {
        throw empty_list_error("get_last of an empty list");
    }
    return l.back();
}

template <GraphView G>
bool is_cycle(const std::vector<vertex_of<G>>& l, const G& g) {
    detail::require_all_in_dom(g, l, "is_cycle");
    if (l.empty()) {
        return false;
    }
    const auto& v = get_last(l);
    return is_path(v, l, v, g);
}

template <GraphView G>
bool is_cycle(const CycleCertificate<vertex_of<G>>& c, const G& g) {
    return is_cycle(c.path, g);
}

// Iterative three-colour DFS. On reaching a vertex w that is still on the
// DFS stack, returns the stack segment after w followed by w. In undirected
// views the edge back to the DFS parent is skipped once, so a single edge
// a - b is not reported as the cycle [b, a].
//
// Examines each successor entry at most once: expansions <= |V| + |E|.
template <GraphView G>
std::optional<CycleCertificate<vertex_of<G>>> find_cycle(const G& g, CycleSearchStats* stats = nullptr) {
    using V = vertex_of<G>;
    using VT = typename G::vertex_traits;
    enum class Color { white, gray, black };

    struct Frame {
        V vertex;
        std::vector<V> succ;
        std::size_t next = 0;
        std::optional<V> parent;
        bool parent_skipped = false;
    };

    const bool undirected = !g.is_directed();
    std::map<V, Color, TraitsLess<VT>> color;
    std::size_t expansions = 0;
    const auto finish = [&](std::optional<CycleCertificate<V>> r) {
        if (stats) {
            stats->expansions = expansions;
        }
        return r;
    };

    for (const V& root : g.all()) {
        if (color.contains(root)) {
            continue;
        }
        std::vector<Frame> stack;
        color[root] = Color::gray;
        stack.push_back(Frame{root, g.succ(root), 0, std::nullopt, false});

        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == top.succ.size()) {
                color[top.vertex] = Color::black;
                stack.pop_back();
                continue;
            }
            const V w = top.succ[top.next++];
            ++expansions;
            if (undirected && top.parent && !top.parent_skipped && VT::equal(w, *top.parent)) {
                top.parent_skipped = true;
                continue;
            }
            const auto it = color.find(w);
            if (it == color.end()) {
                const V from = top.vertex;
                color[w] = Color::gray;
                stack.push_back(Frame{w, g.succ(w), 0, from, false});
                continue;
            }
            if (it->second == Color::gray) {
                std::size_t pos = stack.size() - 1;
                while (!VT::equal(stack[pos].vertex, w)) {
                    --pos;
                }
                CycleCertificate<V> cert;
                for (std::size_t i = pos + 1; i < stack.size(); ++i) {
                    cert.path.push_back(stack[i].vertex);
                }
                cert.path.push_back(w);
                return finish(std::move(cert));
            }
        }
    }
    return finish(std::nullopt);
}

// Kahn's algorithm, smallest ready vertex first. Empty when the graph has a
// cycle.
template <GraphView G>
std::optional<TopoWitness<vertex_of<G>>> topo_witness(const G& g) {
    using V = vertex_of<G>;
    using Less = TraitsLess<typename G::vertex_traits>;
    if (!g.is_directed()) {
        throw unsupported_input_error("topological order requires a directed graph");
    }
    const auto vertices = g.all();
    std::map<V, std::size_t, Less> in_degree;
    for (const V& v : vertices) {
        in_degree.try_emplace(v, 0);
    }
    for (const V& v : vertices) {
        for (const V& w : g.succ(v)) {
            ++in_degree[w];
        }
    }
    std::set<V, Less> ready;
    for (const auto& [v, d] : in_degree) {
        if (d == 0) {
            ready.insert(v);
        }
    }
    TopoWitness<V> out;
    while (!ready.empty()) {
        const V v = *ready.begin();
        ready.erase(ready.begin());
        out.order.push_back(v);
        for (const V& w : g.succ(v)) {
            if (--in_degree[w] == 0) {
                ready.insert(w);
            }
        }
    }
    if (out.order.size() != vertices.size()) {
        return std::nullopt;
    }
    return out;
}

// True iff `order` lists every vertex exactly once and every edge points forward.
template <GraphView G>
bool check_topo(const std::vector<vertex_of<G>>& order, const G& g) {
    using V = vertex_of<G>;
    if (!g.is_directed()) {
        throw unsupported_input_error("topological order requires a directed graph");
    }
    std::map<V, std::size_t, TraitsLess<typename G::vertex_traits>> index;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!g.mem_vertex(order[i]) || !index.emplace(order[i], i).second) {
            return false;
        }
    }
    const auto vertices = g.all();
    if (index.size() != vertices.size()) {
        return false;
    }
    for (const V& v : vertices) {
        for (const V& w : g.succ(v)) {
            if (index.at(v) >= index.at(w)) {
                return false;
            }
        }
    }
    return true;
}

template <GraphView G>
bool check_topo(const TopoWitness<vertex_of<G>>& w, const G& g) {
    return check_topo(w.order, g);
}

} // namespace certgraph
