// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force ground truth and seeded generators for property tests.
// Everything here is deliberately naive; it must stay simpler than the code
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "certgraph/digraph.hpp"
#include "certgraph/errors.hpp"
#include "certgraph/graph_view.hpp"
#include "certgraph/persistent_graph.hpp"

namespace certgraph::oracle {

namespace detail {

template <GraphView G>
void require_vertex(const G& g, const vertex_of<G>& v) {
    if (!g.mem_vertex(v)) {
        certgraph::detail::throw_missing_vertex(v);
    }
}

} // namespace detail

// Vertices reachable from v1 (including v1), by expanding to a fixpoint.
template <GraphView G>
vertex_set_of<G> reachable_set(const G& g, const vertex_of<G>& v1) {
    detail::require_vertex(g, v1);
    vertex_set_of<G> reach{v1};
    bool changed = true;
    while (changed) {
        changed = false;
        const auto frontier = reach;
        for (const auto& x : frontier) {
            for (const auto& w : g.succ(x)) {
                changed = reach.insert(w).second || changed;
            }
        }
    }
    return reach;
}

template <GraphView G>
bool reachable(const G& g, const vertex_of<G>& v1, const vertex_of<G>& v2) {
    detail::require_vertex(g, v2);
    return reachable_set(g, v1).contains(v2);
}

// A path list l with is_path(v1, l, v2), from BFS parent links.
template <GraphView G>
std::optional<std::vector<vertex_of<G>>> witness_path(const G& g, const vertex_of<G>& v1, const vertex_of<G>& v2) {
    using V = vertex_of<G>;
    using VT = typename G::vertex_traits;
    detail::require_vertex(g, v1);
    detail::require_vertex(g, v2);
    if (VT::equal(v1, v2)) {
        return std::vector<V>{};
    }
    std::map<V, V, TraitsLess<VT>> parent;
    std::vector<V> frontier{v1};
    vertex_set_of<G> seen{v1};
    while (!frontier.empty()) {
        std::vector<V> next;
        for (const V& x : frontier) {
            for (const V& w : g.succ(x)) {
                if (seen.insert(w).second) {
                    parent.emplace(w, x);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    if (!seen.contains(v2)) {
        return std::nullopt;
    }
    std::vector<V> path;
    for (V cur = v2; !VT::equal(cur, v1); cur = parent.at(cur)) {
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

inline constexpr std::size_t max_cycle_search_vertices = 8;

// Every simple cycle, once, in certificate form [a, ..., s] where s is the
// smallest vertex of the cycle. Undirected views only report cycles through
// at least three distinct vertices (plus self-loops), one orientation each.
template <GraphView G>
std::vector<std::vector<vertex_of<G>>> all_simple_cycles(const G& g) {
    using V = vertex_of<G>;
    using VT = typename G::vertex_traits;
    const auto vertices = g.all();
    if (vertices.size() > max_cycle_search_vertices) {
        throw size_bound_error("exhaustive cycle search is limited to " +
                               std::to_string(max_cycle_search_vertices) + " vertices");
    }
    const bool undirected = !g.is_directed();
    std::vector<std::vector<V>> out;

    for (const V& s : vertices) {
        std::vector<V> path;
        vertex_set_of<G> on_path;
        std::function<void(const V&)> extend = [&](const V& x) {
            for (const V& w : g.succ(x)) {
                if (VT::equal(w, s)) {
                    std::vector<V> cycle = path;
                    cycle.push_back(s);
                    const bool keep = !undirected || cycle.size() == 1 ||
                                      (cycle.size() >= 3 && VT::compare(cycle.front(), cycle[cycle.size() - 2]) < 0);
                    if (keep) {
                        out.push_back(std::move(cycle));
                    }
                } else if (VT::compare(w, s) > 0 && !on_path.contains(w)) {
                    path.push_back(w);
                    on_path.insert(w);
                    extend(w);
                    on_path.erase(w);
                    path.pop_back();
                }
            }
        };
        extend(s);
    }
    return out;
}

// Seeded generation. Uses raw mt19937_64 output so a seed means the same
// corpus on every standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

  private:
    std::mt19937_64 engine_;
};

struct GraphParams {
    std::uint64_t seed = 0;
    int vertices = 4;
    double edge_prob = 0.3;
    bool self_loops = false;
    // Labels used by undirected generation: 0 .. labels-1, 0 being the default.
    int labels = 2;
};

// Vertices 0..n-1; each ordered pair (self pairs only with self_loops) is an
// edge with probability edge_prob.
inline Digraph<int> gen_digraph(const GraphParams& p) {
    Rng rng(p.seed);
    Digraph<int> g;
    for (int v = 0; v < p.vertices; ++v) {
        g.add_vertex(v);
    }
    for (int a = 0; a < p.vertices; ++a) {
        for (int b = 0; b < p.vertices; ++b) {
            if ((a != b || p.self_loops) && rng.chance(p.edge_prob)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

// Each unordered pair gets, per label, an edge with probability edge_prob.
inline PersistentGraph<int, int> gen_persistent(const GraphParams& p) {
    Rng rng(p.seed);
    auto g = PersistentGraph<int, int>::empty();
    for (int v = 0; v < p.vertices; ++v) {
        g = g.add_vertex(v);
    }
    for (int a = 0; a < p.vertices; ++a) {
        for (int b = a; b < p.vertices; ++b) {
            if (a == b && !p.self_loops) {
                continue;
            }
            for (int l = 0; l < std::max(p.labels, 1); ++l) {
                if (rng.chance(p.edge_prob)) {
                    g = g.add_edge_labeled(a, l, b);
                }
            }
        }
    }
    return g;
}

enum class OpKind { add_vertex, add_edge, remove_edge_labeled, remove_edge, remove_vertex };

struct GraphOp {
    OpKind kind;
    int v1;
    int v2;
    int label;
};

struct OpParams {
    std::uint64_t seed = 0;
    std::size_t length = 64;
    int vertices = 8;
    int labels = 3;
};

// Additions are drawn 4 times in 7, removals 3 in 7.
inline std::vector<GraphOp> gen_ops(const OpParams& p) {
    Rng rng(p.seed);
    std::vector<GraphOp> ops;
    ops.reserve(p.length);
    for (std::size_t i = 0; i < p.length; ++i) {
        const auto r = rng.below(7);
        const OpKind kind = r < 1   ? OpKind::add_vertex
                            : r < 4 ? OpKind::add_edge
                            : r < 5 ? OpKind::remove_edge_labeled
                            : r < 6 ? OpKind::remove_edge
                                    : OpKind::remove_vertex;
        const int v1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.vertices)));
        const int v2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.vertices)));
        const int label = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(p.labels, 1))));
        ops.push_back(GraphOp{kind, v1, v2, label});
    }
    return ops;
}

// Removals whose endpoints are missing are skipped (they would raise
// missing_vertex_error).
inline PersistentGraph<int, int> apply(const PersistentGraph<int, int>& g, const GraphOp& op) {
    const bool both = g.mem_vertex(op.v1) && g.mem_vertex(op.v2);
    switch (op.kind) {
    case OpKind::add_vertex: return g.add_vertex(op.v1);
    case OpKind::add_edge: return g.add_edge_labeled(op.v1, op.label, op.v2);
    case OpKind::remove_edge_labeled: return both ? g.remove_edge_labeled(op.v1, op.label, op.v2) : g;
    case OpKind::remove_edge: return both ? g.remove_edge(op.v1, op.v2) : g;
    case OpKind::remove_vertex: return g.remove_vertex(op.v1);
    }
    return g;
}

// Labels are ignored; remove_edge_labeled acts as remove_edge.
inline void apply(Digraph<int>& g, const GraphOp& op) {
    const bool both = g.mem_vertex(op.v1) && g.mem_vertex(op.v2);
    switch (op.kind) {
    case OpKind::add_vertex: g.add_vertex(op.v1); break;
    case OpKind::add_edge: g.add_edge(op.v1, op.v2); break;
    case OpKind::remove_edge_labeled:
    case OpKind::remove_edge:
        if (both) {
            g.remove_edge(op.v1, op.v2);
        }
        break;
    case OpKind::remove_vertex: g.remove_vertex(op.v1); break;
    }
}

// Calls f(g) for every digraph on vertices 0..n-1: 2^(n*n) graphs with
// self-loops, 2^(n*(n-1)) without.
template <class F>
void for_each_digraph(int n, bool self_loops, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b || self_loops) {
                pairs.emplace_back(a, b);
            }
        }
    }
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Digraph<int> g;
        for (int v = 0; v < n; ++v) {
            g.add_vertex(v);
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1U) {
                g.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        f(static_cast<const Digraph<int>&>(g));
    }
}

} // namespace certgraph::oracle
