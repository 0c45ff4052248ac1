// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "certgraph/digraph.hpp"
#include "certgraph/persistent_graph.hpp"

namespace certgraph::testing {

using SGraph = PersistentGraph<std::string, std::string>;

// D1: 1 -> 2 -> 3
inline Digraph<int> d1() {
    Digraph<int> g;
    g.add_vertex(1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

// D2: 1 -> 2 -> 3 -> 1
inline Digraph<int> d2() {
    Digraph<int> g;
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 1);
    return g;
}

// P1: a -x- b
inline SGraph p1() {
    return SGraph::empty().add_edge_labeled("a", "x", "b");
}

// Edge set of a digraph as an adjacency matrix on 0..n-1, built straight
// from the structure's edge list for use by test-side oracles.
struct Adjacency {
    int n = 0;
    std::vector<std::vector<bool>> m;

    explicit Adjacency(const Digraph<int>& g) : n(static_cast<int>(g.nb_vertices())), m(n, std::vector<bool>(n)) {
        for (const auto& [a, b] : g.edges()) {
            m[a][b] = true;
        }
    }
    bool operator()(int a, int b) const { return m[a][b]; }
};

} // namespace certgraph::testing
