// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Build a small graph, ask for a path, and get a checked cycle certificate.

#include <iostream>

#include <certgraph.hpp>

int main() {
    using namespace certgraph;

    auto g = PersistentGraph<int, int>::empty();
    g = g.add_vertex(1);
    g = g.add_edge(1, 2);
    g = g.add_edge(2, 3);

    auto finder = make_path_checker(view_of_persistent(g));
    std::cout << (finder.check_path(1, 3) ? "Path exists" : "Path does not exist") << '\n';

    Digraph<int> d;
    d.add_edge(1, 2);
    d.add_edge(2, 3);
    d.add_edge(3, 1);
    const auto view = view_of_digraph(d);
    if (const auto cert = find_cycle(view)) {
        std::cout << "cycle:";
        for (int v : cert->path) {
            std::cout << ' ' << v;
        }
        std::cout << (is_cycle(*cert, view) ? " (checked)" : " (INVALID)") << '\n';
        return is_cycle(*cert, view) ? 0 : 1;
    }
    return 1;
}
