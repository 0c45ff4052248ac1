// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Observer for PathChecker that asserts the BFS loop invariants at every
// loop head, throwing invariant_error on the first failure. Reachability is
// answered by the brute-force oracle, memoised per source vertex.
//
// Both variants:
//   reachability   every queued vertex is reachable from the source
//   closure        every successor of a visited vertex is queued or visited
//   witness        if the target is reachable, some unvisited queued vertex
//                  reaches it
// Marked variant, in addition:
//   queue entries are distinct and disjoint from visited,
//   marked = visited + queue, and |queue| <= |V|.

#include <cstddef>
#include <map>
#include <memory>
#include <string>

#include "certgraph/errors.hpp"
#include "certgraph/graph_view.hpp"
#include "certgraph/oracle.hpp"
#include "certgraph/path_check.hpp"

namespace certgraph {

template <GraphView G>
class InvariantObserver {
  public:
    using vertex_type = vertex_of<G>;
    using less_type = TraitsLess<typename G::vertex_traits>;

    explicit InvariantObserver(G graph)
        : graph_(std::move(graph)), reach_(std::make_shared<ReachMap>()), checks_(std::make_shared<std::size_t>(0)) {}

    void operator()(const SearchState<vertex_type, less_type>& st) {
        ++*checks_;
        const auto& from_source = reach(st.source);
        for (const auto& v : st.queue) {
            if (!from_source.contains(v)) {
                fail(st, "queued vertex " + detail::describe(v) + " is not reachable from the source");
            }
        }

        std::set<vertex_type, less_type> queued(st.queue.begin(), st.queue.end());
        for (const auto& v : st.visited) {
            for (const auto& s : graph_.succ(v)) {
                if (!queued.contains(s) && !st.visited.contains(s)) {
                    fail(st, "successor " + detail::describe(s) + " of visited " + detail::describe(v) +
                                 " is neither queued nor visited");
                }
            }
        }

        if (from_source.contains(st.target)) {
            bool witness = false;
            for (const auto& w : st.queue) {
                if (!st.visited.contains(w) && reach(w).contains(st.target)) {
                    witness = true;
                    break;
                }
            }
            if (!witness) {
                fail(st, "target is reachable but no unvisited queued vertex reaches it");
            }
        }

        if (st.marked) {
            if (queued.size() != st.queue.size()) {
                fail(st, "queue holds a duplicate");
            }
            for (const auto& v : st.queue) {
                if (st.visited.contains(v)) {
                    fail(st, "queued vertex " + detail::describe(v) + " is already visited");
                }
            }
            std::set<vertex_type, less_type> both = st.visited;
            both.insert(st.queue.begin(), st.queue.end());
            if (both.size() != st.marked->size() ||
                !std::equal(both.begin(), both.end(), st.marked->begin(), [](const auto& a, const auto& b) {
                    return G::vertex_traits::equal(a, b);
                })) {
                fail(st, "marked differs from visited + queue");
            }
            if (st.queue.size() > graph_.all().size()) {
                fail(st, "queue longer than the vertex count");
            }
        }
    }

    // Loop heads checked so far (shared between copies of this observer).
    [[nodiscard]]
    std::size_t checks() const noexcept {
        return *checks_;
    }

  private:
    using ReachMap = std::map<vertex_type, vertex_set_of<G>, less_type>;

    const vertex_set_of<G>& reach(const vertex_type& v) {
        auto it = reach_->find(v);
        if (it == reach_->end()) {
            it = reach_->emplace(v, oracle::reachable_set(graph_, v)).first;
        }
        return it->second;
    }

    [[noreturn]] static void fail(const SearchState<vertex_type, less_type>& st, const std::string& what) {
        throw invariant_error(std::string(to_string(st.variant)) + " search " + detail::describe(st.source) +
                              " -> " + detail::describe(st.target) + ": " + what);
    }

    G graph_;
    std::shared_ptr<ReachMap> reach_;
    std::shared_ptr<std::size_t> checks_;
};

} // namespace certgraph
