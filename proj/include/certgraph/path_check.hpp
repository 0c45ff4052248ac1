// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Breadth-first path existence with a per-checker query cache.
//
// Two search variants share one contract (true iff a path v1 ~> v2 exists):
//
//   check_path         queue may hold duplicates; a popped vertex is expanded
//                      only the first time it is popped, and then all of its
//                      successors are pushed.
//   check_path_marked  a vertex is marked when first pushed and never pushed
//                      again, so the queue is duplicate-free, disjoint from
//                      the visited set, and never longer than |V|.
//
// Answers are cached under the ordered pair (v1, v2) and shared by both
// variants. The cache is only meaningful while the underlying graph is not
// modified.
//
// An Observer receives a SearchState at every loop head; the default does
// nothing. See path_invariants.hpp for the observer that asserts the loop
// invariants of both variants.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "certgraph/cycle_cert.hpp"
#include "certgraph/errors.hpp"
#include "certgraph/graph_view.hpp"

namespace certgraph {

enum class SearchVariant { original, marked };

inline const char* to_string(SearchVariant v) noexcept {
    return v == SearchVariant::original ? "original" : "marked";
}

struct SearchStats {
    std::size_t queries = 0;
    std::size_t pushes = 0;
    std::size_t pops = 0;
    std::size_t max_queue = 0;
    std::size_t cache_hits = 0;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

template <class V, class Less>
struct SearchState {
    SearchVariant variant;
    const V& source;
    const V& target;
    const std::deque<V>& queue;
    const std::set<V, Less>& visited;
    // Null for the original variant.
    const std::set<V, Less>* marked;
};

struct NoObserver {
    template <class State>
    void operator()(const State&) const noexcept {}
};

template <GraphView G, class Observer = NoObserver>
class PathChecker {
  public:
    using vertex_type = vertex_of<G>;
    using vertex_traits = typename G::vertex_traits;
    using less_type = TraitsLess<vertex_traits>;
    using state_type = SearchState<vertex_type, less_type>;
    using key_type = std::pair<vertex_type, vertex_type>;

    struct KeyLess {
        bool operator()(const key_type& a, const key_type& b) const {
            const int c = vertex_traits::compare(a.first, b.first);
            return c != 0 ? c < 0 : vertex_traits::compare(a.second, b.second) < 0;
        }
    };
    using cache_type = std::map<key_type, bool, KeyLess>;

    explicit PathChecker(G graph, Observer observer = Observer{})
        : graph_(std::move(graph)), observer_(std::move(observer)) {}

    bool check_path(const vertex_type& v1, const vertex_type& v2) { return query(v1, v2, SearchVariant::original); }

    bool check_path_marked(const vertex_type& v1, const vertex_type& v2) {
        return query(v1, v2, SearchVariant::marked);
    }

    bool check(const vertex_type& v1, const vertex_type& v2, SearchVariant variant) {
        return query(v1, v2, variant);
    }

    [[nodiscard]]
    std::optional<bool> cached(const vertex_type& v1, const vertex_type& v2) const {
        const auto it = cache_.find({v1, v2});
        if (it == cache_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    [[nodiscard]]
    const cache_type& cache() const noexcept {
        return cache_;
    }

    // Totals over every query so far; max_queue is the largest queue seen.
    [[nodiscard]]
    const SearchStats& stats() const noexcept {
        return totals_;
    }

    // Counters of the most recent query alone.
    [[nodiscard]]
    const SearchStats& last_query() const noexcept {
        return last_;
    }

    [[nodiscard]]
    const G& graph() const noexcept {
        return graph_;
    }

    Observer& observer() noexcept { return observer_; }

  private:
    bool query(const vertex_type& v1, const vertex_type& v2, SearchVariant variant) {
        if (!graph_.mem_vertex(v1)) {
            detail::throw_missing_vertex(v1);
        }
        if (!graph_.mem_vertex(v2)) {
            detail::throw_missing_vertex(v2);
        }
        last_ = SearchStats{};
        last_.queries = 1;
        if (const auto hit = cached(v1, v2)) {
            last_.cache_hits = 1;
            accumulate();
            return *hit;
        }
        const bool found = variant == SearchVariant::original ? search_original(v1, v2) : search_marked(v1, v2);
        cache_.emplace(key_type{v1, v2}, found);
        accumulate();
        return found;
    }

    void push(std::deque<vertex_type>& q, const vertex_type& v) {
        q.push_back(v);
        ++last_.pushes;
        last_.max_queue = std::max(last_.max_queue, q.size());
    }

    bool search_original(const vertex_type& v1, const vertex_type& v2) {
        std::deque<vertex_type> q;
        std::set<vertex_type, less_type> visited;
        push(q, v1);
        for (;;) {
            observer_(state_type{SearchVariant::original, v1, v2, q, visited, nullptr});
            if (q.empty()) {
                return false;
            }
            const vertex_type v = std::move(q.front());
            q.pop_front();
            ++last_.pops;
            if (vertex_traits::equal(v, v2)) {
                return true;
            }
            if (visited.insert(v).second) {
                for (const vertex_type& s : graph_.succ(v)) {
                    push(q, s);
                }
            }
        }
    }

    bool search_marked(const vertex_type& v1, const vertex_type& v2) {
        std::deque<vertex_type> q;
        std::set<vertex_type, less_type> visited;
        std::set<vertex_type, less_type> marked{v1};
        push(q, v1);
        for (;;) {
            observer_(state_type{SearchVariant::marked, v1, v2, q, visited, &marked});
            if (q.empty()) {
                return false;
            }
            const vertex_type v = std::move(q.front());
            q.pop_front();
            ++last_.pops;
            if (vertex_traits::equal(v, v2)) {
                return true;
            }
            visited.insert(v);
            for (const vertex_type& s : graph_.succ(v)) {
                if (marked.insert(s).second) {
                    push(q, s);
                }
            }
        }
    }

    void accumulate() {
        totals_.queries += last_.queries;
        totals_.pushes += last_.pushes;
        totals_.pops += last_.pops;
        totals_.cache_hits += last_.cache_hits;
        totals_.max_queue = std::max(totals_.max_queue, last_.max_queue);
    }

    G graph_;
    Observer observer_;
    cache_type cache_;
    SearchStats totals_;
    SearchStats last_;
};

template <GraphView G>
PathChecker<G> make_path_checker(G graph) {
    return PathChecker<G>(std::move(graph));
}

// Result of splitting a path at the first vertex that fails a predicate.
template <class V>
struct PathSplit {
    V last_holding;  // u': satisfies p
    V first_failing; // v': fails p; edge u' -> v'
    std::vector<V> prefix;  // is_path(u, prefix, u')
    std::vector<V> suffix;  // is_path(v', suffix, v)
};

// Given p(u), !p(v) and a path s from u to v, returns the edge u' -> v' of
// the path where p first stops holding, together with the two path pieces
// around it.
template <GraphView G, class Pred>
PathSplit<vertex_of<G>> intermediate_value(Pred&& p, const vertex_of<G>& u, const vertex_of<G>& v,
                                           const std::vector<vertex_of<G>>& s, const G& g) {
    using V = vertex_of<G>;
    if (!p(u) || p(v) || !is_path(u, s, v, g)) {
        throw precondition_error("intermediate_value requires p(u), not p(v) and a path from u to v");
    }
    const V* prev = &u;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!p(s[i])) {
            return PathSplit<V>{*prev, s[i], std::vector<V>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i)),
                                std::vector<V>(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end())};
        }
        prev = &s[i];
    }
    // Only reachable when p disagrees on two equal vertices.
    throw precondition_error("intermediate_value: predicate holds on every vertex of the path");
}

} // namespace certgraph
