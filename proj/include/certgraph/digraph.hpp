// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Mutable, unlabeled, directed graph stored as a map from each vertex to the
// set of its successors. All operations mutate in place.
//
// Closure invariant: every successor of every vertex is itself a vertex.
// Not internally synchronised; a Digraph must have a single writer.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "certgraph/contracts.hpp"
#include "certgraph/errors.hpp"

namespace certgraph {

template <class V, class VertexTraits = DefaultComparable<V>>
    requires ComparableTraits<VertexTraits, V>
class Digraph {
    using Less = TraitsLess<VertexTraits>;
    using SuccSet = std::set<V, Less>;

  public:
    using vertex_type = V;
    using vertex_traits = VertexTraits;

    Digraph() = default;

    [[nodiscard]]
    static Digraph create() {
        return Digraph{};
    }

    void add_vertex(const V& v) { adj_.try_emplace(v); }

    // Absent endpoints are inserted first.
    void add_edge(const V& v1, const V& v2) {
        add_vertex(v2);
        adj_[v1].insert(v2);
    }

    // Both endpoints must exist; removing an absent edge is a no-op.
    void remove_edge(const V& v1, const V& v2) {
        if (!mem_vertex(v2)) {
            detail::throw_missing_vertex(v2);
        }
        successors(v1).erase(v2);
    }

    // Drops v and every edge into it. Absent v is a no-op.
    void remove_vertex(const V& v) {
        if (adj_.erase(v) == 0) {
            return;
        }
        for (auto& [_, s] : adj_) {
            s.erase(v);
        }
    }

    [[nodiscard]]
    bool mem_vertex(const V& v) const {
        return adj_.contains(v);
    }

    [[nodiscard]]
    bool mem_edge(const V& v1, const V& v2) const {
        const auto it = adj_.find(v1);
        return it != adj_.end() && it->second.contains(v2);
    }

    [[nodiscard]]
    std::vector<V> succ(const V& v) const {
        const SuccSet& s = successors(v);
        return {s.begin(), s.end()};
    }

    [[nodiscard]]
    std::vector<V> vertices() const {
        std::vector<V> out;
        out.reserve(adj_.size());
        for (const auto& [v, _] : adj_) {
            out.push_back(v);
        }
        return out;
    }

    // All edges as (src, dst), sorted.
    [[nodiscard]]
    std::vector<std::pair<V, V>> edges() const {
        std::vector<std::pair<V, V>> out;
        for (const auto& [v, s] : adj_) {
            for (const V& w : s) {
                out.emplace_back(v, w);
            }
        }
        return out;
    }

    [[nodiscard]]
    std::size_t nb_vertices() const noexcept {
        return adj_.size();
    }

    [[nodiscard]]
    std::size_t nb_edges() const {
        std::size_t n = 0;
        for (const auto& [_, s] : adj_) {
            n += s.size();
        }
        return n;
    }

    [[nodiscard]]
    std::optional<std::string> find_invariant_violation() const {
        for (const auto& [v, s] : adj_) {
            for (const V& w : s) {
                if (!adj_.contains(w)) {
                    return "closure: successor " + detail::describe(w) + " of " + detail::describe(v) +
                           " is not a vertex";
                }
            }
        }
        return std::nullopt;
    }

    [[nodiscard]]
    bool check_invariant() const {
        return !find_invariant_violation().has_value();
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        const auto eq = [](const V& x, const V& y) { return VertexTraits::equal(x, y); };
        const auto xs = a.edges();
        const auto ys = b.edges();
        const auto va = a.vertices();
        const auto vb = b.vertices();
        return std::ranges::equal(va, vb, eq) &&
               std::ranges::equal(xs, ys, [&](const auto& p, const auto& q) {
                   return eq(p.first, q.first) && eq(p.second, q.second);
               });
    }

  private:
    const SuccSet& successors(const V& v) const {
        const auto it = adj_.find(v);
        if (it == adj_.end()) {
            detail::throw_missing_vertex(v);
        }
        return it->second;
    }
    SuccSet& successors(const V& v) {
        const auto it = adj_.find(v);
        if (it == adj_.end()) {
            detail::throw_missing_vertex(v);
        }
        return it->second;
    }

    std::map<V, SuccSet, Less> adj_;
};

} // namespace certgraph
