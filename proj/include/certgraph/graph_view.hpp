// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Read-only, unlabeled view of a graph: the interface every algorithm in
// this library is written against. A view exposes
//
//   is_directed()   direction flag
//   succ(v)         successors of v (requires v in dom), sorted, no duplicates
//   all()           every vertex, sorted
//   mem_vertex(v)   domain membership
//
// and the logical model the contracts are phrased in:
//
//   dom()           the vertex set
//   suc_model(v)    the successor set of v
//
// The model is materialised from the backing structure on each call. It is
// not stored.
//
// DigraphView refers to a Digraph and observes later mutations.
// PersistentView holds its own snapshot of an immutable graph.

#include <algorithm>
#include <concepts>
#include <set>
#include <vector>

#include "certgraph/contracts.hpp"
#include "certgraph/digraph.hpp"
#include "certgraph/errors.hpp"
#include "certgraph/persistent_graph.hpp"

namespace certgraph {

template <class G>
concept GraphView = requires(const G& g, const typename G::vertex_type& v) {
    typename G::vertex_type;
    typename G::vertex_traits;
    requires ComparableTraits<typename G::vertex_traits, typename G::vertex_type>;
    { g.is_directed() } -> std::convertible_to<bool>;
    { g.succ(v) } -> std::same_as<std::vector<typename G::vertex_type>>;
    { g.all() } -> std::same_as<std::vector<typename G::vertex_type>>;
    { g.mem_vertex(v) } -> std::convertible_to<bool>;
};

template <GraphView G>
using vertex_of = typename G::vertex_type;

template <GraphView G>
using vertex_set_of = std::set<vertex_of<G>, TraitsLess<typename G::vertex_traits>>;

template <class V, class VertexTraits = DefaultComparable<V>>
class DigraphView {
  public:
    using vertex_type = V;
    using vertex_traits = VertexTraits;
    using model_set = std::set<V, TraitsLess<VertexTraits>>;

    explicit DigraphView(const Digraph<V, VertexTraits>& g) : g_(&g) {}

    [[nodiscard]]
    bool is_directed() const noexcept {
        return true;
    }
    [[nodiscard]]
    std::vector<V> succ(const V& v) const {
        return g_->succ(v);
    }
    [[nodiscard]]
    std::vector<V> all() const {
        return g_->vertices();
    }
    [[nodiscard]]
    bool mem_vertex(const V& v) const {
        return g_->mem_vertex(v);
    }

    [[nodiscard]]
    model_set dom() const {
        const auto vs = g_->vertices();
        return {vs.begin(), vs.end()};
    }
    [[nodiscard]]
    model_set suc_model(const V& v) const {
        if (!g_->mem_vertex(v)) {
            detail::throw_missing_vertex(v);
        }
        model_set out;
        for (const auto& [a, b] : g_->edges()) {
            if (VertexTraits::equal(a, v)) {
                out.insert(b);
            }
        }
        return out;
    }

    [[nodiscard]]
    const Digraph<V, VertexTraits>& graph() const noexcept {
        return *g_;
    }

  private:
    const Digraph<V, VertexTraits>* g_;
};

// Undirected view: labels are erased and parallel edges collapse.
template <class V, class L, class VertexTraits = DefaultComparable<V>, class LabelTraits = DefaultOrdered<L>>
class PersistentView {
  public:
    using vertex_type = V;
    using vertex_traits = VertexTraits;
    using graph_type = PersistentGraph<V, L, VertexTraits, LabelTraits>;
    using model_set = std::set<V, TraitsLess<VertexTraits>>;

    explicit PersistentView(graph_type g) : g_(std::move(g)) {}

    [[nodiscard]]
    bool is_directed() const noexcept {
        return false;
    }
    [[nodiscard]]
    std::vector<V> succ(const V& v) const {
        return g_.succ(v);
    }
    [[nodiscard]]
    std::vector<V> all() const {
        return g_.vertices();
    }
    [[nodiscard]]
    bool mem_vertex(const V& v) const {
        return g_.mem_vertex(v);
    }

    [[nodiscard]]
    model_set dom() const {
        const auto vs = g_.vertices();
        return {vs.begin(), vs.end()};
    }
    [[nodiscard]]
    model_set suc_model(const V& v) const {
        model_set out;
        for (const auto& [w, _] : g_.succ_edges(v)) {
            out.insert(w);
        }
        return out;
    }

    [[nodiscard]]
    const graph_type& graph() const noexcept {
        return g_;
    }

  private:
    graph_type g_;
};

template <class V, class VT>
DigraphView<V, VT> view_of_digraph(const Digraph<V, VT>& g) {
    return DigraphView<V, VT>(g);
}

template <class V, class L, class VT, class LT>
PersistentView<V, L, VT, LT> view_of_persistent(PersistentGraph<V, L, VT, LT> g) {
    return PersistentView<V, L, VT, LT>(std::move(g));
}

// Membership test used by the path checker: v in l, by vertex equality.
template <class V, class VertexTraits = DefaultComparable<V>>
bool is_succ(const V& v, const std::vector<V>& l) {
    return std::any_of(l.begin(), l.end(), [&](const V& w) { return VertexTraits::equal(w, v); });
}

// v2 is a successor of v1. Requires v1 in dom.
template <GraphView G>
bool edge(const G& g, const vertex_of<G>& v1, const vertex_of<G>& v2) {
    if (!g.mem_vertex(v1)) {
        detail::throw_missing_vertex(v1);
    }
    return is_succ<vertex_of<G>, typename G::vertex_traits>(v2, g.succ(v1));
}

// Number of (v, w) successor pairs, i.e. |E| as seen through the view.
template <GraphView G>
std::size_t view_edge_count(const G& g) {
    std::size_t n = 0;
    for (const auto& v : g.all()) {
        n += g.succ(v).size();
    }
    return n;
}

} // namespace certgraph
