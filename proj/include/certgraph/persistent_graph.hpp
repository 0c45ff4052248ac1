// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Immutable undirected graph with labeled edges.
//
// Representation: a persistent map from each vertex to the persistent set of
// (neighbour, label) pairs incident to it. Every update returns a new graph
// and leaves the receiver untouched. Two parallel edges between the same pair
// of vertices may coexist as long as their labels differ.
//
// Invariant (checked by find_invariant_violation):
//   closure   - every neighbour recorded in an adjacency set is a vertex;
//   symmetry  - (v2, l) in adj(v1) iff (v1, l) in adj(v2).
// A self-loop (v, l, v) is stored once, in adj(v).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certgraph/contracts.hpp"
#include "certgraph/detail/persistent_tree.hpp"
#include "certgraph/errors.hpp"

namespace certgraph {

template <class V, class L>
struct LabeledEdge {
    V src;
    L label;
    V dst;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

template <class V, class L, class VertexTraits = DefaultComparable<V>, class LabelTraits = DefaultOrdered<L>>
    requires ComparableTraits<VertexTraits, V> && OrderedWithDefaultTraits<LabelTraits, L>
class PersistentGraph {
  public:
    using vertex_type = V;
    using label_type = L;
    using vertex_traits = VertexTraits;
    using label_traits = LabelTraits;
    using edge_type = LabeledEdge<V, L>;
    using adjacent_type = std::pair<V, L>;

  private:
    using EdgeSet = detail::PersistentSet<adjacent_type, PairOrder<VertexTraits, LabelTraits>>;
    using AdjMap = detail::PersistentMap<V, EdgeSet, VertexTraits>;

  public:
    PersistentGraph() = default;

    [[nodiscard]]
    static PersistentGraph empty() {
        return PersistentGraph{};
    }

    [[nodiscard]]
    PersistentGraph add_vertex(const V& v) const {
        if (adj_.contains(v)) {
            return *this;
        }
        return PersistentGraph{adj_.insert(v, EdgeSet{})};
    }

    // Absent endpoints are inserted first.
    [[nodiscard]]
    PersistentGraph add_edge_labeled(const V& v1, const L& label, const V& v2) const {
        AdjMap m = with_vertex(with_vertex(adj_, v1), v2);
        m = m.insert(v1, m.find(v1)->insert({v2, label}));
        if (!VertexTraits::equal(v1, v2)) {
            m = m.insert(v2, m.find(v2)->insert({v1, label}));
        }
        return PersistentGraph{std::move(m)};
    }

    [[nodiscard]]
    PersistentGraph add_edge(const V& v1, const V& v2) const {
        return add_edge_labeled(v1, LabelTraits::default_value(), v2);
    }

    [[nodiscard]]
    PersistentGraph remove_edge_labeled(const V& v1, const L& label, const V& v2) const {
        const EdgeSet& s1 = adjacency(v1);
        const EdgeSet& s2 = adjacency(v2);
        if (!s1.contains({v2, label})) {
            return *this;
        }
        AdjMap m = adj_.insert(v1, s1.erase({v2, label}));
        if (!VertexTraits::equal(v1, v2)) {
            m = m.insert(v2, s2.erase({v1, label}));
        }
        return PersistentGraph{std::move(m)};
    }

    // Removes every edge between v1 and v2, whatever its label.
    [[nodiscard]]
    PersistentGraph remove_edge(const V& v1, const V& v2) const {
        PersistentGraph g = *this;
        for (const L& label : find_all_edges(v1, v2)) {
            g = g.remove_edge_labeled(v1, label, v2);
        }
        return g;
    }

    // Removing an absent vertex returns the graph unchanged.
    [[nodiscard]]
    PersistentGraph remove_vertex(const V& v) const {
        const EdgeSet* s = adj_.find(v);
        if (!s) {
            return *this;
        }
        AdjMap m = adj_;
        s->for_each([&](const adjacent_type& e) {
            if (VertexTraits::equal(e.first, v)) {
                return;
            }
            m = m.insert(e.first, m.find(e.first)->erase({v, e.second}));
        });
        return PersistentGraph{m.erase(v)};
    }

    [[nodiscard]]
    bool mem_vertex(const V& v) const {
        return adj_.contains(v);
    }

    [[nodiscard]]
    bool mem_edge(const V& v1, const V& v2) const {
        const EdgeSet* s = adj_.find(v1);
        if (!s) {
            return false;
        }
        bool found = false;
        s->for_each([&](const adjacent_type& e) { found = found || VertexTraits::equal(e.first, v2); });
        return found;
    }

    [[nodiscard]]
    bool mem_edge_labeled(const V& v1, const L& label, const V& v2) const {
        const EdgeSet* s = adj_.find(v1);
        return s && s->contains({v2, label});
    }

    // Neighbours of v, deduplicated, ascending.
    [[nodiscard]]
    std::vector<V> succ(const V& v) const {
        std::vector<V> out;
        adjacency(v).for_each([&](const adjacent_type& e) {
            if (out.empty() || !VertexTraits::equal(out.back(), e.first)) {
                out.push_back(e.first);
            }
        });
        return out;
    }

    // (neighbour, label) pairs of v in pair order.
    [[nodiscard]]
    std::vector<adjacent_type> succ_edges(const V& v) const {
        return adjacency(v).elements();
    }

    // Labels of all edges between v1 and v2, ascending.
    [[nodiscard]]
    std::vector<L> find_all_edges(const V& v1, const V& v2) const {
        adjacency(v2);
        std::vector<L> out;
        adjacency(v1).for_each([&](const adjacent_type& e) {
            if (VertexTraits::equal(e.first, v2)) {
                out.push_back(e.second);
            }
        });
        return out;
    }

    [[nodiscard]]
    std::vector<V> vertices() const {
        return adj_.keys();
    }

    // One record per undirected edge, smaller endpoint first, sorted by (src, dst, label).
    [[nodiscard]]
    std::vector<edge_type> edges() const {
        std::vector<edge_type> out;
        adj_.for_each([&](const V& v, const EdgeSet& s) {
            s.for_each([&](const adjacent_type& e) {
                if (VertexTraits::compare(v, e.first) <= 0) {
                    out.push_back(edge_type{v, e.second, e.first});
                }
            });
        });
        return out;
    }

    [[nodiscard]]
    std::size_t nb_vertices() const noexcept {
        return adj_.size();
    }

    [[nodiscard]]
    std::size_t nb_edges() const {
        std::size_t n = 0;
        adj_.for_each([&](const V& v, const EdgeSet& s) {
            s.for_each([&](const adjacent_type& e) { n += VertexTraits::compare(v, e.first) <= 0 ? 1 : 0; });
        });
        return n;
    }

    // Full scan of the closure and symmetry invariants. Returns a description
    // of the first violation found, if any.
    [[nodiscard]]
    std::optional<std::string> find_invariant_violation() const {
        std::optional<std::string> bad;
        if (!adj_.well_formed()) {
            return std::string("vertex map is not a well-formed search tree");
        }
        adj_.for_each([&](const V& v1, const EdgeSet& s) {
            if (bad) {
                return;
            }
            if (!s.well_formed()) {
                bad = "adjacency set of " + detail::describe(v1) + " is not a well-formed search tree";
                return;
            }
            s.for_each([&](const adjacent_type& e) {
                if (bad) {
                    return;
                }
                const EdgeSet* back = adj_.find(e.first);
                if (!back) {
                    bad = "closure: neighbour " + detail::describe(e.first) + " of " + detail::describe(v1) +
                          " is not a vertex";
                } else if (!back->contains({v1, e.second})) {
                    bad = "symmetry: edge " + detail::describe(v1) + " -> " + detail::describe(e.first) +
                          " has no mirror";
                }
            });
        });
        return bad;
    }

    [[nodiscard]]
    bool check_invariant() const {
        return !find_invariant_violation().has_value();
    }

    // Same domain and same adjacency sets.
    friend bool operator==(const PersistentGraph& a, const PersistentGraph& b) {
        if (a.adj_.size() != b.adj_.size()) {
            return false;
        }
        const auto xs = a.adj_.items();
        const auto ys = b.adj_.items();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!VertexTraits::equal(xs[i].first, ys[i].first) || !(xs[i].second == ys[i].second)) {
                return false;
            }
        }
        return true;
    }

  private:
    explicit PersistentGraph(AdjMap adj) : adj_(std::move(adj)) {}

    static AdjMap with_vertex(const AdjMap& m, const V& v) { return m.contains(v) ? m : m.insert(v, EdgeSet{}); }

    const EdgeSet& adjacency(const V& v) const {
        const EdgeSet* s = adj_.find(v);
        if (!s) {
            detail::throw_missing_vertex(v);
        }
        return *s;
    }

    AdjMap adj_;
};

} // namespace certgraph
