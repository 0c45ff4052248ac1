// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "certgraph/detail/persistent_tree.hpp"
#include "certgraph/oracle.hpp"
#include "certgraph/persistent_graph.hpp"
#include "fixtures.hpp"

using namespace certgraph;
using certgraph::testing::SGraph;
using Pair = std::pair<std::string, std::string>;

TEST(PersistentTree, StaysBalancedAndOrdered) {
    detail::PersistentMap<int, int, DefaultComparable<int>> m;
    std::map<int, int> ref;
    oracle::Rng rng(3);
    for (int i = 0; i < 5000; ++i) {
        const int k = static_cast<int>(rng.below(500));
        if (rng.chance(0.6)) {
            m = m.insert(k, i);
            ref[k] = i;
        } else {
            m = m.erase(k);
            ref.erase(k);
        }
        ASSERT_EQ(m.size(), ref.size());
    }
    ASSERT_TRUE(m.well_formed());
    EXPECT_LE(m.height(), 13); // AVL: h < 1.45 log2(n + 2)
    const auto items = m.items();
    const std::vector<std::pair<int, int>> expected(ref.begin(), ref.end());
    ASSERT_EQ(items, expected);
}

TEST(PersistentTree, OldVersionsAreUntouched) {
    detail::PersistentMap<int, int, DefaultComparable<int>> a;
    for (int i = 0; i < 100; ++i) {
        a = a.insert(i, i);
    }
    const auto b = a.insert(1000, 0).erase(50).insert(3, 33);
    EXPECT_EQ(a.size(), 100U);
    EXPECT_EQ(*a.find(3), 3);
    EXPECT_TRUE(a.contains(50));
    EXPECT_FALSE(a.contains(1000));
    EXPECT_EQ(*b.find(3), 33);
    EXPECT_FALSE(b.contains(50));
}

TEST(PersistentGraphOps, Empty) {
    const auto g = SGraph::empty();
    EXPECT_EQ(g.nb_vertices(), 0U);
    EXPECT_EQ(g.nb_edges(), 0U);
    EXPECT_FALSE(g.mem_vertex("a"));
    EXPECT_TRUE(g.check_invariant());
}

TEST(PersistentGraphOps, AddVertex) {
    const auto g = SGraph::empty().add_vertex("a");
    EXPECT_EQ(g.vertices(), std::vector<std::string>{"a"});
    EXPECT_EQ(g.nb_edges(), 0U);
    EXPECT_EQ(g.add_vertex("a"), g);

    const auto g2 = g.add_vertex("b");
    EXPECT_FALSE(g.mem_vertex("b"));
    EXPECT_TRUE(g2.mem_vertex("b"));
}

TEST(PersistentGraphOps, AddEdgeLabeled) {
    const auto g = SGraph::empty().add_edge_labeled("a", "x", "b");
    EXPECT_EQ(g.vertices(), (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(g.succ_edges("a"), (std::vector<Pair>{{"b", "x"}}));
    EXPECT_EQ(g.succ_edges("b"), (std::vector<Pair>{{"a", "x"}}));
    EXPECT_EQ(g.add_edge_labeled("a", "x", "b"), g);

    const auto par = g.add_edge_labeled("a", "y", "b");
    EXPECT_EQ(par.succ_edges("a"), (std::vector<Pair>{{"b", "x"}, {"b", "y"}}));
    EXPECT_EQ(par.nb_edges(), 2U);
    EXPECT_TRUE(par.check_invariant());
}

TEST(PersistentGraphOps, AddEdgeUsesDefaultLabel) {
    const auto g = SGraph::empty().add_edge("a", "b");
    EXPECT_TRUE(g.mem_edge_labeled("a", "", "b"));
    EXPECT_TRUE(g.mem_edge("a", "b"));
    EXPECT_TRUE(g.mem_edge("b", "a"));
}

TEST(PersistentGraphOps, RemoveEdgeLabeled) {
    const auto g = certgraph::testing::p1();
    const auto r = g.remove_edge_labeled("a", "x", "b");
    EXPECT_TRUE(r.succ_edges("a").empty());
    EXPECT_TRUE(r.succ_edges("b").empty());
    EXPECT_EQ(r.vertices(), g.vertices());

    EXPECT_EQ(g.remove_edge_labeled("a", "y", "b"), g);
    EXPECT_THROW((void)g.remove_edge_labeled("a", "x", "zz"), missing_vertex_error);
    EXPECT_THROW((void)g.remove_edge_labeled("zz", "x", "a"), missing_vertex_error);
}

TEST(PersistentGraphOps, RemoveEdgeDropsAllLabels) {
    const auto g = SGraph::empty().add_edge_labeled("a", "x", "b").add_edge_labeled("a", "y", "b").add_edge_labeled(
        "a", "x", "c");
    // Expected adjacency after removal, by enumeration: only (c,x) survives at a.
    const auto r = g.remove_edge("a", "b");
    EXPECT_EQ(r.succ_edges("a"), (std::vector<Pair>{{"c", "x"}}));
    EXPECT_TRUE(r.succ_edges("b").empty());
    EXPECT_EQ(r.succ_edges("c"), (std::vector<Pair>{{"a", "x"}}));
    EXPECT_TRUE(r.check_invariant());

    const auto lone = SGraph::empty().add_vertex("p").add_vertex("q");
    EXPECT_EQ(lone.remove_edge("p", "q"), lone);
    EXPECT_THROW((void)lone.remove_edge("p", "nope"), missing_vertex_error);
}

TEST(PersistentGraphOps, RemoveVertex) {
    const auto g = certgraph::testing::p1();
    const auto r = g.remove_vertex("b");
    EXPECT_EQ(r.vertices(), std::vector<std::string>{"a"});
    EXPECT_TRUE(r.succ_edges("a").empty());
    EXPECT_TRUE(r.check_invariant());

    const auto iso = g.add_vertex("z");
    const auto r2 = iso.remove_vertex("z");
    EXPECT_EQ(r2, g);
    EXPECT_EQ(r2.edges(), iso.edges());

    EXPECT_EQ(g.remove_vertex("absent"), g);
}

TEST(PersistentGraphOps, RemoveVertexWithSelfLoop) {
    const auto g = SGraph::empty().add_edge_labeled("a", "x", "a").add_edge("a", "b");
    const auto r = g.remove_vertex("a");
    EXPECT_EQ(r.vertices(), std::vector<std::string>{"b"});
    EXPECT_TRUE(r.succ("b").empty());
    EXPECT_TRUE(r.check_invariant());
}

TEST(PersistentGraphOps, Membership) {
    const auto g = certgraph::testing::p1();
    EXPECT_TRUE(g.mem_edge("a", "b"));
    EXPECT_TRUE(g.mem_edge("b", "a"));
    EXPECT_FALSE(g.mem_edge_labeled("a", "y", "b"));
    EXPECT_FALSE(g.mem_edge("a", "zz"));
    EXPECT_FALSE(g.mem_edge("zz", "a"));
}

TEST(PersistentGraphOps, SuccAndSuccEdges) {
    const auto iso = SGraph::empty().add_vertex("a");
    EXPECT_TRUE(iso.succ("a").empty());
    EXPECT_THROW((void)iso.succ("zz"), missing_vertex_error);

    const auto g = SGraph::empty().add_edge_labeled("a", "x", "b").add_edge_labeled("a", "y", "b").add_edge_labeled(
        "a", "x", "c");
    EXPECT_EQ(g.succ("a"), (std::vector<std::string>{"b", "c"}));
    EXPECT_EQ(g.succ_edges("a"), (std::vector<Pair>{{"b", "x"}, {"b", "y"}, {"c", "x"}}));
}

TEST(PersistentGraphOps, FindAllEdges) {
    const auto g = SGraph::empty().add_edge_labeled("a", "y", "b").add_edge_labeled("a", "x", "b").add_vertex("c");
    EXPECT_EQ(g.find_all_edges("a", "b"), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(g.find_all_edges("b", "a"), g.find_all_edges("a", "b"));
    EXPECT_TRUE(g.find_all_edges("a", "c").empty());
    EXPECT_THROW((void)g.find_all_edges("a", "zz"), missing_vertex_error);
}

TEST(PersistentGraphOps, VerticesAndEdges) {
    EXPECT_TRUE(SGraph::empty().vertices().empty());
    const auto g = certgraph::testing::p1();
    using E = SGraph::edge_type;
    EXPECT_EQ(g.edges(), (std::vector<E>{{"a", "x", "b"}}));
    const auto loop = SGraph::empty().add_edge_labeled("a", "x", "a");
    EXPECT_EQ(loop.edges(), (std::vector<E>{{"a", "x", "a"}}));
    EXPECT_EQ(loop.nb_edges(), 1U);
}

// Reference model: a plain set of undirected labeled edges plus a vertex set.
namespace {

struct Model {
    std::set<int> vertices;
    std::set<std::tuple<int, int, int>> edges; // (min, label, max)

    void apply(const oracle::GraphOp& op) {
        const int lo = std::min(op.v1, op.v2);
        const int hi = std::max(op.v1, op.v2);
        const bool both = vertices.contains(op.v1) && vertices.contains(op.v2);
        switch (op.kind) {
        case oracle::OpKind::add_vertex: vertices.insert(op.v1); break;
        case oracle::OpKind::add_edge:
            vertices.insert(op.v1);
            vertices.insert(op.v2);
            edges.insert({lo, op.label, hi});
            break;
        case oracle::OpKind::remove_edge_labeled:
            if (both) {
                edges.erase({lo, op.label, hi});
            }
            break;
        case oracle::OpKind::remove_edge:
            if (both) {
                std::erase_if(edges, [&](const auto& e) { return std::get<0>(e) == lo && std::get<2>(e) == hi; });
            }
            break;
        case oracle::OpKind::remove_vertex:
            vertices.erase(op.v1);
            std::erase_if(edges, [&](const auto& e) { return std::get<0>(e) == op.v1 || std::get<2>(e) == op.v1; });
            break;
        }
    }
};

} // namespace

TEST(PersistentGraphProperty, RandomOpsKeepInvariantAndMatchModel) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto ops = oracle::gen_ops({seed, 80, 7, 3});
        auto g = PersistentGraph<int, int>::empty();
        Model model;
        for (const auto& op : ops) {
            const auto before = g;
            const auto before_vertices = g.vertices();
            const auto before_edges = g.edges();
            g = oracle::apply(g, op);
            model.apply(op);
            ASSERT_EQ(g.find_invariant_violation(), std::nullopt) << "seed " << seed;
            // persistence: the input value is unchanged
            ASSERT_EQ(before.vertices(), before_vertices);
            ASSERT_EQ(before.edges(), before_edges);
        }
        ASSERT_EQ(g.vertices(), std::vector<int>(model.vertices.begin(), model.vertices.end()));
        std::vector<LabeledEdge<int, int>> expected;
        for (const auto& [a, l, b] : model.edges) {
            expected.push_back({a, l, b});
        }
        std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) {
            return std::tie(x.src, x.dst, x.label) < std::tie(y.src, y.dst, y.label);
        });
        ASSERT_EQ(g.edges(), expected) << "seed " << seed;
    }
}

TEST(PersistentGraphProperty, LongSequenceKeepsInvariant) {
    const auto ops = oracle::gen_ops({99, 10000, 40, 4});
    auto g = PersistentGraph<int, int>::empty();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        g = oracle::apply(g, ops[i]);
        if (i % 100 == 0) {
            ASSERT_TRUE(g.check_invariant()) << "after op " << i;
        }
    }
    EXPECT_TRUE(g.check_invariant());
}

// Every element of a returned list is found by indexed traversal of that list.
TEST(PersistentGraphProperty, ListsAgreeWithIndexedTraversal) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = oracle::gen_persistent({seed, 6, 0.4, true, 3});
        const auto found_by_index = [](const auto& list, const auto& e) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (list[i] == e) {
                    return true;
                }
            }
            return false;
        };
        const auto vs = g.vertices();
        for (const int v : vs) {
            ASSERT_TRUE(found_by_index(vs, v));
            const auto s = g.succ(v);
            ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
            ASSERT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
            for (const int w : s) {
                ASSERT_TRUE(found_by_index(s, w));
                ASSERT_TRUE(g.mem_edge(v, w));
            }
            for (const int w : vs) {
                ASSERT_EQ(g.mem_edge(v, w), std::find(s.begin(), s.end(), w) != s.end());
            }
        }
        const auto es = g.edges();
        for (const auto& e : es) {
            ASSERT_TRUE(found_by_index(es, e));
        }
    }
}
