// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Immutable AVL tree with path copying. Updates return a new tree that
// shares every untouched subtree with the original, so old versions stay
// valid and cheap to keep around.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <utility>
#include <vector>

namespace certgraph::detail {

// `Order` provides static int compare(const K&, const K&).
template <class K, class V, class Order>
class PersistentMap {
    struct Node {
        K key;
        V value;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        int height;
    };
    using Ptr = std::shared_ptr<const Node>;

  public:
    PersistentMap() = default;

    [[nodiscard]]
    std::size_t size() const noexcept {
        return size_;
    }
    [[nodiscard]]
    bool empty() const noexcept {
        return size_ == 0;
    }

    // Pointer into the tree, valid as long as any version sharing the node lives.
    [[nodiscard]]
    const V* find(const K& key) const {
        const Node* n = root_.get();
        while (n) {
            const int c = Order::compare(key, n->key);
            if (c == 0) {
                return &n->value;
            }
            n = c < 0 ? n->left.get() : n->right.get();
        }
        return nullptr;
    }

    [[nodiscard]]
    bool contains(const K& key) const {
        return find(key) != nullptr;
    }

    // Insert, or replace the value of an existing key.
    [[nodiscard]]
    PersistentMap insert(const K& key, V value) const {
        bool added = false;
        PersistentMap out;
        out.root_ = insert_at(root_, key, std::move(value), added);
        out.size_ = size_ + (added ? 1 : 0);
        return out;
    }

    [[nodiscard]]
    PersistentMap erase(const K& key) const {
        if (!contains(key)) {
            return *this;
        }
        PersistentMap out;
        out.root_ = erase_at(root_, key);
        out.size_ = size_ - 1;
        return out;
    }

    // In-order traversal: f(key, value).
    template <class F>
    void for_each(F&& f) const {
        walk(root_.get(), f);
    }

    [[nodiscard]]
    std::vector<K> keys() const {
        std::vector<K> out;
        out.reserve(size_);
        for_each([&](const K& k, const V&) { out.push_back(k); });
        return out;
    }

    [[nodiscard]]
    std::vector<std::pair<K, V>> items() const {
        std::vector<std::pair<K, V>> out;
        out.reserve(size_);
        for_each([&](const K& k, const V& v) { out.emplace_back(k, v); });
        return out;
    }

    // Height of the root; exposed for balance tests.
    [[nodiscard]]
    int height() const noexcept {
        return h(root_);
    }

    // Checks ordering and AVL balance of every node.
    [[nodiscard]]
    bool well_formed() const {
        const K* prev = nullptr;
        bool ordered = true;
        for_each([&](const K& k, const V&) {
            if (prev && Order::compare(*prev, k) >= 0) {
                ordered = false;
            }
            prev = &k;
        });
        return ordered && balanced(root_.get());
    }

  private:
    static int h(const Ptr& n) noexcept { return n ? n->height : 0; }

    static Ptr make(const K& k, V v, Ptr l, Ptr r) {
        const int height = 1 + std::max(h(l), h(r));
        return std::make_shared<const Node>(Node{k, std::move(v), std::move(l), std::move(r), height});
    }

    static Ptr rebalance(const K& k, V v, Ptr l, Ptr r) {
        const int hl = h(l);
        const int hr = h(r);
        if (hl > hr + 1) {
            if (h(l->left) >= h(l->right)) {
                return make(l->key, l->value, l->left, make(k, std::move(v), l->right, std::move(r)));
            }
            const Ptr& lr = l->right;
            return make(lr->key, lr->value, make(l->key, l->value, l->left, lr->left),
                        make(k, std::move(v), lr->right, std::move(r)));
        }
        if (hr > hl + 1) {
            if (h(r->right) >= h(r->left)) {
                return make(r->key, r->value, make(k, std::move(v), std::move(l), r->left), r->right);
            }
            const Ptr& rl = r->left;
            return make(rl->key, rl->value, make(k, std::move(v), std::move(l), rl->left),
                        make(r->key, r->value, rl->right, r->right));
        }
        return make(k, std::move(v), std::move(l), std::move(r));
    }

    static Ptr insert_at(const Ptr& n, const K& key, V value, bool& added) {
        if (!n) {
            added = true;
            return make(key, std::move(value), nullptr, nullptr);
        }
        const int c = Order::compare(key, n->key);
        if (c < 0) {
            return rebalance(n->key, n->value, insert_at(n->left, key, std::move(value), added), n->right);
        }
        if (c > 0) {
            return rebalance(n->key, n->value, n->left, insert_at(n->right, key, std::move(value), added));
        }
        return make(n->key, std::move(value), n->left, n->right);
    }

    static Ptr remove_min(const Ptr& n) {
        if (!n->left) {
            return n->right;
        }
        return rebalance(n->key, n->value, remove_min(n->left), n->right);
    }

    static Ptr erase_at(const Ptr& n, const K& key) {
        const int c = Order::compare(key, n->key);
        if (c < 0) {
            return rebalance(n->key, n->value, erase_at(n->left, key), n->right);
        }
        if (c > 0) {
            return rebalance(n->key, n->value, n->left, erase_at(n->right, key));
        }
        if (!n->left) {
            return n->right;
        }
        if (!n->right) {
            return n->left;
        }
        const Node* m = n->right.get();
        while (m->left) {
            m = m->left.get();
        }
        return rebalance(m->key, m->value, n->left, remove_min(n->right));
    }

    template <class F>
    static void walk(const Node* n, F& f) {
        if (!n) {
            return;
        }
        walk(n->left.get(), f);
        f(n->key, n->value);
        walk(n->right.get(), f);
    }

    static bool balanced(const Node* n) {
        if (!n) {
            return true;
        }
        const int hl = n->left ? n->left->height : 0;
        const int hr = n->right ? n->right->height : 0;
        return std::abs(hl - hr) <= 1 && n->height == 1 + std::max(hl, hr) && balanced(n->left.get()) &&
               balanced(n->right.get());
    }

    Ptr root_;
    std::size_t size_ = 0;
};

struct Unit {
    friend bool operator==(Unit, Unit) noexcept { return true; }
};

template <class K, class Order>
class PersistentSet {
  public:
    PersistentSet() = default;

    [[nodiscard]]
    std::size_t size() const noexcept {
        return map_.size();
    }
    [[nodiscard]]
    bool empty() const noexcept {
        return map_.empty();
    }
    [[nodiscard]]
    bool contains(const K& key) const {
        return map_.contains(key);
    }
    [[nodiscard]]
    PersistentSet insert(const K& key) const {
        return PersistentSet{map_.insert(key, Unit{})};
    }
    [[nodiscard]]
    PersistentSet erase(const K& key) const {
        return PersistentSet{map_.erase(key)};
    }
    template <class F>
    void for_each(F&& f) const {
        map_.for_each([&](const K& k, const Unit&) { f(k); });
    }
    [[nodiscard]]
    std::vector<K> elements() const {
        return map_.keys();
    }
    [[nodiscard]]
    bool well_formed() const {
        return map_.well_formed();
    }

    friend bool operator==(const PersistentSet& a, const PersistentSet& b) {
        if (a.size() != b.size()) {
            return false;
        }
        const auto xs = a.elements();
        const auto ys = b.elements();
        return std::equal(xs.begin(), xs.end(), ys.begin(),
                          [](const K& x, const K& y) { return Order::compare(x, y) == 0; });
    }

  private:
    explicit PersistentSet(PersistentMap<K, Unit, Order> m) : map_(std::move(m)) {}

    PersistentMap<K, Unit, Order> map_;
};

} // namespace certgraph::detail
