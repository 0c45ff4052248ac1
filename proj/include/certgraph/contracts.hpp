// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Comparability contracts for vertex and label types.
//
// A vertex type is described by a traits class exposing static
// `compare`, `equal` and `hash`; a label type by a traits class exposing
// static `compare` and `default_value`. Only the sign of `compare` is
// meaningful. The laws these functions must obey cannot be enforced by the
// type system, so the `check_*` functions below validate them on finite
// samples instead.

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>

#include "certgraph/errors.hpp"

namespace certgraph {

template <class Traits, class T>
concept ComparableTraits = requires(const T& a, const T& b) {
    { Traits::compare(a, b) } -> std::convertible_to<int>;
    { Traits::equal(a, b) } -> std::convertible_to<bool>;
    { Traits::hash(a) } -> std::convertible_to<std::size_t>;
};

template <class Traits, class T>
concept OrderedWithDefaultTraits = requires(const T& a, const T& b) {
    { Traits::compare(a, b) } -> std::convertible_to<int>;
    { Traits::default_value() } -> std::convertible_to<T>;
};

// Vertex traits for any totally ordered, hashable type.
template <class T>
struct DefaultComparable {
    static int compare(const T& a, const T& b) {
        const auto c = std::compare_weak_order_fallback(a, b);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    static bool equal(const T& a, const T& b) { return compare(a, b) == 0; }
    static std::size_t hash(const T& a) { return std::hash<T>{}(a); }
};

// Label traits for any totally ordered, value-initialisable type.
template <class T>
struct DefaultOrdered {
    static int compare(const T& a, const T& b) { return DefaultComparable<T>::compare(a, b); }
    static T default_value() { return T{}; }
};

// Strict ordering adapter so traits can drive std::set / std::map.
template <class Traits>
struct TraitsLess {
    template <class T>
    bool operator()(const T& a, const T& b) const {
        return Traits::compare(a, b) < 0;
    }
};

// Lexicographic order on (vertex, label) pairs: vertex first, label on tie.
template <class VertexTraits, class LabelTraits>
struct PairOrder {
    template <class V, class L>
    static int compare(const std::pair<V, L>& a, const std::pair<V, L>& b) {
        const int cv = VertexTraits::compare(a.first, b.first);
        if (cv != 0) {
            return cv;
        }
        return LabelTraits::compare(a.second, b.second);
    }
};

template <class VertexTraits, class LabelTraits, class V, class L>
int pair_compare(const std::pair<V, L>& a, const std::pair<V, L>& b) {
    return PairOrder<VertexTraits, LabelTraits>::compare(a, b);
}

template <class V, class L>
int pair_compare(const std::pair<V, L>& a, const std::pair<V, L>& b) {
    return PairOrder<DefaultComparable<V>, DefaultOrdered<L>>::compare(a, b);
}

constexpr int sign(int x) noexcept { return (x > 0) - (x < 0); }

// True iff `compare` is a total pre-order on `sample`: compare(x,x) = 0,
// sign(compare(x,y)) = -sign(compare(y,x)), and compare(x,y) <= 0 together
// with compare(y,z) <= 0 imply compare(x,z) <= 0. Checks every pair and
// every triple, so keep samples small (cubic).
template <class T, class Compare>
bool check_preorder(Compare&& compare, std::span<const T> sample) {
    if (sample.empty()) {
        throw precondition_error("check_preorder needs a nonempty sample");
    }
    for (const T& x : sample) {
        if (compare(x, x) != 0) {
            return false;
        }
    }
    for (const T& x : sample) {
        for (const T& y : sample) {
            if (sign(compare(x, y)) != -sign(compare(y, x))) {
                return false;
            }
        }
    }
    for (const T& x : sample) {
        for (const T& y : sample) {
            if (compare(x, y) > 0) {
                continue;
            }
            for (const T& z : sample) {
                if (compare(y, z) <= 0 && compare(x, z) > 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

// equal(x,y) <=> compare(x,y) = 0, over all pairs of the sample.
template <class T, class Compare, class Equal>
bool check_equal_consistent(Compare&& compare, Equal&& equal, std::span<const T> sample) {
    for (const T& x : sample) {
        for (const T& y : sample) {
            if (static_cast<bool>(equal(x, y)) != (compare(x, y) == 0)) {
                return false;
            }
        }
    }
    return true;
}

// equal(x,y) => hash(x) = hash(y), over all pairs of the sample.
template <class T, class Equal, class Hash>
bool check_hash_consistent(Equal&& equal, Hash&& hash, std::span<const T> sample) {
    for (const T& x : sample) {
        for (const T& y : sample) {
            if (equal(x, y) && hash(x) != hash(y)) {
                return false;
            }
        }
    }
    return true;
}

// All three contract checks for a traits class on one sample.
template <class Traits, class T>
    requires ComparableTraits<Traits, T>
bool check_comparable(std::span<const T> sample) {
    const auto cmp = [](const T& a, const T& b) { return Traits::compare(a, b); };
    const auto eq = [](const T& a, const T& b) { return Traits::equal(a, b); };
    const auto h = [](const T& a) { return Traits::hash(a); };
    return check_preorder<T>(cmp, sample) && check_equal_consistent<T>(cmp, eq, sample) &&
           check_hash_consistent<T>(eq, h, sample);
}

} // namespace certgraph
