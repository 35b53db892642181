#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace laby {

using Elem = std::string;

/// Finite multi-set: sorted (element, multiplicity) pairs, multiplicities >= 1.
template <class T>
class MultiSet {
public:
    using value_type = std::pair<T, long>;

    MultiSet() = default;
    MultiSet(std::initializer_list<T> elems) {
        for (const auto& e : elems) insert(e);
    }

    static MultiSet from_elements(const std::vector<T>& elems) {
        MultiSet m;
        for (const auto& e : elems) m.insert(e);
        return m;
    }

    static MultiSet from_counts(const std::vector<value_type>& counts) {
        MultiSet m;
        for (const auto& [e, k] : counts) {
            if (k < 0) throw DomainError("negative multiplicity");
            m.insert(e, k);
        }
        return m;
    }

    void insert(const T& e, long k = 1) {
        if (k == 0) return;
        auto it = lower(e);
        if (it != items_.end() && it->first == e) {
            it->second += k;
            if (it->second < 0) throw DomainError("negative multiplicity");
            if (it->second == 0) items_.erase(it);
        } else {
            if (k < 0) throw DomainError("negative multiplicity");
            items_.insert(it, {e, k});
        }
    }

    long mult(const T& e) const {
        auto it = std::lower_bound(items_.begin(), items_.end(), e,
                                   [](const value_type& a, const T& b) { return a.first < b; });
        return (it != items_.end() && it->first == e) ? it->second : 0;
    }
    bool contains(const T& e) const { return mult(e) > 0; }

    long cardinality() const {
        long s = 0;
        for (const auto& kv : items_) s += kv.second;
        return s;
    }

    /// Product of the factorials of the multiplicities.
    Integer degree() const {
        Integer d = 1;
        for (const auto& kv : items_) d *= factorial(static_cast<unsigned>(kv.second));
        return d;
    }

    std::vector<T> support() const {
        std::vector<T> s;
        s.reserve(items_.size());
        for (const auto& kv : items_) s.push_back(kv.first);
        return s;
    }

    /// Elements listed with repetition, in order.
    std::vector<T> elements() const {
        std::vector<T> out;
        for (const auto& [e, k] : items_)
            for (long i = 0; i < k; ++i) out.push_back(e);
        return out;
    }

    bool empty() const { return items_.empty(); }
    std::size_t support_size() const { return items_.size(); }
    const std::vector<value_type>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const MultiSet&, const MultiSet&) = default;
    /// Lexicographic on the element lists written out with repetition.
    friend std::strong_ordering operator<=>(const MultiSet& a, const MultiSet& b) {
        auto ia = a.items_.begin(), ib = b.items_.begin();
        long ka = 0, kb = 0;
        while (true) {
            if (ia != a.items_.end() && ka == ia->second) { ++ia; ka = 0; continue; }
            if (ib != b.items_.end() && kb == ib->second) { ++ib; kb = 0; continue; }
            bool ea = ia == a.items_.end(), eb = ib == b.items_.end();
            if (ea || eb) return ea && eb ? std::strong_ordering::equal
                                 : ea ? std::strong_ordering::less : std::strong_ordering::greater;
            if (ia->first < ib->first) return std::strong_ordering::less;
            if (ib->first < ia->first) return std::strong_ordering::greater;
            ++ka;
            ++kb;
        }
    }

private:
    typename std::vector<value_type>::iterator lower(const T& e) {
        return std::lower_bound(items_.begin(), items_.end(), e,
                                [](const value_type& a, const T& b) { return a.first < b; });
    }

    std::vector<value_type> items_;
};

using MSet = MultiSet<Elem>;

namespace detail {
template <class T, class F>
MultiSet<T> merge_with(const MultiSet<T>& a, const MultiSet<T>& b, F f) {
    std::vector<std::pair<T, long>> out;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.emplace_back(ia->first, f(ia->second, 0L));
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, f(0L, ib->second));
            ++ib;
        } else {
            out.emplace_back(ia->first, f(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return MultiSet<T>::from_counts(out);
}
}  // namespace detail

template <class T>
MultiSet<T> ms_union(const MultiSet<T>& a, const MultiSet<T>& b) {
    return detail::merge_with(a, b, [](long x, long y) { return std::max(x, y); });
}
template <class T>
MultiSet<T> ms_disjoint_union(const MultiSet<T>& a, const MultiSet<T>& b) {
    return detail::merge_with(a, b, [](long x, long y) { return x + y; });
}
template <class T>
MultiSet<T> ms_intersection(const MultiSet<T>& a, const MultiSet<T>& b) {
    return detail::merge_with(a, b, [](long x, long y) { return std::min(x, y); });
}
template <class T>
MultiSet<T> ms_difference(const MultiSet<T>& a, const MultiSet<T>& b) {
    return detail::merge_with(a, b, [](long x, long y) { return std::max(x - y, 0L); });
}
template <class T, class U>
MultiSet<std::pair<T, U>> ms_product(const MultiSet<T>& a, const MultiSet<U>& b) {
    MultiSet<std::pair<T, U>> out;
    for (const auto& [x, i] : a)
        for (const auto& [y, j] : b) out.insert({x, y}, i * j);
    return out;
}

template <class T>
bool is_sub(const MultiSet<T>& a, const MultiSet<T>& b) {
    for (const auto& [e, k] : a)
        if (b.mult(e) < k) return false;
    return true;
}

enum class MsOp { Union, DisjointUnion, Intersection, Difference, Product };

/// Name of the pair (a, b) when a product is flattened back into Elem.
inline Elem pair_name(const Elem& a, const Elem& b) { return "(" + a + "," + b + ")"; }

inline MSet ms_combine(MsOp op, const MSet& a, const MSet& b) {
    switch (op) {
        case MsOp::Union: return ms_union(a, b);
        case MsOp::DisjointUnion: return ms_disjoint_union(a, b);
        case MsOp::Intersection: return ms_intersection(a, b);
        case MsOp::Difference: return ms_difference(a, b);
        case MsOp::Product: {
            MSet out;
            for (const auto& [p, k] : ms_product(a, b)) out.insert(pair_name(p.first, p.second), k);
            return out;
        }
    }
    throw std::invalid_argument("ms_combine: unknown op");
}

/// The set of pairs (x, k), 1 <= k <= deg x, written "x#k".
inline std::vector<Elem> support_lift(const MSet& m) {
    std::vector<Elem> out;
    for (const auto& [e, k] : m)
        for (long i = 1; i <= k; ++i) out.push_back(e + "#" + std::to_string(i));
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline Integer binom_int(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline void check_count(const Integer& count, std::size_t limit, const char* what) {
    if (count > Integer(static_cast<unsigned long>(limit)))
        throw EnumerationLimit(std::string(what) + ": more than " + std::to_string(limit) + " items");
}

template <class T>
void sorted_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Distribute `total` over slots [i, end) with per-slot minimum `lo`.
template <class T>
void distribute(const std::vector<T>& slots, std::size_t i, long total, long lo,
                std::vector<long>& cur, std::vector<MultiSet<T>>& out) {
    if (i + 1 == slots.size()) {
        if (total < lo) return;
        cur[i] = total;
        MultiSet<T> m;
        for (std::size_t j = 0; j < slots.size(); ++j) m.insert(slots[j], cur[j]);
        out.push_back(std::move(m));
        return;
    }
    long rest_min = lo * static_cast<long>(slots.size() - i - 1);
    for (long k = lo; k <= total - rest_min; ++k) {
        cur[i] = k;
        distribute(slots, i + 1, total - k, lo, cur, out);
    }
}
}  // namespace detail

/// All multisets A with support exactly `support` and |A| = n, in canonical order.
template <class T>
std::vector<MultiSet<T>> enumerate_supported(std::vector<T> support, long n,
                                             std::size_t limit = kDefaultEnumerationLimit) {
    detail::sorted_unique(support);
    std::vector<MultiSet<T>> out;
    long s = static_cast<long>(support.size());
    if (s == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    if (s > n) return out;
    detail::check_count(detail::binom_int(n - 1, s - 1), limit, "enumerate_supported");
    std::vector<long> cur(support.size());
    detail::distribute(support, 0, n, 1, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

template <class T>
std::vector<MultiSet<T>> enumerate_supported(const MultiSet<T>& s, long n,
                                             std::size_t limit = kDefaultEnumerationLimit) {
    return enumerate_supported(s.support(), n, limit);
}

/// All multisets of cardinality n whose support lies inside `universe`.
template <class T>
std::vector<MultiSet<T>> enumerate_of_cardinality(std::vector<T> universe, long n,
                                                  std::size_t limit = kDefaultEnumerationLimit) {
    detail::sorted_unique(universe);
    std::vector<MultiSet<T>> out;
    long u = static_cast<long>(universe.size());
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (u == 0) return out;
    detail::check_count(detail::binom_int(n + u - 1, u - 1), limit, "enumerate_of_cardinality");
    std::vector<long> cur(universe.size());
    detail::distribute(universe, 0, n, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// All sub-multisets of m, from the empty multiset up to m itself.
template <class T>
std::vector<MultiSet<T>> enumerate_sub_multisets(const MultiSet<T>& m,
                                                 std::size_t limit = kDefaultEnumerationLimit) {
    Integer count = 1;
    for (const auto& kv : m) count *= kv.second + 1;
    detail::check_count(count, limit, "enumerate_sub_multisets");
    std::vector<MultiSet<T>> out{MultiSet<T>{}};
    for (const auto& [e, k] : m) {
        std::vector<MultiSet<T>> next;
        next.reserve(out.size() * static_cast<std::size_t>(k + 1));
        for (const auto& base : out)
            for (long j = 0; j <= k; ++j) {
                MultiSet<T> x = base;
                x.insert(e, j);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const MultiSet<T>& a, const MultiSet<T>& b) {
        if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
        return a < b;
    });
    return out;
}

}  // namespace laby
