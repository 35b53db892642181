#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lincomb.hpp"
#include "multiset.hpp"
#include "scalar.hpp"

namespace laby {

using Column = std::pair<Elem, Elem>;

/// A multation A -> B: a multiset of columns (a, b) whose first
/// coordinates make up A and whose second coordinates make up B.
class Multation {
public:
    Multation() = default;
    explicit Multation(MultiSet<Column> pairs) : pairs_(std::move(pairs)) {
        for (const auto& [c, k] : pairs_) {
            dom_.insert(c.first, k);
            cod_.insert(c.second, k);
        }
    }

    /// Two-row notation: top row is the domain, bottom row the codomain.
    static Multation from_rows(const std::vector<Elem>& top, const std::vector<Elem>& bottom) {
        if (top.size() != bottom.size()) throw DomainError("multation rows differ in length");
        MultiSet<Column> p;
        for (std::size_t i = 0; i < top.size(); ++i) p.insert({top[i], bottom[i]});
        return Multation(std::move(p));
    }

    /// Validates against declared marginals.
    static Multation with_marginals(const MSet& dom, const MSet& cod, MultiSet<Column> pairs) {
        Multation m(std::move(pairs));
        if (m.dom_ != dom || m.cod_ != cod)
            throw DomainError("multation marginals do not match its domain and codomain");
        return m;
    }

    const MSet& dom() const { return dom_; }
    const MSet& cod() const { return cod_; }
    const MultiSet<Column>& pairs() const { return pairs_; }
    long size() const { return pairs_.cardinality(); }
    Integer degree() const { return pairs_.degree(); }

    friend bool operator==(const Multation& a, const Multation& b) { return a.pairs_ == b.pairs_; }
    friend auto operator<=>(const Multation& a, const Multation& b) {
        if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
        if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
        return a.pairs_ <=> b.pairs_;
    }

private:
    MSet dom_;
    MSet cod_;
    MultiSet<Column> pairs_;
};

inline Multation identity_multation(const MSet& a) {
    MultiSet<Column> p;
    for (const auto& [e, k] : a) p.insert({e, e}, k);
    return Multation(std::move(p));
}

/// Formal combination of multations sharing a domain and codomain.
struct MultHom {
    MSet dom;
    MSet cod;
    LinComb<Multation> terms;

    MultHom() = default;
    MultHom(MSet d, MSet c) : dom(std::move(d)), cod(std::move(c)) {}
    explicit MultHom(const Multation& m, Scalar coeff = Scalar(1))
        : dom(m.dom()), cod(m.cod()), terms(m, coeff) {}

    void add(const Multation& m, const Scalar& c) {
        if (m.dom() != dom || m.cod() != cod) throw DomainError("multation does not fit hom-set");
        terms.add(m, c);
    }
    MultHom& operator+=(const MultHom& o) {
        check_same(o);
        terms += o.terms;
        return *this;
    }
    MultHom& operator-=(const MultHom& o) {
        check_same(o);
        terms -= o.terms;
        return *this;
    }
    MultHom& operator*=(const Scalar& s) {
        terms *= s;
        return *this;
    }
    bool is_zero() const { return terms.empty(); }

    friend MultHom operator+(MultHom a, const MultHom& b) { return a += b; }
    friend MultHom operator-(MultHom a, const MultHom& b) { return a -= b; }
    friend MultHom operator*(const Scalar& s, MultHom a) { return a *= s; }
    friend bool operator==(const MultHom& a, const MultHom& b) {
        return a.dom == b.dom && a.cod == b.cod && a.terms == b.terms;
    }

private:
    void check_same(const MultHom& o) const {
        if (o.dom != dom || o.cod != cod) throw DomainError("adding multation homs of different type");
    }
};

/// Merges repeated divided powers: z^[i] z^[j] = C(i+j, i) z^[i+j].
inline std::pair<Integer, MultiSet<Column>> divided_reduce(
    const std::vector<std::pair<Column, long>>& powers) {
    std::map<Column, std::vector<long>> groups;
    for (const auto& [c, e] : powers) {
        if (e < 1) throw DomainError("divided power exponent must be positive");
        groups[c].push_back(e);
    }
    Integer coeff = 1;
    MultiSet<Column> merged;
    for (const auto& [c, es] : groups) {
        long total = 0;
        Integer denom = 1;
        for (long e : es) {
            total += e;
            denom *= factorial(static_cast<unsigned>(e));
        }
        coeff *= factorial(static_cast<unsigned>(total)) / denom;
        merged.insert(c, total);
    }
    return {coeff, merged};
}

namespace detail {
// Calls f(table) for every non-negative integer matrix with the given
// row and column sums; table is row-major rows.size() x cols.size().
inline void for_each_contingency(const std::vector<long>& rows, const std::vector<long>& cols,
                                 const std::function<void(const std::vector<long>&)>& f) {
    const std::size_t r = rows.size(), c = cols.size();
    std::vector<long> table(r * c, 0);
    std::vector<long> col_left = cols;
    std::function<void(std::size_t, std::size_t, long)> rec = [&](std::size_t i, std::size_t j,
                                                                  long row_left) {
        if (i == r) {
            for (long v : col_left)
                if (v != 0) return;
            f(table);
            return;
        }
        if (j + 1 == c) {
            if (row_left > col_left[j]) return;
            table[i * c + j] = row_left;
            col_left[j] -= row_left;
            rec(i + 1, 0, i + 1 < r ? rows[i + 1] : 0);
            col_left[j] += row_left;
            table[i * c + j] = 0;
            return;
        }
        long hi = std::min(row_left, col_left[j]);
        for (long v = 0; v <= hi; ++v) {
            table[i * c + j] = v;
            col_left[j] -= v;
            rec(i, j + 1, row_left - v);
            col_left[j] += v;
        }
        table[i * c + j] = 0;
    };
    if (r == 0 || c == 0) {
        long sr = 0, sc = 0;
        for (long v : rows) sr += v;
        for (long v : cols) sc += v;
        if (sr == 0 && sc == 0) f(table);
        return;
    }
    rec(0, 0, rows[0]);
}
}  // namespace detail

/// All multations A -> B, in canonical order.
inline std::vector<Multation> enumerate_multations(const MSet& a, const MSet& b,
                                                   std::size_t limit = kDefaultEnumerationLimit) {
    std::vector<Multation> out;
    if (a.cardinality() != b.cardinality()) return out;
    auto ra = a.items();
    auto cb = b.items();
    std::vector<long> rows, cols;
    for (const auto& kv : ra) rows.push_back(kv.second);
    for (const auto& kv : cb) cols.push_back(kv.second);
    detail::for_each_contingency(rows, cols, [&](const std::vector<long>& t) {
        MultiSet<Column> p;
        for (std::size_t i = 0; i < ra.size(); ++i)
            for (std::size_t j = 0; j < cb.size(); ++j)
                p.insert({ra[i].first, cb[j].first}, t[i * cb.size() + j]);
        out.emplace_back(std::move(p));
        check_enumeration(out.size(), limit, "enumerate_multations");
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Composite mu . nu of nu: A -> B and mu: B -> C.
///
/// For every middle element b the columns of nu ending in b are matched with
/// the columns of mu starting in b; a matching pattern is a contingency table
/// counted by the number of bijections realising it.
inline MultHom multation_compose(const Multation& mu, const Multation& nu) {
    if (nu.cod() != mu.dom()) throw DomainError("multation_compose: codomain/domain mismatch");
    std::map<MultiSet<Column>, Integer> acc{{MultiSet<Column>{}, Integer(1)}};
    for (const auto& [b, kb] : nu.cod()) {
        std::vector<std::pair<Elem, long>> xs, ys;
        for (const auto& [col, k] : nu.pairs())
            if (col.second == b) xs.emplace_back(col.first, k);
        for (const auto& [col, k] : mu.pairs())
            if (col.first == b) ys.emplace_back(col.second, k);
        std::vector<long> rows, cols;
        Integer marg = 1;
        for (const auto& x : xs) {
            rows.push_back(x.second);
            marg *= factorial(static_cast<unsigned>(x.second));
        }
        for (const auto& y : ys) {
            cols.push_back(y.second);
            marg *= factorial(static_cast<unsigned>(y.second));
        }
        std::map<MultiSet<Column>, Integer> next;
        detail::for_each_contingency(rows, cols, [&](const std::vector<long>& t) {
            MultiSet<Column> part;
            Integer w = marg;
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    long v = t[i * ys.size() + j];
                    if (v == 0) continue;
                    part.insert({xs[i].first, ys[j].first}, v);
                    w /= factorial(static_cast<unsigned>(v));
                }
            for (const auto& [prev, pw] : acc) {
                next[ms_disjoint_union(prev, part)] += pw * w;
            }
        });
        acc = std::move(next);
    }
    Integer denom = mu.degree() * nu.degree();
    MultHom out(nu.dom(), mu.cod());
    for (const auto& [cols, w] : acc) {
        Scalar c(w * cols.degree(), denom);
        if (!c.is_integer()) throw IntegralityViolation("multation composite has non-integral coefficient");
        out.add(Multation(cols), c);
    }
    return out;
}

inline MultHom multhom_compose(const MultHom& f, const MultHom& g) {
    if (g.cod != f.dom) throw DomainError("multhom_compose: codomain/domain mismatch");
    MultHom out(g.dom, f.cod);
    for (const auto& [mu, a] : f.terms)
        for (const auto& [nu, b] : g.terms) out += (a * b) * multation_compose(mu, nu);
    return out;
}

// Generators of MSet_2.
inline Multation mset2_alpha() { return Multation::from_rows({"1", "1"}, {"1", "2"}); }
inline Multation mset2_beta() { return Multation::from_rows({"1", "2"}, {"1", "1"}); }
inline Multation mset2_sigma() { return Multation::from_rows({"1", "2"}, {"2", "1"}); }

struct TableCell {
    std::string row;
    std::string col;
    bool defined = false;
    MultHom value;
};

/// row o col for row, col in {alpha, beta, sigma}.
inline std::vector<TableCell> mset2_table() {
    const std::vector<std::pair<std::string, Multation>> gens = {
        {"alpha", mset2_alpha()}, {"beta", mset2_beta()}, {"sigma", mset2_sigma()}};
    std::vector<TableCell> out;
    for (const auto& [rn, r] : gens)
        for (const auto& [cn, c] : gens) {
            TableCell cell{rn, cn, false, {}};
            if (c.cod() == r.dom()) {
                cell.defined = true;
                cell.value = multation_compose(r, c);
            }
            out.push_back(std::move(cell));
        }
    return out;
}

}  // namespace laby
