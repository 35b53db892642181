#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lincomb.hpp"
#include "multiset.hpp"
#include "scalar.hpp"

namespace laby {

struct Passage {
    Elem from;
    Elem to;
    Scalar label{1};

    friend bool operator==(const Passage&, const Passage&) = default;
    friend auto operator<=>(const Passage&, const Passage&) = default;
};

inline bool parallel(const Passage& a, const Passage& b) { return a.from == b.from && a.to == b.to; }

/// A multiset of labelled passages from dom to cod.
struct Maze {
    std::vector<Elem> dom;
    std::vector<Elem> cod;
    MultiSet<Passage> passages;

    friend bool operator==(const Maze&, const Maze&) = default;
    friend auto operator<=>(const Maze& a, const Maze& b) {
        if (auto c = a.dom <=> b.dom; c != 0) return c;
        if (auto c = a.cod <=> b.cod; c != 0) return c;
        return a.passages <=> b.passages;
    }

    long size() const { return passages.cardinality(); }
    /// Passages listed with repetition.
    std::vector<Passage> instances() const { return passages.elements(); }

    bool is_pure() const {
        for (const auto& [p, k] : passages)
            if (p.label != Scalar(1)) return false;
        return true;
    }
    bool is_simple() const {
        const auto& it = passages.items();
        for (std::size_t i = 0; i < it.size(); ++i) {
            if (it[i].second > 1) return false;
            if (i > 0 && parallel(it[i - 1].first, it[i].first)) return false;
        }
        return true;
    }
};

namespace detail {
inline std::vector<Elem> sorted_set(std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
}  // namespace detail

/// True iff every passage lies between dom and cod and nothing is a dead end.
inline bool validate_maze(const Maze& m) {
    if (m.dom != detail::sorted_set(m.dom) || m.cod != detail::sorted_set(m.cod)) return false;
    auto in = [](const std::vector<Elem>& s, const Elem& e) {
        return std::binary_search(s.begin(), s.end(), e);
    };
    std::vector<Elem> sources, targets;
    for (const auto& [p, k] : m.passages) {
        if (!in(m.dom, p.from) || !in(m.cod, p.to)) return false;
        sources.push_back(p.from);
        targets.push_back(p.to);
    }
    return detail::sorted_set(sources) == m.dom && detail::sorted_set(targets) == m.cod;
}

/// Builds a maze, sorting the object sets; throws DomainError if invalid.
inline Maze make_maze(std::vector<Elem> dom, std::vector<Elem> cod, const std::vector<Passage>& ps) {
    Maze m{detail::sorted_set(std::move(dom)), detail::sorted_set(std::move(cod)),
           MultiSet<Passage>::from_elements(ps)};
    if (!validate_maze(m)) throw DomainError("invalid maze (dead end or stray passage)");
    return m;
}

/// Maze whose dom and cod are exactly the passage endpoints.
inline Maze maze_from_passages(const std::vector<Passage>& ps) {
    std::vector<Elem> dom, cod;
    for (const auto& p : ps) {
        dom.push_back(p.from);
        cod.push_back(p.to);
    }
    return make_maze(dom, cod, ps);
}

inline Maze identity_maze(const std::vector<Elem>& x) {
    std::vector<Passage> ps;
    for (const auto& e : x) ps.push_back({e, e, Scalar(1)});
    return make_maze(x, x, ps);
}

/// The names "1", ..., "k".
inline std::vector<Elem> skeleton(long k) {
    std::vector<Elem> out;
    for (long i = 1; i <= k; ++i) out.push_back(std::to_string(i));
    std::sort(out.begin(), out.end());
    return out;
}

/// Formal combination of mazes sharing dom and cod.
struct MazeHom {
    std::vector<Elem> dom;
    std::vector<Elem> cod;
    LinComb<Maze> terms;

    MazeHom() = default;
    MazeHom(std::vector<Elem> d, std::vector<Elem> c)
        : dom(detail::sorted_set(std::move(d))), cod(detail::sorted_set(std::move(c))) {}
    explicit MazeHom(const Maze& m, Scalar coeff = Scalar(1)) : dom(m.dom), cod(m.cod), terms(m, coeff) {}

    void add(const Maze& m, const Scalar& c) {
        if (m.dom != dom || m.cod != cod) throw DomainError("maze does not fit hom-set");
        terms.add(m, c);
    }
    MazeHom& operator+=(const MazeHom& o) {
        check_same(o);
        terms += o.terms;
        return *this;
    }
    MazeHom& operator-=(const MazeHom& o) {
        check_same(o);
        terms -= o.terms;
        return *this;
    }
    MazeHom& operator*=(const Scalar& s) {
        terms *= s;
        return *this;
    }
    bool is_zero() const { return terms.empty(); }

    friend MazeHom operator+(MazeHom a, const MazeHom& b) { return a += b; }
    friend MazeHom operator-(MazeHom a, const MazeHom& b) { return a -= b; }
    friend MazeHom operator*(const Scalar& s, MazeHom a) { return a *= s; }
    friend bool operator==(const MazeHom& a, const MazeHom& b) {
        return a.dom == b.dom && a.cod == b.cod && a.terms == b.terms;
    }

private:
    void check_same(const MazeHom& o) const {
        if (o.dom != dom || o.cod != cod) throw DomainError("adding maze homs of different type");
    }
};

/// A composable pair (p, q) of tagged passage instances.
struct TaggedPair {
    std::size_t p_index;
    std::size_t q_index;
    Passage p;
    Passage q;
};

/// All composable pairs of passage instances of P: Y -> Z and Q: X -> Y.
inline std::vector<TaggedPair> box_product(const Maze& p, const Maze& q) {
    if (p.dom != q.cod) throw DomainError("box_product: codomain/domain mismatch");
    auto pi = p.instances();
    auto qi = q.instances();
    std::vector<TaggedPair> out;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = 0; j < qi.size(); ++j)
            if (pi[i].from == qi[j].to) out.push_back({i, j, pi[i], qi[j]});
    return out;
}

inline constexpr long kNoPassageBound = std::numeric_limits<long>::max();

/// P o Q: every set U of tagged pairs covering all instances of P and of Q
/// contributes the maze of composed passages. Sets with more than
/// max_passages pairs are skipped.
inline MazeHom maze_compose(const Maze& p, const Maze& q, long max_passages = kNoPassageBound,
                            std::size_t limit = kDefaultEnumerationLimit) {
    auto pairs = box_product(p, q);
    const std::size_t np = static_cast<std::size_t>(p.size());
    const std::size_t nq = static_cast<std::size_t>(q.size());
    MazeHom out(q.dom, p.cod);
    if (static_cast<long>(std::max(np, nq)) > max_passages) return out;

    // After position k no pair touches instances whose last occurrence is < k.
    std::vector<std::size_t> last_p(np, 0), last_q(nq, 0);
    std::vector<bool> seen_p(np, false), seen_q(nq, false);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        last_p[pairs[k].p_index] = k;
        seen_p[pairs[k].p_index] = true;
        last_q[pairs[k].q_index] = k;
        seen_q[pairs[k].q_index] = true;
    }
    for (bool s : seen_p)
        if (!s) return out;
    for (bool s : seen_q)
        if (!s) return out;

    std::vector<int> cover_p(np, 0), cover_q(nq, 0);
    std::vector<std::size_t> chosen;
    std::size_t found = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == pairs.size()) {
            check_enumeration(++found, limit, "maze_compose");
            std::vector<Passage> ps;
            ps.reserve(chosen.size());
            for (std::size_t idx : chosen) {
                const auto& tp = pairs[idx];
                ps.push_back({tp.q.from, tp.p.to, tp.p.label * tp.q.label});
            }
            out.terms.add(Maze{q.dom, p.cod, MultiSet<Passage>::from_elements(ps)}, Scalar(1));
            return;
        }
        const auto& tp = pairs[k];
        // Exclude pair k, unless it is the last chance to cover one of its instances.
        bool p_needed = cover_p[tp.p_index] == 0 && last_p[tp.p_index] == k;
        bool q_needed = cover_q[tp.q_index] == 0 && last_q[tp.q_index] == k;
        if (!p_needed && !q_needed) rec(k + 1);
        if (static_cast<long>(chosen.size()) < max_passages) {
            chosen.push_back(k);
            ++cover_p[tp.p_index];
            ++cover_q[tp.q_index];
            rec(k + 1);
            --cover_p[tp.p_index];
            --cover_q[tp.q_index];
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

inline MazeHom mazehom_compose(const MazeHom& f, const MazeHom& g, long max_passages = kNoPassageBound) {
    if (g.cod != f.dom) throw DomainError("mazehom_compose: codomain/domain mismatch");
    MazeHom out(g.dom, f.cod);
    for (const auto& [p, a] : f.terms)
        for (const auto& [q, b] : g.terms) out.terms.add(maze_compose(p, q, max_passages).terms, a * b);
    return out;
}

namespace detail {
inline Maze remove_instance(const Maze& m, const Passage& p) {
    if (!m.passages.contains(p)) throw DomainError("passage not in maze");
    Maze out = m;
    out.passages.insert(p, -1);
    return out;
}
}  // namespace detail

/// Replaces one instance of p by parallel passages labelled by every
/// nonempty subfamily of parts; the parts must sum to the label of p.
inline MazeHom expand_label(const Maze& m, const Passage& p, const std::vector<Scalar>& parts) {
    if (parts.empty()) throw DomainError("expand_label: empty parts list");
    Scalar sum(0);
    for (const auto& s : parts) sum += s;
    if (sum != p.label) throw DomainError("expand_label: parts do not sum to the label");
    if (parts.size() > 20) throw EnumerationLimit("expand_label: too many parts");
    Maze base = detail::remove_instance(m, p);
    MazeHom out(m.dom, m.cod);
    const std::size_t k = parts.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        Maze x = base;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) x.passages.insert({p.from, p.to, parts[i]});
        out.terms.add(x, Scalar(1));
    }
    return out;
}

/// Signed sum over subfamilies I of the group, replacing the group by a
/// single passage labelled with the sum over I.
inline MazeHom collapse_parallel(const Maze& m, const std::vector<Passage>& group) {
    if (group.empty()) throw DomainError("collapse_parallel: empty group");
    for (const auto& g : group)
        if (!parallel(g, group.front())) throw DomainError("collapse_parallel: passages not parallel");
    if (group.size() > 20) throw EnumerationLimit("collapse_parallel: group too large");
    Maze base = m;
    for (const auto& g : group) base = detail::remove_instance(base, g);
    MazeHom out(m.dom, m.cod);
    const std::size_t k = group.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Scalar label(0);
        std::size_t bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                label += group[i].label;
                ++bits;
            }
        Maze x = base;
        x.passages.insert({group.front().from, group.front().to, label});
        out.terms.add(x, ((k - bits) % 2 == 0) ? Scalar(1) : Scalar(-1));
    }
    return out;
}

/// Drops every term containing a passage labelled 0.
inline MazeHom apply_zero_axiom(const MazeHom& h) {
    MazeHom out(h.dom, h.cod);
    for (const auto& [m, c] : h.terms) {
        bool zero = false;
        for (const auto& [p, k] : m.passages) zero = zero || p.label.is_zero();
        if (!zero) out.terms.add(m, c);
    }
    return out;
}

/// a ⊡ P: every label multiplied by a.
inline Maze scale_labels(const Scalar& a, const Maze& m) {
    Maze out{m.dom, m.cod, {}};
    for (const auto& [p, k] : m.passages) out.passages.insert({p.from, p.to, a * p.label}, k);
    return out;
}

/// All pure mazes dom -> cod with between lo and hi passages, canonical order.
inline std::vector<Maze> enumerate_pure_mazes(const std::vector<Elem>& dom_in, const std::vector<Elem>& cod_in,
                                              long lo, long hi,
                                              std::size_t limit = kDefaultEnumerationLimit) {
    auto dom = detail::sorted_set(dom_in);
    auto cod = detail::sorted_set(cod_in);
    std::vector<Passage> cells;
    for (const auto& x : dom)
        for (const auto& y : cod) cells.push_back({x, y, Scalar(1)});
    std::vector<Maze> out;
    for (long k = std::max(lo, 0L); k <= hi; ++k) {
        if (cells.empty() && k > 0) break;
        for (auto& ps : enumerate_of_cardinality(cells, k, limit)) {
            Maze m{dom, cod, std::move(ps)};
            if (validate_maze(m)) out.push_back(std::move(m));
            check_enumeration(out.size(), limit, "enumerate_pure_mazes");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Renames elements of a maze via the given maps (order-preserving when used
/// to move between a set and the skeleton of the same size).
inline Maze rename_maze(const Maze& m, const std::function<Elem(const Elem&)>& fdom,
                        const std::function<Elem(const Elem&)>& fcod) {
    std::vector<Elem> dom, cod;
    for (const auto& x : m.dom) dom.push_back(fdom(x));
    for (const auto& y : m.cod) cod.push_back(fcod(y));
    std::vector<Passage> ps;
    for (const auto& p : m.instances()) ps.push_back({fdom(p.from), fcod(p.to), p.label});
    return make_maze(dom, cod, ps);
}

}  // namespace laby
