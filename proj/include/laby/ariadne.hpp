#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "maze.hpp"
#include "multation.hpp"
#include "quotient.hpp"

namespace laby {

/// Multisets A with #A = X and |A| = n (empty when |X| > n).
inline std::vector<MSet> ariadne_object(const std::vector<Elem>& x, long n) { return enumerate_supported(x, n); }

/// Matrix of multation homs; entry (i, j) maps cols[j] to rows[i].
struct AriadneMatrix {
    std::vector<MSet> rows;
    std::vector<MSet> cols;
    std::map<std::pair<std::size_t, std::size_t>, MultHom> entries;  // nonzero entries only

    AriadneMatrix() = default;
    AriadneMatrix(std::vector<MSet> r, std::vector<MSet> c) : rows(std::move(r)), cols(std::move(c)) {}

    std::size_t row_index(const MSet& b) const { return index_in(rows, b); }
    std::size_t col_index(const MSet& a) const { return index_in(cols, a); }

    MultHom at(std::size_t i, std::size_t j) const {
        auto it = entries.find({i, j});
        return it != entries.end() ? it->second : MultHom(cols.at(j), rows.at(i));
    }

    void add(std::size_t i, std::size_t j, const MultHom& h) {
        auto [it, inserted] = entries.try_emplace({i, j}, cols.at(j), rows.at(i));
        it->second += h;
        if (it->second.is_zero()) entries.erase(it);
    }

    void add(const AriadneMatrix& o, const Scalar& s = Scalar(1)) {
        if (o.rows != rows || o.cols != cols) throw DomainError("adding Ariadne matrices of different shape");
        for (const auto& [ij, h] : o.entries) add(ij.first, ij.second, s * h);
    }

    bool is_zero() const { return entries.empty(); }

    friend bool operator==(const AriadneMatrix& a, const AriadneMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }

private:
    static std::size_t index_in(const std::vector<MSet>& v, const MSet& m) {
        auto it = std::lower_bound(v.begin(), v.end(), m);
        if (it == v.end() || *it != m) throw DomainError("multiset is not an index of this matrix");
        return static_cast<std::size_t>(it - v.begin());
    }
};

/// A_n(P) = Σ_{#A=P, |A|=n} Π p̄^{deg_A p} col(p)^[deg_A p].
inline AriadneMatrix ariadne_maze(const Maze& p, long n) {
    AriadneMatrix out(ariadne_object(p.cod, n), ariadne_object(p.dom, n));
    auto inst = p.instances();
    detail::for_each_degree_vector(inst.size(), n, n, [&](const std::vector<long>& d) {
        Scalar c(1);
        std::vector<std::pair<Column, long>> powers;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            c *= pow(inst[i].label, static_cast<unsigned>(d[i]));
            powers.push_back({{inst[i].from, inst[i].to}, d[i]});
        }
        if (c.is_zero()) return;
        auto [k, cols] = divided_reduce(powers);
        Multation mu(cols);
        out.add(out.row_index(mu.cod()), out.col_index(mu.dom()), MultHom(mu, c * Scalar(k)));
    });
    return out;
}

inline AriadneMatrix ariadne_hom(const MazeHom& h, long n) {
    AriadneMatrix out(ariadne_object(h.cod, n), ariadne_object(h.dom, n));
    for (const auto& [m, c] : h.terms) out.add(ariadne_maze(m, n), c);
    return out;
}

/// Matrix product: (f g)(C, A) = Σ_B f(C, B) o g(B, A).
inline AriadneMatrix ariadne_compose(const AriadneMatrix& f, const AriadneMatrix& g) {
    if (f.cols != g.rows) throw DomainError("ariadne_compose: shape mismatch");
    AriadneMatrix out(f.rows, g.cols);
    for (const auto& [ij, x] : f.entries)
        for (const auto& [jk, y] : g.entries)
            if (ij.second == jk.first) out.add(ij.first, jk.second, multhom_compose(x, y));
    return out;
}

/// T_n(mu) = (1/deg mu) times the pure maze with (a, b) repeated deg_mu(a, b) times.
inline MazeHom theseus_multation(const Multation& mu, long n) {
    if (mu.dom().cardinality() != n || mu.cod().cardinality() != n)
        throw DomainError("theseus_multation: multation does not have cardinality n");
    Maze m{mu.dom().support(), mu.cod().support(), {}};
    for (const auto& [col, k] : mu.pairs()) m.passages.insert({col.first, col.second, Scalar(1)}, k);
    return MazeHom(m, Scalar(Integer(1), mu.degree()));
}

inline MazeHom theseus_hom(const MultHom& f, long n) {
    MazeHom out(f.dom.support(), f.cod.support());
    for (const auto& [mu, c] : f.terms) out += c * theseus_multation(mu, n);
    return out;
}

struct CheckReport {
    bool ok = true;
    std::string detail;
    std::size_t checked = 0;

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

namespace detail {
inline std::string ms_text(const MSet& m) {
    std::string s = "{";
    for (const auto& e : m.elements()) s += (s.size() > 1 ? "," : "") + e;
    return s + "}";
}
}  // namespace detail

/// Checks A_n o T_n = id on every multation over the universe, and
/// T_n o A_n = id on compressed exactly-n normal forms e_B P e_A.
inline CheckReport roundtrip_check(const std::vector<Elem>& universe, long n) {
    CheckReport rep;
    auto objs = enumerate_of_cardinality(universe, n);
    for (const auto& a : objs)
        for (const auto& b : objs) {
            for (const auto& mu : enumerate_multations(a, b)) {
                ++rep.checked;
                auto back = ariadne_hom(theseus_multation(mu, n), n);
                AriadneMatrix expect(back.rows, back.cols);
                expect.add(expect.row_index(b), expect.col_index(a), MultHom(mu));
                if (back != expect) {
                    rep.fail("A_n(T_n(mu)) != mu for mu: " + detail::ms_text(a) + " -> " + detail::ms_text(b));
                    return rep;
                }
            }
            auto ea = idempotent_of(a), eb = idempotent_of(b);
            for (const auto& p : enumerate_pure_mazes(a.support(), b.support(), n, n)) {
                ++rep.checked;
                auto f = normalize_homogeneous(mazehom_compose(mazehom_compose(eb, MazeHom(p), n), ea, n), n);
                auto am = ariadne_hom(f, n);
                std::size_t bi = am.row_index(b), ai = am.col_index(a);
                for (const auto& [ij, h] : am.entries)
                    if (ij != std::make_pair(bi, ai)) {
                        rep.fail("A_n(e_B P e_A) has an entry outside (B, A)");
                        return rep;
                    }
                auto back = normalize_homogeneous(theseus_hom(am.at(bi, ai), n), n);
                if (back != f) {
                    rep.fail("T_n(A_n(f)) != f for " + detail::ms_text(a) + " -> " + detail::ms_text(b));
                    return rep;
                }
            }
        }
    return rep;
}

}  // namespace laby
