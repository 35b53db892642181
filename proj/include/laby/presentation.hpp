#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "ariadne.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "matrix_functor.hpp"
#include "maze.hpp"
#include "multation.hpp"
#include "quotient.hpp"

namespace laby {

namespace detail {
// Order-preserving renaming of a sorted set onto the skeleton of its size.
inline std::function<Elem(const Elem&)> to_skeleton(const std::vector<Elem>& sorted) {
    return [sorted](const Elem& e) { return skeleton(static_cast<long>(sorted.size()))[position_in(sorted, e)]; };
}

inline bool is_pure(const Maze& m) {
    for (const auto& [p, k] : m.passages)
        if (p.label != Scalar(1)) return false;
    return true;
}

inline std::string maze_text(const Maze& m) {
    std::string s;
    for (const auto& p : m.instances()) s += (s.empty() ? "" : " ") + p.from + "->" + p.to;
    return "[" + std::to_string(m.dom.size()) + "]->[" + std::to_string(m.cod.size()) + "] {" + s + "}";
}
}  // namespace detail

/// A linear functor Laby_n -> Mod, stored on the skeleton [0], ..., [n].
struct LabyModulePresentation {
    long degree = 0;
    std::vector<FgAbGroup> groups;    // H([k]) for k = 0..degree
    std::map<Maze, IntMatrix> table;  // pure skeleton mazes with at most `degree` passages

    FgAbGroup group(std::size_t k) const {
        if (static_cast<long>(k) > degree) return {};
        return groups.at(k);
    }

    /// H on a pure maze between arbitrary sets, transported to the skeleton.
    AbHom value(const Maze& m) const {
        if (!detail::is_pure(m)) throw DomainError("presentation value needs a pure maze");
        FgAbGroup d = group(m.dom.size()), c = group(m.cod.size());
        if (m.size() > degree) return AbHom(d, c);
        Maze s = rename_maze(m, detail::to_skeleton(m.dom), detail::to_skeleton(m.cod));
        auto it = table.find(s);
        if (it == table.end()) throw DomainError("presentation lacks maze " + detail::maze_text(s));
        return AbHom(d, c, it->second);
    }

    /// H on an arbitrary combination, via the Laby_n normal form.
    AbHom evaluate(const MazeHom& h) const {
        AbHom out(group(h.dom.size()), group(h.cod.size()));
        for (const auto& [m, c] : normalize_numerical(h, degree).terms) {
            if (!c.is_integer()) throw DomainError("evaluate: non-integral coefficient " + c.str());
            out += c.numerator() * value(m);
        }
        return out;
    }
};

/// Pure mazes [j] -> [k], j, k <= n, with at most n passages.
inline std::vector<Maze> laby_skeleton_mazes(long n) {
    std::vector<Maze> out;
    for (long j = 0; j <= n; ++j)
        for (long k = 0; k <= n; ++k)
            for (auto& m : enumerate_pure_mazes(skeleton(j), skeleton(k), 0, n)) out.push_back(std::move(m));
    return out;
}

inline CheckReport validate_presentation(const LabyModulePresentation& h) {
    CheckReport rep;
    if (h.degree < 0 || h.degree > kMaxFunctorDegree) {
        rep.fail("degree out of range");
        return rep;
    }
    if (h.groups.size() != static_cast<std::size_t>(h.degree + 1)) {
        rep.fail("expected one group per object [0..n]");
        return rep;
    }
    for (const auto& g : h.groups)
        if (!g.is_invariant_form()) {
            rep.fail("group " + g.to_string() + " is not in invariant-factor form");
            return rep;
        }
    auto mazes = laby_skeleton_mazes(h.degree);
    if (h.table.size() != mazes.size()) {
        rep.fail("table has " + std::to_string(h.table.size()) + " entries, expected " + std::to_string(mazes.size()));
        return rep;
    }
    std::map<Maze, AbHom> vals;
    for (const auto& m : mazes) {
        auto it = h.table.find(m);
        if (it == h.table.end()) {
            rep.fail("missing maze " + detail::maze_text(m));
            return rep;
        }
        const IntMatrix& x = it->second;
        FgAbGroup d = h.group(m.dom.size()), c = h.group(m.cod.size());
        if (x.rows() != c.dim() || x.cols() != d.dim()) {
            rep.fail("wrong matrix shape for " + detail::maze_text(m));
            return rep;
        }
        AbHom v(d, c, x);
        if (!v.well_defined()) {
            rep.fail("not well defined on torsion: " + detail::maze_text(m));
            return rep;
        }
        vals.emplace(m, std::move(v));
    }
    for (long k = 0; k <= h.degree; ++k) {
        ++rep.checked;
        if (vals.at(identity_maze(skeleton(k))) != AbHom::identity(h.group(k))) {
            rep.fail("identity maze of [" + std::to_string(k) + "] is not sent to the identity");
            return rep;
        }
    }
    for (const auto& [p, hp] : vals)
        for (const auto& [q, hq] : vals) {
            if (q.cod != p.dom) continue;
            ++rep.checked;
            auto pq = compose_in_laby_n(MazeHom(p), MazeHom(q), h.degree);
            if (h.evaluate(pq) != ab_compose(hp, hq)) {
                rep.fail("composition fails for " + detail::maze_text(p) + " o " + detail::maze_text(q));
                return rep;
            }
        }
    return rep;
}

inline LabyModulePresentation checked(LabyModulePresentation h) {
    auto rep = validate_presentation(h);
    if (!rep.ok) throw DomainError("invalid Laby presentation: " + rep.detail);
    return h;
}

/// Φ(F): ce_[k] F(Z^k) on objects and deviations on mazes.
inline LabyModulePresentation phi_presentation(const MatrixFunctor& f, long n) {
    LabyModulePresentation h;
    h.degree = n;
    for (long k = 0; k <= n; ++k) h.groups.push_back(FgAbGroup::free(top_cross_effect_basis(f, k).cols()));
    for (const auto& m : laby_skeleton_mazes(n)) h.table.emplace(m, phi_forward(f, m).m);
    return h;
}

/// The degree-2 presentation determined by K = H[0], X = H[1], Y = H[2] and
/// α = H(A), β = H(B). Not validated here.
inline LabyModulePresentation quadratic_presentation(const FgAbGroup& k, const FgAbGroup& x, const FgAbGroup& y,
                                                     const AbHom& alpha, const AbHom& beta) {
    if (alpha.dom != x || alpha.cod != y || beta.dom != y || beta.cod != x)
        throw DomainError("quadratic_presentation: alpha must map X to Y and beta Y to X");
    LabyModulePresentation h;
    h.degree = 2;
    h.groups = {k, x, y};
    auto ba = ab_compose(beta, alpha), ab = ab_compose(alpha, beta) - AbHom::identity(y);
    h.table.emplace(Maze{{}, {}, {}}, IntMatrix::identity(k.dim()));
    h.table.emplace(identity_maze(skeleton(1)), IntMatrix::identity(x.dim()));
    h.table.emplace(identity_maze(skeleton(2)), IntMatrix::identity(y.dim()));
    h.table.emplace(laby2_A(), alpha.m);
    h.table.emplace(laby2_B(), beta.m);
    h.table.emplace(laby2_C(), ba.m);
    h.table.emplace(laby2_S(), ab.m);
    return h;
}

inline LabyModulePresentation frobenius_presentation() {
    FgAbGroup z2 = FgAbGroup::invariant(0, {2});
    return quadratic_presentation({}, z2, {}, AbHom(z2, {}), AbHom({}, z2));
}

/// A linear functor MSet_n -> Mod on the multisets of cardinality n whose
/// support is a skeleton [k].
struct MSetModulePresentation {
    long degree = 1;
    std::map<MSet, FgAbGroup> groups;
    std::map<Multation, IntMatrix> table;

    static MSet to_skeleton(const MSet& a) {
        auto f = detail::to_skeleton(a.support());
        MSet out;
        for (const auto& [e, k] : a) out.insert(f(e), k);
        return out;
    }

    static Multation to_skeleton(const Multation& mu) {
        auto fd = detail::to_skeleton(mu.dom().support()), fc = detail::to_skeleton(mu.cod().support());
        MultiSet<Column> p;
        for (const auto& [c, k] : mu.pairs()) p.insert({fd(c.first), fc(c.second)}, k);
        return Multation(std::move(p));
    }

    FgAbGroup group(const MSet& a) const {
        if (a.cardinality() != degree) throw DomainError("multiset does not have the presentation's cardinality");
        auto it = groups.find(to_skeleton(a));
        if (it == groups.end()) throw DomainError("presentation lacks object " + detail::ms_text(a));
        return it->second;
    }

    AbHom value(const Multation& mu) const {
        FgAbGroup d = group(mu.dom()), c = group(mu.cod());
        auto it = table.find(to_skeleton(mu));
        if (it == table.end()) throw DomainError("presentation lacks a multation " + detail::ms_text(mu.dom()) + " -> " +
                                                 detail::ms_text(mu.cod()));
        return AbHom(d, c, it->second);
    }

    AbHom evaluate(const MultHom& f) const {
        AbHom out(group(f.dom), group(f.cod));
        for (const auto& [mu, c] : f.terms) {
            if (!c.is_integer()) throw DomainError("evaluate: non-integral coefficient " + c.str());
            out += c.numerator() * value(mu);
        }
        return out;
    }
};

/// Multisets of cardinality n supported on [1], ..., [n].
inline std::vector<MSet> mset_skeleton_objects(long n) {
    std::vector<MSet> out;
    for (long k = 0; k <= n; ++k)
        for (auto& a : enumerate_supported(skeleton(k), n)) out.push_back(std::move(a));
    return out;
}

inline CheckReport validate_presentation(const MSetModulePresentation& j) {
    CheckReport rep;
    if (j.degree < 1 || j.degree > kMaxFunctorDegree) {
        rep.fail("degree out of range");
        return rep;
    }
    auto objs = mset_skeleton_objects(j.degree);
    if (j.groups.size() != objs.size()) {
        rep.fail("expected " + std::to_string(objs.size()) + " objects");
        return rep;
    }
    for (const auto& a : objs) {
        auto it = j.groups.find(a);
        if (it == j.groups.end()) {
            rep.fail("missing object " + detail::ms_text(a));
            return rep;
        }
        if (!it->second.is_invariant_form()) {
            rep.fail("group of " + detail::ms_text(a) + " is not in invariant-factor form");
            return rep;
        }
    }
    std::map<Multation, AbHom> vals;
    for (const auto& a : objs)
        for (const auto& b : objs)
            for (const auto& mu : enumerate_multations(a, b)) {
                auto it = j.table.find(mu);
                if (it == j.table.end()) {
                    rep.fail("missing multation " + detail::ms_text(a) + " -> " + detail::ms_text(b));
                    return rep;
                }
                const FgAbGroup &d = j.groups.at(a), &c = j.groups.at(b);
                if (it->second.rows() != c.dim() || it->second.cols() != d.dim()) {
                    rep.fail("wrong matrix shape for a multation " + detail::ms_text(a) + " -> " + detail::ms_text(b));
                    return rep;
                }
                AbHom v(d, c, it->second);
                if (!v.well_defined()) {
                    rep.fail("not well defined on torsion");
                    return rep;
                }
                vals.emplace(mu, std::move(v));
            }
    if (vals.size() != j.table.size()) {
        rep.fail("table has entries outside the skeleton");
        return rep;
    }
    for (const auto& a : objs) {
        ++rep.checked;
        if (vals.at(identity_multation(a)) != AbHom::identity(j.groups.at(a))) {
            rep.fail("identity of " + detail::ms_text(a) + " is not sent to the identity");
            return rep;
        }
    }
    for (const auto& [mu, hm] : vals)
        for (const auto& [nu, hn] : vals) {
            if (nu.cod() != mu.dom()) continue;
            ++rep.checked;
            if (j.evaluate(multation_compose(mu, nu)) != ab_compose(hm, hn)) {
                rep.fail("composition fails through " + detail::ms_text(mu.dom()));
                return rep;
            }
        }
    return rep;
}

inline MSetModulePresentation checked(MSetModulePresentation j) {
    auto rep = validate_presentation(j);
    if (!rep.ok) throw DomainError("invalid MSet presentation: " + rep.detail);
    return j;
}

namespace detail {
// Words w in supp(A)^n whose letters make up A, in lexicographic order.
inline std::vector<std::vector<Elem>> words_of(const MSet& a) {
    std::vector<std::vector<Elem>> out;
    auto w = a.elements();
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}
}  // namespace detail

/// The n-th tensor power as a multiset module: J(A) is spanned by the words
/// with letters A, and J(mu) sends w to the words v with {(w_i, v_i)} = mu.
inline MSetModulePresentation tensor_power_mset_module(long n) {
    MSetModulePresentation j;
    j.degree = n;
    auto objs = mset_skeleton_objects(n);
    for (const auto& a : objs) j.groups.emplace(a, FgAbGroup::free(detail::words_of(a).size()));
    for (const auto& a : objs)
        for (const auto& b : objs) {
            auto wa = detail::words_of(a), wb = detail::words_of(b);
            for (const auto& mu : enumerate_multations(a, b)) {
                IntMatrix m(wb.size(), wa.size());
                for (std::size_t r = 0; r < wb.size(); ++r)
                    for (std::size_t c = 0; c < wa.size(); ++c) {
                        MultiSet<Column> p;
                        for (std::size_t i = 0; i < wa[c].size(); ++i) p.insert({wa[c][i], wb[r][i]});
                        if (p == mu.pairs()) m(r, c) = 1;
                    }
                j.table.emplace(mu, std::move(m));
            }
        }
    return j;
}

/// Z/2 in degree 2 on {1,1} and zero elsewhere.
inline MSetModulePresentation frobenius_mset_module() {
    MSetModulePresentation j;
    j.degree = 2;
    FgAbGroup z2 = FgAbGroup::invariant(0, {2});
    MSet aa{"1", "1"}, ab{"1", "2"};
    j.groups = {{aa, z2}, {ab, {}}};
    j.table.emplace(identity_multation(aa), IntMatrix::identity(1));
    j.table.emplace(identity_multation(ab), IntMatrix(0, 0));
    j.table.emplace(mset2_alpha(), IntMatrix(0, 1));
    j.table.emplace(mset2_beta(), IntMatrix(1, 0));
    j.table.emplace(mset2_sigma(), IntMatrix(0, 0));
    return j;
}

struct QuadraticData {
    FgAbGroup k, x, y;
    AbHom alpha, beta;
};

/// Random unimodular u with its inverse.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t d, std::mt19937_64& rng, int steps = 6) {
    IntMatrix u = IntMatrix::identity(d), v = IntMatrix::identity(d);
    if (d < 2) return {u, v};
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        int c = coef(rng);
        if (i == j || c == 0) continue;
        // u <- (1 + c e_ij) u, v <- v (1 - c e_ij)
        for (std::size_t t = 0; t < d; ++t) u(i, t) += c * u(j, t);
        for (std::size_t t = 0; t < d; ++t) v(t, j) -= c * v(t, i);
    }
    return {u, v};
}

/// Free quadratic data assembled from indecomposable blocks and conjugated
/// by random unimodular matrices, so the two relations hold by construction.
inline QuadraticData random_quadratic_data(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 4), krank(0, 2), nblocks(1, 3);
    std::vector<std::pair<IntMatrix, IntMatrix>> blocks;  // (alpha, beta)
    int nb = nblocks(rng);
    for (int b = 0; b < nb; ++b) {
        switch (kind(rng)) {
            case 0: blocks.push_back({IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{2}})}); break;
            case 1: blocks.push_back({IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})}); break;
            case 2: blocks.push_back({IntMatrix(0, 1), IntMatrix(1, 0)}); break;
            case 3: blocks.push_back({IntMatrix(1, 0), IntMatrix(0, 1)}); break;
            default: blocks.push_back({IntMatrix::from_rows({{1}, {1}}), IntMatrix::from_rows({{1, 1}})}); break;
        }
    }
    IntMatrix a(0, 0), bt(0, 0);
    for (const auto& [x, y] : blocks) {
        a = direct_sum(a, x);
        bt = direct_sum(bt, y);
    }
    auto [u, ui] = random_unimodular(a.cols(), rng);
    auto [v, vi] = random_unimodular(a.rows(), rng);
    QuadraticData q;
    q.k = FgAbGroup::free(static_cast<std::size_t>(krank(rng)));
    q.x = FgAbGroup::free(a.cols());
    q.y = FgAbGroup::free(a.rows());
    q.alpha = AbHom(q.x, q.y, v * a * ui);
    q.beta = AbHom(q.y, q.x, u * bt * vi);
    return q;
}

}  // namespace laby
