#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
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
#include "presentation.hpp"
#include "quotient.hpp"

namespace laby {

/// Block decomposition of a value F(Z^a): one block per index, in order.
template <class Index>
struct BlockLayout {
    std::vector<Index> index;
    std::vector<std::size_t> offset;
    FgAbGroup group;

    std::size_t find(const Index& x) const {
        for (std::size_t i = 0; i < index.size(); ++i)
            if (index[i] == x) return i;
        throw DomainError("block not present in layout");
    }
    std::size_t size(std::size_t i) const {
        return (i + 1 < offset.size() ? offset[i + 1] : group.dim()) - offset[i];
    }
};

using SubsetLayout = BlockLayout<std::vector<std::size_t>>;
using MultisetLayout = BlockLayout<MSet>;

/// Φ⁻¹(H)(Z^a) = ⊕_{X ⊆ [a], |X| <= n} H(X).
inline SubsetLayout phi_inverse_layout(const LabyModulePresentation& h, std::size_t a) {
    if (a > kMaxFunctorArgument) throw EnumerationLimit("phi_inverse: argument above guard");
    SubsetLayout l;
    for (auto& x : detail::subsets_by_size(a)) {
        if (static_cast<long>(x.size()) > h.degree) break;
        l.offset.push_back(l.group.dim());
        l.group = l.group + h.group(x.size());
        l.index.push_back(std::move(x));
    }
    return l;
}

namespace detail {
inline std::vector<Elem> index_names(const std::vector<std::size_t>& x) {
    std::vector<Elem> out;
    for (auto i : x) out.push_back(std::to_string(i + 1));
    return sorted_set(out);
}
}  // namespace detail

/// Φ⁻¹(H)(M) = Σ_{K ⊆ B x A} H(maze with passages a -> b labelled s_ba over K).
inline AbHom phi_inverse_eval(const LabyModulePresentation& h, const IntMatrix& m) {
    auto la = phi_inverse_layout(h, m.cols()), lb = phi_inverse_layout(h, m.rows());
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t b = 0; b < m.rows(); ++b)
        for (std::size_t a = 0; a < m.cols(); ++a)
            if (m(b, a) != 0) cells.push_back({b, a});
    IntMatrix out(lb.group.dim(), la.group.dim());
    for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
        if (static_cast<long>(std::popcount(mask)) > h.degree) continue;  // vanishes by truncation
        std::vector<std::size_t> xs, ys;
        std::vector<Passage> ps;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (mask >> i & 1) {
                auto [b, a] = cells[i];
                xs.push_back(a);
                ys.push_back(b);
                ps.push_back({std::to_string(a + 1), std::to_string(b + 1), Scalar(m(b, a))});
            }
        detail::sorted_unique(xs);
        detail::sorted_unique(ys);
        Maze p = make_maze(detail::index_names(xs), detail::index_names(ys), ps);
        AbHom v = h.evaluate(MazeHom(p));
        std::size_t bx = la.find(xs), by = lb.find(ys);
        out.add_block(lb.offset[by], la.offset[bx], v.m);
    }
    return AbHom(la.group, lb.group, out);
}

inline MatrixFunctor phi_inverse_functor(const LabyModulePresentation& h) {
    return {"phi_inverse", [h](std::size_t a) { return phi_inverse_layout(h, a).group.dim(); },
            [h](const IntMatrix& m) { return phi_inverse_eval(h, m).m; }};
}

/// Ψ⁻¹(J)(Z^a) = ⊕_{|A| = n, #A ⊆ [a]} J(A).
inline MultisetLayout psi_inverse_layout(const MSetModulePresentation& j, std::size_t a) {
    if (a > kMaxFunctorArgument) throw EnumerationLimit("psi_inverse: argument above guard");
    MultisetLayout l;
    for (auto& x : enumerate_of_cardinality(skeleton(static_cast<long>(a)), j.degree)) {
        l.offset.push_back(l.group.dim());
        l.group = l.group + j.group(x);
        l.index.push_back(std::move(x));
    }
    return l;
}

/// Ψ⁻¹(J)(M) = Σ_{A,B} Σ_{mu: A -> B} s^mu J(mu), s^mu = Π s_ba^{deg_mu(a,b)}.
inline AbHom psi_inverse_eval(const MSetModulePresentation& j, const IntMatrix& m) {
    auto la = psi_inverse_layout(j, m.cols()), lb = psi_inverse_layout(j, m.rows());
    auto dom = skeleton(static_cast<long>(m.cols())), cod = skeleton(static_cast<long>(m.rows()));
    IntMatrix out(lb.group.dim(), la.group.dim());
    for (std::size_t ia = 0; ia < la.index.size(); ++ia)
        for (std::size_t ib = 0; ib < lb.index.size(); ++ib)
            for (const auto& mu : enumerate_multations(la.index[ia], lb.index[ib])) {
                Integer s = 1;
                for (const auto& [c, k] : mu.pairs()) {
                    Integer e = m(detail::position_in(cod, c.second), detail::position_in(dom, c.first));
                    Integer p;
                    mpz_pow_ui(p.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(k));
                    s *= p;
                }
                if (s != 0) out.add_block(lb.offset[ib], la.offset[ia], j.value(mu).m, s);
            }
    return AbHom(la.group, lb.group, out);
}

inline MatrixFunctor psi_inverse_functor(const MSetModulePresentation& j) {
    return {"psi_inverse", [j](std::size_t a) { return psi_inverse_layout(j, a).group.dim(); },
            [j](const IntMatrix& m) { return psi_inverse_eval(j, m).m; }};
}

namespace detail {
inline std::vector<IntMatrix> projections(std::size_t a) {
    std::vector<IntMatrix> out;
    for (std::size_t i = 0; i < a; ++i) out.push_back(coordinate_projection(a, i));
    return out;
}

inline IntMatrix select(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

template <class Index, class Pred>
std::vector<std::size_t> coordinates_where(const BlockLayout<Index>& l, Pred keep) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < l.index.size(); ++b)
        if (keep(l.index[b]))
            for (std::size_t t = 0; t < l.size(b); ++t) out.push_back(l.offset[b] + t);
    return out;
}

// The top projector F(π_1|..|π_a) must be the identity on the kept
// coordinates and zero elsewhere.
inline bool is_coordinate_projector(const IntMatrix& e, const FgAbGroup& g, const std::vector<std::size_t>& keep) {
    IntMatrix p(g.dim(), g.dim());
    for (auto i : keep) p(i, i) = 1;
    return AbHom(g, g, e) == AbHom(g, g, p);
}
}  // namespace detail

/// Φ(Φ⁻¹(H)) = H: deviations of the evaluated functor, restricted to the
/// blocks singled out by its own cross-effect projectors.
inline CheckReport phi_roundtrip_check(const LabyModulePresentation& h) {
    CheckReport rep = validate_presentation(h);
    if (!rep.ok) {
        rep.detail = "presentation invalid: " + rep.detail;
        return rep;
    }
    auto g = phi_inverse_functor(h);
    std::vector<SubsetLayout> layouts;
    std::vector<std::vector<std::size_t>> top;
    for (long k = 0; k <= h.degree; ++k) {
        auto l = phi_inverse_layout(h, k);
        std::vector<std::size_t> full(k);
        for (long i = 0; i < k; ++i) full[i] = i;
        auto keep = detail::coordinates_where(l, [&](const std::vector<std::size_t>& x) { return x == full; });
        ++rep.checked;
        if (!detail::is_coordinate_projector(deviation_shaped(g, detail::projections(k), k, k), l.group, keep)) {
            rep.fail("top cross-effect of [" + std::to_string(k) + "] is not the top block");
            return rep;
        }
        layouts.push_back(std::move(l));
        top.push_back(std::move(keep));
    }
    for (const auto& [p, mat] : h.table) {
        ++rep.checked;
        std::size_t j = p.dom.size(), k = p.cod.size();
        IntMatrix d = deviation_shaped(g, detail::passage_matrices(p), k, j);
        AbHom got(h.group(j), h.group(k), detail::select(d, top[k], top[j]));
        if (got != h.value(p)) {
            rep.fail("Φ(Φ⁻¹(H)) differs from H on " + detail::maze_text(p));
            return rep;
        }
    }
    return rep;
}

/// J o A_n assembled as a map ⊕_{#A=dom} J(A) -> ⊕_{#B=cod} J(B).
inline AbHom ariadne_pullback(const MSetModulePresentation& j, const Maze& p) {
    auto am = ariadne_maze(p, j.degree);
    FgAbGroup dg, cg;
    std::vector<std::size_t> roff, coff;
    for (const auto& b : am.rows) {
        roff.push_back(cg.dim());
        cg = cg + j.group(b);
    }
    for (const auto& a : am.cols) {
        coff.push_back(dg.dim());
        dg = dg + j.group(a);
    }
    IntMatrix out(cg.dim(), dg.dim());
    for (const auto& [ij, f] : am.entries) out.add_block(roff[ij.first], coff[ij.second], j.evaluate(f).m);
    return AbHom(dg, cg, out);
}

/// Φ(Ψ⁻¹(J)) = J o A_n on all pure skeleton mazes with at most n+1 passages.
inline CheckReport check_ariadne_thread(const MSetModulePresentation& j) {
    CheckReport rep = validate_presentation(j);
    if (!rep.ok) {
        rep.detail = "presentation invalid: " + rep.detail;
        return rep;
    }
    auto g = psi_inverse_functor(j);
    long n = j.degree;
    long top_size = std::min<long>(n, static_cast<long>(kMaxFunctorArgument) - 1);
    std::vector<MultisetLayout> layouts;
    std::vector<std::vector<std::size_t>> top;
    for (long k = 0; k <= top_size; ++k) {
        auto l = psi_inverse_layout(j, k);
        auto sk = skeleton(k);
        auto keep = detail::coordinates_where(l, [&](const MSet& a) { return a.support() == sk; });
        ++rep.checked;
        if (!detail::is_coordinate_projector(deviation_shaped(g, detail::projections(k), k, k), l.group, keep)) {
            rep.fail("top cross-effect of [" + std::to_string(k) + "] is not the full-support blocks");
            return rep;
        }
        layouts.push_back(std::move(l));
        top.push_back(std::move(keep));
    }
    for (long a = 0; a <= top_size; ++a)
        for (long b = 0; b <= top_size; ++b)
            for (const auto& p : enumerate_pure_mazes(skeleton(a), skeleton(b), 0, n + 1)) {
                ++rep.checked;
                IntMatrix d = deviation_shaped(g, detail::passage_matrices(p), b, a);
                auto want = ariadne_pullback(j, p);
                AbHom got(want.dom, want.cod, detail::select(d, top[b], top[a]));
                if (got != want) {
                    rep.fail("Φ(Ψ⁻¹(J)) differs from J∘A_n on " + detail::maze_text(p));
                    return rep;
                }
            }
    return rep;
}

/// Deviation of Φ⁻¹(H) at the labelled passages of P against H applied to
/// the binomial expansion of P.
inline bool numerical_axiom_check(const LabyModulePresentation& h, const Maze& p) {
    std::size_t j = p.dom.size(), k = p.cod.size();
    auto g = phi_inverse_functor(h);
    IntMatrix d = deviation_shaped(g, detail::passage_matrices(p), k, j);
    auto top_of = [&](std::size_t a) {
        std::vector<std::size_t> full(a);
        for (std::size_t i = 0; i < a; ++i) full[i] = i;
        return detail::coordinates_where(phi_inverse_layout(h, a), [&](const std::vector<std::size_t>& x) { return x == full; });
    };
    AbHom lhs(h.group(j), h.group(k), detail::select(d, top_of(k), top_of(j)));
    return lhs == h.evaluate(MazeHom(p));
}

namespace detail {
inline RatMatrix free_part(const AbHom& f) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < f.cod.dim(); ++i)
        if (f.cod.order(i) == 0) rows.push_back(i);
    for (std::size_t i = 0; i < f.dom.dim(); ++i)
        if (f.dom.order(i) == 0) cols.push_back(i);
    return to_rational(select(f.m, rows, cols));
}
}  // namespace detail

/// H(a ⊡ P) = a^n H(P) for every stored P and sample a. Integer data is
/// compared modulo torsion; rational data after tensoring with Q.
inline bool quasi_homogeneous_check(const LabyModulePresentation& h, const std::vector<Scalar>& samples) {
    for (const auto& [p, mat] : h.table)
        for (const auto& a : samples) {
            auto expanded = normalize_numerical(scale_labels(a, p), h.degree);
            AbHom hp = h.value(p);
            bool integral = a.is_integer();
            for (const auto& [q, c] : expanded.terms) integral = integral && c.is_integer();
            Scalar an = pow(a, static_cast<unsigned>(h.degree));
            if (integral) {
                AbHom lhs(hp.dom, hp.cod);
                for (const auto& [q, c] : expanded.terms) lhs += c.numerator() * h.value(q);
                if (lhs != an.numerator() * hp) return false;
            } else {
                RatMatrix lhs = detail::free_part(AbHom(hp.dom, hp.cod));
                for (const auto& [q, c] : expanded.terms) lhs += c * detail::free_part(h.value(q));
                if (lhs != an * detail::free_part(hp)) return false;
            }
        }
    return true;
}

inline bool quadratic_relations_check(const FgAbGroup& k, const FgAbGroup& x, const FgAbGroup& y, const AbHom& alpha,
                                      const AbHom& beta) {
    (void)k;
    if (alpha.dom != x || alpha.cod != y || beta.dom != y || beta.cod != x)
        throw DomainError("quadratic_relations_check: alpha must map X to Y and beta Y to X");
    return ab_compose(beta, ab_compose(alpha, beta)) == Integer(2) * beta &&
           ab_compose(alpha, ab_compose(beta, alpha)) == Integer(2) * alpha;
}

/// Homogeneity of a quadratic functor: K = 0 and βα = 2.
inline bool quadratic_homogeneous_criterion(const FgAbGroup& k, const FgAbGroup& x, const FgAbGroup& y,
                                            const AbHom& alpha, const AbHom& beta) {
    if (!quadratic_relations_check(k, x, y, alpha, beta))
        throw DomainError("quadratic_homogeneous_criterion: relations do not hold");
    return k.is_trivial() && ab_compose(beta, alpha) == Integer(2) * AbHom::identity(x);
}

/// Whether H = J o A_n: objects H[k] = ⊕_{#B=[k]} J(B) and every stored maze
/// agrees with the Ariadne pullback.
inline CheckReport factorization_verify(const LabyModulePresentation& h, const MSetModulePresentation& j, long n) {
    CheckReport rep;
    if (h.degree != n || j.degree != n) {
        rep.fail("degree mismatch");
        return rep;
    }
    for (long k = 0; k <= n; ++k) {
        ++rep.checked;
        FgAbGroup s;
        for (const auto& b : ariadne_object(skeleton(k), n)) s = s + j.group(b);
        if (s != h.group(k)) {
            rep.fail("H[" + std::to_string(k) + "] = " + h.group(k).to_string() + " but the J-side is " + s.to_string());
            return rep;
        }
    }
    for (const auto& [p, mat] : h.table) {
        ++rep.checked;
        if (ariadne_pullback(j, p) != h.value(p)) {
            rep.fail("H differs from J∘A_n on " + detail::maze_text(p));
            return rep;
        }
    }
    return rep;
}

}  // namespace laby
