#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "maze.hpp"

namespace laby {

inline constexpr std::size_t kMaxFunctorArgument = 4;  // a, b for F(Z^a) evaluations
inline constexpr long kMaxFunctorDegree = 3;

/// A functor on free modules Z^a given by its effect on integer matrices.
/// apply(M) for M: Z^a -> Z^b must return a dim(b) x dim(a) matrix.
struct MatrixFunctor {
    std::string name;
    std::function<std::size_t(std::size_t)> dim;
    std::function<IntMatrix(const IntMatrix&)> apply;

    IntMatrix operator()(const IntMatrix& m) const {
        IntMatrix r = apply(m);
        if (r.rows() != dim(m.rows()) || r.cols() != dim(m.cols()))
            throw DomainError("functor " + name + " returned a matrix of the wrong shape");
        return r;
    }
};

inline MatrixFunctor tensor_power_functor(long n) {
    if (n < 0 || n > kMaxFunctorDegree) throw DomainError("tensor power degree out of range");
    return {"tensor^" + std::to_string(n),
            [n](std::size_t a) {
                std::size_t d = 1;
                for (long i = 0; i < n; ++i) d *= a;
                return d;
            },
            [n](const IntMatrix& m) {
                IntMatrix r = IntMatrix::identity(1);
                for (long i = 0; i < n; ++i) r = kronecker(r, m);
                return r;
            }};
}

inline MatrixFunctor identity_functor() { return tensor_power_functor(1); }

inline MatrixFunctor direct_sum_functor(const MatrixFunctor& f, const MatrixFunctor& g) {
    return {f.name + "+" + g.name, [f, g](std::size_t a) { return f.dim(a) + g.dim(a); },
            [f, g](const IntMatrix& m) { return direct_sum(f(m), g(m)); }};
}

namespace detail {
/// Subsets of {0..a-1} ordered by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t a) {
    std::vector<std::vector<std::size_t>> out;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> rec =
        [&](std::size_t start, std::size_t left, std::vector<std::size_t>& cur) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i + left <= a; ++i) {
                cur.push_back(i);
                rec(i + 1, left - 1, cur);
                cur.pop_back();
            }
        };
    for (std::size_t k = 0; k <= a; ++k) {
        std::vector<std::size_t> cur;
        rec(0, k, cur);
    }
    return out;
}
}  // namespace detail

/// Σ_I (-1)^{k-|I|} F(Σ_{i in I} x_i) for maps x_1..x_k : Z^cols -> Z^rows.
inline IntMatrix deviation_shaped(const MatrixFunctor& f, const std::vector<IntMatrix>& maps, std::size_t rows,
                                  std::size_t cols) {
    for (const auto& x : maps)
        if (x.rows() != rows || x.cols() != cols) throw DomainError("deviation: maps must share their shape");
    if (maps.size() > 20) throw EnumerationLimit("deviation: too many maps");
    std::size_t k = maps.size();
    IntMatrix out(f.dim(rows), f.dim(cols));
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        IntMatrix s(rows, cols);
        std::size_t bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                s += maps[i];
                ++bits;
            }
        out.add_block(0, 0, f(s), Integer((k - bits) % 2 ? -1 : 1));
    }
    return out;
}

inline IntMatrix deviation(const MatrixFunctor& f, const std::vector<IntMatrix>& maps) {
    if (maps.empty()) throw DomainError("deviation: needs at least one map");
    return deviation_shaped(f, maps, maps.front().rows(), maps.front().cols());
}

/// Σ (-1)^{|K|} over L ⊆ K ⊆ [m]x[n] with K projecting onto both factors.
/// Pairs are 1-based.
inline Integer signed_cover_sum(long m, long n, const std::vector<std::pair<long, long>>& l) {
    if (m < 0 || n < 0) throw DomainError("signed_cover_sum: negative size");
    if (m * n > 20) throw EnumerationLimit("signed_cover_sum: m*n above 20");
    using Mask = std::uint32_t;
    auto bit = [n](long i, long j) { return Mask{1} << ((i - 1) * n + (j - 1)); };
    Mask fixed = 0;
    for (const auto& [i, j] : l) {
        if (i < 1 || i > m || j < 1 || j > n) throw DomainError("signed_cover_sum: pair outside [m]x[n]");
        fixed |= bit(i, j);
    }
    std::vector<Mask> row(m, 0), col(n, 0);
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= n; ++j) {
            row[i - 1] |= bit(i, j);
            col[j - 1] |= bit(i, j);
        }
    Mask all = m * n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << (m * n)) - 1);
    Mask free = all & ~fixed;
    long total = 0;
    // walk the submasks of `free`, each giving K = fixed | sub
    for (Mask sub = free;; sub = (sub - 1) & free) {
        Mask k = fixed | sub;
        bool cover = true;
        for (Mask r : row) cover = cover && (k & r);
        for (Mask c : col) cover = cover && (k & c);
        if (cover) total += std::popcount(k) % 2 ? -1 : 1;
        if (sub == 0) break;
    }
    return total;
}

/// F(α_1|..|α_m) F(β_1|..|β_n) against Σ_{K ⊑ [m]x[n]} F(Δ_{(i,j) in K} α_i β_j).
inline bool check_deviation_formula(const MatrixFunctor& f, const std::vector<IntMatrix>& alphas,
                                    const std::vector<IntMatrix>& betas) {
    if (alphas.empty() || betas.empty()) throw DomainError("check_deviation_formula: empty argument list");
    std::size_t m = alphas.size(), n = betas.size();
    if (m * n > 16) throw EnumerationLimit("check_deviation_formula: m*n above 16");
    if (alphas.front().cols() != betas.front().rows()) throw DomainError("check_deviation_formula: shapes do not compose");
    IntMatrix lhs = deviation(f, alphas) * deviation(f, betas);
    std::size_t rows = alphas.front().rows(), cols = betas.front().cols();
    IntMatrix rhs(f.dim(rows), f.dim(cols));
    for (std::size_t k = 1; k < (std::size_t{1} << (m * n)); ++k) {
        std::vector<bool> row(m, false), col(n, false);
        std::vector<IntMatrix> prods;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (k >> (i * n + j) & 1) {
                    row[i] = col[j] = true;
                    prods.push_back(alphas[i] * betas[j]);
                }
        bool cover = true;
        for (bool b : row) cover = cover && b;
        for (bool b : col) cover = cover && b;
        if (cover) rhs += deviation_shaped(f, prods, rows, cols);
    }
    return lhs == rhs;
}

struct CrossEffect {
    std::vector<std::size_t> subset;  // 0-based coordinates of Z^a
    IntMatrix projector;
};

inline IntMatrix coordinate_projection(std::size_t a, std::size_t i) {
    IntMatrix p(a, a);
    p(i, i) = 1;
    return p;
}

/// e_X = F(π_x | x in X) on F(Z^a), with e_∅ = F(0). Checked to be a complete
/// family of orthogonal idempotents.
inline std::vector<CrossEffect> cross_effect_projectors(const MatrixFunctor& f, std::size_t a) {
    if (a > kMaxFunctorArgument) throw EnumerationLimit("cross_effect_projectors: a above guard");
    std::vector<CrossEffect> out;
    for (const auto& x : detail::subsets_by_size(a)) {
        std::vector<IntMatrix> maps;
        for (auto i : x) maps.push_back(coordinate_projection(a, i));
        out.push_back({x, deviation_shaped(f, maps, a, a)});
    }
    std::size_t d = f.dim(a);
    IntMatrix sum(d, d), zero(d, d);
    for (std::size_t i = 0; i < out.size(); ++i) {
        sum += out[i].projector;
        for (std::size_t j = 0; j < out.size(); ++j) {
            IntMatrix p = out[i].projector * out[j].projector;
            if (p != (i == j ? out[i].projector : zero))
                throw DomainError("cross_effect_projectors: projectors of " + f.name + " are not orthogonal idempotents");
        }
    }
    if (sum != IntMatrix::identity(d)) throw DomainError("cross_effect_projectors: projectors do not sum to the identity");
    return out;
}

/// Columns spanning ce_[a] F(Z^a), the image of the top projector.
inline IntMatrix top_cross_effect_basis(const MatrixFunctor& f, std::size_t a) {
    std::vector<IntMatrix> maps;
    for (std::size_t i = 0; i < a; ++i) maps.push_back(coordinate_projection(a, i));
    return image_basis(deviation_shaped(f, maps, a, a));
}

namespace detail {
inline std::size_t position_in(const std::vector<Elem>& sorted, const Elem& e) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    if (it == sorted.end() || *it != e) throw DomainError("element not in set: " + e);
    return static_cast<std::size_t>(it - sorted.begin());
}

inline Integer integral_label(const Scalar& s) {
    if (!s.is_integer()) throw DomainError("passage label is not an integer: " + s.str());
    return s.numerator();
}

/// The maps p̄ σ_yx : Z^dom -> Z^cod, one per passage instance.
inline std::vector<IntMatrix> passage_matrices(const Maze& p) {
    std::vector<IntMatrix> maps;
    for (const auto& q : p.instances()) {
        IntMatrix s(p.cod.size(), p.dom.size());
        s(position_in(p.cod, q.to), position_in(p.dom, q.from)) = integral_label(q.label);
        maps.push_back(std::move(s));
    }
    return maps;
}
}  // namespace detail

/// Φ(F)(P): the deviation F(p̄σ_yx | p in P) restricted to top cross-effects.
inline AbHom phi_forward(const MatrixFunctor& f, const Maze& p) {
    std::size_t j = p.dom.size(), k = p.cod.size();
    if (j > kMaxFunctorArgument || k > kMaxFunctorArgument) throw EnumerationLimit("phi_forward: set above guard");
    IntMatrix d = deviation_shaped(f, detail::passage_matrices(p), k, j);
    IntMatrix bj = top_cross_effect_basis(f, j), bk = top_cross_effect_basis(f, k);
    auto r = solve_in_basis(bk, d * bj);
    if (!r) throw DomainError("phi_forward: deviation does not map cross-effects to cross-effects");
    return AbHom(FgAbGroup::free(bj.cols()), FgAbGroup::free(bk.cols()), *r);
}

inline AbHom phi_forward(const MatrixFunctor& f, const MazeHom& h) {
    std::vector<Elem> dom = h.dom, cod = h.cod;
    std::size_t rj = top_cross_effect_basis(f, dom.size()).cols(), rk = top_cross_effect_basis(f, cod.size()).cols();
    AbHom out(FgAbGroup::free(rj), FgAbGroup::free(rk));
    for (const auto& [m, c] : h.terms) {
        if (!c.is_integer()) throw DomainError("phi_forward: non-integral coefficient");
        out += c.numerator() * phi_forward(f, m);
    }
    return out;
}

}  // namespace laby
