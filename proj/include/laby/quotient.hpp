#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "maze.hpp"
#include "multation.hpp"
#include "scalar.hpp"

namespace laby {

namespace detail {
// Calls f(d) for each vector d with d_i >= 1 and lo <= sum d <= hi.
inline void for_each_degree_vector(std::size_t k, long lo, long hi,
                                   const std::function<void(const std::vector<long>&)>& f) {
    if (static_cast<long>(k) > hi) return;
    std::vector<long> d(k, 1);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long sum) {
        if (i == k) {
            if (sum >= lo) f(d);
            return;
        }
        long rest = static_cast<long>(k - i - 1);
        for (long v = 1; sum + v + rest <= hi; ++v) {
            d[i] = v;
            rec(i + 1, sum + v);
        }
        d[i] = 1;
    };
    rec(0, 0);
}

inline Maze pure_repeat(const Maze& m, const std::vector<Passage>& inst, const std::vector<long>& d) {
    Maze out{m.dom, m.cod, {}};
    for (std::size_t i = 0; i < inst.size(); ++i) out.passages.insert({inst[i].from, inst[i].to, Scalar(1)}, d[i]);
    return out;
}
}  // namespace detail

/// Π binomial(label_i, d_i) over passage instances.
inline Scalar maze_binomial(const std::vector<Passage>& inst, const std::vector<long>& degrees) {
    if (inst.size() != degrees.size()) throw DomainError("maze_binomial: length mismatch");
    Scalar r(1);
    for (std::size_t i = 0; i < inst.size() && !r.is_zero(); ++i) r *= binomial(inst[i].label, degrees[i]);
    return r;
}

/// Normal form in Laby_n: pure mazes with at most n passages.
inline MazeHom normalize_numerical(const Maze& m, long n) {
    MazeHom out(m.dom, m.cod);
    auto inst = m.instances();
    detail::for_each_degree_vector(inst.size(), 0, n, [&](const std::vector<long>& d) {
        Scalar c = maze_binomial(inst, d);
        if (!c.is_zero()) out.terms.add(detail::pure_repeat(m, inst, d), c);
    });
    return out;
}

inline MazeHom normalize_numerical(const MazeHom& h, long n) {
    MazeHom out(h.dom, h.cod);
    for (const auto& [m, c] : h.terms) out.terms.add(normalize_numerical(m, n).terms, c);
    return out;
}

inline MazeHom compose_in_laby_n(const MazeHom& f, const MazeHom& g, long n) {
    return normalize_numerical(mazehom_compose(f, g, n), n);
}

/// Normal form in Laby^n: pure mazes with exactly n passages. A pure maze
/// with m < n passages is traded, via a^n P = a ⊡ P at a = 2, for mazes
/// with more passages until every term has n.
inline MazeHom normalize_homogeneous(const MazeHom& h, long n) {
    MazeHom cur = normalize_numerical(h, n);
    for (long m = 0; m < n; ++m) {
        std::vector<std::pair<Maze, Scalar>> low;
        for (const auto& [p, c] : cur.terms)
            if (p.size() == m) low.emplace_back(p, c);
        if (low.empty()) continue;
        Scalar denom = pow(Scalar(2), static_cast<unsigned>(n)) - pow(Scalar(2), static_cast<unsigned>(m));
        for (const auto& [p, c] : low) {
            cur.terms.add(p, -c);
            auto inst = p.instances();
            detail::for_each_degree_vector(inst.size(), m + 1, n, [&](const std::vector<long>& d) {
                Scalar w(1);
                for (long di : d) w *= binomial(Scalar(2), di);
                if (!w.is_zero()) cur.terms.add(detail::pure_repeat(p, inst, d), c * w / denom);
            });
        }
    }
    return cur;
}

inline MazeHom normalize_homogeneous(const Maze& m, long n) { return normalize_homogeneous(MazeHom(m), n); }

inline MazeHom compose_in_laby_hom(const MazeHom& f, const MazeHom& g, long n) {
    return normalize_homogeneous(mazehom_compose(f, g, n), n);
}

struct SplitIdempotent {
    MSet shape;     // multiplicity of each identity passage x -> x
    MazeHom value;  // (1/deg S) times the pure maze
};

/// The idempotents e_S, #S = X, |S| = n, splitting I_X in Laby^n.
inline std::vector<SplitIdempotent> splitting_idempotents(const std::vector<Elem>& x, long n) {
    std::vector<SplitIdempotent> out;
    for (const auto& s : enumerate_supported(x, n)) {
        Maze m{detail::sorted_set(x), detail::sorted_set(x), {}};
        for (const auto& [e, k] : s) m.passages.insert({e, e, Scalar(1)}, k);
        out.push_back({s, MazeHom(m, Scalar(Integer(1), s.degree()))});
    }
    return out;
}

inline Maze idempotent_maze(const MSet& s) {
    Maze m{s.support(), s.support(), {}};
    for (const auto& [e, k] : s) m.passages.insert({e, e, Scalar(1)}, k);
    return m;
}

inline MazeHom idempotent_of(const MSet& s) { return MazeHom(idempotent_maze(s), Scalar(Integer(1), s.degree())); }

// Generators of Laby_2 on the skeleton [0], [1], [2].
inline Maze laby2_A() { return make_maze({"1"}, {"1", "2"}, {{"1", "1", 1}, {"1", "2", 1}}); }
inline Maze laby2_B() { return make_maze({"1", "2"}, {"1"}, {{"1", "1", 1}, {"2", "1", 1}}); }
inline Maze laby2_C() { return make_maze({"1"}, {"1"}, {{"1", "1", 1}, {"1", "1", 1}}); }
inline Maze laby2_S() { return make_maze({"1", "2"}, {"1", "2"}, {{"1", "2", 1}, {"2", "1", 1}}); }

struct LabyTableCell {
    std::string row;
    std::string col;
    bool defined = false;
    MazeHom value;
};

/// row o col in Laby_2 for row, col in {A, B, C, S}.
inline std::vector<LabyTableCell> laby2_table() {
    const std::vector<std::pair<std::string, Maze>> gens = {
        {"A", laby2_A()}, {"B", laby2_B()}, {"C", laby2_C()}, {"S", laby2_S()}};
    std::vector<LabyTableCell> out;
    for (const auto& [rn, r] : gens)
        for (const auto& [cn, c] : gens) {
            LabyTableCell cell{rn, cn, false, {}};
            if (c.cod == r.dom) {
                cell.defined = true;
                cell.value = compose_in_laby_n(MazeHom(r), MazeHom(c), 2);
            }
            out.push_back(std::move(cell));
        }
    return out;
}

}  // namespace laby
