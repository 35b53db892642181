#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "maze.hpp"
#include "quotient.hpp"

namespace laby {

/// A span of surjections cod <- middle -> dom.
struct Correspondence {
    std::vector<Elem> cod;
    std::vector<Elem> middle;
    std::vector<Elem> dom;
    std::map<Elem, Elem> left;   // middle -> cod
    std::map<Elem, Elem> right;  // middle -> dom

    friend bool operator==(const Correspondence&, const Correspondence&) = default;
    friend auto operator<=>(const Correspondence&, const Correspondence&) = default;
};

inline bool validate_correspondence(const Correspondence& c) {
    auto is_set = [](const std::vector<Elem>& v) { return detail::sorted_set(v) == v; };
    if (!is_set(c.cod) || !is_set(c.middle) || !is_set(c.dom)) return false;
    if (c.left.size() != c.middle.size() || c.right.size() != c.middle.size()) return false;
    std::vector<Elem> hit_l, hit_r;
    for (const auto& u : c.middle) {
        auto l = c.left.find(u), r = c.right.find(u);
        if (l == c.left.end() || r == c.right.end()) return false;
        hit_l.push_back(l->second);
        hit_r.push_back(r->second);
    }
    return detail::sorted_set(hit_l) == c.cod && detail::sorted_set(hit_r) == c.dom;
}

/// Pure maze dom -> cod with |{u : right(u) = x, left(u) = y}| passages x -> y.
inline Maze xi_correspondence(const Correspondence& c) {
    if (!validate_correspondence(c)) throw DomainError("invalid correspondence");
    std::vector<Passage> ps;
    for (const auto& u : c.middle) ps.push_back({c.right.at(u), c.left.at(u), Scalar(1)});
    return make_maze(c.dom, c.cod, ps);
}

namespace detail {
inline Elem middle_name(std::size_t i) { return "u" + std::to_string(i + 1); }
}  // namespace detail

/// Relabels the middle set as u1, u2, ... in order of (left, right) images.
inline Correspondence canonical_correspondence(const Correspondence& c) {
    if (!validate_correspondence(c)) throw DomainError("invalid correspondence");
    std::vector<std::pair<Elem, Elem>> legs;
    for (const auto& u : c.middle) legs.emplace_back(c.left.at(u), c.right.at(u));
    std::sort(legs.begin(), legs.end());
    Correspondence out{c.cod, {}, c.dom, {}, {}};
    for (std::size_t i = 0; i < legs.size(); ++i) {
        auto u = detail::middle_name(i);
        out.middle.push_back(u);
        out.left[u] = legs[i].first;
        out.right[u] = legs[i].second;
    }
    out.middle = detail::sorted_set(out.middle);
    return out;
}

/// Inverse of Xi on pure mazes: the middle set is the set of passage instances.
inline Correspondence xi_inverse(const Maze& m) {
    if (!validate_maze(m) || !m.is_pure()) throw DomainError("xi_inverse: expected a valid pure maze");
    Correspondence c{m.cod, {}, m.dom, {}, {}};
    auto inst = m.instances();
    for (std::size_t i = 0; i < inst.size(); ++i) {
        auto u = detail::middle_name(i);
        c.middle.push_back(u);
        c.left[u] = inst[i].to;
        c.right[u] = inst[i].from;
    }
    c.middle = detail::sorted_set(c.middle);
    return canonical_correspondence(c);
}

/// Composition of correspondences, defined by transport through Xi into Laby_n.
inline std::vector<std::pair<Scalar, Correspondence>> correspondence_compose(const Correspondence& f,
                                                                             const Correspondence& g, long n) {
    auto h = compose_in_laby_n(MazeHom(xi_correspondence(f)), MazeHom(xi_correspondence(g)), n);
    std::vector<std::pair<Scalar, Correspondence>> out;
    for (const auto& [m, c] : h.terms) out.emplace_back(c, xi_inverse(m));
    return out;
}

}  // namespace laby
