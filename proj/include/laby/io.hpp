#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "abgroup.hpp"
#include "ariadne.hpp"
#include "correspondence.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "maze.hpp"
#include "multation.hpp"
#include "multiset.hpp"
#include "presentation.hpp"
#include "scalar.hpp"

namespace laby {

using json = nlohmann::json;

// ---- writing ----

inline json to_json(const Scalar& s) { return s.str(); }

inline json to_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline json to_json(const MSet& m) {
    json out = json::array();
    for (const auto& [e, k] : m) out.push_back({e, k});
    return out;
}

inline json to_json(const Multation& mu) {
    json pairs = json::array();
    for (const auto& [c, k] : mu.pairs()) pairs.push_back({{c.first, c.second}, k});
    return {{"dom", to_json(mu.dom())}, {"cod", to_json(mu.cod())}, {"pairs", pairs}};
}

inline json to_json(const MultHom& f) {
    json terms = json::array();
    for (const auto& [mu, c] : f.terms) terms.push_back({to_json(c), to_json(mu)});
    return {{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"terms", terms}};
}

inline json to_json(const Maze& m) {
    json ps = json::array();
    for (const auto& [p, k] : m.passages) ps.push_back({{p.from, p.to, to_json(p.label)}, k});
    return {{"dom", m.dom}, {"cod", m.cod}, {"passages", ps}};
}

inline json to_json(const MazeHom& h) {
    json terms = json::array();
    for (const auto& [m, c] : h.terms) terms.push_back({to_json(c), to_json(m)});
    return {{"dom", h.dom}, {"cod", h.cod}, {"terms", terms}};
}

inline json to_json(const AriadneMatrix& a) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& r : a.rows) rows.push_back(to_json(r));
    for (const auto& c : a.cols) cols.push_back(to_json(c));
    for (const auto& [ij, h] : a.entries) entries.push_back({ij.first, ij.second, to_json(h)});
    return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

inline json to_json(const Correspondence& c) {
    json l = json::array(), r = json::array();
    for (const auto& [u, y] : c.left) l.push_back({u, y});
    for (const auto& [u, x] : c.right) r.push_back({u, x});
    return {{"cod", c.cod}, {"middle", c.middle}, {"dom", c.dom}, {"left", l}, {"right", r}};
}

inline json to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

inline json to_json(const FgAbGroup& g) {
    if (g.is_invariant_form()) {
        json t = json::array();
        for (const auto& d : g.torsion()) t.push_back(to_json(d));
        return {{"rank", g.rank()}, {"torsion", t}};
    }
    json o = json::array();
    for (const auto& d : g.orders()) o.push_back(to_json(d));
    return {{"orders", o}};
}

inline json to_json(const AbHom& f) {
    return {{"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"matrix", to_json(f.m)}};
}

inline json to_json(const LabyModulePresentation& h) {
    json groups = json::array(), homs = json::array();
    for (const auto& g : h.groups) groups.push_back(to_json(g));
    for (const auto& [m, x] : h.table) homs.push_back({{"maze", to_json(m)}, {"matrix", to_json(x)}});
    return {{"kind", "laby"}, {"degree", h.degree}, {"groups", groups}, {"homs", homs}};
}

inline json to_json(const MSetModulePresentation& j) {
    json groups = json::array(), homs = json::array();
    for (const auto& [a, g] : j.groups) {
        json e = to_json(g);
        e["object"] = to_json(a);
        groups.push_back(e);
    }
    for (const auto& [mu, x] : j.table) homs.push_back({{"multation", to_json(mu)}, {"matrix", to_json(x)}});
    return {{"kind", "mset"}, {"degree", j.degree}, {"groups", groups}, {"homs", homs}};
}

// ---- reading ----

namespace detail {
inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline const json& array_of(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

inline std::string string_of(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline long long_of(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

inline std::vector<Elem> names_of(const json& j, const char* what) {
    std::vector<Elem> out;
    for (const auto& e : array_of(j, what)) out.push_back(string_of(e, what));
    return out;
}
}  // namespace detail

inline Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(Integer(j.get<long>()));
    if (!j.is_string()) throw ParseError("scalar must be a string \"p\" or \"p/q\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("bad scalar \"" + j.get<std::string>() + "\"");
    }
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer \"" + j.get<std::string>() + "\"");
        return x;
    }
    throw ParseError("matrix entries must be integers");
}

inline MSet mset_from_json(const json& j) {
    MSet m;
    for (const auto& e : detail::array_of(j, "multiset")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("multiset entries are [name, multiplicity]");
        long k = detail::long_of(e[1], "multiplicity");
        if (k <= 0) throw ParseError("multiplicities must be positive");
        m.insert(detail::string_of(e[0], "element name"), k);
    }
    return m;
}

inline Multation multation_from_json(const json& j) {
    MultiSet<Column> pairs;
    for (const auto& e : detail::array_of(detail::field(j, "pairs"), "pairs")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2)
            throw ParseError("multation pairs are [[a, b], multiplicity]");
        long k = detail::long_of(e[1], "multiplicity");
        if (k <= 0) throw ParseError("multiplicities must be positive");
        pairs.insert({detail::string_of(e[0][0], "name"), detail::string_of(e[0][1], "name")}, k);
    }
    if (j.contains("dom") || j.contains("cod"))
        return Multation::with_marginals(mset_from_json(detail::field(j, "dom")), mset_from_json(detail::field(j, "cod")),
                                         std::move(pairs));
    return Multation(std::move(pairs));
}

inline MultHom multhom_from_json(const json& j) {
    if (j.contains("pairs")) return MultHom(multation_from_json(j));
    MultHom f(mset_from_json(detail::field(j, "dom")), mset_from_json(detail::field(j, "cod")));
    for (const auto& t : detail::array_of(detail::field(j, "terms"), "terms")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("terms are [coefficient, multation]");
        f.add(multation_from_json(t[1]), scalar_from_json(t[0]));
    }
    return f;
}

inline Maze maze_from_json(const json& j) {
    std::vector<Passage> ps;
    for (const auto& e : detail::array_of(detail::field(j, "passages"), "passages")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 3)
            throw ParseError("passages are [[from, to, label], multiplicity]");
        long k = detail::long_of(e[1], "multiplicity");
        if (k <= 0) throw ParseError("multiplicities must be positive");
        Passage p{detail::string_of(e[0][0], "name"), detail::string_of(e[0][1], "name"), scalar_from_json(e[0][2])};
        for (long i = 0; i < k; ++i) ps.push_back(p);
    }
    return make_maze(detail::names_of(detail::field(j, "dom"), "dom"), detail::names_of(detail::field(j, "cod"), "cod"), ps);
}

inline MazeHom mazehom_from_json(const json& j) {
    if (j.contains("passages")) return MazeHom(maze_from_json(j));
    MazeHom h(detail::names_of(detail::field(j, "dom"), "dom"), detail::names_of(detail::field(j, "cod"), "cod"));
    for (const auto& t : detail::array_of(detail::field(j, "terms"), "terms")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("terms are [coefficient, maze]");
        h.add(maze_from_json(t[1]), scalar_from_json(t[0]));
    }
    return h;
}

inline Correspondence correspondence_from_json(const json& j) {
    Correspondence c;
    c.cod = detail::sorted_set(detail::names_of(detail::field(j, "cod"), "cod"));
    c.middle = detail::sorted_set(detail::names_of(detail::field(j, "middle"), "middle"));
    c.dom = detail::sorted_set(detail::names_of(detail::field(j, "dom"), "dom"));
    auto read_map = [](const json& a, std::map<Elem, Elem>& out) {
        for (const auto& e : detail::array_of(a, "map")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("maps are lists of [from, to]");
            out[detail::string_of(e[0], "name")] = detail::string_of(e[1], "name");
        }
    };
    read_map(detail::field(j, "left"), c.left);
    read_map(detail::field(j, "right"), c.right);
    if (!validate_correspondence(c)) throw DomainError("correspondence maps are not surjections onto cod/dom");
    return c;
}

/// Row-major integer list; `cols_if_empty` fixes the width of a matrix with no rows.
inline IntMatrix matrix_from_json(const json& j, std::size_t cols_if_empty = 0) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : detail::array_of(j, "matrix")) {
        std::vector<Integer> row;
        for (const auto& x : detail::array_of(r, "matrix row")) row.push_back(integer_from_json(x));
        rows.push_back(std::move(row));
    }
    try {
        return IntMatrix::from_rows(rows, cols_if_empty);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    IntMatrix m = matrix_from_json(j, cols);
    if (m.rows() != rows || m.cols() != cols)
        throw DomainError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    return m;
}

inline FgAbGroup group_from_json(const json& j) {
    if (j.contains("orders")) {
        std::vector<Integer> o;
        for (const auto& d : detail::array_of(j.at("orders"), "orders")) o.push_back(integer_from_json(d));
        return FgAbGroup::from_orders(std::move(o));
    }
    long rank = detail::long_of(detail::field(j, "rank"), "rank");
    if (rank < 0) throw ParseError("rank must be non-negative");
    std::vector<Integer> t;
    if (j.contains("torsion"))
        for (const auto& d : detail::array_of(j.at("torsion"), "torsion")) t.push_back(integer_from_json(d));
    return FgAbGroup::invariant(static_cast<std::size_t>(rank), t);
}

inline AbHom abhom_from_json(const json& j) {
    auto d = group_from_json(detail::field(j, "dom")), c = group_from_json(detail::field(j, "cod"));
    return AbHom(d, c, matrix_from_json(detail::field(j, "matrix"), c.dim(), d.dim()));
}

/// Reads without validating; see checked().
inline LabyModulePresentation laby_presentation_from_json(const json& j) {
    LabyModulePresentation h;
    h.degree = detail::long_of(detail::field(j, "degree"), "degree");
    if (h.degree < 0) throw ParseError("degree must be non-negative");
    for (const auto& g : detail::array_of(detail::field(j, "groups"), "groups")) h.groups.push_back(group_from_json(g));
    if (h.groups.size() != static_cast<std::size_t>(h.degree + 1))
        throw DomainError("a degree-n presentation lists the groups of [0], ..., [n]");
    for (const auto& e : detail::array_of(detail::field(j, "homs"), "homs")) {
        Maze m = maze_from_json(detail::field(e, "maze"));
        auto d = h.group(m.dom.size()), c = h.group(m.cod.size());
        if (!h.table.emplace(m, matrix_from_json(detail::field(e, "matrix"), c.dim(), d.dim())).second)
            throw DomainError("maze listed twice");
    }
    return h;
}

inline MSetModulePresentation mset_presentation_from_json(const json& j) {
    MSetModulePresentation p;
    p.degree = detail::long_of(detail::field(j, "degree"), "degree");
    for (const auto& g : detail::array_of(detail::field(j, "groups"), "groups"))
        if (!p.groups.emplace(mset_from_json(detail::field(g, "object")), group_from_json(g)).second)
            throw DomainError("object listed twice");
    for (const auto& e : detail::array_of(detail::field(j, "homs"), "homs")) {
        Multation mu = multation_from_json(detail::field(e, "multation"));
        auto d = p.groups.find(mu.dom()), c = p.groups.find(mu.cod());
        if (d == p.groups.end() || c == p.groups.end()) throw DomainError("multation between unlisted objects");
        if (!p.table.emplace(mu, matrix_from_json(detail::field(e, "matrix"), c->second.dim(), d->second.dim())).second)
            throw DomainError("multation listed twice");
    }
    return p;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline std::string dump(const json& j) { return j.dump(2); }

}  // namespace laby
