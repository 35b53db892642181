#pragma once

#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "ariadne.hpp"
#include "correspondence.hpp"
#include "maze.hpp"
#include "multation.hpp"
#include "quotient.hpp"

namespace laby {

namespace detail {
inline std::string set_text(const std::vector<Elem>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    return out + "}";
}

// "2A", "-B", "1/2C"; empty coefficient 1.
inline std::string coeff_prefix(const Scalar& c) {
    if (c == Scalar(1)) return "";
    if (c == Scalar(-1)) return "-";
    return c.is_integer() ? c.str() : "(" + c.str() + ")";
}

template <class Terms, class Name>
std::string combination_text(const Terms& terms, Name name) {
    std::string out;
    for (const auto& [b, c] : terms) {
        std::string t = coeff_prefix(c) + name(b);
        if (out.empty()) out = t;
        else if (t[0] == '-') out += t;
        else out += "+" + t;
    }
    return out.empty() ? "0" : out;
}
}  // namespace detail

inline std::string pretty(const Maze& m) {
    std::ostringstream os;
    os << detail::set_text(m.dom) << " -> " << detail::set_text(m.cod) << "\n";
    for (const auto& p : m.instances()) os << "  " << p.from << " -(" << p.label.str() << ")-> " << p.to << "\n";
    return os.str();
}

inline std::string pretty(const MazeHom& h) {
    if (h.is_zero()) return "0 : " + detail::set_text(h.dom) + " -> " + detail::set_text(h.cod) + "\n";
    std::ostringstream os;
    for (const auto& [m, c] : h.terms) os << c.str() << " * " << pretty(m);
    return os.str();
}

/// Two-row notation, domain on top.
inline std::string pretty(const Multation& mu) {
    std::string top, bottom;
    for (const auto& [col, k] : mu.pairs())
        for (long i = 0; i < k; ++i) {
            std::size_t w = std::max(col.first.size(), col.second.size());
            top += (top.empty() ? "" : " ") + col.first + std::string(w - col.first.size(), ' ');
            bottom += (bottom.empty() ? "" : " ") + col.second + std::string(w - col.second.size(), ' ');
        }
    return "[" + top + "]\n[" + bottom + "]\n";
}

inline std::string pretty(const MultHom& f) {
    if (f.is_zero()) return "0 : " + detail::ms_text(f.dom) + " -> " + detail::ms_text(f.cod) + "\n";
    std::ostringstream os;
    for (const auto& [mu, c] : f.terms) os << c.str() << " *\n" << pretty(mu);
    return os.str();
}

inline std::string pretty(const AriadneMatrix& a) {
    std::ostringstream os;
    os << "rows:";
    for (const auto& r : a.rows) os << " " << detail::ms_text(r);
    os << "\ncols:";
    for (const auto& c : a.cols) os << " " << detail::ms_text(c);
    os << "\n";
    for (const auto& [ij, h] : a.entries)
        os << "(" << detail::ms_text(a.rows[ij.first]) << ", " << detail::ms_text(a.cols[ij.second]) << "):\n" << pretty(h);
    return os.str();
}

inline std::string pretty(const Correspondence& c) {
    std::ostringstream os;
    os << detail::set_text(c.cod) << " <- " << detail::set_text(c.middle) << " -> " << detail::set_text(c.dom) << "\n";
    for (const auto& u : c.middle) os << "  " << c.left.at(u) << " <- " << u << " -> " << c.right.at(u) << "\n";
    return os.str();
}

inline std::string pretty(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

inline std::string pretty(const AbHom& f) {
    return f.dom.to_string() + " -> " + f.cod.to_string() + "\n" + pretty(f.m);
}

namespace detail {
inline std::string render_table(const std::vector<std::string>& names,
                                const std::function<std::string(const std::string&, const std::string&)>& cell) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"o"});
    for (const auto& c : names) rows[0].push_back(c);
    for (const auto& r : names) {
        std::vector<std::string> row{r};
        for (const auto& c : names) row.push_back(cell(r, c));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(names.size() + 1, 0);
    // widths count code points so the Greek names line up
    auto cps = [](const std::string& s) {
        std::size_t n = 0;
        for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
        return n;
    };
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], cps(row[j]));
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out += row[j] + std::string(width[j] - cps(row[j]) + (j + 1 < row.size() ? 2 : 0), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}
}  // namespace detail

/// Name of a generator or identity in the degree-2 skeleton tables.
inline std::string laby2_name(const Maze& m) {
    if (m == laby2_A()) return "A";
    if (m == laby2_B()) return "B";
    if (m == laby2_C()) return "C";
    if (m == laby2_S()) return "S";
    if (m == identity_maze(m.dom) && m.dom == m.cod) return "I";
    return "<" + std::to_string(m.size()) + " passages>";
}

inline std::string mset2_name(const Multation& mu) {
    if (mu == mset2_alpha()) return "α";
    if (mu == mset2_beta()) return "β";
    if (mu == mset2_sigma()) return "σ";
    if (mu == identity_multation(mu.dom())) return "ι";
    return "<multation>";
}

inline std::string laby2_cell_text(const LabyTableCell& c) {
    return c.defined ? detail::combination_text(c.value.terms, laby2_name) : "--";
}

inline std::string mset2_cell_text(const TableCell& c) {
    return c.defined ? detail::combination_text(c.value.terms, mset2_name) : "--";
}

/// row o col, rows and columns A, B, C, S.
inline std::string render_laby2_table() {
    std::map<std::pair<std::string, std::string>, std::string> cells;
    for (const auto& c : laby2_table()) cells[{c.row, c.col}] = laby2_cell_text(c);
    return detail::render_table({"A", "B", "C", "S"},
                                [&](const std::string& r, const std::string& c) { return cells.at({r, c}); });
}

/// row o col, rows and columns α, β, σ.
inline std::string render_mset2_table() {
    const std::map<std::string, std::string> greek = {{"alpha", "α"}, {"beta", "β"}, {"sigma", "σ"}};
    std::map<std::pair<std::string, std::string>, std::string> cells;
    for (const auto& c : mset2_table()) cells[{greek.at(c.row), greek.at(c.col)}] = mset2_cell_text(c);
    return detail::render_table({"α", "β", "σ"},
                                [&](const std::string& r, const std::string& c) { return cells.at({r, c}); });
}

}  // namespace laby
