#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace laby {

/// Finitely generated abelian group given by the orders of its generators:
/// 0 for a free generator, d >= 2 for Z/d. Presentations keep their groups in
/// invariant-factor form (free part first, then d_1 | d_2 | ...); direct sums
/// of such groups are just concatenations.
class FgAbGroup {
public:
    FgAbGroup() = default;

    static FgAbGroup from_orders(std::vector<Integer> orders) {
        for (const auto& d : orders)
            if (d < 0 || d == 1) throw DomainError("generator order must be 0 or at least 2");
        FgAbGroup g;
        g.orders_ = std::move(orders);
        return g;
    }

    static FgAbGroup free(std::size_t rank) { return from_orders(std::vector<Integer>(rank, 0)); }

    static FgAbGroup invariant(std::size_t rank, const std::vector<Integer>& torsion) {
        std::vector<Integer> o(rank, 0);
        o.insert(o.end(), torsion.begin(), torsion.end());
        auto g = from_orders(std::move(o));
        if (!g.is_invariant_form()) throw DomainError("torsion orders must form a divisibility chain");
        return g;
    }

    std::size_t dim() const { return orders_.size(); }
    const std::vector<Integer>& orders() const { return orders_; }
    const Integer& order(std::size_t i) const { return orders_.at(i); }
    bool is_trivial() const { return orders_.empty(); }
    bool is_free() const {
        for (const auto& d : orders_)
            if (d != 0) return false;
        return true;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : orders_) r += d == 0;
        return r;
    }

    std::vector<Integer> torsion() const {
        std::vector<Integer> t;
        for (const auto& d : orders_)
            if (d != 0) t.push_back(d);
        return t;
    }

    bool is_invariant_form() const {
        bool seen_torsion = false;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (orders_[i] == 0) {
                if (seen_torsion) return false;
                continue;
            }
            if (orders_[i] < 2) return false;
            if (seen_torsion && orders_[i] % orders_[i - 1] != 0) return false;
            seen_torsion = true;
        }
        return true;
    }

    /// Canonical representative of an integer in generator slot i.
    Integer reduce(std::size_t i, const Integer& x) const {
        const Integer& d = orders_.at(i);
        if (d == 0) return x;
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        return r;
    }

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

    friend FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b) {
        FgAbGroup g = a;
        g.orders_.insert(g.orders_.end(), b.orders_.begin(), b.orders_.end());
        return g;
    }

    std::string to_string() const {
        if (orders_.empty()) return "0";
        std::string s;
        for (const auto& d : orders_) s += (s.empty() ? "" : "+") + (d == 0 ? std::string("Z") : "Z/" + d.get_str());
        return s;
    }

private:
    std::vector<Integer> orders_;
};

/// Homomorphism between f.g. abelian groups as an integer matrix acting on
/// generator coordinates. Entries in torsion rows are kept reduced.
struct AbHom {
    FgAbGroup dom;
    FgAbGroup cod;
    IntMatrix m;

    AbHom() = default;
    AbHom(FgAbGroup d, FgAbGroup c) : dom(std::move(d)), cod(std::move(c)), m(cod.dim(), dom.dim()) {}
    AbHom(FgAbGroup d, FgAbGroup c, IntMatrix mat) : dom(std::move(d)), cod(std::move(c)), m(std::move(mat)) {
        if (m.rows() != cod.dim() || m.cols() != dom.dim()) throw DomainError("AbHom matrix shape does not match groups");
        normalize();
    }

    static AbHom identity(const FgAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.dim())); }
    static AbHom zero(const FgAbGroup& d, const FgAbGroup& c) { return AbHom(d, c); }

    void normalize() {
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (cod.order(i) != 0)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = cod.reduce(i, m(i, j));
    }

    /// d * (image of a generator of order d) vanishes in cod.
    bool well_defined() const {
        for (std::size_t j = 0; j < dom.dim(); ++j) {
            const Integer& d = dom.order(j);
            if (d == 0) continue;
            for (std::size_t i = 0; i < cod.dim(); ++i)
                if (cod.reduce(i, d * m(i, j)) != 0) return false;
        }
        return true;
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (cod.reduce(i, m(i, j)) != 0) return false;
        return true;
    }

    AbHom& operator+=(const AbHom& o) {
        same_groups(o);
        m += o.m;
        normalize();
        return *this;
    }
    AbHom& operator-=(const AbHom& o) {
        same_groups(o);
        m -= o.m;
        normalize();
        return *this;
    }
    AbHom& operator*=(const Integer& s) {
        m *= s;
        normalize();
        return *this;
    }

    friend AbHom operator+(AbHom a, const AbHom& b) { return a += b; }
    friend AbHom operator-(AbHom a, const AbHom& b) { return a -= b; }
    friend AbHom operator*(const Integer& s, AbHom a) { return a *= s; }

    friend bool operator==(const AbHom& a, const AbHom& b) {
        if (a.dom != b.dom || a.cod != b.cod) return false;
        for (std::size_t i = 0; i < a.m.rows(); ++i)
            for (std::size_t j = 0; j < a.m.cols(); ++j)
                if (a.cod.reduce(i, a.m(i, j) - b.m(i, j)) != 0) return false;
        return true;
    }

private:
    void same_groups(const AbHom& o) const {
        if (o.dom != dom || o.cod != cod) throw DomainError("AbHom groups do not match");
    }
};

/// f o g.
inline AbHom ab_compose(const AbHom& f, const AbHom& g) {
    if (f.dom != g.cod) throw DomainError("ab_compose: groups do not match");
    return AbHom(g.dom, f.cod, f.m * g.m);
}

inline AbHom ab_direct_sum(const AbHom& f, const AbHom& g) {
    return AbHom(f.dom + g.dom, f.cod + g.cod, direct_sum(f.m, g.m));
}

}  // namespace laby
