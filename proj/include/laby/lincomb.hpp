#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace laby {

/// Finite formal linear combination of basis elements with rational
/// coefficients. Terms are kept sorted by the basis order and zero
/// coefficients are never stored.
template <class B>
class LinComb {
public:
    using map_type = std::map<B, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(B basis, Scalar coeff = Scalar(1)) { add(std::move(basis), coeff); }

    void add(const B& basis, const Scalar& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(basis, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Scalar& scale = Scalar(1)) {
        if (scale.is_zero()) return;
        for (const auto& [b, c] : other.terms_) add(b, c * scale);
    }

    Scalar coeff(const B& basis) const {
        auto it = terms_.find(basis);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Scalar(-1)); return *this; }
    LinComb& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& kv : terms_) kv.second *= s;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    template <class F>
    auto map_basis(F&& f) const {
        using R = std::decay_t<decltype(f(std::declval<const B&>()))>;
        LinComb<R> out;
        for (const auto& [b, c] : terms_) out.add(f(b), c);
        return out;
    }

private:
    map_type terms_;
};

/// Scaled sum of combinations: Σ scales[i] · xs[i].
template <class B>
LinComb<B> lincomb_combine(const std::vector<LinComb<B>>& xs, const std::vector<Scalar>& scales) {
    if (xs.size() != scales.size())
        throw std::invalid_argument("lincomb_combine: length mismatch");
    LinComb<B> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.add(xs[i], scales[i]);
    return out;
}

}  // namespace laby
