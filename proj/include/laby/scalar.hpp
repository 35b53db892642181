#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace laby {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every scalar in the library (passage labels, coefficients of formal
/// combinations, binomial values) is a Scalar; there is no floating point.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}  // NOLINT: implicit from integers is intended
    Scalar(int v) : q_(v) {}   // NOLINT
    Scalar(const Integer& v) : q_(v) {}  // NOLINT
    Scalar(const Integer& num, const Integer& den) {
        if (den == 0) throw DomainError("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-').
    static Scalar parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty scalar");
        std::string s(text);
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw ParseError("bad scalar '" + s + "'");
            return Scalar(Integer(s[0] == '+' ? s.substr(1) : s, 10));
        }
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("bad scalar '" + s + "'");
        Integer d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Scalar(Integer(num[0] == '+' ? num.substr(1) : num, 10), d);
    }

    const mpq_class& value() const { return q_; }
    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    /// Throws IntegralityViolation unless the value is an integer.
    Integer to_integer() const {
        if (!is_integer()) throw IntegralityViolation("non-integral scalar " + str());
        return q_.get_num();
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.q_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class q_{0};
};

inline Scalar pow(const Scalar& base, unsigned exponent) {
    Scalar r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Generalised binomial coefficient r(r-1)...(r-k+1)/k!.
inline Scalar binomial(const Scalar& r, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    mpq_class num(1);
    for (long i = 0; i < k; ++i) num *= r.value() - i;
    return Scalar(mpq_class(num / mpq_class(factorial(static_cast<unsigned>(k)))));
}

/// Product of binomial(label, degree) over (label, degree) pairs.
inline Scalar binomial_product(std::span<const std::pair<Scalar, int>> factors) {
    Scalar r(1);
    for (const auto& [label, degree] : factors) {
        r *= binomial(label, degree);
        if (r.is_zero()) break;
    }
    return r;
}

}  // namespace laby
