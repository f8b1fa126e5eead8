#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ggh/rational.hpp"

namespace ggh {

template <typename S> inline S scalar_from_long(long n);
template <> inline Rational scalar_from_long<Rational>(long n) { return Rational(n); }
template <> inline ComplexF scalar_from_long<ComplexF>(long n) {
    return ComplexF(static_cast<double>(n));
}

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const ComplexF& v) { return v.re == 0.0 && v.im == 0.0; }

/// Formal power series in t truncated at a fixed order N: coefficient of t^k
/// at index k, k = 0..N. Arithmetic is exact through order N for the rational
/// scalar kind; all operations silently drop terms beyond N.
template <typename S>
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order)
        : order_(order), c_(static_cast<size_t>(order) + 1, scalar_from_long<S>(0)) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    static TruncatedSeries one(long order) {
        TruncatedSeries s(order);
        s.c_[0] = scalar_from_long<S>(1);
        return s;
    }

    /// v * t^k.
    static TruncatedSeries monomial(long order, long k, const S& v) {
        TruncatedSeries s(order);
        if (k <= order) s.c_[static_cast<size_t>(k)] = v;
        return s;
    }

    long order() const { return order_; }
    const S& coeff(long k) const { return c_.at(static_cast<size_t>(k)); }
    void set_coeff(long k, const S& v) {
        if (k >= 0 && k <= order_) c_[static_cast<size_t>(k)] = v;
    }

    bool has_zero_constant() const { return scalar_is_zero(c_[0]); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        check(o);
        TruncatedSeries r(order_);
        for (long a = 0; a <= order_; ++a) {
            if (scalar_is_zero(c_[static_cast<size_t>(a)])) continue;
            for (long b = 0; a + b <= order_; ++b)
                r.c_[static_cast<size_t>(a + b)] =
                    r.c_[static_cast<size_t>(a + b)] +
                    c_[static_cast<size_t>(a)] * o.c_[static_cast<size_t>(b)];
        }
        return r;
    }

    TruncatedSeries operator*(const S& v) const {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = x * v;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    /// Lowest index with a nonzero coefficient; order+1 for the zero series.
    long valuation() const {
        for (long k = 0; k <= order_; ++k)
            if (!scalar_is_zero(c_[static_cast<size_t>(k)])) return k;
        return order_ + 1;
    }

    std::string str() const {
        std::string s;
        for (long k = 0; k <= order_; ++k) {
            if constexpr (std::is_same_v<S, Rational>) {
                s += (k ? " + " : "") + c_[static_cast<size_t>(k)].str() + "*t^" +
                     std::to_string(k);
            } else {
                s += (k ? " + (" : "(") + std::to_string(c_[static_cast<size_t>(k)].re) + "," +
                     std::to_string(c_[static_cast<size_t>(k)].im) + ")*t^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void check(const TruncatedSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    long order_;
    std::vector<S> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using ComplexSeries = TruncatedSeries<ComplexF>;

/// exp(u) = sum_j u^j / j! for a series with zero constant term (finitely many
/// powers contribute below the truncation order).
template <typename S>
TruncatedSeries<S> series_exp(const TruncatedSeries<S>& u) {
    if (!u.has_zero_constant())
        throw std::invalid_argument("series_exp: argument must have zero constant term");
    TruncatedSeries<S> sum = TruncatedSeries<S>::one(u.order());
    TruncatedSeries<S> pow = TruncatedSeries<S>::one(u.order());
    S fact = scalar_from_long<S>(1);
    const long step = u.valuation();
    for (long j = 1; j * step <= u.order(); ++j) {
        pow = pow * u;
        fact = fact * scalar_from_long<S>(j);
        sum += pow * (scalar_from_long<S>(1) / fact);
    }
    return sum;
}

/// 1/(1-u) = sum_j u^j for a series with zero constant term.
template <typename S>
TruncatedSeries<S> series_geometric(const TruncatedSeries<S>& u) {
    if (!u.has_zero_constant())
        throw std::invalid_argument("series_geometric: argument must have zero constant term");
    TruncatedSeries<S> sum = TruncatedSeries<S>::one(u.order());
    TruncatedSeries<S> pow = TruncatedSeries<S>::one(u.order());
    const long step = u.valuation();
    for (long j = 1; j * step <= u.order(); ++j) {
        pow = pow * u;
        sum += pow;
    }
    return sum;
}

/// pFq((upper); (lower); u) composed with a series argument of zero constant
/// term: sum_j [upper]_j/[lower]_j u^j / j!, truncated by the argument's
/// valuation. Lower parameters reaching 0 while terms are nonzero raise
/// std::domain_error.
template <typename S>
TruncatedSeries<S> pfq_compose(const std::vector<S>& upper, const std::vector<S>& lower,
                               const TruncatedSeries<S>& u) {
    if (!u.has_zero_constant())
        throw std::invalid_argument("pfq_compose: argument must have zero constant term");
    TruncatedSeries<S> sum = TruncatedSeries<S>::one(u.order());
    TruncatedSeries<S> pow = TruncatedSeries<S>::one(u.order());
    S coef = scalar_from_long<S>(1);
    const long step = u.valuation();
    for (long j = 1; j * step <= u.order(); ++j) {
        S numer = coef;
        for (const auto& a : upper) numer = numer * (a + scalar_from_long<S>(j - 1));
        if (scalar_is_zero(numer)) break;  // terminated
        S denom = scalar_from_long<S>(j);
        for (const auto& b : lower) {
            const S f = b + scalar_from_long<S>(j - 1);
            if (scalar_is_zero(f))
                throw std::domain_error("pfq_compose: lower parameter exhausted at index " +
                                        std::to_string(j));
            denom = denom * f;
        }
        coef = numer / denom;
        pow = pow * u;
        sum += pow * coef;
    }
    return sum;
}

} // namespace ggh
