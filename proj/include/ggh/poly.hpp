#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggh/rational.hpp"

namespace ggh {

/// Basis tag for the seed system psi_k: either x^k or the falling factorial
/// x(x-1)...(x-k+1) = (-1)^k (-x)_k.
enum class Basis { Monomial, FallingFactorial };

inline std::string basis_name(Basis b) {
    return b == Basis::Monomial ? "monomial" : "falling-factorial";
}

/// Dense exact-coefficient polynomial tagged with its basis. Coefficient at
/// index k multiplies psi_k. The zero polynomial has an empty vector; trailing
/// zero coefficients are always trimmed, so degree() is the vector length - 1.
class Poly {
public:
    Poly() : basis_(Basis::Monomial) {}
    explicit Poly(Basis b) : basis_(b) {}
    Poly(Basis b, std::vector<Rational> coeffs) : basis_(b), c_(std::move(coeffs)) { trim(); }

    /// psi_n in the given basis (monic monomial / falling factorial).
    static Poly unit(Basis b, long n) {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        c.back() = Rational(1);
        return Poly(b, std::move(c));
    }

    static Poly constant(Basis b, const Rational& v) {
        if (v.is_zero()) return Poly(b);
        return Poly(b, {v});
    }

    Basis basis() const { return basis_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero poly

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Rational coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    void set_coeff(long k, const Rational& v) {
        if (k < 0) throw std::invalid_argument("Poly: negative index");
        if (k >= static_cast<long>(c_.size())) c_.resize(static_cast<size_t>(k) + 1);
        c_[static_cast<size_t>(k)] = v;
        trim();
    }

    Poly& operator+=(const Poly& o) {
        check_same_basis(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same_basis(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator*(const Rational& s) const {
        if (s.is_zero()) return Poly(basis_);
        Poly r(basis_, c_);
        for (auto& v : r.c_) v *= s;
        return r;
    }
    Poly operator/(const Rational& s) const {
        if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
        Poly r(basis_, c_);
        for (auto& v : r.c_) v /= s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.basis_ == b.basis_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// "c_k*psi_k + ..." rendering, highest degree first; for diagnostics.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (long k = degree(); k >= 0; --k) {
            const Rational& v = c_[static_cast<size_t>(k)];
            if (v.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += v.str();
            if (k > 0) {
                s += (basis_ == Basis::Monomial) ? "*x^" : "*ff^";
                s += std::to_string(k);
            }
        }
        return s;
    }

private:
    void check_same_basis(const Poly& o) const {
        if (basis_ != o.basis_)
            throw std::invalid_argument("Poly: basis mismatch (" + basis_name(basis_) + " vs " +
                                        basis_name(o.basis_) + ")");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Basis basis_;
    std::vector<Rational> c_;
};

/// Exact product x*p in p's own basis. Monomial: index shift. Falling
/// factorial: x*psi_n = psi_{n+1} + n*psi_n.
inline Poly mul_by_x(const Poly& p) {
    if (p.is_zero()) return p;
    const long d = p.degree();
    std::vector<Rational> out(static_cast<size_t>(d) + 2);
    for (long k = 0; k <= d; ++k) {
        const Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        out[static_cast<size_t>(k) + 1] += c;
        if (p.basis() == Basis::FallingFactorial) out[static_cast<size_t>(k)] += c * Rational(k);
    }
    return Poly(p.basis(), std::move(out));
}

/// Multiplies by the linear factor (a + b*x), staying in p's basis.
inline Poly mul_linear(const Poly& p, const Rational& a, const Rational& b) {
    Poly r = p * a;
    if (!b.is_zero()) r += mul_by_x(p) * b;
    return r;
}

namespace detail {
// Rewrites p in the other basis by expanding each psi_k of the source basis
// in the target basis via psi-recurrences (unit lower-triangular conversion).
inline Poly convert_basis(const Poly& p, Basis target) {
    if (p.basis() == target || p.is_zero()) return Poly(target, p.coeffs());
    Poly acc(target);
    // rep of source psi_k in the target basis, built incrementally
    Poly rep = Poly::unit(target, 0);
    for (long k = 0;; ++k) {
        const Rational c = p.coeff(k);
        if (!c.is_zero()) acc += rep * c;
        if (k == p.degree()) break;
        if (p.basis() == Basis::FallingFactorial) {
            // psi_{k+1} = (x - k) * psi_k, expanded over monomials
            rep = mul_linear(rep, Rational(-k), Rational(1));
        } else {
            // x^{k+1} = x * x^k, expanded over falling factorials
            rep = mul_by_x(rep);
        }
    }
    return acc;
}
} // namespace detail

inline Poly to_monomial(const Poly& p) { return detail::convert_basis(p, Basis::Monomial); }
inline Poly to_falling(const Poly& p) { return detail::convert_basis(p, Basis::FallingFactorial); }

/// Exact evaluation. Monomial basis uses Horner; the falling-factorial basis
/// is evaluated with running products of (x - s), no conversion.
inline Rational eval(const Poly& p, const Rational& x) {
    if (p.is_zero()) return Rational(0);
    if (p.basis() == Basis::Monomial) {
        Rational acc(0);
        for (long k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
        return acc;
    }
    Rational acc = p.coeff(0);
    Rational run(1);
    for (long k = 1; k <= p.degree(); ++k) {
        run *= x - Rational(k - 1);
        acc += p.coeff(k) * run;
    }
    return acc;
}

inline ComplexF eval_c(const Poly& p, const ComplexF& x) {
    if (p.is_zero()) return ComplexF(0.0);
    if (p.basis() == Basis::Monomial) {
        ComplexF acc(0.0);
        for (long k = p.degree(); k >= 0; --k) acc = acc * x + ComplexF(p.coeff(k));
        return acc;
    }
    ComplexF acc(p.coeff(0));
    ComplexF run(1.0);
    for (long k = 1; k <= p.degree(); ++k) {
        run = run * (x - ComplexF(static_cast<double>(k - 1)));
        acc += ComplexF(p.coeff(k)) * run;
    }
    return acc;
}

/// d/dx of a monomial-basis polynomial.
inline Poly derivative(const Poly& p) {
    if (p.basis() != Basis::Monomial)
        throw std::invalid_argument("derivative: monomial basis required");
    if (p.degree() < 1) return Poly(Basis::Monomial);
    std::vector<Rational> out(static_cast<size_t>(p.degree()));
    for (long k = 1; k <= p.degree(); ++k)
        out[static_cast<size_t>(k) - 1] = p.coeff(k) * Rational(k);
    return Poly(Basis::Monomial, std::move(out));
}

/// Forward difference (Delta p)(x) = p(x+1) - p(x) of a falling-factorial
/// polynomial: Delta psi_k = k psi_{k-1}.
inline Poly forward_difference(const Poly& p) {
    if (p.basis() != Basis::FallingFactorial)
        throw std::invalid_argument("forward_difference: falling-factorial basis required");
    if (p.degree() < 1) return Poly(Basis::FallingFactorial);
    std::vector<Rational> out(static_cast<size_t>(p.degree()));
    for (long k = 1; k <= p.degree(); ++k)
        out[static_cast<size_t>(k) - 1] = p.coeff(k) * Rational(k);
    return Poly(Basis::FallingFactorial, std::move(out));
}

/// p(x) -> p(c * x^e) for a monomial-basis p (e >= 1); exact.
inline Poly substitute_power(const Poly& p, const Rational& c, long e) {
    if (p.basis() != Basis::Monomial)
        throw std::invalid_argument("substitute_power: monomial basis required");
    if (e < 1) throw std::invalid_argument("substitute_power: exponent must be >= 1");
    Poly r(Basis::Monomial);
    for (long k = 0; k <= p.degree(); ++k) {
        const Rational v = p.coeff(k);
        if (v.is_zero()) continue;
        r.set_coeff(k * e, v * c.pow(k) + r.coeff(k * e));
    }
    return r;
}

} // namespace ggh
