#pragma once

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggh {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; every operation is exact (no rounding anywhere).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "p", "p/q" or "-p/q" (arbitrary precision digits).
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    /// Canonical form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
    int sign() const { return sgn(v_); }

    /// For a nonpositive integer −k, returns k; undefined otherwise.
    long as_nonpositive_k() const { return -v_.get_num().get_si(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Integer power; e >= 0, or e < 0 with a nonzero base.
    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0^negative");
            return (Rational(1) / *this).pow(-e);
        }
        mpq_class r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        return Rational(std::move(r));
    }

private:
    mpq_class v_;
};

/// Complex double with finite components enforced at construction.
struct ComplexF {
    double re = 0.0;
    double im = 0.0;

    ComplexF() = default;
    ComplexF(double r, double i = 0.0) : re(r), im(i) {
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("ComplexF: non-finite component");
    }
    explicit ComplexF(const Rational& q) : ComplexF(q.to_double()) {}

    double abs() const { return std::hypot(re, im); }

    ComplexF operator-() const { return {-re, -im}; }
    friend ComplexF operator+(ComplexF a, ComplexF b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexF operator-(ComplexF a, ComplexF b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexF operator*(ComplexF a, ComplexF b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexF operator/(ComplexF a, ComplexF b) {
        const double d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    ComplexF& operator+=(ComplexF o) { return *this = *this + o; }
    ComplexF& operator*=(ComplexF o) { return *this = *this * o; }
    friend bool operator==(ComplexF a, ComplexF b) { return a.re == b.re && a.im == b.im; }
};

/// Rising factorial (a)_j = a(a+1)...(a+j-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long j) {
    if (j < 0) throw std::invalid_argument("pochhammer: negative index");
    Rational r(1);
    Rational f = a;
    for (long s = 0; s < j; ++s) {
        r *= f;
        f += Rational(1);
        if (r.is_zero()) break;  // stays zero once an integer factor hits 0
    }
    return r;
}

/// Product of rising factorials over a parameter vector; empty product = 1.
inline Rational pochhammer_product(const std::vector<Rational>& alphas, long n) {
    Rational r(1);
    for (const auto& a : alphas) {
        r *= pochhammer(a, n);
        if (r.is_zero()) break;
    }
    return r;
}

inline Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

inline Rational binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

/// (-1)^e as an exact rational.
inline Rational neg_one_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace ggh
