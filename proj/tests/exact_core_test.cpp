#include <gtest/gtest.h>

#include "ggh/poly.hpp"
#include "ggh/rational.hpp"

using namespace ggh;

namespace {

// deterministic generator for property tests
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
    Rational rational() {
        static const long dens[] = {1, 2, 3, 5, 7};
        return Rational(range(-12, 12), dens[next() % 5]);
    }
    Poly poly(Basis b, long max_deg) {
        std::vector<Rational> c(static_cast<size_t>(range(0, max_deg)) + 1);
        for (auto& v : c) v = rational();
        return Poly(b, std::move(c));
    }
};

} // namespace

TEST(Rational, NormalizedAndExact) {
    Rational a(6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(Rational(4, 2), Rational(2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ((Rational(2, 3) * Rational(9, 4)).str(), "3/2");
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "3/4", "-22/7", "123456789012345678901234567890/13"}) {
        const Rational q = Rational::parse(s);
        EXPECT_EQ(Rational::parse(q.str()), q);
    }
    EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, Pow) {
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_EQ(Rational(1, 2).pow(-2), Rational(4));
    EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(ComplexF, RejectsNonFinite) {
    EXPECT_NO_THROW(ComplexF(1.5, -2.0));
    EXPECT_THROW(ComplexF(std::numeric_limits<double>::infinity(), 0.0), std::invalid_argument);
    EXPECT_THROW(ComplexF(0.0, std::nan("")), std::invalid_argument);
}

TEST(Pochhammer, KnownValues) {
    EXPECT_EQ(pochhammer(Rational(5), 0), Rational(1));
    EXPECT_EQ(pochhammer(Rational(2), 3), Rational(24));
    EXPECT_EQ(pochhammer(Rational(-3), 5), Rational(0));
    EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(3, 4));
}

TEST(Pochhammer, RecurrenceProperty) {
    Rng rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const Rational a = rng.rational();
        const long j = rng.range(0, 9);
        EXPECT_EQ(pochhammer(a, j + 1), pochhammer(a, j) * (a + Rational(j)));
    }
}

TEST(PochhammerProduct, KnownValues) {
    EXPECT_EQ(pochhammer_product({}, 7), Rational(1));
    EXPECT_EQ(pochhammer_product({Rational(1), Rational(1, 2)}, 2), Rational(3, 2));
    EXPECT_EQ(pochhammer_product({Rational(-1)}, 3), Rational(0));
}

TEST(Poly, DegreeAndZero) {
    EXPECT_TRUE(Poly(Basis::Monomial).is_zero());
    EXPECT_EQ(Poly(Basis::Monomial).degree(), -1);
    Poly p(Basis::Monomial, {Rational(1), Rational(0), Rational(0)});
    EXPECT_EQ(p.degree(), 0);  // trailing zeros trimmed
    p.set_coeff(0, Rational(-1));
    p += Poly::constant(Basis::Monomial, Rational(1));
    EXPECT_TRUE(p.is_zero());
}

TEST(Poly, BasisMismatchRejected) {
    const Poly m = Poly::unit(Basis::Monomial, 1);
    const Poly f = Poly::unit(Basis::FallingFactorial, 1);
    EXPECT_THROW(m + f, std::invalid_argument);
}

TEST(BasisConversion, KnownExpansions) {
    // falling psi_2 = x(x-1) = x^2 - x
    EXPECT_EQ(to_monomial(Poly::unit(Basis::FallingFactorial, 2)),
              Poly(Basis::Monomial, {Rational(0), Rational(-1), Rational(1)}));
    // x^2 = psi_2 + psi_1
    EXPECT_EQ(to_falling(Poly::unit(Basis::Monomial, 2)),
              Poly(Basis::FallingFactorial, {Rational(0), Rational(1), Rational(1)}));
}

TEST(BasisConversion, RoundTripProperty) {
    Rng rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        const Poly p = rng.poly(rep % 2 ? Basis::Monomial : Basis::FallingFactorial, 12);
        EXPECT_EQ(to_falling(to_monomial(p)).coeffs(),
                  (p.basis() == Basis::FallingFactorial ? p : to_falling(p)).coeffs());
        EXPECT_EQ(to_monomial(to_falling(p)).coeffs(),
                  (p.basis() == Basis::Monomial ? p : to_monomial(p)).coeffs());
    }
}

TEST(BasisConversion, UnitLowerTriangular) {
    // psi_k (falling) expands over monomials with leading coefficient 1 and
    // no terms above degree k; same the other way.
    for (long k = 0; k <= 10; ++k) {
        const Poly m = to_monomial(Poly::unit(Basis::FallingFactorial, k));
        EXPECT_EQ(m.degree(), k);
        EXPECT_EQ(m.leading(), Rational(1));
        const Poly f = to_falling(Poly::unit(Basis::Monomial, k));
        EXPECT_EQ(f.degree(), k);
        EXPECT_EQ(f.leading(), Rational(1));
    }
}

TEST(MulByX, KnownValues) {
    EXPECT_EQ(mul_by_x(Poly::unit(Basis::Monomial, 3)), Poly::unit(Basis::Monomial, 4));
    // x * psi_1 = psi_2 + psi_1
    EXPECT_EQ(mul_by_x(Poly::unit(Basis::FallingFactorial, 1)),
              Poly(Basis::FallingFactorial, {Rational(0), Rational(1), Rational(1)}));
    // x * psi_3 = psi_4 + 3 psi_3, cross-checked through monomials
    const Poly lhs = mul_by_x(Poly::unit(Basis::FallingFactorial, 3));
    Poly rhs = Poly::unit(Basis::FallingFactorial, 4);
    rhs += Poly::unit(Basis::FallingFactorial, 3) * Rational(3);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(to_monomial(lhs), mul_by_x(to_monomial(Poly::unit(Basis::FallingFactorial, 3))));
}

TEST(Eval, KnownValues) {
    EXPECT_EQ(eval(Poly::unit(Basis::FallingFactorial, 3), Rational(3)), Rational(6));
    const Poly p(Basis::Monomial, {Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    EXPECT_EQ(eval(p, Rational(2)), Rational(3));
}

TEST(Eval, PropertiesUnderRandomInputs) {
    Rng rng(37);
    for (int rep = 0; rep < 100; ++rep) {
        const Basis b = rep % 2 ? Basis::Monomial : Basis::FallingFactorial;
        const Poly p = rng.poly(b, 9);
        const Poly q = rng.poly(b, 9);
        const Rational x = rng.rational();
        EXPECT_EQ(eval(p + q, x), eval(p, x) + eval(q, x));
        EXPECT_EQ(eval(mul_by_x(p), x), x * eval(p, x));
        EXPECT_EQ(eval(to_monomial(p), x), eval(p, x));  // basis independence
    }
}

TEST(Eval, ComplexMatchesRational) {
    Rng rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        const Poly p = rng.poly(rep % 2 ? Basis::Monomial : Basis::FallingFactorial, 6);
        const Rational x = rng.rational();
        const ComplexF cv = eval_c(p, ComplexF(x));
        EXPECT_NEAR(cv.re, eval(p, x).to_double(), 1e-9);
        EXPECT_NEAR(cv.im, 0.0, 1e-12);
    }
}

TEST(Calculus, DerivativeAndDifference) {
    // d/dx (x^3 - 2x) = 3x^2 - 2
    const Poly p(Basis::Monomial, {Rational(0), Rational(-2), Rational(0), Rational(1)});
    EXPECT_EQ(derivative(p),
              Poly(Basis::Monomial, {Rational(-2), Rational(0), Rational(3)}));
    // Delta psi_k = k psi_{k-1}, checked pointwise at integers
    const Poly f = Poly::unit(Basis::FallingFactorial, 4);
    const Poly df = forward_difference(f);
    for (long x = 0; x <= 8; ++x)
        EXPECT_EQ(eval(df, Rational(x)), eval(f, Rational(x + 1)) - eval(f, Rational(x)));
}

TEST(SubstitutePower, ComposesExactly) {
    // p(x) = x^2 + 1 at c*x^3
    const Poly p(Basis::Monomial, {Rational(1), Rational(0), Rational(1)});
    const Poly q = substitute_power(p, Rational(1, 2), 3);
    Rng rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        const Rational x = rng.rational();
        EXPECT_EQ(eval(q, x), eval(p, Rational(1, 2) * x.pow(3)));
    }
}
