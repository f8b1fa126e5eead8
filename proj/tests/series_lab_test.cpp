#include <gtest/gtest.h>

#include "ggh/presets.hpp"
#include "ggh/series_lab.hpp"

using namespace ggh;

namespace {
RationalSeries t_mono(long N) { return RationalSeries::monomial(N, 1, Rational(1)); }
} // namespace

TEST(Series, ExpAdditivity) {
    const long N = 12;
    RationalSeries a(N), b(N);
    a.set_coeff(1, Rational(1, 2));
    a.set_coeff(3, Rational(-2));
    b.set_coeff(2, Rational(1, 3));
    b.set_coeff(1, Rational(1));
    EXPECT_EQ(series_exp(a) * series_exp(b), series_exp(a + b));
}

TEST(Series, GeometricInverse) {
    const long N = 15;
    const RationalSeries geo = series_geometric(t_mono(N));  // 1/(1-t)
    RationalSeries one_minus_t = RationalSeries::one(N);
    one_minus_t -= t_mono(N);
    EXPECT_EQ(geo * one_minus_t, RationalSeries::one(N));
    EXPECT_THROW(series_geometric(RationalSeries::one(N)), std::invalid_argument);
}

TEST(Series, PfqComposeMatchesExp) {
    // 0F0(-; -; u) = e^u
    const long N = 10;
    RationalSeries u(N);
    u.set_coeff(2, Rational(3, 5));
    EXPECT_EQ(pfq_compose<Rational>({}, {}, u), series_exp(u));
}

TEST(NormalizeQ, ShiftAndLaguerre) {
    // l=1, d=0, rho=1: Q_n = P_n = (x+1)^n
    const SystemSpec shift(Kind::Continuous, {}, Rational(1), {Rational(1)});
    EXPECT_EQ(normalize_Q(shift, 3), build_P(shift, 3));
    // Hermite even class: Q_{2m}(0) = 1
    const SystemSpec herm = make_preset("hermite");
    for (long m = 0; m <= 6; ++m)
        EXPECT_EQ(eval(normalize_Q(herm, 2 * m), Rational(0)), Rational(1));
    // Laguerre alpha=0: Q_2 = 1F1(-2; 1; -x) = 1 + 2x + x^2/2, strip (1)_2 = 2
    const SystemSpec lag(Kind::Continuous, {Rational(0)}, Rational(1), {Rational(1)});
    EXPECT_EQ(normalize_Q(lag, 2),
              Poly(Basis::Monomial, {Rational(1), Rational(2), Rational(1, 2)}));
    EXPECT_EQ(build_P(lag, 2), normalize_Q(lag, 2) * Rational(2));
}

TEST(NormalizeQ, DegenerateConstantNamed) {
    // alpha = -2 puts -1 in S_hat, so (S)_m vanishes for m >= 2
    const SystemSpec s(Kind::Continuous, {Rational(-2)}, Rational(1), {Rational(1)});
    try {
        normalize_Q(s, 4);
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("(-1)"), std::string::npos);
    }
}

TEST(GfExp, BinomialCase) {
    // empty lower: sum t^m/m! (1-u)^m = e^{t(1-u)} = e^t 0F0(-ut)
    EXPECT_TRUE(gf_exp_check({}, Rational(2, 7), 12).pass);
}

TEST(GfExp, HermiteEvenClassParameters) {
    EXPECT_TRUE(gf_exp_check({Rational(1, 2)}, Rational(1), 12).pass);
    EXPECT_TRUE(gf_exp_check({Rational(1, 2)}, Rational(0), 12).pass);  // both sides e^t
    EXPECT_TRUE(gf_exp_check({Rational(3, 4), Rational(7, 5)}, Rational(-5, 3), 15).pass);
}

TEST(GfExp, ComplexSpotCheck) {
    // the normalized generating statements force ((-1)^{d+1} eta)^l = -1; at
    // even (d+1)l the scale is complex, which lands here as a complex argument
    EXPECT_TRUE(gf_exp_check_complex({Rational(1, 2)}, ComplexF(-1.0, 0.0), 14).pass);
    EXPECT_TRUE(gf_exp_check_complex({Rational(3, 2)}, ComplexF(0.0, 1.0), 14).pass);
}

TEST(GfPhi, ShiftFamilyCollapses) {
    // l=1, d=0, x=1: both sides e^{2t}
    const SystemSpec shift(Kind::Continuous, {}, Rational(1), {Rational(1)});
    EXPECT_TRUE(gf_phi_check(shift, 0, Rational(1), 12).pass);
}

TEST(GfPhi, HermiteBothClasses) {
    const SystemSpec herm = make_preset("hermite");
    EXPECT_TRUE(gf_phi_check(herm, 0, Rational(1), 14).pass);
    EXPECT_TRUE(gf_phi_check(herm, 1, Rational(1), 14).pass);
    EXPECT_TRUE(gf_phi_check(herm, 0, Rational(0), 14).pass);  // both sides e^{t^l}
    EXPECT_TRUE(gf_phi_family_check(herm, Rational(-2, 3), 13).pass);
}

TEST(Srivastava, LaguerreKernel) {
    // p=q=0: sum t^n 1F1(-n; 1; u) = e^{-ut/(1-t)}/(1-t)
    EXPECT_TRUE(srivastava_check({}, {}, Rational(1, 3), 15).pass);
    EXPECT_TRUE(srivastava_check({}, {}, Rational(0), 12).pass);  // sum t^n = 1/(1-t)
    EXPECT_TRUE(srivastava_check({}, {Rational(1, 2)}, Rational(1), 12).pass);
    EXPECT_TRUE(srivastava_check({Rational(2, 3)}, {Rational(5, 4)}, Rational(-3), 12).pass);
}

TEST(GfRational, GeometricCase) {
    // l=1, d=0: sum t^n (x+1)^n = 1/(1-(x+1)t)
    const SystemSpec shift(Kind::Continuous, {}, Rational(1), {Rational(1)});
    EXPECT_TRUE(gf_rational_check(shift, 0, Rational(3), 12).pass);
}

TEST(GfRational, LaguerreAndHermite) {
    const SystemSpec lag(Kind::Continuous, {Rational(0)}, Rational(1), {Rational(1)});
    EXPECT_TRUE(gf_rational_check(lag, 0, Rational(1), 12).pass);
    const SystemSpec herm = make_preset("hermite");
    EXPECT_TRUE(gf_rational_check(herm, 0, Rational(0), 12).pass);  // 1/(1-t^l) both sides
    EXPECT_TRUE(gf_rational_check(herm, 1, Rational(1, 2), 13).pass);
    EXPECT_TRUE(gf_rational_family_check(herm, Rational(1), 13).pass);
}

TEST(GfDiscrete, CharlierSamples) {
    const SystemSpec cha = make_preset("charlier");
    EXPECT_TRUE(gf_disc_checks(cha, 0, Rational(0), 10).pass);
    EXPECT_TRUE(gf_disc_checks(cha, 0, Rational(2), 10).pass);
    EXPECT_TRUE(gf_disc_checks(cha, 0, Rational(5, 3), 10).pass);
}

TEST(GfDiscrete, PowerCaseSamples) {
    const SystemSpec s(Kind::Discrete, {}, Rational(1), {Rational(0), Rational(1)});
    EXPECT_TRUE(gf_disc_checks(s, 0, Rational(3), 10).pass);
    EXPECT_TRUE(gf_disc_checks(s, 1, Rational(3), 10).pass);
    EXPECT_TRUE(gf_disc_checks(s, 1, Rational(1), 10).pass);  // psi_1 truncation at integers
    const SystemSpec meix = make_preset("meixner alpha=1/3 rho=1/2");
    EXPECT_TRUE(gf_disc_checks(meix, 0, Rational(2), 10).pass);
}

TEST(MehlerHeine, ShiftFamilyClassicalLimit) {
    // d=0, l=1: Q_n(x/n) = (1+x/n)^n -> e^x; deviation ~ e/(2n) at x=1
    const SystemSpec shift(Kind::Continuous, {}, Rational(1), {Rational(1)});
    const MHReport rep = mh_l1_check(shift, Rational(1), {50, 100, 200, 400}, 4e-3);
    EXPECT_TRUE(rep.pass);
    EXPECT_LT(rep.deviations.back(), 4e-3);
    EXPECT_NEAR(rep.limit, std::exp(1.0), 1e-12);
    for (size_t k = 0; k + 1 < rep.deviations.size(); ++k)
        EXPECT_LT(rep.deviations[k + 1], rep.deviations[k]);
}

TEST(MehlerHeine, ZeroPointExact) {
    const SystemSpec lag(Kind::Continuous, {Rational(0)}, Rational(1), {Rational(1)});
    const MHReport rep = mh_l1_check(lag, Rational(0), {10, 20, 40});
    for (double d : rep.deviations) EXPECT_EQ(d, 0.0);
    EXPECT_TRUE(rep.pass);
}

TEST(MehlerHeine, LaguerreDecreasing) {
    const SystemSpec lag(Kind::Continuous, {Rational(0)}, Rational(1), {Rational(1)});
    const MHReport rep = mh_l1_check(lag, Rational(1), {50, 100, 200, 400});
    EXPECT_TRUE(rep.pass);
}

TEST(MehlerHeine, HermitePowerClasses) {
    const SystemSpec herm = make_preset("hermite");
    const MHReport even = mh_power_check(herm, Rational(1), 0, {25, 50, 100, 200});
    const MHReport odd = mh_power_check(herm, Rational(1), 1, {25, 50, 100, 200});
    EXPECT_TRUE(even.pass);
    EXPECT_TRUE(odd.pass);
    // distinct S_hat(i) produce distinct limits at x=1
    EXPECT_NE(even.limit, odd.limit);
}

TEST(MehlerHeine, RejectsGeneralQ) {
    const SystemSpec s(Kind::Continuous, {}, Rational(1), {Rational(1), Rational(1)});
    EXPECT_THROW(mh_power_check(s, Rational(1), 0, {10}), std::invalid_argument);
}

TEST(Jensen, L1FamiliesAreJensenPolynomials) {
    // Q_n(x) = sum_j binom(n,j) g_j x^j with g_j = 1/[alpha+1]_j, the Taylor
    // coefficients (times j!) of 0F_d(-; alpha+1; x); exact for n <= 20.
    const SystemSpec lag(Kind::Continuous, {Rational(1, 2)}, Rational(1), {Rational(1)});
    for (long n = 0; n <= 20; ++n) {
        const Poly q = normalize_Q(lag, n);
        for (long j = 0; j <= n; ++j) {
            const Rational expect =
                binomial(n, j) / pochhammer(Rational(3, 2), j);
            EXPECT_EQ(q.coeff(j), expect) << "n=" << n << " j=" << j;
        }
    }
}
