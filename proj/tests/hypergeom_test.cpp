#include <gtest/gtest.h>

#include "ggh/hypergeom.hpp"
#include "ggh/presets.hpp"

using namespace ggh;

TEST(DeltaVec, KnownValues) {
    EXPECT_EQ(delta_vec(1, Rational(5, 3)), std::vector<Rational>{Rational(5, 3)});
    EXPECT_EQ(delta_vec(2, Rational(-4)),
              (std::vector<Rational>{Rational(-2), Rational(-3, 2)}));
    EXPECT_EQ(delta_vec(3, Rational(1)),
              (std::vector<Rational>{Rational(1, 3), Rational(2, 3), Rational(1)}));
}

TEST(BlockPochhammer, SplitsExactly) {
    // (x)_{l j} = l^{l j} prod_r ((x+r)/l)_j
    for (long l = 1; l <= 4; ++l)
        for (long j = 0; j <= 8; ++j)
            for (const Rational& x :
                 {Rational(1, 2), Rational(-7, 3), Rational(4), Rational(-5)}) {
                Rational rhs = Rational(l).pow(l * j);
                for (const auto& p : delta_vec(l, x)) rhs *= pochhammer(p, j);
                EXPECT_EQ(pochhammer(x, l * j), rhs) << "l=" << l << " j=" << j;
            }
}

TEST(ParamSplit, HermiteClasses) {
    const SystemSpec herm = make_preset("hermite");
    const ParamSplit even = param_split(herm, 8);  // n = 2m, i = 0
    EXPECT_EQ(even.i, 0);
    EXPECT_EQ(even.m, 4);
    EXPECT_EQ(even.S, (std::vector<Rational>{Rational(1), Rational(1, 2)}));
    EXPECT_EQ(even.S_hat, std::vector<Rational>{Rational(1, 2)});
    const ParamSplit odd = param_split(herm, 9);
    EXPECT_EQ(odd.S_hat, std::vector<Rational>{Rational(3, 2)});
}

TEST(ParamSplit, LaguerreAndArity) {
    const SystemSpec lag(Kind::Continuous, {Rational(2, 7)}, Rational(1), {Rational(1)});
    const ParamSplit ps = param_split(lag, 5);
    EXPECT_EQ(ps.S, (std::vector<Rational>{Rational(2, 7) + Rational(1), Rational(1)}));
    EXPECT_EQ(ps.S_hat, std::vector<Rational>{Rational(9, 7)});
    // |S| = (d+1) l and |S_hat| = l d + l - 1 for a d=2, l=3 spec
    const SystemSpec big(Kind::Continuous, {Rational(1, 5), Rational(-2, 7)}, Rational(1),
                         {Rational(0), Rational(0), Rational(1)});
    const ParamSplit bs = param_split(big, 10);
    EXPECT_EQ(bs.S.size(), 9u);
    EXPECT_EQ(bs.S_hat.size(), 8u);
    EXPECT_EQ(bs.S[static_cast<size_t>(big.d() * big.l() + bs.i)], Rational(1));
}

TEST(ParamSplit, RejectsGeneralQ) {
    const SystemSpec s(Kind::Continuous, {}, Rational(1), {Rational(1), Rational(1)});
    EXPECT_THROW(param_split(s, 4), std::invalid_argument);
}

TEST(PfqTerminating, KnownSeries) {
    // 1F1(-2; 1; z) = 1 - 2z + z^2/2
    EXPECT_EQ(pfq_terminating({{Rational(-2)}, {Rational(1)}, ""}, 5),
              Poly(Basis::Monomial, {Rational(1), Rational(-2), Rational(1, 2)}));
    // 2F0(-1, 5; -; z) = 1 - 5z
    EXPECT_EQ(pfq_terminating({{Rational(-1), Rational(5)}, {}, ""}, 5),
              Poly(Basis::Monomial, {Rational(1), Rational(-5)}));
}

TEST(PfqTerminating, LowerParameterGuard) {
    // 1F1(-3; -2; z) dies at index 3 where the numerator is still nonzero
    try {
        pfq_terminating({{Rational(-3)}, {Rational(-2)}, ""}, 5);
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("-2"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
    }
    // but 1F1(-2; -2; z) terminates before the collision
    EXPECT_NO_THROW(pfq_terminating({{Rational(-2)}, {Rational(-2)}, ""}, 8));
}

TEST(PfqTerminating, PaddingIdentity) {
    // pFq((a); (b); z) = p+1Fq+1((a), mu; (b), mu; z) for mu != 0
    const std::vector<Rational> upper = {Rational(-4), Rational(2, 3)};
    const std::vector<Rational> lower = {Rational(5, 7)};
    for (const Rational& mu : {Rational(3, 2), Rational(-7, 5), Rational(2)}) {
        std::vector<Rational> up = upper, lo = lower;
        up.push_back(mu);
        lo.push_back(mu);
        EXPECT_EQ(pfq_terminating({up, lo, ""}, 10), pfq_terminating({upper, lower, ""}, 10));
    }
}

TEST(PochhammerReflect, Identity) {
    EXPECT_EQ(pochhammer_reflect(Rational(0), 3, 2), pochhammer(Rational(-3), 2));
    EXPECT_EQ(pochhammer(Rational(-3), 2), Rational(6));
    EXPECT_EQ(pochhammer_reflect(Rational(1, 2), 4, 4),
              pochhammer(Rational(-4) - Rational(1, 2), 4));
    EXPECT_EQ(pochhammer_reflect(Rational(2, 3), 5, 0), Rational(1));
    // (mu+1)_{n-j} = (-1)_3 vanishes
    EXPECT_THROW(pochhammer_reflect(Rational(-2), 5, 2), std::domain_error);
}

TEST(RepContinuous, HermiteKnown) {
    const SystemSpec herm = make_preset("hermite");
    const Poly he4(Basis::Monomial,
                   {Rational(3), Rational(0), Rational(-6), Rational(0), Rational(1)});
    EXPECT_EQ(rep_cont_power_first(herm, 4), he4);
    EXPECT_EQ(rep_cont_power_second(herm, 4), he4);
    EXPECT_EQ(rep_cont_2F(herm, 3),
              Poly(Basis::Monomial, {Rational(0), Rational(-3), Rational(0), Rational(1)}));
    EXPECT_EQ(rep_cont_power_first(herm, 0), Poly::constant(Basis::Monomial, Rational(1)));
    EXPECT_EQ(rep_cont_power_second(herm, 0), Poly::constant(Basis::Monomial, Rational(1)));
}

TEST(RepContinuous, LaguerreSecondForm) {
    const SystemSpec lag(Kind::Continuous, {Rational(0)}, Rational(1), {Rational(1)});
    // (1)_1 * 1F1(-1; 1; -x) = 1 + x = P_1
    EXPECT_EQ(rep_cont_power_second(lag, 1),
              Poly(Basis::Monomial, {Rational(1), Rational(1)}));
}

TEST(RepContinuous, MatchesBuildPAcrossSpecs) {
    const std::vector<SystemSpec> specs = {
        SystemSpec(Kind::Continuous, {}, Rational(-1, 2), {Rational(0), Rational(0), Rational(1)}),
        SystemSpec(Kind::Continuous, {Rational(1, 3)}, Rational(1), {Rational(0), Rational(1)}),
        SystemSpec(Kind::Continuous, {Rational(1, 5), Rational(-3, 7)}, Rational(2),
                   {Rational(0), Rational(0), Rational(-2, 3)}),
        make_preset("konhauser-toscano l=2 alpha=1/2"),
    };
    for (const auto& s : specs)
        for (long n = 0; n <= 12; ++n) {
            const Poly p = build_P(s, n);
            EXPECT_EQ(rep_cont_power_first(s, n), p) << s.str() << " n=" << n;
            EXPECT_EQ(rep_cont_power_second(s, n), p) << s.str() << " n=" << n;
            EXPECT_EQ(rep_cont_2F(s, n), p) << s.str() << " n=" << n;
        }
}

TEST(SplitFamilies, HermiteChildrenAreLaguerreHalves) {
    const auto fams = split_families(make_preset("hermite"));
    ASSERT_EQ(fams.size(), 2u);
    EXPECT_EQ(fams[0].child.alphas(), std::vector<Rational>{Rational(-1, 2)});
    EXPECT_EQ(fams[1].child.alphas(), std::vector<Rational>{Rational(1, 2)});
    EXPECT_TRUE(split_check(make_preset("hermite"), 10).pass);
}

TEST(SplitFamilies, SubstitutionIdentity) {
    const SystemSpec s(Kind::Continuous, {Rational(1, 3)}, Rational(1),
                       {Rational(0), Rational(1)});
    EXPECT_TRUE(split_check(s, 6).pass);
    // l = 1: the single child reproduces the parent up to the kappa rescale
    const SystemSpec lag(Kind::Continuous, {Rational(2, 5)}, Rational(3), {Rational(1)});
    EXPECT_TRUE(split_check(lag, 8).pass);
}

TEST(RepDiscrete, CharlierKnown) {
    const SystemSpec cha = make_preset("charlier rho=4/7");
    EXPECT_EQ(rep_disc_first(cha, 1),
              Poly(Basis::FallingFactorial, {Rational(4, 7), Rational(1)}));
    EXPECT_EQ(rep_disc_second(cha, 1),
              Poly(Basis::FallingFactorial, {Rational(4, 7), Rational(1)}));
    EXPECT_EQ(rep_disc_first(cha, 0), Poly::constant(Basis::FallingFactorial, Rational(1)));
}

TEST(RepDiscrete, BothFormsAgreeWithBuildP) {
    const SystemSpec s(Kind::Discrete, {Rational(1, 2)}, Rational(1), {Rational(1)});
    for (long n = 0; n <= 12; ++n) {
        const Poly p = build_P(s, n);
        EXPECT_EQ(rep_disc_first(s, n), p) << "n=" << n;
        EXPECT_EQ(rep_disc_second(s, n), p) << "n=" << n;
    }
}

TEST(RepDiscrete, PowerFormsAgreeWithBuildP) {
    const std::vector<SystemSpec> specs = {
        SystemSpec(Kind::Discrete, {}, Rational(1, 2), {Rational(0), Rational(1)}),
        SystemSpec(Kind::Discrete, {Rational(1, 2)}, Rational(1), {Rational(0), Rational(1)}),
        SystemSpec(Kind::Discrete, {Rational(2, 7), Rational(-1, 5)}, Rational(-1),
                   {Rational(0), Rational(0), Rational(1, 3)}),
    };
    for (const auto& s : specs)
        for (long n = 0; n <= 10; ++n) {
            const Poly p = build_P(s, n);
            EXPECT_EQ(rep_disc_power_first(s, n), p) << s.str() << " n=" << n;
            EXPECT_EQ(rep_disc_power_second(s, n), p) << s.str() << " n=" << n;
        }
}

TEST(RepDiscrete, GouldHopperDiscreteForm) {
    // d = 0 discrete power case: lF_l(Delta(l;-n); Delta(l; x-n+1); tau (-1)^l)
    // in scalar form; verified here through the psi-basis first form.
    const SystemSpec s(Kind::Discrete, {}, Rational(1), {Rational(0), Rational(1)});
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(rep_disc_power_first(s, n), build_P(s, n));
}

TEST(RepDiscrete, SecondFormRefusesDegenerateLower) {
    // alpha = -2 makes alpha+1 = -1 a nonpositive integer lower parameter
    const SystemSpec s(Kind::Discrete, {Rational(-2)}, Rational(1), {Rational(1)});
    EXPECT_THROW(rep_disc_second(s, 5), std::domain_error);
    // the first form stays available
    EXPECT_NO_THROW(rep_disc_first(s, 5));
    EXPECT_EQ(rep_disc_first(s, 5), build_P(s, 5));
}

TEST(RepresentationCheck, SweepsCleanly) {
    EXPECT_TRUE(representation_check(make_preset("hermite"), 12).pass);
    EXPECT_TRUE(representation_check(make_preset("meixner alpha=1/2 rho=2"), 12).pass);
}
