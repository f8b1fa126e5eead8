#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggh/hypergeom.hpp"
#include "ggh/operator_engine.hpp"
#include "ggh/poly.hpp"
#include "ggh/series.hpp"
#include "ggh/system_spec.hpp"

namespace ggh {

/// Q_n = build_P(spec, n) / C(i): the residue-class-normalized family
/// Q_{m*l+i} = x^i 1F_{ld+l-1}(-m; S_hat(i); -x^l/kappa) (continuous) and its
/// discrete analogue. Errors if C vanishes, naming the vanishing factor.
inline Poly normalize_Q(const SystemSpec& spec, long n) {
    const ParamSplit ps = param_split(spec, n);
    if (ps.C.is_zero()) {
        for (size_t b : ps.I)
            if (pochhammer(ps.S[b], ps.m).is_zero())
                throw std::domain_error("normalize_Q: Pochhammer factor (" + ps.S[b].str() +
                                        ")_" + std::to_string(ps.m) + " vanishes");
        throw std::domain_error("normalize_Q: normalization constant vanishes");
    }
    return build_P(spec, n) / ps.C;
}

/// Scalar value of a terminating pFq at a rational argument.
inline Rational pfq_value(const HypParams& params, long n_terms, const Rational& z) {
    return eval(pfq_terminating(params, n_terms), z);
}

/// Generic exponential generating identity, exact through order N:
///   sum_m t^m/m! 1F_q(-m; (b); u) = e^t 0F_q(-; (b); -u t).
/// This is the summation-interchange core of the Phi_i generating theorems.
inline CheckReport gf_exp_check(const std::vector<Rational>& lower, const Rational& u, long N) {
    CheckReport rep{"gf-exp"};
    RationalSeries lhs(N);
    Rational inv_fact(1);
    for (long m = 0; m <= N; ++m) {
        if (m > 0) inv_fact /= Rational(m);
        lhs.set_coeff(m, pfq_value({{Rational(-m)}, lower, "scalar u"}, m, u) * inv_fact);
    }
    const RationalSeries rhs =
        series_exp(RationalSeries::monomial(N, 1, Rational(1))) *
        pfq_compose<Rational>({}, lower, RationalSeries::monomial(N, 1, -u));
    if (lhs != rhs)
        rep.fail("exponential identity failed for u=" + u.str() + " through order " +
                 std::to_string(N));
    return rep;
}

/// Same identity at a complex argument (used to spot-check the normalized
/// statements whose scale constants are complex for even l); coefficientwise
/// |difference| <= tol.
inline CheckReport gf_exp_check_complex(const std::vector<Rational>& lower, ComplexF u, long N,
                                        double tol = 1e-9) {
    CheckReport rep{"gf-exp-complex"};
    std::vector<ComplexF> lower_c;
    for (const auto& b : lower) lower_c.emplace_back(b);
    ComplexSeries lhs(N);
    double fact = 1.0;
    for (long m = 0; m <= N; ++m) {
        if (m > 0) fact *= static_cast<double>(m);
        ComplexF term(1.0), sum(1.0);
        for (long j = 1; j <= m; ++j) {
            ComplexF ratio(static_cast<double>(-m + j - 1));
            for (const auto& b : lower_c) ratio = ratio / (b + ComplexF(static_cast<double>(j - 1)));
            term = term * ratio * u / ComplexF(static_cast<double>(j));
            sum += term;
        }
        lhs.set_coeff(m, sum / ComplexF(fact));
    }
    const ComplexSeries rhs = series_exp(ComplexSeries::monomial(N, 1, ComplexF(1.0))) *
                              pfq_compose<ComplexF>({}, lower_c, ComplexSeries::monomial(N, 1, -u));
    for (long k = 0; k <= N; ++k) {
        const ComplexF d = lhs.coeff(k) - rhs.coeff(k);
        if (d.abs() > tol)
            rep.fail("complex identity deviates by " + std::to_string(d.abs()) + " at t^" +
                     std::to_string(k));
    }
    return rep;
}

namespace detail {
/// sum over m of t^{m*l+i} * Q_{m*l+i}(x) * w_m, terms up to order N.
inline RationalSeries q_value_series(const SystemSpec& spec, long i, const Rational& x, long N,
                                     bool divide_by_m_factorial) {
    RationalSeries lhs(N);
    Rational inv_fact(1);
    for (long m = 0; m * spec.l() + i <= N; ++m) {
        if (m > 0 && divide_by_m_factorial) inv_fact /= Rational(m);
        lhs.set_coeff(m * spec.l() + i, eval(normalize_Q(spec, m * spec.l() + i), x) * inv_fact);
    }
    return lhs;
}

inline std::vector<Rational> disc_upper_block(const SystemSpec& spec, long i, const Rational& x) {
    // Delta(l; -x+i) evaluated at the sample point
    return delta_vec(spec.l(), -x + Rational(i));
}
} // namespace detail

/// Residue-class exponential generating function (continuous):
///   sum_m t^{ml+i} Q_{ml+i}(x)/m! = (t x)^i e^{t^l} 0F_{ld+l-1}(-; S_hat(i); (x t)^l / kappa),
/// exact through order N at the sampled x.
inline CheckReport gf_phi_check(const SystemSpec& spec, long i, const Rational& x, long N) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("gf_phi_check: continuous spec required");
    CheckReport rep{"gf-phi"};
    const long l = spec.l();
    const ParamSplit ps = param_split(spec, i);
    const RationalSeries lhs = detail::q_value_series(spec, i, x, N, true);
    const RationalSeries rhs =
        RationalSeries::monomial(N, i, x.pow(i)) *
        series_exp(RationalSeries::monomial(N, l, Rational(1))) *
        pfq_compose<Rational>({}, ps.S_hat,
                              RationalSeries::monomial(N, l, x.pow(l) / spec.kappa()));
    if (lhs != rhs)
        rep.fail("Phi_" + std::to_string(i) + " mismatch at x=" + x.str() + " for " + spec.str());
    return rep;
}

/// Whole-family corollary: sum_n t^n Q_n(x)/floor(n/l)! equals the sum of the
/// residue-class generating functions.
inline CheckReport gf_phi_family_check(const SystemSpec& spec, const Rational& x, long N) {
    CheckReport rep{"gf-phi-family"};
    const long l = spec.l();
    RationalSeries lhs(N);
    for (long n = 0; n <= N; ++n) {
        Rational f(1);
        for (long k = 2; k <= n / l; ++k) f *= Rational(k);
        lhs.set_coeff(n, eval(normalize_Q(spec, n), x) / f);
    }
    RationalSeries rhs(N);
    for (long i = 0; i < l; ++i) {
        const ParamSplit ps = param_split(spec, i);
        rhs += RationalSeries::monomial(N, i, x.pow(i)) *
               series_exp(RationalSeries::monomial(N, l, Rational(1))) *
               pfq_compose<Rational>({}, ps.S_hat,
                                     RationalSeries::monomial(N, l, x.pow(l) / spec.kappa()));
    }
    if (lhs != rhs) rep.fail("family Phi mismatch at x=" + x.str() + " for " + spec.str());
    return rep;
}

/// Rational-kernel generating identity (a = 0 case):
///   sum_n t^n p+1Fq+1(-n, (a_p); 1, (b_q); u) = 1/(1-t) pFq((a_p); (b_q); -u t/(1-t)),
/// exact through order N.
inline CheckReport srivastava_check(const std::vector<Rational>& p_upper,
                                    const std::vector<Rational>& q_lower, const Rational& u,
                                    long N) {
    CheckReport rep{"srivastava"};
    RationalSeries lhs(N);
    for (long n = 0; n <= N; ++n) {
        std::vector<Rational> up = {Rational(-n)};
        up.insert(up.end(), p_upper.begin(), p_upper.end());
        std::vector<Rational> lo = {Rational(1)};
        lo.insert(lo.end(), q_lower.begin(), q_lower.end());
        lhs.set_coeff(n, pfq_value({up, lo, "scalar u"}, n, u));
    }
    const RationalSeries t = RationalSeries::monomial(N, 1, Rational(1));
    const RationalSeries geo = series_geometric(t);  // 1/(1-t)
    const RationalSeries rhs = geo * pfq_compose(p_upper, q_lower, (t * geo) * (-u));
    if (lhs != rhs)
        rep.fail("rational-kernel identity failed for u=" + u.str() + " through order " +
                 std::to_string(N));
    return rep;
}

/// Residue-class rational generating function (continuous):
///   sum_m t^{ml+i} Q_{ml+i}(x) = (t x)^i/(1-t^l) 1F_{ld+l-1}(1; S_hat(i); (x t)^l/(kappa (1-t^l))).
inline CheckReport gf_rational_check(const SystemSpec& spec, long i, const Rational& x, long N) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("gf_rational_check: continuous spec required");
    CheckReport rep{"gf-rational"};
    const long l = spec.l();
    const ParamSplit ps = param_split(spec, i);
    const RationalSeries lhs = detail::q_value_series(spec, i, x, N, false);
    const RationalSeries tl = RationalSeries::monomial(N, l, Rational(1));
    const RationalSeries geo = series_geometric(tl);  // 1/(1-t^l)
    const RationalSeries rhs = RationalSeries::monomial(N, i, x.pow(i)) * geo *
                               pfq_compose<Rational>({Rational(1)}, ps.S_hat,
                                                     (tl * geo) * (x.pow(l) / spec.kappa()));
    if (lhs != rhs)
        rep.fail("G_" + std::to_string(i) + " mismatch at x=" + x.str() + " for " + spec.str());
    return rep;
}

/// Whole-family corollary: sum_n t^n Q_n(x) = sum_i G_i(x, t).
inline CheckReport gf_rational_family_check(const SystemSpec& spec, const Rational& x, long N) {
    CheckReport rep{"gf-rational-family"};
    const long l = spec.l();
    RationalSeries lhs(N);
    for (long n = 0; n <= N; ++n) lhs.set_coeff(n, eval(normalize_Q(spec, n), x));
    RationalSeries rhs(N);
    const RationalSeries tl = RationalSeries::monomial(N, l, Rational(1));
    const RationalSeries geo = series_geometric(tl);
    for (long i = 0; i < l; ++i) {
        const ParamSplit ps = param_split(spec, i);
        rhs += RationalSeries::monomial(N, i, x.pow(i)) * geo *
               pfq_compose<Rational>({Rational(1)}, ps.S_hat,
                                     (tl * geo) * (x.pow(l) / spec.kappa()));
    }
    if (lhs != rhs) rep.fail("family G mismatch at x=" + x.str() + " for " + spec.str());
    return rep;
}

/// Discrete residue-class generating functions, both kernels, at a sampled
/// rational x (including small nonnegative integers, where psi_i(x) may
/// vanish and the upper blocks terminate):
///   exp kernel: sum_m t^{ml+i} Q(x)/m! = psi_i(x) t^i e^{t^l} lF_{ld+l-1}(D(l;-x+i); S_hat; v t^l)
///   rational:   sum_m t^{ml+i} Q(x)   = psi_i(x) t^i/(1-t^l) 1+lF_{ld+l-1}(D(l;-x+i), 1; S_hat; v t^l/(1-t^l))
/// with v = (-l)^l / kappa.
inline CheckReport gf_disc_checks(const SystemSpec& spec, long i, const Rational& x, long N) {
    if (spec.kind() != Kind::Discrete)
        throw std::invalid_argument("gf_disc_checks: discrete spec required");
    CheckReport rep{"gf-discrete"};
    const long l = spec.l();
    const ParamSplit ps = param_split(spec, i);
    const Rational psi_i = eval(Poly::unit(Basis::FallingFactorial, i), x);
    const Rational v = Rational(-l).pow(l) / spec.kappa();
    const std::vector<Rational> upper = detail::disc_upper_block(spec, i, x);

    const RationalSeries lhs_exp = detail::q_value_series(spec, i, x, N, true);
    const RationalSeries rhs_exp =
        RationalSeries::monomial(N, i, psi_i) *
        series_exp(RationalSeries::monomial(N, l, Rational(1))) *
        pfq_compose(upper, ps.S_hat, RationalSeries::monomial(N, l, v));
    if (lhs_exp != rhs_exp)
        rep.fail("discrete Phi_" + std::to_string(i) + " mismatch at x=" + x.str() + " for " +
                 spec.str());

    std::vector<Rational> upper1 = upper;
    upper1.push_back(Rational(1));
    const RationalSeries tl = RationalSeries::monomial(N, l, Rational(1));
    const RationalSeries geo = series_geometric(tl);
    const RationalSeries lhs_rat = detail::q_value_series(spec, i, x, N, false);
    const RationalSeries rhs_rat = RationalSeries::monomial(N, i, psi_i) * geo *
                                   pfq_compose(upper1, ps.S_hat, (tl * geo) * v);
    if (lhs_rat != rhs_rat)
        rep.fail("discrete G_" + std::to_string(i) + " mismatch at x=" + x.str() + " for " +
                 spec.str());
    return rep;
}

/// Mehler-Heine deviation report: scaled polynomial samples against the
/// entire-function limit, with the decay diagnostics the desk-scale claim
/// rests on.
struct MHReport {
    std::string name;
    Rational x;
    long i = 0;
    double limit = 0.0;
    double tol = 1e-2;
    std::vector<long> indices;
    std::vector<double> deviations;
    std::vector<double> ratios;  // deviations[k+1]/deviations[k]
    bool final_pass = false;
    bool monotone_pass = false;
    bool pass = false;
    std::vector<std::string> notes;
};

/// x^i 0F_{ld+l-1}(-; S_hat(i); x^l/kappa) summed in doubles with term-ratio
/// stopping (next term below 1e-15 of the running sum).
inline double mh_limit_value(const SystemSpec& spec, long i, double x) {
    const ParamSplit ps = param_split(spec, i);
    const double arg = std::pow(x, static_cast<double>(spec.l())) / spec.kappa().to_double();
    double term = 1.0, sum = 1.0;
    for (long j = 0; j < 100000; ++j) {
        double denom = static_cast<double>(j + 1);
        for (const auto& b : ps.S_hat) denom *= b.to_double() + static_cast<double>(j);
        term *= arg / denom;
        sum += term;
        if (std::fabs(term) < 1e-15 * std::fabs(sum)) break;
    }
    return std::pow(x, static_cast<double>(i)) * sum;
}

/// Scaled sample m^{i/l} Q_{ml+i}(x / m^{1/l}) computed exactly: the scale
/// cancels inside each monomial, leaving sum_s c_{i+ls} x^{i+ls} / m^s.
inline Rational mh_scaled_sample(const SystemSpec& spec, long i, long m, const Rational& x) {
    const Poly q = normalize_Q(spec, m * spec.l() + i);
    Rational val(0);
    for (long s = 0; i + spec.l() * s <= q.degree(); ++s) {
        const Rational c = q.coeff(i + spec.l() * s);
        if (!c.is_zero()) val += c * x.pow(i + spec.l() * s) / Rational(m).pow(s);
    }
    return val;
}

/// Residue-class Mehler-Heine check for pure-power q: deviations
/// |m^{i/l} Q_{ml+i}(x/m^{1/l}) - limit| over m_list must decrease along the
/// tail and end below tol.
inline MHReport mh_power_check(const SystemSpec& spec, const Rational& x, long i,
                               const std::vector<long>& m_list, double tol = 1e-2) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("mh_power_check: continuous spec required");
    detail::require_pure_power(spec, "mh_power_check");
    if (m_list.empty()) throw std::invalid_argument("mh_power_check: empty index list");
    MHReport rep;
    rep.name = "mehler-heine";
    rep.x = x;
    rep.i = i;
    rep.tol = tol;
    rep.limit = mh_limit_value(spec, i, x.to_double());
    for (long m : m_list) {
        rep.indices.push_back(m);
        rep.deviations.push_back(
            std::fabs(mh_scaled_sample(spec, i, m, x).to_double() - rep.limit));
    }
    for (size_t k = 0; k + 1 < rep.deviations.size(); ++k)
        rep.ratios.push_back(rep.deviations[k] == 0.0 ? 0.0
                                                      : rep.deviations[k + 1] / rep.deviations[k]);
    rep.final_pass = rep.deviations.back() < tol;
    rep.monotone_pass = true;
    const size_t first = rep.deviations.size() > 4 ? rep.deviations.size() - 4 : 0;
    for (size_t k = first; k + 1 < rep.deviations.size(); ++k) {
        const bool both_zero = rep.deviations[k] == 0.0 && rep.deviations[k + 1] == 0.0;
        if (!(rep.deviations[k + 1] < rep.deviations[k] || both_zero)) rep.monotone_pass = false;
    }
    rep.pass = rep.final_pass && rep.monotone_pass;
    return rep;
}

/// l = 1 case: deviations of Q_n(x/n) from 0F_d(-; (alpha+1); x/kappa-scaled).
inline MHReport mh_l1_check(const SystemSpec& spec, const Rational& x,
                            const std::vector<long>& n_list, double tol = 1e-2) {
    if (spec.l() != 1) throw std::invalid_argument("mh_l1_check: q of degree 1 required");
    MHReport rep = mh_power_check(spec, x, 0, n_list, tol);
    rep.name = "mehler-heine-l1";
    return rep;
}

} // namespace ggh
