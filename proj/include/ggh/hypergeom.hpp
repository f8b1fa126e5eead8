#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggh/operator_engine.hpp"
#include "ggh/poly.hpp"
#include "ggh/system_spec.hpp"

namespace ggh {

/// Parameter vector (lam/l, (lam+1)/l, ..., (lam+l-1)/l) used to split a
/// Pochhammer block (x)_{l*j} = l^{l*j} * prod_r ((x+r)/l)_j across l
/// hypergeometric parameters.
inline std::vector<Rational> delta_vec(long l, const Rational& lam) {
    if (l < 1) throw std::invalid_argument("delta_vec: l must be >= 1");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(l));
    for (long r = 0; r < l; ++r) out.push_back((lam + Rational(r)) / Rational(l));
    return out;
}

/// Upper/lower parameter sets of a generalized hypergeometric series, plus a
/// human-readable description of the argument substitution in use.
struct HypParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    std::string arg_desc;
};

/// sum_{j=0}^{n_terms} [upper]_j / [lower]_j * z^j / j! as an exact polynomial
/// in z. Stops early once the numerator product vanishes (a terminating upper
/// parameter); throws if a lower parameter reaches 0 while terms are still
/// nonzero, naming the parameter and index.
inline Poly pfq_terminating(const HypParams& params, long n_terms) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(n_terms) + 1);
    coeffs.emplace_back(1);
    Rational term(1);
    for (long j = 1; j <= n_terms; ++j) {
        Rational numer = term;
        for (const auto& a : params.upper) numer *= a + Rational(j - 1);
        if (numer.is_zero()) break;
        Rational denom(j);
        for (const auto& b : params.lower) {
            const Rational f = b + Rational(j - 1);
            if (f.is_zero())
                throw std::domain_error("pfq_terminating: lower parameter " + b.str() +
                                        " exhausted at index " + std::to_string(j));
            denom *= f;
        }
        term = numer / denom;
        coeffs.resize(static_cast<size_t>(j) + 1);
        coeffs[static_cast<size_t>(j)] = term;
    }
    return Poly(Basis::Monomial, std::move(coeffs));
}

/// Index decomposition n = m*l + i together with the residue-class parameter
/// sets. S is built from S_k(i) = {(alpha_k + i - r)/l + 1, r = 0..l-1} for
/// k = 1..d+1 (alpha_{d+1} = 0); the k = d+1, r = i element equals 1 and is
/// the one removed to form S_hat. C is the constant relating build_P to the
/// residue-class hypergeometric form: C(i) = kappa^m * prod_{b in I} (S_b)_m.
struct ParamSplit {
    long i = 0;
    long m = 0;
    std::vector<Rational> S;        // size (d+1)*l, in (k, r) order
    std::vector<Rational> S_hat;    // S minus the guaranteed 1
    std::vector<size_t> I;          // indices of S_hat inside S
    Rational C;
};

inline ParamSplit param_split(const SystemSpec& spec, long n) {
    if (!spec.is_pure_power())
        throw std::invalid_argument("param_split: q must be a pure power tau*G^l");
    if (n < 0) throw std::invalid_argument("param_split: negative n");
    const long l = spec.l();
    const long d = spec.d();
    ParamSplit ps;
    ps.i = n % l;
    ps.m = n / l;
    const size_t removed = static_cast<size_t>(d * l + ps.i);  // k = d+1, r = i
    for (long k = 1; k <= d + 1; ++k) {
        const Rational alpha_k = (k <= d) ? spec.alphas()[static_cast<size_t>(k) - 1] : Rational(0);
        for (long r = 0; r < l; ++r)
            ps.S.push_back((alpha_k + Rational(ps.i - r)) / Rational(l) + Rational(1));
    }
    for (size_t b = 0; b < ps.S.size(); ++b) {
        if (b == removed) continue;
        ps.I.push_back(b);
        ps.S_hat.push_back(ps.S[b]);
    }
    ps.C = spec.kappa().pow(ps.m);
    for (size_t b : ps.I) ps.C *= pochhammer(ps.S[b], ps.m);
    return ps;
}

/// (-n-mu)_j rewritten as (-1)^j (mu+1)_n / (mu+1)_{n-j}; requires j <= n and
/// a nonvanishing denominator Pochhammer.
inline Rational pochhammer_reflect(const Rational& mu, long n, long j) {
    if (j > n) throw std::invalid_argument("pochhammer_reflect: j must be <= n");
    const Rational den = pochhammer(mu + Rational(1), n - j);
    if (den.is_zero())
        throw std::domain_error("pochhammer_reflect: (mu+1)_{n-j} vanishes for mu = " + mu.str());
    return neg_one_pow(j) * pochhammer(mu + Rational(1), n) / den;
}

/// Closed Pochhammer form of the coefficient of psi_{n-l*j} in G^{l*j} psi_n:
/// eta^{l*j} (-1)^{l*j*(d+1)} prod_{k,r} ((-n - alpha_k + r)/l)_j with
/// alpha_{d+1} = 0. Must agree with the iterated product gl_power_coeff.
inline Rational gl_power_coeff_closed(const SystemSpec& spec, long n, long j) {
    const long l = spec.l();
    const long d = spec.d();
    Rational r = spec.eta().pow(l * j) * neg_one_pow(l * j * (d + 1));
    for (long k = 1; k <= d + 1 && !r.is_zero(); ++k) {
        const Rational alpha_k = (k <= d) ? spec.alphas()[static_cast<size_t>(k) - 1] : Rational(0);
        for (const auto& p : delta_vec(l, -Rational(n) - alpha_k)) {
            r *= pochhammer(p, j);
            if (r.is_zero()) break;
        }
    }
    return r;
}

namespace detail {
inline void require_pure_power(const SystemSpec& spec, const char* who) {
    if (!spec.is_pure_power())
        throw std::invalid_argument(std::string(who) + ": q must be a pure power tau*G^l");
}
} // namespace detail

/// First representation, continuous or discrete alike in psi-coefficients:
///   P_n = sum_j [prod_{k,r} ((-n-alpha_k+r)/l)_j] * w^j / j! * psi_{n-l*j},
/// w = (-1)^{(d+1) l} kappa. The series has no lower parameters, so it is
/// valid for every admissible spec.
namespace detail {
inline Poly rep_power_first_impl(const SystemSpec& spec, long n) {
    require_pure_power(spec, "rep_power_first");
    const long l = spec.l();
    const long d = spec.d();
    HypParams params;
    for (long k = 1; k <= d + 1; ++k) {
        const Rational alpha_k = (k <= d) ? spec.alphas()[static_cast<size_t>(k) - 1] : Rational(0);
        for (auto& p : delta_vec(l, -Rational(n) - alpha_k)) params.upper.push_back(p);
    }
    params.arg_desc = "w / x^l with w = (-1)^{(d+1)l} kappa";
    const Poly series = pfq_terminating(params, n / l);
    const Rational w = neg_one_pow((d + 1) * l) * spec.kappa();
    Poly out(spec.natural_basis());
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) out.set_coeff(n - l * j, c * w.pow(j));
    }
    return out;
}
} // namespace detail

inline Poly rep_cont_power_first(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("rep_cont_power_first: continuous spec required");
    return detail::rep_power_first_impl(spec, n);
}

/// Second (residue-class) representation:
///   P_{m*l+i} = C(i) x^i 1F_{ld+l-1}(-m; S_hat(i); -x^l / kappa).
/// Requires no S_hat entry to be a nonpositive integer reachable before the
/// series terminates (degenerate systems are refused, not regularized).
inline Poly rep_cont_power_second(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("rep_cont_power_second: continuous spec required");
    detail::require_pure_power(spec, "rep_cont_power_second");
    const ParamSplit ps = param_split(spec, n);
    HypParams params{{Rational(-ps.m)}, ps.S_hat, "-x^l / kappa"};
    const Poly series = pfq_terminating(params, ps.m);
    const Rational u_scale = Rational(-1) / spec.kappa();
    Poly out(Basis::Monomial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) out.set_coeff(ps.i + spec.l() * j, ps.C * c * u_scale.pow(j));
    }
    return out;
}

/// Padded variant 2F_{ld+l-1}(-m, 1; S(i); -x^l / kappa); must reproduce
/// rep_cont_power_second exactly.
inline Poly rep_cont_2F(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("rep_cont_2F: continuous spec required");
    detail::require_pure_power(spec, "rep_cont_2F");
    const ParamSplit ps = param_split(spec, n);
    HypParams params{{Rational(-ps.m), Rational(1)}, ps.S, "-x^l / kappa"};
    const Poly series = pfq_terminating(params, ps.m);
    const Rational u_scale = Rational(-1) / spec.kappa();
    Poly out(Basis::Monomial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) out.set_coeff(ps.i + spec.l() * j, ps.C * c * u_scale.pow(j));
    }
    return out;
}

/// One residue class i of the split P_{m*l+i} = kappa^m x^i P^{(i)}_m(x^l/kappa):
/// the child is the l = 1 continuous family with G = prod_{b in I}(H + S_b) d/dx.
struct SplitFamily {
    long i = 0;
    SystemSpec child;
    Rational y_scale;   // y = y_scale * x^l
    long y_power = 1;
};

inline std::vector<SplitFamily> split_families(const SystemSpec& spec) {
    if (spec.kind() != Kind::Continuous)
        throw std::invalid_argument("split_families: continuous spec required");
    detail::require_pure_power(spec, "split_families");
    const long l = spec.l();
    std::vector<SplitFamily> out;
    for (long i = 0; i < l; ++i) {
        const ParamSplit ps = param_split(spec, i);  // m = 0 split carries the sets for class i
        std::vector<Rational> child_alphas;
        for (size_t b : ps.I) child_alphas.push_back(ps.S[b] - Rational(1));
        SystemSpec child(Kind::Continuous, std::move(child_alphas), Rational(1), {Rational(1)});
        out.push_back(SplitFamily{i, std::move(child), Rational(1) / spec.kappa(), l});
    }
    return out;
}

/// Checks build_P(spec, m*l+i) == kappa^m * x^i * child_P_m(x^l / kappa) for
/// every residue class and all m <= m_max.
inline CheckReport split_check(const SystemSpec& spec, long m_max) {
    CheckReport rep{"split"};
    const auto families = split_families(spec);
    for (const auto& fam : families) {
        for (long m = 0; m <= m_max; ++m) {
            const Poly child = build_P(fam.child, m);
            Poly rhs = substitute_power(child, fam.y_scale, fam.y_power) * spec.kappa().pow(m);
            for (long s = 0; s < fam.i; ++s) rhs = mul_by_x(rhs);
            if (rhs != build_P(spec, m * spec.l() + fam.i))
                rep.fail("split mismatch at i=" + std::to_string(fam.i) +
                         " m=" + std::to_string(m) + " for " + spec.str());
        }
    }
    return rep;
}

/// Discrete l = 1 first form: coefficients of psi_{n-j} carry
/// (-n)_j prod_k (-n-alpha_k)_j (-1)^{(d+1)j} kappa^j / j!; the symbolic
/// (x-n+1)_j lower parameter of the scalar form is exactly absorbed by the
/// falling-factorial basis, so the result is a true Poly with no admissibility
/// condition.
inline Poly rep_disc_first(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Discrete)
        throw std::invalid_argument("rep_disc_first: discrete spec required");
    if (spec.l() != 1)
        throw std::invalid_argument("rep_disc_first: q = tau*G (l = 1) required");
    HypParams params;
    params.upper.push_back(Rational(-n));
    for (const auto& a : spec.alphas()) params.upper.push_back(Rational(-n) - a);
    params.arg_desc = "(-1)^{d+1} kappa, coefficients on psi_{n-j}";
    const Poly series = pfq_terminating(params, n);
    const Rational w = neg_one_pow(spec.d() + 1) * spec.kappa();
    Poly out(Basis::FallingFactorial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) out.set_coeff(n - j, c * w.pow(j));
    }
    return out;
}

/// Discrete l = 1 second form:
///   P_n = kappa^n [alpha+1]_n sum_j (-n)_j (-x)_j kappa^{-j} / ([alpha+1]_j j!),
/// with (-x)_j = (-1)^j psi_j. Requires alpha_k not nonpositive integers.
inline Poly rep_disc_second(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Discrete)
        throw std::invalid_argument("rep_disc_second: discrete spec required");
    if (spec.l() != 1)
        throw std::invalid_argument("rep_disc_second: q = tau*G (l = 1) required");
    std::vector<Rational> lower;
    for (const auto& a : spec.alphas()) lower.push_back(a + Rational(1));
    HypParams params{{Rational(-n)}, lower, "upper -x symbolic; argument 1/kappa"};
    const Poly series = pfq_terminating(params, n);
    const Rational pre = spec.kappa().pow(n) * pochhammer_product(lower, n);
    const Rational inv_kappa = Rational(1) / spec.kappa();
    Poly out(Basis::FallingFactorial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) out.set_coeff(j, pre * c * neg_one_pow(j) * inv_kappa.pow(j));
    }
    return out;
}

/// Discrete power-case first form; same closed psi-coefficients as the
/// continuous first form, landing in the falling-factorial basis.
inline Poly rep_disc_power_first(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Discrete)
        throw std::invalid_argument("rep_disc_power_first: discrete spec required");
    return detail::rep_power_first_impl(spec, n);
}

/// Discrete power-case second form:
///   P_{m*l+i} = C(i) sum_s (-m)_s / (prod_I (S_b)_s s!) u^s X_s(x),
/// u = -(-l)^l / kappa, X_s = psi_i * prod_{r=0}^{l-1} [((-x+i+r)/l)_s]
/// expanded exactly over falling factorials.
inline Poly rep_disc_power_second(const SystemSpec& spec, long n) {
    if (spec.kind() != Kind::Discrete)
        throw std::invalid_argument("rep_disc_power_second: discrete spec required");
    detail::require_pure_power(spec, "rep_disc_power_second");
    const long l = spec.l();
    const ParamSplit ps = param_split(spec, n);
    const Rational u = -Rational(-l).pow(l) / spec.kappa();
    const Rational inv_l(1, l);

    Poly X = Poly::unit(Basis::FallingFactorial, ps.i);
    Poly acc = X;  // s = 0 term (coefficient 1)
    Rational c_s(1);
    Rational u_pow(1);
    for (long s = 1; s <= ps.m; ++s) {
        // extend the x-dependent Pochhammer blocks by their t = s-1 factors
        for (long r = 0; r < l; ++r)
            X = mul_linear(X, (Rational(ps.i + r)) * inv_l + Rational(s - 1), -inv_l);
        Rational numer = c_s * (Rational(-ps.m) + Rational(s - 1));
        if (numer.is_zero()) break;
        Rational denom(s);
        for (size_t b : ps.I) {
            const Rational f = ps.S[b] + Rational(s - 1);
            if (f.is_zero())
                throw std::domain_error("rep_disc_power_second: lower parameter " +
                                        ps.S[b].str() + " exhausted at index " +
                                        std::to_string(s));
            denom *= f;
        }
        c_s = numer / denom;
        u_pow *= u;
        acc += X * (c_s * u_pow);
    }
    return acc * ps.C;
}

/// Every representation applicable to the spec, compared coefficient-exactly
/// against build_P for 0 <= n <= n_max.
inline CheckReport representation_check(const SystemSpec& spec, long n_max) {
    CheckReport rep{"hypergeom"};
    if (!spec.is_pure_power()) {
        rep.notes.push_back("q is not a pure power; hypergeometric forms not applicable");
        return rep;
    }
    const bool cont = spec.kind() == Kind::Continuous;
    for (long n = 0; n <= n_max; ++n) {
        const Poly p = build_P(spec, n);
        auto compare = [&](const char* name, auto&& fn) {
            try {
                if (fn() != p)
                    rep.fail(std::string(name) + " != build_P at n=" + std::to_string(n) +
                             " for " + spec.str());
            } catch (const std::domain_error& e) {
                rep.notes.push_back(std::string(name) + " skipped at n=" + std::to_string(n) +
                                    ": " + e.what());
            }
        };
        if (cont) {
            compare("rep_cont_power_first", [&] { return rep_cont_power_first(spec, n); });
            compare("rep_cont_power_second", [&] { return rep_cont_power_second(spec, n); });
            compare("rep_cont_2F", [&] { return rep_cont_2F(spec, n); });
        } else {
            if (spec.l() == 1) {
                compare("rep_disc_first", [&] { return rep_disc_first(spec, n); });
                compare("rep_disc_second", [&] { return rep_disc_second(spec, n); });
            }
            compare("rep_disc_power_first", [&] { return rep_disc_power_first(spec, n); });
            compare("rep_disc_power_second", [&] { return rep_disc_power_second(spec, n); });
        }
    }
    if (cont) {
        const auto split_rep = split_check(spec, n_max / spec.l());
        if (!split_rep.pass)
            for (const auto& f : split_rep.failures) rep.fail(f);
    }
    return rep;
}

} // namespace ggh
