#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggh/poly.hpp"
#include "ggh/system_spec.hpp"

namespace ggh {

/// G psi_n = g(n) psi_{n-1} with g(n) = n * R(n-1) = n * rho * prod_j (n + alpha_j).
/// The same coefficient holds in both realizations (d/dx on x^n and the forward
/// difference on falling factorials); g(0) = 0.
inline Rational g_step(const SystemSpec& spec, long n) {
    if (n <= 0) return Rational(0);
    Rational r = Rational(n) * spec.rho();
    for (const auto& a : spec.alphas()) {
        r *= Rational(n) + a;
        if (r.is_zero()) break;
    }
    return r;
}

/// Coefficient of psi_{n-l*j} in G^{l*j} psi_n, as the iterated product
/// g(n) g(n-1) ... g(n-l*j+1); zero once the chain crosses degree 0 or a root
/// of R. The closed Pochhammer form of the same number lives in hypergeom.
inline Rational gl_power_coeff(const SystemSpec& spec, long n, long j) {
    const long steps = spec.l() * j;
    if (steps > n) return Rational(0);
    Rational r(1);
    for (long s = 0; s < steps; ++s) {
        r *= g_step(spec, n - s);
        if (r.is_zero()) break;
    }
    return r;
}

/// Strictly degree-lowering linear map on span{psi_0..psi_nmax}: for each
/// source degree n it stores the (k, coefficient) pairs of its psi_{n-k}
/// images. Nilpotent by construction (every k >= 1).
class LoweringOp {
public:
    /// The map q(G) = sum_k c_k G^k.
    static LoweringOp for_q(const SystemSpec& spec, long n_max) {
        return LoweringOp(spec, n_max, /*scale_by_k=*/false);
    }

    /// The map q'(G) G = sum_k k c_k G^k (the lowering part of the eigenoperator).
    static LoweringOp for_qprime_g(const SystemSpec& spec, long n_max) {
        return LoweringOp(spec, n_max, /*scale_by_k=*/true);
    }

    long n_max() const { return static_cast<long>(rows_.size()) - 1; }

    const std::vector<std::pair<long, Rational>>& row(long n) const {
        return rows_.at(static_cast<size_t>(n));
    }

    Poly apply(const Poly& p) const {
        if (p.degree() > n_max())
            throw std::invalid_argument("LoweringOp: polynomial degree exceeds table");
        Poly out(p.basis());
        for (long n = 0; n <= p.degree(); ++n) {
            const Rational c = p.coeff(n);
            if (c.is_zero()) continue;
            for (const auto& [k, w] : rows_[static_cast<size_t>(n)])
                out.set_coeff(n - k, out.coeff(n - k) + c * w);
        }
        return out;
    }

private:
    LoweringOp(const SystemSpec& spec, long n_max, bool scale_by_k) {
        if (n_max < 0) n_max = 0;
        rows_.resize(static_cast<size_t>(n_max) + 1);
        const auto& q = spec.q_coeffs();
        for (long n = 0; n <= n_max; ++n) {
            Rational chain(1);  // g(n) g(n-1) ... over k steps
            for (long k = 1; k <= static_cast<long>(q.size()) && k <= n; ++k) {
                chain *= g_step(spec, n - k + 1);
                if (chain.is_zero()) break;
                Rational c = q[static_cast<size_t>(k) - 1];
                if (scale_by_k) c *= Rational(k);
                if (!c.is_zero()) rows_[static_cast<size_t>(n)].emplace_back(k, c * chain);
            }
        }
    }

    std::vector<std::vector<std::pair<long, Rational>>> rows_;
};

/// P_n = e^{q(G)} psi_n = sum_j q(G)^j psi_n / j!, summed until the nilpotent
/// operator annihilates. Monic of degree n in the spec's natural basis.
inline Poly build_P(const SystemSpec& spec, long n) {
    if (n < 0) throw std::invalid_argument("build_P: negative degree");
    const Basis b = spec.natural_basis();
    const LoweringOp q_op = LoweringOp::for_q(spec, n);
    Poly term = Poly::unit(b, n);
    Poly sum = term;
    for (long j = 1; !term.is_zero(); ++j) {
        term = q_op.apply(term) / Rational(j);
        sum += term;
    }
    return sum;
}

/// The eigenoperator L = q'(G)G + x d/dx (continuous) or q'(G)G - x nabla
/// (discrete); in both cases the non-lowering part acts diagonally as
/// psi_n -> n psi_n. Requires p in the spec's natural basis.
inline Poly apply_L(const SystemSpec& spec, const Poly& p) {
    if (p.basis() != spec.natural_basis())
        throw std::invalid_argument("apply_L: polynomial is not in the spec's natural basis (" +
                                    basis_name(spec.natural_basis()) + ")");
    Poly out = LoweringOp::for_qprime_g(spec, p.degree()).apply(p);
    for (long n = 0; n <= p.degree(); ++n) {
        const Rational c = p.coeff(n);
        if (!c.is_zero()) out.set_coeff(n, out.coeff(n) + c * Rational(n));
    }
    return out;
}

/// Spec for the Hahn companion family: the derivative (or forward-difference)
/// system, which has R(H+1) in place of R(H), i.e. every alpha_j shifted by 1.
inline SystemSpec hahn_shift(const SystemSpec& spec) {
    std::vector<Rational> shifted = spec.alphas();
    for (auto& a : shifted) a += Rational(1);
    return SystemSpec(spec.kind(), std::move(shifted), spec.rho(), spec.q_coeffs());
}

/// Outcome of one verification sweep; failures carry printable counterexamples.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

/// Asserts L P_n = n P_n exactly for 0 <= n <= n_max.
inline CheckReport eigen_check(const SystemSpec& spec, long n_max) {
    CheckReport rep{"eigen"};
    for (long n = 0; n <= n_max; ++n) {
        const Poly p = build_P(spec, n);
        if (apply_L(spec, p) != p * Rational(n))
            rep.fail("L P_" + std::to_string(n) + " != " + std::to_string(n) + " P_" +
                     std::to_string(n) + " for " + spec.str());
    }
    return rep;
}

/// Asserts the Hahn property exactly for 1 <= n <= n_max:
/// (d/dx P_n)/n (continuous) or (Delta P_n)/n (discrete) equals P_{n-1} of the
/// alpha-shifted spec.
inline CheckReport hahn_check(const SystemSpec& spec, long n_max) {
    if (n_max < 1) throw std::invalid_argument("hahn_check: n_max must be >= 1");
    CheckReport rep{"hahn"};
    const SystemSpec shifted = hahn_shift(spec);
    for (long n = 1; n <= n_max; ++n) {
        const Poly p = build_P(spec, n);
        const Poly lowered = (spec.kind() == Kind::Continuous ? derivative(p)
                                                              : forward_difference(p)) /
                             Rational(n);
        if (lowered != build_P(shifted, n - 1))
            rep.fail("derivative family mismatch at n=" + std::to_string(n) + " for " +
                     spec.str());
    }
    return rep;
}

} // namespace ggh
