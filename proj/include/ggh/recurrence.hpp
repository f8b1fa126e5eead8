#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggh/operator_engine.hpp"
#include "ggh/poly.hpp"
#include "ggh/system_spec.hpp"

namespace ggh {

/// Claimed recurrence band J in x P_n = P_{n+1} + sum_{j=0}^{J} gamma_j(n) P_{n-j}:
/// ld + l - 1 for continuous specs, and l (d = 0) or ld + l - 1 (d > 0) for
/// discrete ones.
inline long claimed_band(const SystemSpec& spec) {
    if (spec.kind() == Kind::Discrete && spec.d() == 0) return spec.l();
    return spec.l() * spec.d() + spec.l() - 1;
}

/// Exact coefficients c_k with p = sum_k c_k P_k, by descending triangular
/// elimination against the monic family (out[k] multiplies P_k).
inline std::vector<Rational> expand_in_family(const SystemSpec& spec, const Poly& p) {
    if (p.basis() != spec.natural_basis())
        throw std::invalid_argument("expand_in_family: polynomial not in the spec's natural basis");
    const long deg = p.degree();
    std::vector<Rational> out(static_cast<size_t>(deg < 0 ? 0 : deg + 1));
    Poly residual = p;
    for (long k = deg; k >= 0; --k) {
        const Rational c = residual.coeff(k);
        out[static_cast<size_t>(k)] = c;
        if (!c.is_zero()) residual -= build_P(spec, k) * c;
    }
    if (!residual.is_zero())
        throw std::logic_error("expand_in_family: elimination left a nonzero residual");
    return out;
}

/// One recurrence row: the gamma_j(n), j = 0..n, from expanding x P_n over the
/// family; the P_{n+1} coefficient is asserted to be exactly 1 and stripped.
/// Entry j of the result multiplies P_{n-j}.
inline std::vector<Rational> recurrence_row(const SystemSpec& spec, long n) {
    const std::vector<Rational> c = expand_in_family(spec, mul_by_x(build_P(spec, n)));
    if (c.size() != static_cast<size_t>(n) + 2 || c.back() != Rational(1))
        throw std::logic_error("recurrence_row: coefficient of P_{n+1} is not 1");
    std::vector<Rational> gamma(static_cast<size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) gamma[static_cast<size_t>(j)] = c[static_cast<size_t>(n - j)];
    return gamma;
}

/// Recurrence rows for n = 0..n_max in one pass (the family prefix is built
/// once and reused).
struct BandRecurrence {
    long band = 0;                              // claimed band J
    long observed_band = 0;                     // largest j with some gamma_j(n) != 0
    std::vector<std::vector<Rational>> rows;    // rows[n][j] = gamma_j(n), j <= n
};

inline BandRecurrence recurrence_table(const SystemSpec& spec, long n_max) {
    BandRecurrence table;
    table.band = claimed_band(spec);
    std::vector<Poly> family;
    family.reserve(static_cast<size_t>(n_max) + 2);
    for (long k = 0; k <= n_max + 1; ++k) family.push_back(build_P(spec, k));
    for (long n = 0; n <= n_max; ++n) {
        Poly residual = mul_by_x(family[static_cast<size_t>(n)]);
        std::vector<Rational> c(static_cast<size_t>(n) + 2);
        for (long k = n + 1; k >= 0; --k) {
            const Rational v = residual.coeff(k);
            c[static_cast<size_t>(k)] = v;
            if (!v.is_zero()) residual -= family[static_cast<size_t>(k)] * v;
        }
        if (c.back() != Rational(1))
            throw std::logic_error("recurrence_table: coefficient of P_{n+1} is not 1");
        std::vector<Rational> gamma(static_cast<size_t>(n) + 1);
        for (long j = 0; j <= n; ++j) {
            gamma[static_cast<size_t>(j)] = c[static_cast<size_t>(n - j)];
            if (!gamma[static_cast<size_t>(j)].is_zero() && j > table.observed_band)
                table.observed_band = j;
        }
        table.rows.push_back(std::move(gamma));
    }
    return table;
}

/// Asserts gamma_j(n) = 0 exactly for every j beyond the claimed band, for all
/// n <= n_max; the report carries the observed maximal band (the
/// d-orthogonality order witness).
inline CheckReport bandwidth_check(const SystemSpec& spec, long n_max) {
    CheckReport rep{"recurrence-bandwidth"};
    const BandRecurrence table = recurrence_table(spec, n_max);
    for (long n = 0; n <= n_max; ++n) {
        const auto& gamma = table.rows[static_cast<size_t>(n)];
        for (long j = table.band + 1; j <= n; ++j)
            if (!gamma[static_cast<size_t>(j)].is_zero())
                rep.fail("gamma_" + std::to_string(j) + "(" + std::to_string(n) +
                         ") = " + gamma[static_cast<size_t>(j)].str() +
                         " beyond claimed band " + std::to_string(table.band) + " for " +
                         spec.str());
    }
    rep.notes.push_back("observed band " + std::to_string(table.observed_band) +
                        " (claimed " + std::to_string(table.band) + ")");
    return rep;
}

/// Observed polynomial degree of n -> gamma_j(n) along the computed rows:
/// the least D whose Newton forward-difference tail vanishes on all available
/// samples. Reported only; nothing in the recurrence contract asserts it.
inline long observed_gamma_degree(const BandRecurrence& table, long j) {
    std::vector<Rational> samples;
    for (size_t n = static_cast<size_t>(j); n < table.rows.size(); ++n)
        samples.push_back(table.rows[n][static_cast<size_t>(j)]);
    if (samples.empty()) return -1;
    // forward differences; degree = last level with a nonzero entry
    long degree = -1;
    for (long level = 0; !samples.empty(); ++level) {
        bool nonzero = false;
        for (const auto& v : samples) nonzero = nonzero || !v.is_zero();
        if (nonzero) degree = level;
        for (size_t t = 0; t + 1 < samples.size(); ++t) samples[t] = samples[t + 1] - samples[t];
        samples.pop_back();
    }
    return degree;
}

/// CSV rows "n,gamma_0,...,gamma_J" (exact rational fields, claimed band width).
inline std::string recurrence_csv(const SystemSpec& spec, long n_max) {
    const BandRecurrence table = recurrence_table(spec, n_max);
    std::ostringstream os;
    os << "n";
    for (long j = 0; j <= table.band; ++j) os << ",gamma_" << j;
    os << "\n";
    for (long n = 0; n <= n_max; ++n) {
        os << n;
        for (long j = 0; j <= table.band; ++j) {
            os << ",";
            if (j <= n) os << table.rows[static_cast<size_t>(n)][static_cast<size_t>(j)].str();
            else os << "0";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace ggh
