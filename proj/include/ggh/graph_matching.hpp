#pragma once

#include <algorithm>
#include <cstdint>
#include <gmpxx.h>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggh/hypergeom.hpp"
#include "ggh/operator_engine.hpp"
#include "ggh/poly.hpp"

namespace ggh {

/// Complete multipartite graph K_{(n_1,...,n_k)}: vertices numbered
/// consecutively part by part, edges between every pair of vertices in
/// distinct parts. K_n is parts = [1,1,...,1].
class MultipartiteGraph {
public:
    explicit MultipartiteGraph(std::vector<long> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("MultipartiteGraph: needs >= 1 part");
        for (long p : parts_) {
            if (p < 1) throw std::invalid_argument("MultipartiteGraph: part sizes must be >= 1");
            for (long v = 0; v < p; ++v) part_of_.push_back(static_cast<long>(n_parts_seen_));
            ++n_parts_seen_;
        }
    }

    static MultipartiteGraph complete(long n) {
        return MultipartiteGraph(std::vector<long>(static_cast<size_t>(n), 1));
    }

    const std::vector<long>& parts() const { return parts_; }
    long vertex_count() const { return static_cast<long>(part_of_.size()); }
    bool adjacent(long u, long v) const {
        return part_of_[static_cast<size_t>(u)] != part_of_[static_cast<size_t>(v)];
    }

private:
    std::vector<long> parts_;
    std::vector<long> part_of_;
    size_t n_parts_seen_ = 0;
};

/// Arbitrary simple graph from an edge list ("u v" per line, 0-indexed);
/// feeds the brute-force oracle only.
class EdgeListGraph {
public:
    static EdgeListGraph parse(const std::string& text) {
        EdgeListGraph g;
        std::istringstream is(text);
        std::string line;
        std::vector<std::pair<long, long>> edges;
        long max_v = -1;
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            long u, v;
            if (!(ls >> u)) continue;  // blank line
            if (!(ls >> v)) throw std::invalid_argument("edge list: malformed line '" + line + "'");
            if (u < 0 || v < 0 || u == v)
                throw std::invalid_argument("edge list: bad edge '" + line + "'");
            edges.emplace_back(u, v);
            max_v = std::max(max_v, std::max(u, v));
        }
        g.n_ = max_v + 1;
        g.adj_.assign(static_cast<size_t>(g.n_) * static_cast<size_t>(g.n_), false);
        for (auto [u, v] : edges) {
            g.adj_[static_cast<size_t>(u * g.n_ + v)] = true;
            g.adj_[static_cast<size_t>(v * g.n_ + u)] = true;
        }
        return g;
    }

    long vertex_count() const { return n_; }
    bool adjacent(long u, long v) const { return adj_[static_cast<size_t>(u * n_ + v)]; }

private:
    long n_ = 0;
    std::vector<bool> adj_;
};

namespace detail {
/// All simple paths with r edges, canonicalized by first endpoint < last
/// endpoint (one entry per undirected path), as vertex bitmasks.
template <typename G>
std::vector<uint32_t> enumerate_path_masks(const G& g, long r) {
    const long n = g.vertex_count();
    if (n > 31) throw std::invalid_argument("path enumeration: graph too large (> 31 vertices)");
    std::vector<uint32_t> masks;
    std::vector<long> path;
    uint32_t used = 0;
    auto extend = [&](auto&& self, long last) -> void {
        if (static_cast<long>(path.size()) == r + 1) {
            if (path.front() < path.back()) masks.push_back(used);
            return;
        }
        for (long v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            if (!g.adjacent(last, v)) continue;
            path.push_back(v);
            used |= 1u << v;
            self(self, v);
            used &= ~(1u << v);
            path.pop_back();
        }
    };
    for (long s = 0; s < n; ++s) {
        path = {s};
        used = 1u << s;
        extend(extend, s);
    }
    return masks;
}

inline mpz_class count_disjoint_subsets(const std::vector<uint32_t>& masks, long j) {
    mpz_class total = 0;
    auto rec = [&](auto&& self, size_t start, uint32_t used, long remaining) -> void {
        if (remaining == 0) {
            total += 1;
            return;
        }
        for (size_t t = start; t < masks.size(); ++t)
            if ((masks[t] & used) == 0) self(self, t + 1, used | masks[t], remaining - 1);
    };
    rec(rec, 0, 0u, j);
    return total;
}
} // namespace detail

/// Number of ways to select j vertex-disjoint simple paths with r edges each
/// (undirected, sets of paths); j = 0 counts the empty packing once.
template <typename G>
mpz_class count_path_packings(const G& g, long r, long j) {
    if (r < 1) throw std::invalid_argument("count_path_packings: r must be >= 1");
    if (j < 0) throw std::invalid_argument("count_path_packings: j must be >= 0");
    if (j == 0) return 1;
    if ((r + 1) * j > g.vertex_count()) return 0;
    return detail::count_disjoint_subsets(detail::enumerate_path_masks(g, r), j);
}

/// Path counts and the signed matching polynomial they generate.
struct MatchRecord {
    long r = 1;
    std::vector<mpz_class> counts;  // counts[j] = p_r(K, j)
    Poly polynomial;                // monomial basis, monic of degree N
};

template <typename G>
MatchRecord compute_match_record(const G& g, long r) {
    const long N = g.vertex_count();
    MatchRecord rec;
    rec.r = r;
    const auto masks = detail::enumerate_path_masks(g, r);
    Poly M(Basis::Monomial);
    for (long j = 0; (r + 1) * j <= N; ++j) {
        mpz_class c = (j == 0) ? mpz_class(1) : detail::count_disjoint_subsets(masks, j);
        M.set_coeff(N - (r + 1) * j, neg_one_pow(j) * Rational(c));
        rec.counts.push_back(std::move(c));
    }
    rec.polynomial = std::move(M);
    return rec;
}

/// Ground-truth higher-order matching polynomial
/// M_r(K) = sum_j (-1)^j p_r(K, j) x^{N-(r+1)j} by brute-force enumeration.
template <typename G>
Poly matching_poly_oracle(const G& g, long r) {
    return compute_match_record(g, r).polynomial;
}

/// Closed form for the complete graph:
///   M_r(K_n) = sum_j (-1)^j n! x^{n-(r+1)j} / ((n-(r+1)j)! j! 2^j)
///            = x^n r+1F0(Delta(r+1; -n); -; (-1)^r (r+1)^{r+1} / (2 x^{r+1})),
/// also equal to e^{-G^{r+1}/2} x^n with G = d/dx. All three routes are
/// computed and must agree.
inline Poly formula_complete(long n, long r) {
    if (n < 1 || r < 1) throw std::invalid_argument("formula_complete: n, r must be >= 1");
    Poly explicit_sum(Basis::Monomial);
    for (long j = 0; (r + 1) * j <= n; ++j) {
        const Rational c = neg_one_pow(j) * factorial(n) /
                           (factorial(n - (r + 1) * j) * factorial(j) * Rational(2).pow(j));
        explicit_sum.set_coeff(n - (r + 1) * j, c);
    }

    HypParams params{delta_vec(r + 1, Rational(-n)), {}, "(-1)^r (r+1)^{r+1} / (2 x^{r+1})"};
    const Poly series = pfq_terminating(params, n / (r + 1));
    const Rational w = neg_one_pow(r) * Rational(r + 1).pow(r + 1) / Rational(2);
    Poly hyper(Basis::Monomial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) hyper.set_coeff(n - (r + 1) * j, c * w.pow(j));
    }
    if (hyper != explicit_sum)
        throw std::logic_error("formula_complete: hypergeometric and explicit forms disagree");

    std::vector<Rational> q(static_cast<size_t>(r) + 1, Rational(0));
    q.back() = Rational(-1, 2);
    const SystemSpec spec(Kind::Continuous, {}, Rational(1), std::move(q));
    if (build_P(spec, n) != explicit_sum)
        throw std::logic_error("formula_complete: operator construction disagrees");
    return explicit_sum;
}

/// Closed form for the complete bipartite graph K_{n,m}, odd r, s = (r+1)/2:
///   M_r(K_{n,m}) = sum_j (-1)^j (n)_{js} (m)_{js} / j! x^{n+m-(r+1)j}
///                = x^{n+m} pFq(Delta(s;-n), Delta(s;-m); -; -(r+1)^{r+1}/(2x)^{r+1}),
/// where (n)_{js} is a falling factorial. Also asserted: the family bridge
/// M_r(K_{n,m}) = x^{|n-m|} P_min(x^2) with P the continuous d = 1 system for
/// alpha_1 = |n-m|, rho = 1, q = -G^s.
inline Poly formula_bipartite(long n, long m, long r) {
    if (n < 1 || m < 1) throw std::invalid_argument("formula_bipartite: n, m must be >= 1");
    if (r < 1 || r % 2 == 0)
        throw std::invalid_argument("formula_bipartite: r must be a positive odd integer");
    const long s = (r + 1) / 2;
    const long N = n + m;

    Poly explicit_sum(Basis::Monomial);
    for (long j = 0; (r + 1) * j <= N; ++j) {
        Rational c = neg_one_pow(j) / factorial(j);
        for (long t = 0; t < j * s; ++t) c *= Rational(n - t) * Rational(m - t);
        if (!c.is_zero()) explicit_sum.set_coeff(N - (r + 1) * j, c);
    }

    HypParams params;
    params.upper = delta_vec(s, Rational(-n));
    for (auto& p : delta_vec(s, Rational(-m))) params.upper.push_back(p);
    params.arg_desc = "-(r+1)^{r+1} / (2x)^{r+1}";
    const Poly series = pfq_terminating(params, N / (r + 1));
    const Rational w = -Rational(r + 1).pow(r + 1) / Rational(2).pow(r + 1);
    Poly hyper(Basis::Monomial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) hyper.set_coeff(N - (r + 1) * j, c * w.pow(j));
    }
    if (hyper != explicit_sum)
        throw std::logic_error("formula_bipartite: hypergeometric and explicit forms disagree");

    const long big = std::max(n, m), small = std::min(n, m), M = big - small;
    std::vector<Rational> q(static_cast<size_t>(s), Rational(0));
    q.back() = Rational(-1);
    const SystemSpec spec(Kind::Continuous, {Rational(M)}, Rational(1), std::move(q));
    Poly bridge = substitute_power(build_P(spec, small), Rational(1), 2);
    for (long t = 0; t < M; ++t) bridge = mul_by_x(bridge);
    if (bridge != explicit_sum)
        throw std::logic_error("formula_bipartite: operator-family bridge disagrees");
    return explicit_sum;
}

/// Conjectured closed form for the complete multipartite graph K_{(n)}, odd r:
///   x^N pFq(Delta(s; -n_1), ..., Delta(s; -n_k); -; -(r+1)^{r+1}/(2x)^{r+1}),
/// s = (r+1)/2 (the block size that makes the bipartite theorem hold).
inline Poly conjectured_multipartite(const std::vector<long>& parts, long r) {
    if (r < 1 || r % 2 == 0)
        throw std::invalid_argument("conjectured_multipartite: r must be a positive odd integer");
    const long s = (r + 1) / 2;
    long N = 0;
    HypParams params;
    for (long p : parts) {
        if (p < 1) throw std::invalid_argument("conjectured_multipartite: part sizes must be >= 1");
        N += p;
        for (auto& v : delta_vec(s, Rational(-p))) params.upper.push_back(v);
    }
    params.arg_desc = "-(r+1)^{r+1} / (2x)^{r+1}";
    const Poly series = pfq_terminating(params, N / (r + 1));
    const Rational w = -Rational(r + 1).pow(r + 1) / Rational(2).pow(r + 1);
    Poly out(Basis::Monomial);
    for (long j = 0; j <= series.degree(); ++j) {
        const Rational c = series.coeff(j);
        if (!c.is_zero()) out.set_coeff(N - (r + 1) * j, c * w.pow(j));
    }
    return out;
}

/// Evidence record: the conjectured form against the brute-force oracle. The
/// outcome is reported, never asserted.
struct ConjectureReport {
    std::vector<long> parts;
    long r = 1;
    Poly oracle;
    Poly conjectured;
    bool equal = false;
    std::string first_difference;  // empty when equal
};

inline ConjectureReport conjecture_multipartite(const std::vector<long>& parts, long r) {
    ConjectureReport rep;
    rep.parts = parts;
    rep.r = r;
    const MultipartiteGraph g(parts);
    rep.oracle = matching_poly_oracle(g, r);
    rep.conjectured = conjectured_multipartite(parts, r);
    rep.equal = rep.oracle == rep.conjectured;
    if (!rep.equal) {
        for (long k = std::max(rep.oracle.degree(), rep.conjectured.degree()); k >= 0; --k) {
            if (rep.oracle.coeff(k) != rep.conjectured.coeff(k)) {
                rep.first_difference = "x^" + std::to_string(k) + ": oracle " +
                                       rep.oracle.coeff(k).str() + " vs conjectured " +
                                       rep.conjectured.coeff(k).str();
                break;
            }
        }
    }
    return rep;
}

} // namespace ggh
