#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggh/system_spec.hpp"

namespace ggh {

/// Builds the named families. A preset is "name" optionally followed by
/// key=value parameters, e.g. "gould-hopper l=3 tau=1" or "laguerre alpha=1/2".
///
///   hermite                      continuous, G = d/dx, q = -G^2/2
///   laguerre [alpha]             continuous, G = (H+alpha+1) d/dx, q = G
///   gould-hopper [l, tau]        continuous, G = d/dx, q = tau G^l
///   konhauser-toscano [l, alpha] continuous, R(H) = prod_{s=1..l}(H+(alpha+s)/l), q = G
///   charlier [rho]               discrete, G = rho Delta, q = G
///   meixner [alpha, rho]         discrete, G = rho (H+alpha+1) Delta, q = G
///   intro-example [l]            continuous, G = d/dx, q = -G^l/l
inline SystemSpec make_preset(const std::string& text) {
    std::istringstream is(text);
    std::string name;
    is >> name;
    std::map<std::string, Rational> kv;
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("preset: expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = Rational::parse(tok.substr(eq + 1));
    }
    auto get = [&](const std::string& key, const Rational& dflt) {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : it->second;
    };
    auto get_long = [&](const std::string& key, long dflt) {
        auto it = kv.find(key);
        if (it == kv.end()) return dflt;
        if (!it->second.is_integer() || it->second.sign() <= 0)
            throw std::invalid_argument("preset: '" + key + "' must be a positive integer");
        return it->second.num().get_si();
    };

    if (name == "hermite") {
        return SystemSpec(Kind::Continuous, {}, Rational(1), {Rational(0), Rational(-1, 2)});
    }
    if (name == "laguerre") {
        return SystemSpec(Kind::Continuous, {get("alpha", Rational(0))}, Rational(1),
                          {Rational(1)});
    }
    if (name == "gould-hopper") {
        const long l = get_long("l", 2);
        std::vector<Rational> q(static_cast<size_t>(l), Rational(0));
        q.back() = get("tau", Rational(1));
        return SystemSpec(Kind::Continuous, {}, Rational(1), std::move(q));
    }
    if (name == "konhauser-toscano") {
        const long l = get_long("l", 2);
        const Rational alpha = get("alpha", Rational(0));
        std::vector<Rational> alphas;
        for (long s = 1; s <= l; ++s)
            alphas.push_back((alpha + Rational(s)) / Rational(l) - Rational(1));
        return SystemSpec(Kind::Continuous, std::move(alphas), Rational(1), {Rational(1)});
    }
    if (name == "charlier") {
        return SystemSpec(Kind::Discrete, {}, get("rho", Rational(1)), {Rational(1)});
    }
    if (name == "meixner") {
        // rho = 1 degenerates to the rising-factorial family (Chu-Vandermonde
        // collapses the 2F1 form), so the default stays away from it
        return SystemSpec(Kind::Discrete, {get("alpha", Rational(0))}, get("rho", Rational(1, 2)),
                          {Rational(1)});
    }
    if (name == "intro-example") {
        const long l = get_long("l", 2);
        std::vector<Rational> q(static_cast<size_t>(l), Rational(0));
        q.back() = Rational(-1, l);
        return SystemSpec(Kind::Continuous, {}, Rational(1), std::move(q));
    }
    throw std::invalid_argument("preset: unknown name '" + name + "'");
}

inline std::vector<std::string> preset_names() {
    return {"hermite",  "laguerre", "gould-hopper", "konhauser-toscano",
            "charlier", "meixner",  "intro-example"};
}

} // namespace ggh
