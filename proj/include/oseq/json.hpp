#pragma once

// JSON forms of sequences, monomial ideals, Betti diagrams, verdicts and
// oracle ideals. Oracle coefficients are written as integers when they fit
// in int64 and as decimal strings otherwise; both forms are accepted on load.

#include <json.hpp>

#include <string>
#include <vector>

#include "oseq/betti.hpp"
#include "oseq/error.hpp"
#include "oseq/level.hpp"
#include "oseq/lexideal.hpp"
#include "oseq/oracle.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

using Json = nlohmann::json;

inline Json to_json(const OSequence& H) {
    Json a = Json::array();
    for (count_t v : H.entries()) a.push_back(v);
    return a;
}

inline OSequence sequence_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "sequence must be a JSON array");
    std::vector<count_t> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(Errc::ParseError, "sequence entries must be integers");
        v.push_back(x.get<count_t>());
    }
    return OSequence(std::move(v));
}

/// {"n": 3, "slices": {"4": ["x1^4", ...]}}, minimal generators only.
inline Json to_json(const MonomialIdeal& J) {
    Json slices = Json::object();
    for (int d = 0; d <= J.max_degree(); ++d) {
        auto G = minimal_generators(J, d);
        if (G.empty()) continue;
        Json a = Json::array();
        for (const auto& m : G) a.push_back(m.to_string());
        slices[std::to_string(d)] = a;
    }
    return Json{{"n", J.nvars()}, {"slices", slices}};
}

/// Regenerates spans through max(max_degree, largest generator degree).
inline MonomialIdeal monomial_ideal_from_json(const Json& j, int max_degree = -1) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Monomial> gens;
        int top = max_degree;
        for (const auto& [key, arr] : j.at("slices").items()) {
            int d = std::stoi(key);
            top = std::max(top, d);
            for (const auto& s : arr) {
                Monomial m = parse_monomial(s.get<std::string>(), n);
                if (m.degree() != d) throw Error(Errc::ParseError, "generator " + m.to_string() + " filed under degree " + key);
                gens.push_back(m);
            }
        }
        return MonomialIdeal::generated_by(n, gens, std::max(top, 0));
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

/// {"q,j": value} over nonzero entries.
inline Json to_json(const BettiDiagram& D) {
    Json o = Json::object();
    for (const auto& [key, v] : D.entries()) o[std::to_string(key.first) + "," + std::to_string(key.second)] = v;
    return o;
}

inline BettiDiagram betti_from_json(const Json& j, int n, int lo, int hi) {
    BettiDiagram D(n, lo, hi);
    for (const auto& [key, v] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw Error(Errc::ParseError, "bad Betti key '" + key + "'");
        D.set(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), v.get<count_t>());
    }
    return D;
}

inline Json to_json(const Certificate& c) {
    return Json{{"kind", kind_name(c.kind)}, {"d", c.d}, {"detail", c.detail}, {"cite", c.cite}};
}

inline Json to_json(const LevelVerdict& v) {
    Json certs = Json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    return Json{{"status", status_name(v.status)}, {"certificates", certs}};
}

namespace detail {

inline Json big_to_json(const mpz_class& z) {
    if (z.fits_slong_p() && sizeof(long) == 8) return z.get_si();
    return z.get_str();
}

inline mpz_class big_from_json(const Json& j) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(Errc::ParseError, "bad integer '" + j.get<std::string>() + "'");
        return z;
    }
    throw Error(Errc::ParseError, "coefficient must be an integer or a decimal string");
}

} // namespace detail

/// {"n": 3, "generators": [[[num, den, [e1, e2, e3]], ...], ...]}, terms
/// in degrevlex-descending order.
inline Json to_json(const GradedIdeal& I) {
    Json gens = Json::array();
    for (const auto& f : I.generators()) {
        std::vector<std::pair<Monomial, Rational>> ts(f.terms().begin(), f.terms().end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return degrevlex_less(b.first, a.first); });
        Json g = Json::array();
        for (const auto& [m, c] : ts)
            g.push_back(Json::array({detail::big_to_json(c.get_num()), detail::big_to_json(c.get_den()), m.exponents()}));
        gens.push_back(g);
    }
    return Json{{"n", I.nvars()}, {"generators", gens}};
}

inline GradedIdeal graded_ideal_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Polynomial> gens;
        for (const auto& g : j.at("generators")) {
            Polynomial f(n);
            for (const auto& t : g) {
                if (!t.is_array() || t.size() != 3) throw Error(Errc::ParseError, "term must be [num, den, exponents]");
                mpz_class den = detail::big_from_json(t[1]);
                if (den == 0) throw Error(Errc::ParseError, "zero denominator");
                Rational c(detail::big_from_json(t[0]), den);
                c.canonicalize();
                auto e = t[2].get<std::vector<int>>();
                if (static_cast<int>(e.size()) != n) throw Error(Errc::ParseError, "exponent vector of wrong length");
                f.add(Monomial(e), c);
            }
            gens.push_back(std::move(f));
        }
        return GradedIdeal(n, std::move(gens));
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

} // namespace oseq
