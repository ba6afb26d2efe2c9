#pragma once

/**
 * @file level.hpp
 * @brief Certificates that an O-sequence is not level, Weak Lefschetz
 * necessary conditions, and constructions of level sequences.
 *
 * Every certificate is recomputed from H alone. Reduction-number reasoning
 * uses only r1_upper_bound(H), never an algebra-specific r_1.
 */

#include <bitset>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oseq/betti.hpp"
#include "oseq/binomial.hpp"
#include "oseq/error.hpp"
#include "oseq/lexideal.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

enum class CertificateKind {
    MacaulayInvalid,
    GHMSSmallPlateau,
    PlateauPastReduction,
    SmallPlateau2dPlus3,
    LexBettiEqual,
    LexBettiExcess,
    GinBettiEqual,
    NonUnimodalSmallDrop,
    DecayTooSteep,
    NonStrictDecreaseAfterDrop,
};

inline constexpr int kCertificateKinds = 10;

constexpr const char* kind_name(CertificateKind k) noexcept {
    switch (k) {
    case CertificateKind::MacaulayInvalid: return "MacaulayInvalid";
    case CertificateKind::GHMSSmallPlateau: return "GHMSSmallPlateau";
    case CertificateKind::PlateauPastReduction: return "PlateauPastReduction";
    case CertificateKind::SmallPlateau2dPlus3: return "SmallPlateau2dPlus3";
    case CertificateKind::LexBettiEqual: return "LexBettiEqual";
    case CertificateKind::LexBettiExcess: return "LexBettiExcess";
    case CertificateKind::GinBettiEqual: return "GinBettiEqual";
    case CertificateKind::NonUnimodalSmallDrop: return "NonUnimodalSmallDrop";
    case CertificateKind::DecayTooSteep: return "DecayTooSteep";
    case CertificateKind::NonStrictDecreaseAfterDrop: return "NonStrictDecreaseAfterDrop";
    }
    return "?";
}

inline std::optional<CertificateKind> parse_kind(std::string_view s) {
    for (int i = 0; i < kCertificateKinds; ++i) {
        auto k = static_cast<CertificateKind>(i);
        if (s == kind_name(k)) return k;
    }
    return std::nullopt;
}

struct Certificate {
    CertificateKind kind;
    int d;               // witness degree
    std::string detail;  // the comparison that fired
    std::string cite;
    bool operator==(const Certificate&) const = default;
};

enum class LevelStatus { NotLevel, Unknown, Invalid };

constexpr const char* status_name(LevelStatus s) noexcept {
    switch (s) {
    case LevelStatus::NotLevel: return "not_level";
    case LevelStatus::Unknown: return "unknown";
    case LevelStatus::Invalid: return "invalid";
    }
    return "?";
}

struct LevelVerdict {
    LevelStatus status = LevelStatus::Unknown;
    std::vector<Certificate> certificates;
    bool operator==(const LevelVerdict&) const = default;
};

using KindMask = std::bitset<kCertificateKinds>;

inline KindMask all_kinds() { return KindMask().set(); }

namespace detail {

inline std::string h(int t) { return "h_" + std::to_string(t); }
inline std::string num(count_t v) { return std::to_string(v); }

} // namespace detail

/// Scans every degree and collects all enabled certificates that fire.
/// Invalid sequences get status Invalid and one MacaulayInvalid certificate.
inline LevelVerdict check_level(const OSequence& H, KindMask enabled = all_kinds()) {
    using detail::h;
    using detail::num;
    LevelVerdict v;
    auto val = validate(H);
    if (!val.ok()) {
        const auto& x = *val.violation;
        v.status = LevelStatus::Invalid;
        v.certificates.push_back({CertificateKind::MacaulayInvalid, x.degree + 1,
                                  h(x.degree + 1) + "=" + num(x.next) + ">" + h(x.degree) + "^<" +
                                      std::to_string(x.degree) + ">=" + num(x.bound),
                                  "Macaulay growth bound"});
        return v;
    }
    const int s = H.socle_degree();
    const count_t n = H.codim();
    const int b = r1_upper_bound(H);
    auto on = [&](CertificateKind k) { return enabled.test(static_cast<std::size_t>(k)); };
    auto fire = [&](CertificateKind k, int d, std::string det, const char* cite) {
        v.certificates.push_back({k, d, std::move(det), cite});
    };
    auto plateau = [&](int d) { return d >= 1 && H[d - 1] > H[d] && H[d] == H[d + 1] && H[d] > 0; };

    for (int d = 1; d <= s; ++d) {
        if (!plateau(d)) continue;
        std::string shape_s = h(d - 1) + "=" + num(H[d - 1]) + ">" + h(d) + "=" + h(d + 1) + "=" + num(H[d]);
        if (on(CertificateKind::GHMSSmallPlateau) && H[d] <= d + 1)
            fire(CertificateKind::GHMSSmallPlateau, d, shape_s + "<=" + std::to_string(d) + "+1",
                 "small plateau in any codimension");
        if (on(CertificateKind::PlateauPastReduction) && d >= b)
            fire(CertificateKind::PlateauPastReduction, d, shape_s + ", d>=r1 bound " + std::to_string(b),
                 "plateau at or past the reduction number");
        if (n == 3 && on(CertificateKind::SmallPlateau2dPlus3) && H[d] <= 2 * d + 3)
            fire(CertificateKind::SmallPlateau2dPlus3, d,
                 h(d) + "=" + num(H[d]) + "<=2*" + std::to_string(d) + "+3",
                 "codim-3 plateau at most 2d+3");
    }

    if (n == 3 && (on(CertificateKind::LexBettiEqual) || on(CertificateKind::LexBettiExcess))) {
        auto J = lex_segment_ideal(val.sequence, 3);
        auto D = ek_betti(J, 1, J.max_degree(), false);
        for (int d = 1; d <= s; ++d) {
            count_t b1 = D.at(1, d + 2), b2 = D.at(2, d + 2);
            if (on(CertificateKind::LexBettiEqual) && plateau(d) && d < s && b1 == b2) {
                count_t i = H[d] - d, j = H[d - 1] - H[d];
                if (i >= 1 && 2 * i <= count_t(d) * d + d && 2 * (i + j) <= count_t(d) * d - d) {
                    auto cf = lex_plateau_betti(d, static_cast<int>(i), static_cast<int>(j));
                    if (cf.beta1 != b1 || cf.beta2 != b2)
                        throw std::logic_error("lex plateau closed form disagrees with Eliahou-Kervaire at d=" +
                                               std::to_string(d));
                }
                fire(CertificateKind::LexBettiEqual, d,
                     "beta_{1," + std::to_string(d + 2) + "}(lex)=beta_{2," + std::to_string(d + 2) +
                         "}(lex)=" + num(b1),
                     "equal lex Betti numbers at a plateau");
            }
            if (on(CertificateKind::LexBettiExcess) && b2 > b1)
                fire(CertificateKind::LexBettiExcess, d,
                     "beta_{2," + std::to_string(d + 2) + "}(lex)=" + num(b2) + ">beta_{1," +
                         std::to_string(d + 2) + "}(lex)=" + num(b1),
                     "lex Betti excess survives cancellation");
        }
    }

    if (n == 3 && on(CertificateKind::GinBettiEqual))
        for (int d = b + 1; d < s; ++d) {
            count_t up = H[d - 1] - H[d], down = H[d] - H[d + 1];
            if (up > 0 && up == 2 * down)
                fire(CertificateKind::GinBettiEqual, d,
                     h(d - 1) + "-" + h(d) + "=" + num(up) + "=2*(" + h(d) + "-" + h(d + 1) + ")",
                     "equal generic initial Betti numbers");
        }

    if (n == 3 && on(CertificateKind::NonUnimodalSmallDrop))
        for (int d = 1; d <= s; ++d)
            if (H[d - 1] > H[d] && H[d] > 0 && H[d] <= 2 * d + 3 && H[d + 1] >= H[d])
                fire(CertificateKind::NonUnimodalSmallDrop, d,
                     h(d) + "=" + num(H[d]) + "<=2*" + std::to_string(d) + "+3, " + h(d + 1) + "=" +
                         num(H[d + 1]) + ">=" + h(d),
                     "non-unimodal after a small drop");

    if (on(CertificateKind::DecayTooSteep))
        for (int t = std::max(b, 2); t <= s; ++t) {
            count_t lhs = H[t - 1] - H[t];
            count_t rhs = checked_mul(n - 1, H[t] - H[t + 1]);
            if (lhs > rhs)
                fire(CertificateKind::DecayTooSteep, t,
                     h(t - 1) + "-" + h(t) + "=" + num(lhs) + ">" + num(n - 1) + "*(" + h(t) + "-" + h(t + 1) +
                         ")=" + num(rhs),
                     "decay bound past the reduction number");
        }

    if (on(CertificateKind::NonStrictDecreaseAfterDrop))
        for (int d = std::max(b, 1); d <= s; ++d) {
            if (H[d - 1] <= H[d]) continue;
            for (int t = d; t < s; ++t)
                if (H[t] <= H[t + 1]) {
                    fire(CertificateKind::NonStrictDecreaseAfterDrop, d,
                         h(d - 1) + ">" + h(d) + " but " + h(t) + "=" + num(H[t]) + "<=" + h(t + 1) + "=" +
                             num(H[t + 1]),
                         "strict decrease after a drop past the reduction number");
                    break;
                }
        }

    v.status = v.certificates.empty() ? LevelStatus::Unknown : LevelStatus::NotLevel;
    return v;
}

// ---------------------------------------------------------------------------
// Weak Lefschetz necessary conditions
// ---------------------------------------------------------------------------

struct WlpCheck {
    bool pass = true;
    char clause = 0;  // 'a', 'b' or 'c' on failure
    int degree = -1;
    std::string reason;
};

inline WlpCheck check_wlp_necessary(const OSequence& H, int n) {
    auto V = require_valid(H);
    const int s = V.socle_degree();
    WlpCheck r;
    auto fail = [&](char c, int d, std::string why) {
        r.pass = false;
        r.clause = c;
        r.degree = d;
        r.reason = std::move(why);
        return r;
    };
    auto rep = shape(V);
    if (!rep.strictly_unimodal) {
        int t = 0;
        while (t < s && V[t] < V[t + 1]) ++t;
        while (t < s && V[t] == V[t + 1]) ++t;
        while (t < s && V[t] > V[t + 1]) ++t;
        return fail('a', t + 1,
                    "not strictly unimodal: h_" + std::to_string(t) + "=" + std::to_string(V[t]) + ", h_" +
                        std::to_string(t + 1) + "=" + std::to_string(V[t + 1]));
    }
    std::vector<count_t> pos;
    for (count_t x : rep.delta) {
        if (x <= 0) break;
        pos.push_back(x);
    }
    auto dv = validate(OSequence(pos));
    if (!dv.ok())
        return fail('b', dv.violation->degree + 1,
                    "positive part of the first difference is not an O-sequence at degree " +
                        std::to_string(dv.violation->degree + 1));
    const int theta = rep.theta;
    for (int d = theta + 1; d <= s; ++d) {
        count_t lhs = V[d - 1] - V[d];
        count_t rhs = checked_mul(n - 1, V[d] - V[d + 1]);
        bool strict = (n == 3 && d < s);
        bool ok = strict ? lhs < rhs : lhs <= rhs;
        if (!ok)
            return fail('c', d,
                        "h_" + std::to_string(d - 1) + "-h_" + std::to_string(d) + "=" + std::to_string(lhs) +
                            (strict ? " is not < " : " is not <= ") + std::to_string(n - 1) + "*(h_" +
                            std::to_string(d) + "-h_" + std::to_string(d + 1) + ")=" + std::to_string(rhs));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// H_i = min(h_i + C(r-1+e-i, e-i), C(r-1+i, i)) for i = 0..e.
inline OSequence iarrobino_extend(const OSequence& h, int r) {
    if (!validate(h).ok()) throw Error(Errc::BaseNotValid, "base " + h.to_string() + " is not an O-sequence");
    if (r < 2) throw Error(Errc::ParameterOutOfRange, "r must be >= 2");
    const int e = h.socle_degree();
    std::vector<count_t> out;
    for (int i = 0; i <= e; ++i)
        out.push_back(std::min(checked_add(h[i], binomial(r - 1 + e - i, e - i)), binomial(r - 1 + i, i)));
    if (out[0] != 1) throw Error(Errc::BaseNotValid, "H_0 = " + std::to_string(out[0]));
    return OSequence(std::move(out));
}

/// Level sequence in codim 3 with H_{d-1} = 2d+k+1 > H_d = H_{d+1} = 2d+k.
inline OSequence plateau_level_family(int d, int k) {
    if (d < 5 || k < 4 || 2 * k > d * d - 3 * d - 2)
        throw Error(Errc::ParameterOutOfRange, "need d >= 5 and 4 <= k <= (d^2-3d-2)/2, got d=" + std::to_string(d) +
                                                   ", k=" + std::to_string(k));
    std::vector<count_t> base;
    if (k == 4) {
        for (int i = 0; i <= d; ++i) base.push_back(2 * i + 1);
        base.push_back(2 * d + 3);
    } else {
        count_t top = 2 * d + k - 5;
        for (int i = 0; i <= d - 2; ++i) base.push_back(std::min(binomial(i + 2, 2), top));
        base.push_back(top);
        base.push_back(2 * d + k - 3);
        base.push_back(2 * d + k - 1);
    }
    return iarrobino_extend(OSequence(std::move(base)), 3);
}

} // namespace oseq
