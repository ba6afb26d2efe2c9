#pragma once

/**
 * @file osequence.hpp
 * @brief Hilbert functions of Artinian graded algebras as integer sequences.
 *
 * Binomial (Macaulay) expansions, the growth operator h^<i> and Green's
 * restriction operator h^-, O-sequence validation and shape analysis.
 *
 *   17 = C(8,7) + C(7,6) + C(5,5) + C(4,4)
 *   17^<7> = C(9,8) + C(8,7) + C(6,6) + C(5,5) = 19
 */

#include <algorithm>
#include <charconv>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oseq/binomial.hpp"
#include "oseq/error.hpp"

namespace oseq {

// ---------------------------------------------------------------------------
// Binomial expansions
// ---------------------------------------------------------------------------

struct BinomialTerm {
    count_t top;    // m_j
    int bottom;     // j
    bool operator==(const BinomialTerm&) const = default;
};

/// h = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j), m_i > ... > m_j >= j >= 1.
struct BinomialExpansion {
    int index = 1;
    std::vector<BinomialTerm> terms;

    count_t value() const {
        count_t s = 0;
        for (const auto& t : terms) s = checked_add(s, binomial(t.top, t.bottom));
        return s;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& t : terms) {
            if (!out.empty()) out += " + ";
            out += "C(" + std::to_string(t.top) + "," + std::to_string(t.bottom) + ")";
        }
        return out.empty() ? "0" : out;
    }

    bool operator==(const BinomialExpansion&) const = default;
};

/// Greedy i-binomial expansion of h. Total on h >= 1, i >= 1; h = 0 gives no terms.
inline BinomialExpansion macaulay_expansion(count_t h, int i) {
    if (i < 1) throw Error(Errc::ParameterOutOfRange, "expansion index must be >= 1");
    if (h < 0) throw Error(Errc::ParameterOutOfRange, "expansion of a negative integer");
    BinomialExpansion e;
    e.index = i;
    count_t rest = h;
    for (int j = i; j >= 1 && rest > 0; --j) {
        // largest m with C(m, j) <= rest; m >= j since C(j, j) = 1 <= rest
        auto fits = [&](count_t m) {
            try {
                return binomial(m, j) <= rest;
            } catch (const Error&) {
                return false;  // overflowed, so certainly > rest
            }
        };
        count_t lo = j, hi = j + 1;
        while (fits(hi)) {
            lo = hi;
            hi = checked_mul(hi, 2);
        }
        while (hi - lo > 1) {
            count_t mid = lo + (hi - lo) / 2;
            if (fits(mid)) lo = mid; else hi = mid;
        }
        e.terms.push_back({lo, j});
        rest -= binomial(lo, j);
    }
    return e;
}

/// h^<i>: Macaulay's bound on the next value of an O-sequence. 0^<i> = 0.
inline count_t upper_shift(count_t h, int i) {
    if (h == 0) return 0;
    count_t s = 0;
    for (const auto& t : macaulay_expansion(h, i).terms)
        s = checked_add(s, binomial(t.top + 1, t.bottom + 1));
    return s;
}

/// h^-: Green's hyperplane-restriction bound. 0^- = 0.
inline count_t lower_shift(count_t h, int i) {
    if (h == 0) return 0;
    count_t s = 0;
    for (const auto& t : macaulay_expansion(h, i).terms)
        s = checked_add(s, binomial(t.top - 1, t.bottom));
    return s;
}

// ---------------------------------------------------------------------------
// OSequence
// ---------------------------------------------------------------------------

struct ValidationResult;

/// Candidate h-vector (h_0, ..., h_s) with h_0 = 1, trailing zeros stripped.
class OSequence {
public:
    /// Strips trailing zeros. Throws on empty input, h_0 != 1, negative
    /// entries or a nonzero entry after a zero.
    explicit OSequence(std::vector<count_t> entries) : h_(std::move(entries)) {
        if (h_.empty()) throw Error(Errc::EmptySequence, "no entries");
        for (count_t v : h_)
            if (v < 0) throw Error(Errc::NegativeEntry, "entries must be nonnegative");
        if (h_[0] != 1) throw Error(Errc::LeadingEntryNotOne, "h_0 = " + std::to_string(h_[0]));
        while (h_.size() > 1 && h_.back() == 0) h_.pop_back();
        auto zero = std::find(h_.begin(), h_.end(), 0);
        if (zero != h_.end())
            throw Error(Errc::NotArtinianShape,
                        "nonzero entry after h_" + std::to_string(zero - h_.begin()) + " = 0");
    }

    OSequence(std::initializer_list<count_t> entries) : OSequence(std::vector<count_t>(entries)) {}

    /// h_t, with h_t = 0 past the socle degree.
    count_t operator[](int t) const {
        return t >= 0 && t < static_cast<int>(h_.size()) ? h_[static_cast<std::size_t>(t)] : 0;
    }
    int socle_degree() const { return static_cast<int>(h_.size()) - 1; }
    count_t codim() const { return (*this)[1]; }
    std::span<const count_t> entries() const { return h_; }
    std::size_t size() const { return h_.size(); }
    bool validated() const { return validated_; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(h_[i]);
        }
        return out;
    }

    bool operator==(const OSequence& o) const { return h_ == o.h_; }

private:
    friend ValidationResult validate(const OSequence&);
    std::vector<count_t> h_;
    bool validated_ = false;
};

/// Parses "1,3,6,10,8,7" (whitespace around entries tolerated).
inline OSequence parse_sequence(std::string_view text) {
    std::vector<count_t> v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        count_t x = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw Error(Errc::ParseError, "bad sequence entry '" + std::string(tok) + "'");
        v.push_back(x);
        pos = comma + 1;
    }
    return OSequence(std::move(v));
}

struct MacaulayViolation {
    int degree;        // first d with h_{d+1} > h_d^<d>
    count_t next;      // h_{d+1}
    count_t bound;     // h_d^<d>
};

struct ValidationResult {
    OSequence sequence;
    std::optional<MacaulayViolation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Macaulay's criterion: valid iff h_{d+1} <= h_d^<d> for all 1 <= d <= s-1.
inline ValidationResult validate(const OSequence& H) {
    ValidationResult r{H, std::nullopt};
    for (int d = 1; d < H.socle_degree(); ++d) {
        count_t bound = upper_shift(H[d], d);
        if (H[d + 1] > bound) {
            r.violation = MacaulayViolation{d, H[d + 1], bound};
            return r;
        }
    }
    r.sequence.validated_ = true;
    return r;
}

/// Validated copy of H; throws MacaulayViolation otherwise.
inline OSequence require_valid(const OSequence& H) {
    auto r = validate(H);
    if (!r.ok())
        throw Error(Errc::MacaulayViolation,
                    "h_" + std::to_string(r.violation->degree + 1) + " = " +
                        std::to_string(r.violation->next) + " exceeds h_" +
                        std::to_string(r.violation->degree) + "^<" +
                        std::to_string(r.violation->degree) + "> = " +
                        std::to_string(r.violation->bound));
    return r.sequence;
}

/// Delta H = (h_0, h_1 - h_0, ..., h_s - h_{s-1}).
inline std::vector<count_t> first_difference(const OSequence& H) {
    std::vector<count_t> d(H.size());
    d[0] = H[0];
    for (int t = 1; t <= H.socle_degree(); ++t) d[static_cast<std::size_t>(t)] = H[t] - H[t - 1];
    return d;
}

struct ShapeReport {
    int theta = 0;                            // least t with h_t > h_{t+1}
    std::optional<int> alpha;                 // least t with h_t = h_{t+1}
    bool strictly_unimodal = false;
    std::vector<std::pair<int, int>> plateaus;  // maximal runs [start, end] of equal values
    std::vector<count_t> delta;
};

inline ShapeReport shape(const OSequence& H) {
    ShapeReport r;
    const int s = H.socle_degree();
    r.delta = first_difference(H);
    r.theta = s;
    for (int t = 0; t < s; ++t)
        if (H[t] > H[t + 1]) {
            r.theta = t;
            break;
        }
    for (int t = 0; t < s; ++t)
        if (H[t] == H[t + 1]) {
            r.alpha = t;
            break;
        }
    for (int t = 0; t < s;) {
        int e = t;
        while (e < s && H[e] == H[e + 1]) ++e;
        if (e > t) r.plateaus.emplace_back(t, e);
        t = e + 1;
    }
    // strictly increasing, a flat top, then strictly decreasing
    int t = 0;
    while (t < s && H[t] < H[t + 1]) ++t;
    while (t < s && H[t] == H[t + 1]) ++t;
    while (t < s && H[t] > H[t + 1]) ++t;
    r.strictly_unimodal = (t == s);
    return r;
}

// ---------------------------------------------------------------------------
// Reduction-number bounds read off H alone
// ---------------------------------------------------------------------------

/// min{ k : h_{k+1} <= k+1 }. Bounds r_1(A) from above for every algebra
/// with Hilbert function H; never exceeds s since h_{s+1} = 0.
inline int r1_upper_bound(const OSequence& H) {
    for (int k = 0;; ++k)
        if (H[k + 1] <= k + 1) return k;
}

/// r_1 of an algebra with the Weak Lefschetz Property: multiplication by a
/// Lefschetz element onto degree t+1 is surjective exactly when h_t >= h_{t+1}.
inline int r1_under_wlp(const OSequence& H) {
    for (int t = 0;; ++t)
        if (H[t] >= H[t + 1]) return t;
}

} // namespace oseq
