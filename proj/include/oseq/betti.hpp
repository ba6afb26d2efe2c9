#pragma once

/**
 * @file betti.hpp
 * @brief Graded Betti numbers of ideals: Eliahou-Kervaire for stable
 * monomial ideals, closed forms for lex and generic initial ideals, and the
 * Betti-diagram text layout.
 *
 * Diagrams hold beta_{q,j}(I) for the ideal I (q = 0..n-1). Row t, column q
 * of the rendered diagram is beta_{q,t+q+1}, so row t collects syzygies
 * coming from generators of degree t+1.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oseq/binomial.hpp"
#include "oseq/error.hpp"
#include "oseq/lexideal.hpp"
#include "oseq/monomial.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

class BettiDiagram {
public:
    BettiDiagram() = default;

    /// A diagram known for generator degrees lo..hi (entries j - q in that
    /// range); everything in range starts at zero.
    BettiDiagram(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {}

    int nvars() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    bool covers(int q, int j) const { return q >= 0 && q < n_ && j - q >= lo_ && j - q <= hi_; }

    /// beta_{q,j}; MissingEntry outside the covered range.
    count_t at(int q, int j) const {
        if (!covers(q, j))
            throw Error(Errc::MissingEntry, "beta_{" + std::to_string(q) + "," + std::to_string(j) +
                                                "} outside generator degrees " + std::to_string(lo_) + ".." +
                                                std::to_string(hi_));
        auto it = table_.find({q, j});
        return it == table_.end() ? 0 : it->second;
    }

    void set(int q, int j, count_t v) {
        if (!covers(q, j)) throw Error(Errc::MissingEntry, "cannot set an uncovered entry");
        if (v == 0) table_.erase({q, j});
        else table_[{q, j}] = v;
    }

    void add(int q, int j, count_t v) { set(q, j, checked_add(at(q, j), v)); }

    /// Nonzero entries keyed by (q, j).
    const std::map<std::pair<int, int>, count_t>& entries() const { return table_; }

    bool operator==(const BettiDiagram& o) const {
        return n_ == o.n_ && lo_ == o.lo_ && hi_ == o.hi_ && table_ == o.table_;
    }

private:
    int n_ = 0;
    int lo_ = 1;
    int hi_ = 0;
    std::map<std::pair<int, int>, count_t> table_;
};

/// Eliahou-Kervaire: beta_{q,i}(J) = sum over T in G(J)_{i-q} of C(m(T)-1, q),
/// for generator degrees lo..hi (default 1..max_degree). Pass
/// check_stable = false only for ideals stable by construction.
inline BettiDiagram ek_betti(const MonomialIdeal& J, int lo = 1, int hi = -1, bool check_stable = true) {
    if (hi < 0) hi = J.max_degree();
    if (hi > J.max_degree()) throw Error(Errc::DegreeNotMaterialized, "degree " + std::to_string(hi));
    for (int d = 0; check_stable && d <= hi; ++d)
        if (!is_strongly_stable(J.slice(d)))
            throw Error(Errc::NotStable, "degree-" + std::to_string(d) + " slice is not strongly stable");
    const int n = J.nvars();
    BettiDiagram D(n, lo, hi);
    for (int g = std::max(lo, 0); g <= hi; ++g)
        for (const auto& T : minimal_generators(J, g)) {
            if (T.degree() == 0) continue;
            int m = T.max_index();
            for (int q = 0; q < n && q <= m - 1; ++q) D.add(q, g + q, binomial(m - 1, q));
        }
    return D;
}

/// dim soc(R/I)_t = beta_{n-1, t+n}(I).
inline count_t socle_from_betti(const BettiDiagram& D, int t) { return D.at(D.nvars() - 1, t + D.nvars()); }

/// Row beta_{i, i+d+1}(Gin(I)), i = 0..n-1, for any I with Hilbert function H,
/// valid once d exceeds r_1. Without `assumed_r1` the H-only bound is used.
inline std::vector<count_t> gin_betti_plateau(const OSequence& H, int n, int d,
                                              std::optional<int> assumed_r1 = std::nullopt) {
    int bound = assumed_r1 ? *assumed_r1 : r1_upper_bound(H);
    if (d <= bound)
        throw Error(Errc::ReductionBoundNotMet,
                    "d = " + std::to_string(d) + " must exceed r1 bound " + std::to_string(bound));
    std::vector<count_t> row;
    for (int i = 0; i < n; ++i) row.push_back(checked_mul(H[d] - H[d + 1], binomial(n - 1, i)));
    return row;
}

/// beta_{n-1, d+n-1}(Gin(I)) = h_{d-1} - h_d: the degree-d generators of the
/// generic initial ideal divisible by x_n. Needs d - 1 >= r_1.
inline count_t gin_top_betti(const OSequence& H, int d, std::optional<int> assumed_r1 = std::nullopt) {
    int bound = assumed_r1 ? *assumed_r1 : r1_upper_bound(H);
    if (d - 1 < bound)
        throw Error(Errc::ReductionBoundNotMet,
                    "d - 1 = " + std::to_string(d - 1) + " is below r1 bound " + std::to_string(bound));
    return H[d - 1] - H[d];
}

struct PlateauBetti {
    count_t beta1;  // beta_{1,d+2}(I^lex)
    count_t beta2;  // beta_{2,d+2}(I^lex)
    bool operator==(const PlateauBetti&) const = default;
};

/// Closed form for the lex ideal in k[x1,x2,x3] of any H with
/// h_{d-1} = d+i+j > h_d = h_{d+1} = d+i.
inline PlateauBetti lex_plateau_betti(int d, int i, int j) {
    if (d < 1 || i < 1 || 2 * i > d * d + d || j < 1 || 2 * (i + j) > d * d - d)
        throw Error(Errc::IndexOutOfRange, "need 1 <= i <= (d^2+d)/2, j >= 1, i+j <= (d^2-d)/2; got d=" +
                                               std::to_string(d) + ", i=" + std::to_string(i) +
                                               ", j=" + std::to_string(j));
    PlateauBetti r{0, 0};
    // beta_1: i lies in [a_k, b_k]; the first k values give 2k-1, the rest 2k
    for (int k = 1; k <= d; ++k) {
        int a = (k - 1) * d - k * (k - 3) / 2;
        int b = k * d - (k - 1) * k / 2;
        if (a <= i && i <= b) {
            r.beta1 = (i <= a + k - 1) ? 2 * k - 1 : 2 * k;
            break;
        }
    }
    // beta_2 = j + l for i in the half-open interval ((l-1)d - (l-2)(l-1)/2, ld - (l-1)l/2]
    for (int l = 1; l <= d; ++l) {
        int lo = (l - 1) * d - (l - 2) * (l - 1) / 2;
        int hi = l * d - (l - 1) * l / 2;
        if (lo < i && i <= hi) {
            r.beta2 = j + l;
            break;
        }
    }
    return r;
}

/// Text layout: a "total:" row of column sums, then one row per t from the
/// first to the last nonzero row, entries beta_{q,t+q+1}, "-" for zero.
inline std::string render_diagram(const BettiDiagram& D) {
    const int n = D.nvars();
    std::vector<count_t> total(static_cast<std::size_t>(n), 0);
    int first = 0, last = -1;
    for (const auto& [key, v] : D.entries()) {
        auto [q, j] = key;
        total[static_cast<std::size_t>(q)] += v;
        int t = j - q - 1;
        if (last < first) first = last = t;
        first = std::min(first, t);
        last = std::max(last, t);
    }
    auto cell = [](count_t v) { return v == 0 ? std::string("-") : std::to_string(v); };
    std::string out = "total:";
    for (count_t v : total) out += " " + cell(v);
    out += '\n';
    for (int t = first; t <= last; ++t) {
        std::string label = std::to_string(t) + ":";
        out += std::string(label.size() < 6 ? 6 - label.size() : 0, ' ') + label;
        for (int q = 0; q < n; ++q) {
            int j = t + q + 1;
            out += " " + cell(D.covers(q, j) ? D.at(q, j) : 0);
        }
        out += '\n';
    }
    return out;
}

} // namespace oseq
