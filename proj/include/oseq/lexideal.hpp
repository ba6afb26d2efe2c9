#pragma once

/**
 * @file lexideal.hpp
 * @brief Monomial ideals stored degreewise; lex-segment ideals of O-sequences.
 *
 * A MonomialIdeal materializes slices 0..max_degree. The lex-segment ideal of
 * an O-sequence H in n variables has, in each degree d, the
 * dim R_d - h_d lex-largest monomials.
 */

#include <map>
#include <string>
#include <vector>

#include "oseq/binomial.hpp"
#include "oseq/error.hpp"
#include "oseq/monomial.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// slices[d] is the degree-d part. Throws NotAnIdeal unless
    /// R_1 * slices[d] is contained in slices[d+1].
    MonomialIdeal(int n, std::vector<MonomialSet> slices) : n_(n), slices_(std::move(slices)) {
        for (std::size_t d = 0; d < slices_.size(); ++d) {
            const auto& S = slices_[d];
            if (S.nvars() != n || S.degree() != static_cast<int>(d))
                throw Error(Errc::DimensionMismatch, "slice " + std::to_string(d) + " has wrong shape");
        }
        for (std::size_t d = 0; d + 1 < slices_.size(); ++d)
            for (const auto& u : slices_[d])
                for (int k = 0; k < n_; ++k)
                    if (!slices_[d + 1].contains(u.times(k)))
                        throw Error(Errc::NotAnIdeal, u.times(k).to_string() + " missing from degree " +
                                                          std::to_string(d + 1));
    }

    /// The ideal generated by `gens`, materialized through degree max_degree.
    static MonomialIdeal generated_by(int n, const std::vector<Monomial>& gens, int max_degree) {
        std::vector<MonomialSet> slices;
        for (int t = 0; t <= max_degree; ++t) slices.push_back(degree_span(gens, t, n));
        MonomialIdeal J;
        J.n_ = n;
        J.slices_ = std::move(slices);
        return J;
    }

    int nvars() const { return n_; }
    int max_degree() const { return static_cast<int>(slices_.size()) - 1; }

    const MonomialSet& slice(int d) const {
        if (d < 0 || d > max_degree())
            throw Error(Errc::DegreeNotMaterialized,
                        "degree " + std::to_string(d) + " (materialized 0.." + std::to_string(max_degree()) + ")");
        return slices_[static_cast<std::size_t>(d)];
    }

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && slices_ == o.slices_; }

private:
    friend MonomialIdeal lex_segment_ideal(const OSequence&, int);
    friend MonomialIdeal truncated_ideal(const MonomialIdeal&, int, int);
    friend MonomialIdeal restrict_last_variable(const MonomialIdeal&);

    int n_ = 0;
    std::vector<MonomialSet> slices_;
};

/// Degree-d minimal generators: slice(d) minus R_1 * slice(d-1).
inline MonomialSet minimal_generators(const MonomialIdeal& J, int d) {
    const auto& S = J.slice(d);
    if (d == 0) return S;
    const auto& below = J.slice(d - 1);
    std::vector<char> covered(static_cast<std::size_t>(monomial_count(J.nvars(), d)), 0);
    for (const auto& u : below)
        for (int k = 0; k < J.nvars(); ++k) covered[static_cast<std::size_t>(lex_rank(u.times(k)))] = 1;
    std::vector<Monomial> gens;
    for (const auto& u : S)
        if (!covered[static_cast<std::size_t>(lex_rank(u))]) gens.push_back(u);
    return MonomialSet(J.nvars(), d, std::move(gens));
}

/// All minimal generators through max_degree, by degree then lex-descending.
inline std::vector<Monomial> all_minimal_generators(const MonomialIdeal& J) {
    std::vector<Monomial> out;
    for (int d = 0; d <= J.max_degree(); ++d) {
        auto G = minimal_generators(J, d);
        out.insert(out.end(), G.begin(), G.end());
    }
    return out;
}

/// Lex-segment ideal of H in n >= codim variables, slices 0..s+1.
inline MonomialIdeal lex_segment_ideal(const OSequence& H, int n) {
    OSequence V = H.validated() ? H : require_valid(H);
    if (V.codim() > n)
        throw Error(Errc::CodimExceedsVars,
                    "codim " + std::to_string(V.codim()) + " needs at least that many variables, got " + std::to_string(n));
    MonomialIdeal J;
    J.n_ = n;
    for (int d = 0; d <= V.socle_degree() + 1; ++d) {
        auto all = monomials_of_degree(n, d);
        auto keep = static_cast<std::size_t>(monomial_count(n, d) - V[d]);
        all.resize(keep);
        J.slices_.emplace_back(n, d, std::move(all));
    }
    return J;
}

/// Last (lex-smallest) monomial of I_d for the lex ideal in k[x1,x2,x3] with
/// h_d = d + i, 1 <= i <= (d^2+d)/2.
inline Monomial last_monomial_lex(int d, int i) {
    if (d < 1 || i < 1 || i > (d * d + d) / 2)
        throw Error(Errc::IndexOutOfRange,
                    "need 1 <= i <= (d^2+d)/2, got d=" + std::to_string(d) + ", i=" + std::to_string(i));
    // Counted from the bottom, the monomials outside I_d are the last d+i;
    // the block with x1-exponent a holds d+1-a monomials ordered by x2-exponent.
    int pos = d + i + 1;  // 1-based position from the bottom
    int a = 0;
    while (pos > d + 1 - a) {
        pos -= d + 1 - a;
        ++a;
    }
    int b = pos - 1;
    return Monomial{a, b, d - a - b};
}

/// The ideal generated by the slices of J in degrees <= d, materialized
/// through max_degree (defaults to J's).
inline MonomialIdeal truncated_ideal(const MonomialIdeal& J, int d, int max_degree = -1) {
    if (max_degree < 0) max_degree = J.max_degree();
    if (d > J.max_degree()) throw Error(Errc::DegreeNotMaterialized, "truncation degree " + std::to_string(d));
    MonomialIdeal T;
    T.n_ = J.nvars();
    for (int t = 0; t <= max_degree; ++t) {
        if (t <= d) T.slices_.push_back(J.slice(t));
        else if (t == 0) T.slices_.emplace_back(J.nvars(), 0);
        else T.slices_.push_back(linear_span(T.slices_.back()));
    }
    return T;
}

/// (J + (x_n)) / (x_n) as an ideal of k[x_1..x_{n-1}].
inline MonomialIdeal restrict_last_variable(const MonomialIdeal& J) {
    const int n = J.nvars();
    if (n < 2) throw Error(Errc::ParameterOutOfRange, "need at least two variables");
    MonomialIdeal R;
    R.n_ = n - 1;
    for (int t = 0; t <= J.max_degree(); ++t) {
        std::vector<Monomial> keep;
        for (const auto& u : J.slice(t))
            if (u[n - 1] == 0) keep.push_back(u.drop_last());
        R.slices_.emplace_back(n - 1, t, std::move(keep));
    }
    return R;
}

/// H(R/J, t) = dim R_t - |J_t| for lo <= t <= hi.
inline std::vector<count_t> quotient_hilbert(const MonomialIdeal& J, int lo, int hi) {
    std::vector<count_t> out;
    for (int t = lo; t <= hi; ++t)
        out.push_back(monomial_count(J.nvars(), t) - static_cast<count_t>(J.slice(t).size()));
    return out;
}

inline std::vector<count_t> quotient_hilbert(const MonomialIdeal& J) { return quotient_hilbert(J, 0, J.max_degree()); }

/// dim ((J : x_n) / J)_t by direct monomial division.
inline count_t colon_last_variable_dim(const MonomialIdeal& J, int t) {
    const int n = J.nvars();
    const auto& up = J.slice(t + 1);
    const auto& here = J.slice(t);
    count_t c = 0;
    for (const auto& u : monomials_of_degree(n, t))
        if (!here.contains(u) && up.contains(u.times(n - 1))) ++c;
    return c;
}

inline bool is_strongly_stable(const MonomialIdeal& J) {
    for (int d = 0; d <= J.max_degree(); ++d)
        if (!is_strongly_stable(J.slice(d))) return false;
    return true;
}

} // namespace oseq
