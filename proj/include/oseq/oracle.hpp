#pragma once

/**
 * @file oracle.hpp
 * @brief Exact linear algebra over graded pieces of k[x_1..x_n]/I, k = Q.
 *
 * Degree bases are kept in reduced row-echelon form with columns sorted
 * descending in a monomial order, so pivot columns are leading monomials and
 * non-pivot columns are a monomial basis of A_t = R_t / I_t. Map ranks
 * (socle, colon, Koszul differentials) use fraction-free integer elimination.
 *
 * Generic coordinates are sampled: a seeded random integer matrix with
 * entries in [-1000, 1000]. Two independent draws must agree; three failed
 * attempts raise LowGenericity.
 */

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oseq/betti.hpp"
#include "oseq/binomial.hpp"
#include "oseq/error.hpp"
#include "oseq/lexideal.hpp"
#include "oseq/monomial.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

using Rational = mpq_class;
using RMatrix = std::vector<std::vector<Rational>>;

inline constexpr int kDefaultMaxDegree = 20;

/// OSEQ_MAX_DEGREE if set to a positive integer, else 20.
inline int default_max_degree() {
    if (const char* env = std::getenv("OSEQ_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
    }
    return kDefaultMaxDegree;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial term(const Monomial& m, const Rational& c = 1) {
        Polynomial p(m.nvars());
        p.add(m, c);
        return p;
    }

    void add(const Monomial& m, const Rational& c) {
        if (m.nvars() != n_) throw Error(Errc::DimensionMismatch, "term " + m.to_string());
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (fresh) {
            it->second.canonicalize();
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Degree of a nonzero homogeneous polynomial; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) r.add(a * b, ca * cb);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add(m, c);
        return r;
    }

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Terms in degrevlex-descending order, e.g. "2*x1^2 - 1/3*x2*x3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return degrevlex_less(b.first, a.first); });
        std::string out;
        for (const auto& [m, c] : ts) {
            Rational a = abs(c);
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            bool unit = m.degree() == 0;
            if (a != 1 || unit) out += a.get_str() + (unit ? "" : "*");
            if (!unit) out += m.to_string();
        }
        return out;
    }

private:
    int n_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// f(images[0], ..., images[n-1]); images live in a common ring.
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != f.nvars())
        throw Error(Errc::DimensionMismatch, "substitution needs one image per variable");
    const int m = images.empty() ? 0 : images[0].nvars();
    std::vector<std::vector<Polynomial>> pw(images.size());
    auto power = [&](std::size_t k, int e) -> const Polynomial& {
        auto& v = pw[k];
        if (v.empty()) v.push_back(Polynomial::term(Monomial(m)));
        while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[k]);
        return v[static_cast<std::size_t>(e)];
    };
    Polynomial out(m);
    for (const auto& [mon, c] : f.terms()) {
        Polynomial t = Polynomial::term(Monomial(m), c);
        for (int k = 0; k < f.nvars(); ++k)
            if (mon[k] > 0) t = t * power(static_cast<std::size_t>(k), mon[k]);
        out = out + t;
    }
    return out;
}

inline Polynomial linear_form(const std::vector<Rational>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    Polynomial L(n);
    for (int k = 0; k < n; ++k) L.add(Monomial(n).times(k), coeffs[static_cast<std::size_t>(k)]);
    return L;
}

// ---------------------------------------------------------------------------
// Exact rank
// ---------------------------------------------------------------------------

/// Rank by fraction-free elimination: rows are cleared of denominators and
/// kept primitive.
inline std::size_t exact_rank(const RMatrix& rows) {
    std::vector<std::vector<mpz_class>> M;
    for (const auto& r : rows) {
        mpz_class l = 1;
        for (const auto& x : r)
            if (x != 0) l = lcm(l, mpz_class(x.get_den()));
        std::vector<mpz_class> z(r.size());
        bool nz = false;
        for (std::size_t c = 0; c < r.size(); ++c) {
            z[c] = r[c].get_num() * (l / r[c].get_den());
            nz = nz || z[c] != 0;
        }
        if (nz) M.push_back(std::move(z));
    }
    auto make_primitive = [](std::vector<mpz_class>& v) {
        mpz_class g = 0;
        for (const auto& x : v) g = gcd(g, x);
        if (g > 1)
            for (auto& x : v) x /= g;
    };
    if (M.empty()) return 0;
    const std::size_t cols = M[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
        std::size_t p = rank;
        while (p < M.size() && M[p][c] == 0) ++p;
        if (p == M.size()) continue;
        std::swap(M[p], M[rank]);
        const auto& piv = M[rank];
        for (std::size_t r = rank + 1; r < M.size(); ++r) {
            if (M[r][c] == 0) continue;
            mpz_class a = piv[c], b = M[r][c];
            mpz_class g = gcd(a, b);
            a /= g;
            b /= g;
            for (std::size_t k = c; k < cols; ++k) M[r][k] = a * M[r][k] - b * piv[k];
            make_primitive(M[r]);
        }
        ++rank;
    }
    return rank;
}

/// Exact determinant by Bareiss elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> A) {
    const std::size_t n = A.size();
    mpz_class prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[p], A[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return n == 0 ? mpz_class(1) : sign * A[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Seeded draws
// ---------------------------------------------------------------------------

/// Independent child seed k of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// x_i -> sum_j matrix[i][j] x_j.
struct LinearChange {
    std::vector<std::vector<Rational>> matrix;
    std::uint64_t seed = 0;

    Polynomial apply(const Polynomial& f) const {
        std::vector<Polynomial> images;
        for (const auto& row : matrix) images.push_back(linear_form(row));
        return substitute(f, images);
    }
};

inline LinearChange draw_linear_change(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    while (true) {
        std::vector<std::vector<mpz_class>> Z(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n)));
        for (auto& row : Z)
            for (auto& x : row) x = coef(rng);
        if (bareiss_det(Z) == 0) continue;
        LinearChange g;
        g.seed = seed;
        for (const auto& row : Z) {
            std::vector<Rational> r;
            for (const auto& x : row) r.emplace_back(x);
            g.matrix.push_back(std::move(r));
        }
        return g;
    }
}

/// Random linear form with entries in [-1000, 1000] and nonzero x_n coefficient.
inline Polynomial random_linear_form(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    do {
        for (auto& x : c) x = coef(rng);
    } while (c.back() == 0);
    return linear_form(c);
}

// ---------------------------------------------------------------------------
// Graded ideals
// ---------------------------------------------------------------------------

/// Reduced row-echelon basis of I_t over the monomials of R_t.
struct DegreeBasis {
    int degree = 0;
    MonomialOrder order = MonomialOrder::Degrevlex;
    std::vector<Monomial> columns;   // descending in `order`
    std::vector<int> column_of_lex;  // lex_rank -> column
    RMatrix rows;                    // sorted by pivot
    std::vector<int> pivots;
    std::vector<int> standard;        // non-pivot columns: a basis of A_t
    std::vector<int> standard_index;  // column -> position in `standard`, or -1

    std::size_t rank() const { return rows.size(); }
    int column(const Monomial& m) const { return column_of_lex[static_cast<std::size_t>(lex_rank(m))]; }

    std::vector<Rational> coordinates(const Polynomial& f) const {
        std::vector<Rational> v(columns.size());
        for (const auto& [m, c] : f.terms()) {
            if (m.degree() != degree) throw Error(Errc::DimensionMismatch, "term of wrong degree");
            v[static_cast<std::size_t>(column(m))] += c;
        }
        return v;
    }

    /// Coordinates of v mod I_t on the standard monomials.
    std::vector<Rational> normal_form(std::vector<Rational> v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto p = static_cast<std::size_t>(pivots[r]);
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (std::size_t c = p; c < v.size(); ++c)
                if (rows[r][c] != 0) v[c] -= f * rows[r][c];
        }
        std::vector<Rational> out;
        out.reserve(standard.size());
        for (int c : standard) out.push_back(v[static_cast<std::size_t>(c)]);
        return out;
    }

    void insert(std::vector<Rational> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto p = static_cast<std::size_t>(pivots[r]);
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (std::size_t c = p; c < v.size(); ++c)
                if (rows[r][c] != 0) v[c] -= f * rows[r][c];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return;
        Rational lead = v[p];
        for (std::size_t c = p; c < v.size(); ++c) v[c] /= lead;
        for (auto& row : rows) {
            if (row[p] == 0) continue;
            Rational f = row[p];
            for (std::size_t c = p; c < v.size(); ++c)
                if (v[c] != 0) row[c] -= f * v[c];
        }
        auto at = std::lower_bound(pivots.begin(), pivots.end(), static_cast<int>(p));
        auto idx = at - pivots.begin();
        pivots.insert(at, static_cast<int>(p));
        rows.insert(rows.begin() + idx, std::move(v));
    }

    void finish() {
        standard.clear();
        standard_index.assign(columns.size(), -1);
        std::size_t r = 0;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (r < pivots.size() && pivots[r] == static_cast<int>(c)) {
                ++r;
                continue;
            }
            standard_index[c] = static_cast<int>(standard.size());
            standard.push_back(static_cast<int>(c));
        }
    }
};

/// A homogeneous ideal given by generators. Degree bases are computed lazily
/// and cached; a GradedIdeal must not be shared across threads.
class GradedIdeal {
public:
    GradedIdeal() = default;

    GradedIdeal(int n, std::vector<Polynomial> gens) : n_(n) {
        if (n < 1 || n > kMaxVars) throw Error(Errc::TooManyVariables, "n = " + std::to_string(n));
        for (auto& g : gens) {
            if (g.nvars() != n) throw Error(Errc::DimensionMismatch, "generator in " + std::to_string(g.nvars()) + " variables");
            if (!g.is_homogeneous()) throw Error(Errc::NonHomogeneousGenerator, g.to_string());
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static GradedIdeal from_monomials(const MonomialIdeal& J) {
        std::vector<Polynomial> gens;
        for (const auto& m : all_minimal_generators(J)) gens.push_back(Polynomial::term(m));
        return GradedIdeal(J.nvars(), std::move(gens));
    }

    int nvars() const { return n_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const DegreeBasis& basis(int t, MonomialOrder order = MonomialOrder::Degrevlex) const {
        auto key = std::make_pair(t, static_cast<int>(order));
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        DegreeBasis B;
        B.degree = t;
        B.order = order;
        B.columns = monomials_of_degree(n_, t);
        std::sort(B.columns.begin(), B.columns.end(),
                  [order](const Monomial& a, const Monomial& b) { return order_less(order, b, a); });
        B.column_of_lex.assign(B.columns.size(), -1);
        for (std::size_t c = 0; c < B.columns.size(); ++c)
            B.column_of_lex[static_cast<std::size_t>(lex_rank(B.columns[c]))] = static_cast<int>(c);
        if (t > 0) {
            const auto& prev = basis(t - 1, order);
            if (prev.rank() == prev.columns.size() && prev.rank() > 0) {
                for (std::size_t c = 0; c < B.columns.size(); ++c) {
                    std::vector<Rational> e(B.columns.size());
                    e[c] = 1;
                    B.rows.push_back(std::move(e));
                    B.pivots.push_back(static_cast<int>(c));
                }
            } else {
                for (const auto& row : prev.rows)
                    for (int k = 0; k < n_ && B.rank() < B.columns.size(); ++k) {
                        std::vector<Rational> v(B.columns.size());
                        for (std::size_t c = 0; c < row.size(); ++c)
                            if (row[c] != 0) v[static_cast<std::size_t>(B.column(prev.columns[c].times(k)))] = row[c];
                        B.insert(std::move(v));
                    }
            }
        }
        for (const auto& g : gens_)
            if (g.degree() == t && B.rank() < B.columns.size()) B.insert(B.coordinates(g));
        B.finish();
        return cache_.emplace(key, std::move(B)).first->second;
    }

    /// dim_k (R/I)_t.
    count_t hilbert(int t) const {
        if (t < 0) return 0;
        const auto& B = basis(t);
        return static_cast<count_t>(B.columns.size() - B.rank());
    }

    /// Last degree with (R/I)_t != 0; NotArtinianByTmax if none vanishes by tmax.
    int socle_degree(int tmax = -1) const {
        if (tmax < 0) tmax = default_max_degree();
        for (int t = 0; t <= tmax; ++t)
            if (hilbert(t) == 0) return t - 1;
        throw Error(Errc::NotArtinianByTmax, "quotient does not vanish by degree " + std::to_string(tmax));
    }

private:
    int n_ = 0;
    std::vector<Polynomial> gens_;
    mutable std::map<std::pair<int, int>, DegreeBasis> cache_;
};

inline std::vector<count_t> hilbert_quotient(const GradedIdeal& I, int lo, int hi) {
    std::vector<count_t> out;
    for (int t = lo; t <= hi; ++t) out.push_back(I.hilbert(t));
    return out;
}

/// The Hilbert function of an Artinian quotient as an O-sequence.
inline OSequence hilbert_sequence(const GradedIdeal& I, int tmax = -1) {
    int s = I.socle_degree(tmax);
    return OSequence(hilbert_quotient(I, 0, s));
}

/// Leading monomials of each degree basis, slices 0..max(s+1, min_degree).
inline MonomialIdeal initial_ideal_degreewise(const GradedIdeal& I, MonomialOrder order, int tmax = -1,
                                              int min_degree = 0) {
    int top = std::max(I.socle_degree(tmax) + 1, min_degree);
    std::vector<MonomialSet> slices;
    for (int t = 0; t <= top; ++t) {
        const auto& B = I.basis(t, order);
        std::vector<Monomial> lead;
        for (int p : B.pivots) lead.push_back(B.columns[static_cast<std::size_t>(p)]);
        slices.emplace_back(I.nvars(), t, std::move(lead));
    }
    return MonomialIdeal(I.nvars(), std::move(slices));
}

inline GradedIdeal transform(const GradedIdeal& I, const LinearChange& g) {
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(g.apply(f));
    return GradedIdeal(I.nvars(), std::move(gens));
}

/// in_degrevlex(g . I) for one seeded change of coordinates.
inline MonomialIdeal gin_single(const GradedIdeal& I, std::uint64_t seed, int tmax = -1, int min_degree = 0) {
    return initial_ideal_degreewise(transform(I, draw_linear_change(I.nvars(), seed)), MonomialOrder::Degrevlex,
                                    tmax, min_degree);
}

/// Generic initial ideal (degrevlex). Two independent draws per attempt must
/// agree; after three disagreeing attempts LowGenericity is raised.
inline MonomialIdeal gin_sample(const GradedIdeal& I, std::uint64_t seed, int tmax = -1, int min_degree = 0) {
    for (std::uint64_t a = 0; a < 3; ++a) {
        auto g1 = gin_single(I, derive_seed(seed, 2 * a), tmax, min_degree);
        auto g2 = gin_single(I, derive_seed(seed, 2 * a + 1), tmax, min_degree);
        if (g1 == g2) return g1;
    }
    throw Error(Errc::LowGenericity, "generic initial ideal draws disagree after 3 attempts");
}

// ---------------------------------------------------------------------------
// Multiplication maps, socle, colon
// ---------------------------------------------------------------------------

/// Rows: images in A_{t+1} of the standard monomials of A_t under f.
inline RMatrix multiplication_rows(const GradedIdeal& I, int t, const Polynomial& f) {
    const auto& src = I.basis(t);
    const auto& dst = I.basis(t + f.degree());
    RMatrix rows;
    for (int c : src.standard) {
        const Monomial& m = src.columns[static_cast<std::size_t>(c)];
        std::vector<Rational> v(dst.columns.size());
        for (const auto& [u, a] : f.terms()) v[static_cast<std::size_t>(dst.column(u * m))] += a;
        rows.push_back(dst.normal_form(std::move(v)));
    }
    return rows;
}

/// dim soc(R/I)_t for t = lo..hi.
inline std::vector<count_t> socle_dims(const GradedIdeal& I, int lo, int hi) {
    std::vector<count_t> out;
    const int n = I.nvars();
    for (int t = lo; t <= hi; ++t) {
        RMatrix stacked;
        for (int k = 0; k < n; ++k) {
            auto part = multiplication_rows(I, t, Polynomial::term(Monomial(n).times(k)));
            if (stacked.empty()) stacked = std::move(part);
            else
                for (std::size_t r = 0; r < part.size(); ++r)
                    stacked[r].insert(stacked[r].end(), part[r].begin(), part[r].end());
        }
        count_t dimA = I.hilbert(t);
        out.push_back(dimA - static_cast<count_t>(stacked.empty() ? 0 : exact_rank(stacked)));
    }
    return out;
}

/// dim (0 :_A L)_t for t = lo..hi.
inline std::vector<count_t> colon_dims(const GradedIdeal& I, const Polynomial& L, int lo, int hi) {
    std::vector<count_t> out;
    for (int t = lo; t <= hi; ++t)
        out.push_back(I.hilbert(t) - static_cast<count_t>(exact_rank(multiplication_rows(I, t, L))));
    return out;
}

inline GradedIdeal add_generator(const GradedIdeal& I, const Polynomial& f) {
    auto gens = I.generators();
    gens.push_back(f);
    return GradedIdeal(I.nvars(), std::move(gens));
}

/// min{ l : H(R/(I+(L)), l+1) = 0 } for one seeded L.
inline int r1_single(const GradedIdeal& I, std::uint64_t seed, int tmax = -1) {
    auto J = add_generator(I, random_linear_form(I.nvars(), seed));
    return J.socle_degree(tmax);
}

/// r_1(R/I) with the same two-draw agreement protocol as gin_sample.
inline int r1_general(const GradedIdeal& I, std::uint64_t seed, int tmax = -1) {
    for (std::uint64_t a = 0; a < 3; ++a) {
        int r = r1_single(I, derive_seed(seed, 2 * a), tmax);
        if (r == r1_single(I, derive_seed(seed, 2 * a + 1), tmax)) return r;
    }
    throw Error(Errc::LowGenericity, "reduction number draws disagree after 3 attempts");
}

/// (I + (L)) / (L) in k[x_1..x_{n-1}], eliminating x_n through L.
inline GradedIdeal hyperplane_section(const GradedIdeal& I, const Polynomial& L) {
    const int n = I.nvars();
    if (n < 2) throw Error(Errc::ParameterOutOfRange, "need at least two variables");
    if (L.degree() != 1) throw Error(Errc::ParameterOutOfRange, "L must be a linear form");
    Rational cn = 0;
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (const auto& [m, a] : L.terms()) c[static_cast<std::size_t>(m.max_index() - 1)] = a;
    cn = c.back();
    if (cn == 0) throw Error(Errc::ParameterOutOfRange, "L has no x_n term");
    std::vector<Polynomial> images;
    std::vector<Rational> last;
    for (int k = 0; k < n - 1; ++k) {
        std::vector<Rational> e(static_cast<std::size_t>(n - 1));
        e[static_cast<std::size_t>(k)] = 1;
        images.push_back(linear_form(e));
        last.push_back(-c[static_cast<std::size_t>(k)] / cn);
    }
    images.push_back(linear_form(last));
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(substitute(f, images));
    return GradedIdeal(n - 1, std::move(gens));
}

// ---------------------------------------------------------------------------
// Koszul homology
// ---------------------------------------------------------------------------

/// beta_{q,j}(I) = dim H_{q+1}(K(x_1..x_n) (x) R/I)_j, generator degrees 1..s+1.
inline BettiDiagram koszul_betti(const GradedIdeal& I, int tmax = -1) {
    const int n = I.nvars();
    const int s = I.socle_degree(tmax);
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(n + 1));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) S.push_back(k);
        subsets[S.size()].push_back(S);
    }
    auto subset_index = [&](const std::vector<int>& S) {
        const auto& all = subsets[S.size()];
        return static_cast<std::size_t>(std::find(all.begin(), all.end(), S) - all.begin());
    };
    auto dimA = [&](int t) { return t < 0 || t > s ? count_t(0) : I.hilbert(t); };
    auto dimC = [&](int p, int j) {
        return p < 0 || p > n ? count_t(0) : checked_mul(static_cast<count_t>(subsets[static_cast<std::size_t>(p)].size()), dimA(j - p));
    };
    // rank of d_p : C_{p,j} -> C_{p-1,j}
    auto rank_d = [&](int p, int j) -> count_t {
        if (p < 1 || p > n || dimC(p, j) == 0 || dimC(p - 1, j) == 0) return 0;
        const int t = j - p;
        const auto& src = I.basis(t);
        const auto& dst = I.basis(t + 1);
        const std::size_t block = dst.standard.size();
        RMatrix rows;
        for (const auto& S : subsets[static_cast<std::size_t>(p)])
            for (int c : src.standard) {
                std::vector<Rational> row(subsets[static_cast<std::size_t>(p - 1)].size() * block);
                for (std::size_t k = 0; k < S.size(); ++k) {
                    std::vector<int> T = S;
                    T.erase(T.begin() + static_cast<std::ptrdiff_t>(k));
                    std::vector<Rational> v(dst.columns.size());
                    v[static_cast<std::size_t>(dst.column(src.columns[static_cast<std::size_t>(c)].times(S[k])))] = 1;
                    auto nf = dst.normal_form(std::move(v));
                    std::size_t off = subset_index(T) * block;
                    for (std::size_t x = 0; x < block; ++x)
                        if (nf[x] != 0) row[off + x] += (k % 2 == 0) ? nf[x] : Rational(-nf[x]);
                }
                rows.push_back(std::move(row));
            }
        return static_cast<count_t>(exact_rank(rows));
    };
    BettiDiagram D(n, 1, s + 1);
    for (int q = 0; q < n; ++q)
        for (int g = 1; g <= s + 1; ++g) {
            int j = g + q, p = q + 1;
            count_t h = dimC(p, j) - rank_d(p, j) - rank_d(p + 1, j);
            if (h) D.set(q, j, h);
        }
    return D;
}

// ---------------------------------------------------------------------------
// Cancellation chain
// ---------------------------------------------------------------------------

struct CancellationReport {
    OSequence hilbert{1};
    BettiDiagram ideal, gin, lex;
    bool chain_ok = true;
    bool identity_ok = true;
    std::vector<std::string> problems;
};

/// beta(I) <= beta(Gin I) <= beta(I^lex) entrywise, plus the per-degree
/// alternating identity for each pair (checked when n = 3).
inline CancellationReport verify_cancellation(const GradedIdeal& I, std::uint64_t seed, int tmax = -1) {
    CancellationReport rep;
    const int n = I.nvars();
    rep.hilbert = require_valid(hilbert_sequence(I, tmax));
    const int s = rep.hilbert.socle_degree();
    rep.ideal = koszul_betti(I, tmax);
    rep.gin = ek_betti(gin_sample(I, seed, tmax));
    rep.lex = ek_betti(lex_segment_ideal(rep.hilbert, n));
    for (int q = 0; q < n; ++q)
        for (int g = 1; g <= s + 1; ++g) {
            int j = g + q;
            count_t a = rep.ideal.at(q, j), b = rep.gin.at(q, j), c = rep.lex.at(q, j);
            if (a > b || b > c) {
                rep.chain_ok = false;
                rep.problems.push_back("beta_{" + std::to_string(q) + "," + std::to_string(j) + "}: " +
                                       std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c));
            }
        }
    if (n == 3) {
        auto check = [&](const BettiDiagram& big, const BettiDiagram& small, const char* what) {
            for (int j = 1; j <= s + 3; ++j) {
                auto get = [&](const BettiDiagram& D, int q) { return D.covers(q, j) ? D.at(q, j) : count_t(0); };
                count_t lhs = get(big, 1) - get(small, 1);
                count_t rhs = (get(big, 0) - get(small, 0)) + (get(big, 2) - get(small, 2));
                if (lhs != rhs) {
                    rep.identity_ok = false;
                    rep.problems.push_back(std::string("alternating identity fails for ") + what + " at degree " +
                                           std::to_string(j));
                }
            }
        };
        check(rep.lex, rep.ideal, "lex vs ideal");
        check(rep.gin, rep.ideal, "gin vs ideal");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Random samples
// ---------------------------------------------------------------------------

/// Seeded random Artinian ideal in n variables with h_1 = n and socle degree
/// at most max_socle. Generators have degree 2..5, small integer
/// coefficients, random supports; some are pure monomials. Redraws until the
/// quotient vanishes within the cap.
inline GradedIdeal random_artinian_ideal(int n, std::uint64_t seed, int max_socle = 6) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ngens(n, n + 2), deg(2, 5), coef(-5, 5), coin(0, 9);
    while (true) {
        std::vector<Polynomial> gens;
        int k = ngens(rng);
        for (int g = 0; g < k; ++g) {
            int d = deg(rng);
            auto mons = monomials_of_degree(n, d);
            Polynomial f(n);
            if (coin(rng) < 3) {
                std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
                f.add(mons[pick(rng)], 1);
            } else {
                for (const auto& m : mons)
                    if (coin(rng) < 6) f.add(m, coef(rng));
            }
            if (!f.is_zero()) gens.push_back(std::move(f));
        }
        GradedIdeal I(n, std::move(gens));
        if (I.hilbert(1) != n || I.hilbert(max_socle + 1) != 0) continue;
        return I;
    }
}

} // namespace oseq
