#pragma once

/**
 * @file monomial.hpp
 * @brief Monomials in k[x_1..x_n], lex and degrevlex orders, Borel moves.
 *
 * Variables are ordered x_1 > x_2 > ... > x_n in both orders.
 *
 *  - lex: the first differing exponent decides; larger e_1 is larger.
 *  - degrevlex: higher degree is larger; on equal degree u > v iff the last
 *    nonzero entry of u - v is negative.
 *
 * Degree 2, n = 3, descending:
 *   lex:       x1^2 > x1*x2 > x1*x3 > x2^2 > x2*x3 > x3^2
 *   degrevlex: x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oseq/binomial.hpp"
#include "oseq/error.hpp"

namespace oseq {

inline constexpr int kMaxVars = 8;

class Monomial {
public:
    Monomial() = default;

    /// The unit monomial in n variables.
    explicit Monomial(int n) : n_(static_cast<std::uint8_t>(check_n(n))) {}

    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

    explicit Monomial(const std::vector<int>& exps) : n_(static_cast<std::uint8_t>(check_n(static_cast<int>(exps.size())))) {
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] < 0 || exps[k] > 0xffff) throw Error(Errc::ParameterOutOfRange, "exponent out of range");
            e_[k] = static_cast<std::uint16_t>(exps[k]);
            deg_ += exps[k];
        }
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }

    /// Exponent of x_{k+1} (0-based index k).
    int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }

    /// m(u) = max{ j : e_j > 0 }, 1-based.
    int max_index() const {
        for (int k = n_ - 1; k >= 0; --k)
            if (e_[static_cast<std::size_t>(k)] > 0) return k + 1;
        throw Error(Errc::UnitMonomial, "m(1) is undefined");
    }

    /// x_{k+1} * u.
    Monomial times(int k) const {
        Monomial r = *this;
        ++r.e_[static_cast<std::size_t>(k)];
        ++r.deg_;
        return r;
    }

    /// u / x_{k+1}; requires e_{k+1} > 0.
    Monomial over(int k) const {
        Monomial r = *this;
        --r.e_[static_cast<std::size_t>(k)];
        --r.deg_;
        return r;
    }

    Monomial operator*(const Monomial& o) const {
        check_same(*this, o);
        Monomial r = *this;
        for (int k = 0; k < n_; ++k) r.e_[static_cast<std::size_t>(k)] += o.e_[static_cast<std::size_t>(k)];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int k = 0; k < n_; ++k)
            if (e_[static_cast<std::size_t>(k)] > o.e_[static_cast<std::size_t>(k)]) return false;
        return true;
    }

    std::vector<int> exponents() const { return {e_.begin(), e_.begin() + n_}; }

    /// Drops the last variable (which must not occur).
    Monomial drop_last() const {
        Monomial r = *this;
        r.e_[static_cast<std::size_t>(n_ - 1)] = 0;
        --r.n_;
        return r;
    }

    std::string to_string() const {
        std::string out;
        for (int k = 0; k < n_; ++k) {
            int a = e_[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(k + 1);
            if (a > 1) out += '^' + std::to_string(a);
        }
        return out.empty() ? "1" : out;
    }

    bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }

    /// Plain exponent-vector order, for associative containers only.
    bool operator<(const Monomial& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return e_ < o.e_;
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (int k = 0; k < n_; ++k) h = h * 131 + e_[static_cast<std::size_t>(k)];
        return h;
    }

    friend void check_same(const Monomial& a, const Monomial& b) {
        if (a.n_ != b.n_)
            throw Error(Errc::DimensionMismatch,
                        "monomials in " + std::to_string(a.n_) + " and " + std::to_string(b.n_) + " variables");
    }

private:
    static int check_n(int n) {
        if (n < 1 || n > kMaxVars)
            throw Error(Errc::TooManyVariables, "supported variable count is 1.." + std::to_string(kMaxVars));
        return n;
    }

    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// u <_lex v.
inline bool lex_less(const Monomial& u, const Monomial& v) {
    check_same(u, v);
    for (int k = 0; k < u.nvars(); ++k)
        if (u[k] != v[k]) return u[k] < v[k];
    return false;
}

/// u <_degrevlex v.
inline bool degrevlex_less(const Monomial& u, const Monomial& v) {
    check_same(u, v);
    if (u.degree() != v.degree()) return u.degree() < v.degree();
    for (int k = u.nvars() - 1; k >= 0; --k)
        if (u[k] != v[k]) return u[k] > v[k];
    return false;
}

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(b, a); }
};

struct DegrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

enum class MonomialOrder { Lex, Degrevlex };

inline bool order_less(MonomialOrder o, const Monomial& u, const Monomial& v) {
    return o == MonomialOrder::Lex ? lex_less(u, v) : degrevlex_less(u, v);
}

/// Parses "x1^2*x3" (also "x1^1", "1" for the unit) in n variables.
inline Monomial parse_monomial(std::string_view text, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto fail = [&](const std::string& why) {
        return Error(Errc::ParseError, "monomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](std::string_view& s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p == s.data()) throw fail("expected a number");
        s.remove_prefix(static_cast<std::size_t>(p - s.data()));
        return v;
    };
    std::string_view s = text;
    if (s == "1") return Monomial(e);
    while (true) {
        if (s.empty() || s.front() != 'x') throw fail("expected 'x'");
        s.remove_prefix(1);
        int var = read_int(s);
        if (var < 1 || var > n) throw fail("variable index out of range");
        int a = 1;
        if (!s.empty() && s.front() == '^') {
            s.remove_prefix(1);
            a = read_int(s);
        }
        e[static_cast<std::size_t>(var - 1)] += a;
        if (s.empty()) break;
        if (s.front() != '*') throw fail("expected '*'");
        s.remove_prefix(1);
    }
    return Monomial(e);
}

/// All monomials of degree d in n variables, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    out.reserve(static_cast<std::size_t>(monomial_count(n, d)));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n - 1) {
            e[static_cast<std::size_t>(k)] = left;
            out.emplace_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[static_cast<std::size_t>(k)] = a;
            rec(k + 1, left - a);
        }
    };
    rec(0, d);
    return out;
}

/// Position of u in monomials_of_degree(n, deg u), i.e. the number of
/// monomials of the same degree that are lex-greater than u.
inline count_t lex_rank(const Monomial& u) {
    const int n = u.nvars();
    count_t r = 0;
    int left = u.degree();
    for (int k = 0; k < n - 1; ++k) {
        // monomials agreeing on x_1..x_k with a larger exponent at x_{k+1}
        for (int a = u[k] + 1; a <= left; ++a) r += monomial_count(n - k - 1, left - a);
        left -= u[k];
    }
    return r;
}

/// A set of monomials sharing one degree, kept in descending lex order.
class MonomialSet {
public:
    MonomialSet() = default;
    MonomialSet(int n, int degree) : n_(n), degree_(degree) {}

    /// Sorts and deduplicates; every member must have the given n and degree.
    MonomialSet(int n, int degree, std::vector<Monomial> members)
        : n_(n), degree_(degree), members_(std::move(members)) {
        for (const auto& m : members_) {
            if (m.nvars() != n) throw Error(Errc::DimensionMismatch, "member " + m.to_string());
            if (m.degree() != degree)
                throw Error(Errc::ParameterOutOfRange, "member " + m.to_string() + " is not of degree " + std::to_string(degree));
        }
        std::sort(members_.begin(), members_.end(), LexGreater{});
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int nvars() const { return n_; }
    int degree() const { return degree_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Monomial>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(const Monomial& u) const {
        return std::binary_search(members_.begin(), members_.end(), u, LexGreater{});
    }

    bool operator==(const MonomialSet& o) const {
        return n_ == o.n_ && degree_ == o.degree_ && members_ == o.members_;
    }

private:
    int n_ = 0;
    int degree_ = 0;
    std::vector<Monomial> members_;
};

/// Borel condition: u in S, e_j(u) > 0, i < j implies x_i u / x_j in S.
inline bool is_strongly_stable(const MonomialSet& S) {
    for (const auto& u : S)
        for (int j = 1; j < S.nvars(); ++j) {
            if (u[j] == 0) continue;
            Monomial v = u.over(j);
            for (int i = 0; i < j; ++i)
                if (!S.contains(v.times(i))) return false;
        }
    return true;
}

/// Degree-t part of the ideal generated by `gens`: every degree-t multiple of
/// a generator of degree <= t.
inline MonomialSet degree_span(const std::vector<Monomial>& gens, int t, int n) {
    std::vector<Monomial> out;
    std::set<Monomial> seen;
    for (const auto& g : gens) {
        if (g.nvars() != n) throw Error(Errc::DimensionMismatch, "generator " + g.to_string());
        if (g.degree() > t) continue;
        for (const auto& m : monomials_of_degree(n, t - g.degree())) {
            Monomial p = g * m;
            if (seen.insert(p).second) out.push_back(p);
        }
    }
    return MonomialSet(n, t, std::move(out));
}

/// R_1 * S.
inline MonomialSet linear_span(const MonomialSet& S) {
    std::vector<Monomial> out;
    out.reserve(S.size() * static_cast<std::size_t>(S.nvars()));
    for (const auto& u : S)
        for (int k = 0; k < S.nvars(); ++k) out.push_back(u.times(k));
    return MonomialSet(S.nvars(), S.degree() + 1, std::move(out));
}

/// Smallest strongly stable set of degree d containing `seeds`.
inline MonomialSet borel_closure(int n, int d, const std::vector<Monomial>& seeds) {
    std::set<Monomial> seen(seeds.begin(), seeds.end());
    std::vector<Monomial> todo(seeds.begin(), seeds.end());
    while (!todo.empty()) {
        Monomial u = todo.back();
        todo.pop_back();
        for (int j = 1; j < n; ++j) {
            if (u[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial v = u.over(j).times(i);
                if (seen.insert(v).second) todo.push_back(v);
            }
        }
    }
    return MonomialSet(n, d, std::vector<Monomial>(seen.begin(), seen.end()));
}

} // namespace oseq
