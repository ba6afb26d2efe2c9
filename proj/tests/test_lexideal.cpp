#include <gtest/gtest.h>

#include <random>

#include "oseq/lexideal.hpp"
#include "oseq/sweep.hpp"

using namespace oseq;

namespace {

// G(J)_d by subtracting the degree-d span of slice(d-1).
std::size_t brute_generator_count(const MonomialIdeal& J, int d) {
    const auto& below = J.slice(d - 1).members();
    auto span = degree_span(below, d, J.nvars());
    std::size_t c = 0;
    for (const auto& m : J.slice(d))
        if (!span.contains(m)) ++c;
    return c;
}

std::vector<MonomialSet> top_k_slices(const std::vector<count_t>& h, int n) {
    std::vector<MonomialSet> slices;
    for (int d = 0; d <= static_cast<int>(h.size()); ++d) {
        auto all = monomials_of_degree(n, d);
        count_t hd = d < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(d)] : 0;
        all.resize(static_cast<std::size_t>(std::max<count_t>(0, monomial_count(n, d) - hd)));
        slices.emplace_back(n, d, all);
    }
    return slices;
}

std::vector<OSequence> sample_codim3(int max_s, std::size_t want, std::uint64_t seed) {
    std::vector<OSequence> pool;
    for (int s = 2; s <= max_s; ++s)
        for (auto& H : all_osequences(3, s)) pool.push_back(H);
    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    if (pool.size() > want) pool.erase(pool.begin() + static_cast<long>(want), pool.end());
    return pool;
}

} // namespace

TEST(LexIdeal, GeneratorCountsForLevelExample) {
    auto J = lex_segment_ideal({1, 3, 6, 10, 8, 7}, 3);
    EXPECT_EQ(minimal_generators(J, 4).size(), 7u);
    EXPECT_EQ(minimal_generators(J, 5).size(), 2u);
    EXPECT_EQ(brute_generator_count(J, 4), 7u);
    EXPECT_EQ(brute_generator_count(J, 5), 2u);
    EXPECT_EQ(J.slice(4).size(), static_cast<std::size_t>(15 - 8));
}

TEST(LexIdeal, NoLinearGeneratorsWhenCodimIsFull) {
    for (auto H : {OSequence{1, 3, 6, 10, 8, 7}, OSequence{1, 3, 3, 1}}) {
        auto J = lex_segment_ideal(H, 3);
        EXPECT_TRUE(minimal_generators(J, 0).empty());
        EXPECT_TRUE(minimal_generators(J, 1).empty());
    }
}

TEST(LexIdeal, CompleteIntersectionShape) {
    auto J = lex_segment_ideal({1, 3, 3, 1}, 3);
    EXPECT_EQ(minimal_generators(J, 2).size(), 3u);
    EXPECT_EQ(brute_generator_count(J, 2), 3u);
}

TEST(LexIdeal, TrivialSequenceGivesMaximalIdeal) {
    auto J = lex_segment_ideal({1}, 3);
    EXPECT_EQ(J.slice(1).size(), 3u);
    EXPECT_EQ(J.max_degree(), 1);
}

TEST(LexIdeal, MaximalGrowthGivesEmptySlices) {
    auto J = lex_segment_ideal({1, 3, 6, 10, 15}, 3);
    for (int d = 0; d <= 4; ++d) EXPECT_TRUE(J.slice(d).empty());
    EXPECT_EQ(J.slice(5).size(), 21u);
}

TEST(LexIdeal, Errors) {
    auto code = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Overflow;
    };
    EXPECT_EQ(code([] { lex_segment_ideal({1, 3, 7}, 3); }), Errc::MacaulayViolation);
    EXPECT_EQ(code([] { lex_segment_ideal({1, 4, 2}, 3); }), Errc::CodimExceedsVars);
    auto J = lex_segment_ideal({1, 3, 3, 1}, 3);
    EXPECT_EQ(code([&] { J.slice(9); }), Errc::DegreeNotMaterialized);
    EXPECT_EQ(code([] { MonomialIdeal(2, {MonomialSet(2, 0), MonomialSet(2, 1, {{1, 0}}), MonomialSet(2, 2, {{2, 0}})}); }),
              Errc::NotAnIdeal);
}

TEST(LexIdeal, MoreVariablesThanCodim) {
    auto J = lex_segment_ideal({1, 2, 1}, 3);
    EXPECT_EQ(quotient_hilbert(J), (std::vector<count_t>{1, 2, 1, 0}));
    EXPECT_EQ(minimal_generators(J, 1).size(), 1u);
}

TEST(LexIdeal, MacaulayIffTopSegmentsFormAnIdeal) {
    for (count_t a = 1; a <= 6; ++a)
        for (count_t b = 1; b <= 10; ++b)
            for (count_t c = 0; c <= 15; ++c) {
                std::vector<count_t> h{1, 3, a, b};
                if (c) h.push_back(c);
                bool valid = validate(OSequence(h)).ok();
                bool ideal = true;
                try {
                    MonomialIdeal(3, top_k_slices(h, 3));
                } catch (const Error&) {
                    ideal = false;
                }
                ASSERT_EQ(valid, ideal) << OSequence(h).to_string();
            }
}

TEST(LexIdeal, RoundTripProperty) {
    for (const auto& H : sample_codim3(8, 400, 11)) {
        auto J = lex_segment_ideal(H, 3);
        auto q = quotient_hilbert(J);
        std::vector<count_t> want(H.entries().begin(), H.entries().end());
        want.push_back(0);
        ASSERT_EQ(q, want) << H.to_string();
        ASSERT_TRUE(is_strongly_stable(J));
    }
}

TEST(QuotientHilbert, Fixtures) {
    EXPECT_EQ(quotient_hilbert(lex_segment_ideal({1, 3, 6, 10, 8, 7}, 3)), (std::vector<count_t>{1, 3, 6, 10, 8, 7, 0}));
    EXPECT_EQ(quotient_hilbert(lex_segment_ideal({1, 3, 3, 1}, 3)), (std::vector<count_t>{1, 3, 3, 1, 0}));
    auto zero = MonomialIdeal::generated_by(3, {}, 4);
    EXPECT_EQ(quotient_hilbert(zero), (std::vector<count_t>{1, 3, 6, 10, 15}));
}

TEST(Truncation, AtTopIsIdentity) {
    auto J = lex_segment_ideal({1, 3, 6, 10, 15, 21, 18, 17, 17}, 3);
    auto T = truncated_ideal(J, 8, 8);
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(T.slice(d), J.slice(d));
}

TEST(Truncation, PersistenceAndOneExtraGenerator) {
    // d = 7: generators through degree 8 give h_9 = 17^<8>; one extra
    // generator in degree 9 gives 2d+4 = 18
    auto J = lex_segment_ideal({1, 3, 6, 10, 15, 21, 18, 17, 17}, 3);
    auto T = truncated_ideal(J, 8, 9);
    EXPECT_EQ(quotient_hilbert(T, 9, 9)[0], upper_shift(17, 8));
    EXPECT_EQ(upper_shift(17, 8) - 1, 18);
    OSequence ext{1, 3, 6, 10, 15, 21, 18, 17, 17, 18};
    ASSERT_TRUE(validate(ext).ok());
    EXPECT_EQ(quotient_hilbert(lex_segment_ideal(ext, 3), 9, 9)[0], 18);
}

TEST(Truncation, AtZeroIsZeroIdeal) {
    auto J = lex_segment_ideal({1, 3, 6, 10, 8, 7}, 3);
    auto T = truncated_ideal(J, 0);
    for (int d = 0; d <= T.max_degree(); ++d) EXPECT_TRUE(T.slice(d).empty());
}

TEST(Truncation, MiddleDegreeMatchesSpan) {
    auto J = lex_segment_ideal({1, 3, 6, 10, 8, 7}, 3);
    auto T = truncated_ideal(J, 4, 6);
    EXPECT_EQ(T.slice(5), linear_span(J.slice(4)));
    EXPECT_THROW(truncated_ideal(J, 9), Error);
}

TEST(LastMonomial, Fixtures) {
    EXPECT_EQ(last_monomial_lex(4, 3), (Monomial{1, 2, 1}));
    EXPECT_EQ(last_monomial_lex(4, 10), (Monomial{4, 0, 0}));
    EXPECT_EQ(last_monomial_lex(4, 5), (Monomial{2, 0, 2}));
    EXPECT_THROW(last_monomial_lex(4, 0), Error);
    EXPECT_THROW(last_monomial_lex(4, 11), Error);
}

TEST(LastMonomial, ClosedFormMatchesEnumeration) {
    for (int d = 1; d <= 14; ++d)
        for (int i = 1; i <= (d * d + d) / 2; ++i) {
            auto all = monomials_of_degree(3, d);
            auto keep = static_cast<std::size_t>(monomial_count(3, d) - (d + i));
            ASSERT_GE(keep, 1u);
            ASSERT_EQ(last_monomial_lex(d, i), all[keep - 1]) << d << " " << i;
        }
}

TEST(Green, EqualityForLexIdeals) {
    for (int s = 2; s <= 6; ++s)
        for (const auto& H : all_osequences(3, s)) {
            auto J = lex_segment_ideal(H, 3);
            auto R = restrict_last_variable(J);
            for (int t = 1; t <= s; ++t) {
                count_t restricted = quotient_hilbert(R, t, t)[0];
                ASSERT_EQ(restricted, lower_shift(H[t], t)) << H.to_string() << " t=" << t;
            }
        }
}

TEST(Green, BoundForRandomStableIdeals) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Monomial> gens;
        for (int d = 2; d <= 5; ++d) {
            auto all = monomials_of_degree(3, d);
            auto B = borel_closure(3, d, {all[rng() % all.size()]});
            gens.insert(gens.end(), B.begin(), B.end());
        }
        auto J = MonomialIdeal::generated_by(3, gens, 9);
        ASSERT_TRUE(is_strongly_stable(J));
        auto h = quotient_hilbert(J);
        auto R = restrict_last_variable(J);
        for (int t = 1; t <= 9; ++t) ASSERT_LE(quotient_hilbert(R, t, t)[0], lower_shift(h[static_cast<std::size_t>(t)], t));
    }
}

TEST(Colon, IdentityForLexIdeals) {
    for (int s = 2; s <= 8; ++s)
        for (const auto& H : all_osequences(3, s)) {
            auto J = lex_segment_ideal(H, 3);
            for (int i = 1; i <= s; ++i) {
                count_t want = H[i] - H[i + 1] + lower_shift(H[i + 1], i + 1);
                ASSERT_EQ(colon_last_variable_dim(J, i), want) << H.to_string() << " i=" << i;
            }
        }
}

TEST(Colon, LastVariableGeneratorsCountTheColon) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Monomial> gens;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < k; ++g) {
            int d = 1 + static_cast<int>(rng() % 9);
            auto all = monomials_of_degree(3, d);
            auto B = borel_closure(3, d, {all[rng() % all.size()]});
            gens.insert(gens.end(), B.begin(), B.end());
        }
        auto J = MonomialIdeal::generated_by(3, gens, 11);
        ASSERT_TRUE(is_strongly_stable(J));
        for (int d = 1; d <= 10; ++d) {
            std::size_t divisible = 0;
            for (const auto& T : minimal_generators(J, d))
                if (T[2] > 0) ++divisible;
            ASSERT_EQ(static_cast<count_t>(divisible), colon_last_variable_dim(J, d - 1)) << "d=" << d;
        }
    }
}
