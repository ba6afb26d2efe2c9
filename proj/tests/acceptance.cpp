// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oseq/oseq.hpp"

using namespace oseq;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;
    std::size_t cases = 0;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

OSequence plateau_sequence(int d, int i, int j) {
    std::vector<count_t> h;
    for (int t = 0; t <= d - 1; ++t) h.push_back(std::min<count_t>(binomial(t + 2, 2), d + i + j));
    h.push_back(d + i);
    h.push_back(d + i);
    return OSequence(h);
}

void macaulay_fixtures(Check& c) {
    c.expect(upper_shift(17, 7) == 19, "17^<7>");
    c.expect(lower_shift(17, 8) == 2, "17^- at 8");
    c.expect(lower_shift(18, 9) == 1, "18^- at 9");
    for (int d = 5; d <= 10; ++d)
        c.expect(upper_shift(2 * d + 3, d + 1) == 2 * d + 5, "(2d+3)^<d+1> at d=" + std::to_string(d));
}

void lex_diagram(Check& c) {
    auto J = lex_segment_ideal({1, 3, 6, 10, 8, 7}, 3);
    auto D = ek_betti(J);
    c.expect(D.at(0, 4) == 7 && D.at(1, 5) == 9 && D.at(2, 6) == 3, "row t=3");
    c.expect(D.at(0, 5) == 2 && D.at(1, 6) == 4 && D.at(2, 7) == 2, "row t=4");
    c.expect(koszul_betti(GradedIdeal::from_monomials(J)) == D, "koszul differs from Eliahou-Kervaire");
}

void closed_form(Check& c) {
    auto start = std::chrono::steady_clock::now();
    for (int d = 2; d <= 10; ++d)
        for (int i = 1; 2 * i <= d * d + d; ++i)
            for (int j = 1; 2 * (i + j) <= d * d - d; ++j) {
                auto D = ek_betti(lex_segment_ideal(plateau_sequence(d, i, j), 3));
                auto cf = lex_plateau_betti(d, i, j);
                c.expect(cf.beta1 == D.at(1, d + 2) && cf.beta2 == D.at(2, d + 2),
                         "mismatch at d=" + std::to_string(d) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 60, "took " + std::to_string(secs) + " s");
}

void verdicts(Check& c) {
    c.expect(check_level({1, 3, 6, 10, 15, 21, 18, 17, 17}).status == LevelStatus::NotLevel, "(..,18,17,17)");
    for (count_t h8 : {17, 18, 19})
        c.expect(check_level({1, 3, 6, 10, 15, 20, 18, 17, h8}).status == LevelStatus::NotLevel,
                 "(..,20,18,17," + std::to_string(h8) + ")");
    c.expect(check_level({1, 3, 6, 10, 15, 14, 14}).status == LevelStatus::Unknown, "(..,15,14,14)");
    c.expect(check_level({1, 3, 6, 3, 1}).status == LevelStatus::Unknown, "(1,3,6,3,1)");
    for (int s = 2; s <= 9; ++s)
        enumerate_osequences(3, s, [&](const std::vector<count_t>& h) {
            for (int d = 1; d + 1 <= s; ++d) {
                auto u = static_cast<std::size_t>(d);
                if (h[u - 1] > h[u] && h[u] == h[u + 1] && h[u] <= 2 * d + 3) {
                    OSequence H(h);
                    c.expect(check_level(H).status == LevelStatus::NotLevel, "sweep missed " + H.to_string());
                    return;
                }
            }
        });
}

void gin_formulas(Check& c) {
    int used = 0;
    for (std::uint64_t seed = 1; used < 25 && seed < 500; ++seed) {
        auto I = random_artinian_ideal(3, seed);
        auto H = hilbert_sequence(I);
        int s = H.socle_degree();
        int r1 = r1_general(I, seed);
        if (r1 >= s) continue;
        ++used;
        auto G = gin_sample(I, seed);
        auto E = ek_betti(G);
        std::string tag = "seed " + std::to_string(seed) + " H=" + H.to_string();
        for (int d = r1 + 1; d <= s; ++d) {
            auto row = gin_betti_plateau(H, 3, d, r1);
            for (int i = 0; i < 3; ++i)
                c.expect(E.at(i, i + d + 1) == row[static_cast<std::size_t>(i)],
                         tag + ": row d=" + std::to_string(d));
            c.expect(E.at(2, d + 2) == gin_top_betti(H, d, r1), tag + ": top Betti d=" + std::to_string(d));
            auto gens = minimal_generators(G, d + 1);
            c.expect(static_cast<count_t>(gens.size()) == H[d] - H[d + 1], tag + ": |G_{d+1}| d=" + std::to_string(d));
            for (const auto& T : gens) c.expect(T[2] > 0, tag + ": generator " + T.to_string() + " not divisible by x3");
        }
        auto rep = verify_cancellation(I, seed);
        c.expect(rep.chain_ok && rep.identity_ok, tag + ": " + (rep.problems.empty() ? "" : rep.problems.front()));
    }
    c.expect(used == 25, "only " + std::to_string(used) + " samples with d > r1");
}

void hyperplane(Check& c) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto I = random_artinian_ideal(3, seed);
        auto G = gin_sample(I, seed);
        auto R = restrict_last_variable(G);
        auto S = hyperplane_section(I, random_linear_form(3, derive_seed(seed, 7)));
        auto GS = gin_sample(S, derive_seed(seed, 8), -1, R.max_degree());
        for (int t = 0; t <= R.max_degree(); ++t)
            c.expect(GS.slice(t) == R.slice(t), "seed " + std::to_string(seed) + " degree " + std::to_string(t));
    }
}

void wlp(Check& c) {
    auto a = check_wlp_necessary({1, 3, 6, 10, 8, 7}, 3);
    c.expect(!a.pass && a.clause == 'c' && a.degree == 4, "(1,3,6,10,8,7) should fail (c) at 4");
    OSequence G{1, 3, 6, 3, 1};
    c.expect(check_wlp_necessary(G, 3).pass, "(1,3,6,3,1) should pass");
    c.expect(G[3] == 3 * G[4], "boundary h_{s-1} = 3 h_s");
}

void constructions(Check& c) {
    auto H = iarrobino_extend({1, 3, 5, 7, 9, 11, 13}, 3);
    c.expect(H == OSequence{1, 3, 6, 10, 15, 14, 14}, "iarrobino gave " + H.to_string());
    c.expect(validate(H).ok(), "iarrobino output invalid");
    auto tail = [&](int d, int k) {
        auto P = plateau_level_family(d, k);
        std::string tag = "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + P.to_string();
        c.expect(validate(P).ok(), tag + " invalid");
        c.expect(P.socle_degree() == d + 1 && P[d - 1] == 2 * d + k + 1 && P[d] == 2 * d + k && P[d + 1] == 2 * d + k,
                 tag);
    };
    for (int d = 5; d <= 12; ++d) tail(d, 4);
    for (int k = 5; k <= 8; ++k)
        for (int d = 7; d <= 12; ++d) tail(d, k);
}

void properties(Check& c) {
    std::mt19937_64 rng(2024);
    auto random_stable = [&](int lo, int hi, int count, int top) {
        std::vector<Monomial> gens;
        for (int g = 0; g < count; ++g) {
            int d = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
            auto all = monomials_of_degree(3, d);
            auto B = borel_closure(3, d, {all[rng() % all.size()]});
            gens.insert(gens.end(), B.begin(), B.end());
        }
        return MonomialIdeal::generated_by(3, gens, top);
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto J = random_stable(2, 6, 3, 10);
        for (int d = 1; d <= 10; ++d) {
            count_t div = 0;
            for (const auto& T : minimal_generators(J, d)) div += T[2] > 0;
            c.expect(div == colon_last_variable_dim(J, d - 1), "x3 count, trial " + std::to_string(trial));
        }
    }
    std::vector<OSequence> pool;
    for (int s = 2; s <= 8; ++s)
        for (auto& H : all_osequences(3, s)) pool.push_back(H);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t k = 0; k < 500; ++k) {
        const auto& H = pool[k];
        auto J = lex_segment_ideal(H, 3);
        auto R = restrict_last_variable(J);
        for (int t = 1; t <= H.socle_degree(); ++t)
            c.expect(quotient_hilbert(R, t, t)[0] == lower_shift(H[t], t), "Green " + H.to_string());
        for (int i = 1; i <= H.socle_degree(); ++i)
            c.expect(colon_last_variable_dim(J, i) == H[i] - H[i + 1] + lower_shift(H[i + 1], i + 1),
                     "colon identity " + H.to_string());
    }
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto I = random_artinian_ideal(3, seed);
        int s = I.socle_degree();
        auto D = koszul_betti(I);
        auto soc = socle_dims(I, 0, s);
        for (int t = 0; t <= s; ++t)
            c.expect(soc[static_cast<std::size_t>(t)] == socle_from_betti(D, t), "socle seed " + std::to_string(seed));
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
    };
    std::vector<Criterion> all{
        {"Macaulay operator fixtures", macaulay_fixtures},
        {"lex Betti diagram of (1,3,6,10,8,7) and Koszul agreement", lex_diagram},
        {"plateau closed form equals Eliahou-Kervaire for d <= 10", closed_form},
        {"verdict fixtures and plateau sweep for s <= 9", verdicts},
        {"gin formulas, generator counts and cancellation chain on 25 samples", gin_formulas},
        {"hyperplane section commutes with gin on 10 samples", hyperplane},
        {"WLP necessary conditions", wlp},
        {"constructions", constructions},
        {"Green, colon, x3-count and socle properties", properties},
    };
    int failures = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            all[k].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << all[k].name << " (" << c.cases
                  << " checks, " << static_cast<int>(secs * 1000) << " ms)";
        if (!c.ok) std::cout << ": " << c.why.str();
        std::cout << std::endl;
        failures += !c.ok;
    }
    return failures ? 1 : 0;
}
