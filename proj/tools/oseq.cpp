// oseq: command-line front end over the oseq headers.
//
// Exit codes: 0 success, 2 invalid input, 3 internal error, 10 NotLevel
// (level only).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oseq/oseq.hpp"

namespace {

using namespace oseq;

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;
constexpr int kExitNotLevel = 10;

struct Exit {
    int code;
};

OSequence read_seq(const std::string& s) { return parse_sequence(s); }

GradedIdeal read_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return graded_ideal_from_json(j);
}

std::string join(const std::vector<count_t>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string verdict_text(const OSequence& H, const LevelVerdict& v) {
    std::string out = H.to_string() + ": " + status_name(v.status) + "\n";
    for (const auto& c : v.certificates)
        out += "  " + std::string(kind_name(c.kind)) + " at d=" + std::to_string(c.d) + ": " + c.detail + " (" + c.cite +
               ")\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions, lex ideals, Betti numbers and level certificates"};
    app.require_subcommand(1);
    std::function<void()> action;

    std::string seq;
    int n = 3;

    auto* validate_cmd = app.add_subcommand("validate", "check the Macaulay growth bound");
    validate_cmd->add_option("SEQ", seq, "comma-separated h-vector")->required();
    validate_cmd->callback([&] {
        action = [&] {
            auto r = validate(read_seq(seq));
            if (r.ok()) {
                std::cout << "valid\n";
                return;
            }
            const auto& x = *r.violation;
            std::cout << "invalid: h_" << x.degree + 1 << "=" << x.next << " exceeds h_" << x.degree << "^<" << x.degree
                      << ">=" << x.bound << "\n";
            throw Exit{kExitInvalid};
        };
    });

    auto* shape_cmd = app.add_subcommand("shape", "theta, alpha, plateaus and first difference");
    shape_cmd->add_option("SEQ", seq)->required();
    shape_cmd->callback([&] {
        action = [&] {
            auto H = read_seq(seq);
            auto r = shape(H);
            std::cout << "socle_degree: " << H.socle_degree() << "\ncodim: " << H.codim() << "\ntheta: " << r.theta
                      << "\nalpha: " << (r.alpha ? std::to_string(*r.alpha) : "none")
                      << "\nstrictly_unimodal: " << (r.strictly_unimodal ? "yes" : "no") << "\nplateaus:";
            for (auto [a, b] : r.plateaus) std::cout << " [" << a << "," << b << "]";
            std::cout << "\ndelta: " << join(r.delta) << "\n";
        };
    });

    long long hval = 0;
    int index = 1;
    auto* expand_cmd = app.add_subcommand("expand", "binomial expansion of H at index I");
    expand_cmd->add_option("H", hval)->required()->check(CLI::NonNegativeNumber);
    expand_cmd->add_option("I", index)->required()->check(CLI::PositiveNumber);
    expand_cmd->callback([&] {
        action = [&] {
            std::cout << hval << " = " << macaulay_expansion(hval, index).to_string() << "\nupper: "
                      << upper_shift(hval, index) << "\nlower: " << lower_shift(hval, index) << "\n";
        };
    });

    auto* bound_cmd = app.add_subcommand("bound", "tabulate h_d, h_d^<d>, (h_d)^- and the r1 bound");
    bound_cmd->add_option("SEQ", seq)->required();
    bound_cmd->callback([&] {
        action = [&] {
            auto H = read_seq(seq);
            std::cout << "d h upper lower\n";
            for (int d = 1; d <= H.socle_degree(); ++d)
                std::cout << d << " " << H[d] << " " << upper_shift(H[d], d) << " " << lower_shift(H[d], d) << "\n";
            std::cout << "r1_bound: " << r1_upper_bound(H) << "\n";
        };
    });

    bool gens_only = false;
    int degree = -1;
    auto* lex_cmd = app.add_subcommand("lex", "lex-segment ideal of an O-sequence");
    lex_cmd->add_option("SEQ", seq)->required();
    lex_cmd->add_option("--n", n, "number of variables")->required();
    lex_cmd->add_flag("--gens", gens_only, "minimal generators only");
    lex_cmd->add_option("--degree", degree, "single degree");
    lex_cmd->callback([&] {
        action = [&] {
            auto J = lex_segment_ideal(read_seq(seq), n);
            int lo = degree >= 0 ? degree : 0, hi = degree >= 0 ? degree : J.max_degree();
            for (int d = lo; d <= hi; ++d) {
                auto S = gens_only ? minimal_generators(J, d) : J.slice(d);
                if (S.empty() && degree < 0) continue;
                std::cout << d << ":";
                for (const auto& m : S) std::cout << " " << m.to_string();
                std::cout << "\n";
            }
        };
    });

    std::string format = "text";
    auto* betti_cmd = app.add_subcommand("betti", "Betti diagram of the lex ideal");
    betti_cmd->add_option("SEQ", seq)->required();
    betti_cmd->add_option("--n", n)->required();
    betti_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    betti_cmd->callback([&] {
        action = [&] {
            auto D = ek_betti(lex_segment_ideal(read_seq(seq), n));
            if (format == "json") std::cout << to_json(D).dump() << "\n";
            else std::cout << render_diagram(D);
        };
    });

    int d_opt = 0;
    std::optional<int> assume_r1;
    bool assume_wlp = false;
    auto* gin_cmd = app.add_subcommand("gin-betti", "Betti numbers of the generic initial ideal from H");
    gin_cmd->add_option("SEQ", seq)->required();
    gin_cmd->add_option("--n", n)->required();
    gin_cmd->add_option("--d", d_opt)->required();
    auto* r1_opt = gin_cmd->add_option("--assume-r1", assume_r1, "caller-asserted r1");
    gin_cmd->add_flag("--assume-wlp", assume_wlp, "take r1 from the WLP shape")->excludes(r1_opt);
    gin_cmd->callback([&] {
        action = [&] {
            auto H = require_valid(read_seq(seq));
            std::optional<int> r1 = assume_r1;
            if (assume_wlp) r1 = r1_under_wlp(H);
            std::vector<count_t> row = gin_betti_plateau(H, n, d_opt, r1);
            std::cout << "beta_{i,i+" << d_opt + 1 << "}: " << join(row, " ") << "\n";
            std::cout << "beta_{" << n - 1 << "," << d_opt + n - 1 << "}: " << gin_top_betti(H, d_opt, r1) << "\n";
        };
    });

    std::vector<std::string> disabled;
    std::string level_format = "json";
    auto* level_cmd = app.add_subcommand("level", "certify that a sequence is not level");
    level_cmd->add_option("SEQ", seq)->required();
    level_cmd->add_option("--format", level_format)->check(CLI::IsMember({"text", "json"}));
    level_cmd->add_option("--disable", disabled, "certificate kinds to skip");
    level_cmd->callback([&] {
        action = [&] {
            auto H = read_seq(seq);
            KindMask mask = all_kinds();
            for (const auto& k : disabled) {
                auto kind = parse_kind(k);
                if (!kind) throw Error(Errc::ParseError, "unknown certificate kind " + k);
                mask.reset(static_cast<std::size_t>(*kind));
            }
            auto v = check_level(H, mask);
            if (level_format == "json") std::cout << to_json(v).dump() << "\n";
            else std::cout << verdict_text(H, v);
            if (v.status == LevelStatus::NotLevel) throw Exit{kExitNotLevel};
            if (v.status == LevelStatus::Invalid) throw Exit{kExitInvalid};
        };
    });

    auto* wlp_cmd = app.add_subcommand("wlp", "necessary conditions for the Weak Lefschetz Property");
    wlp_cmd->add_option("SEQ", seq)->required();
    wlp_cmd->add_option("--n", n)->required();
    wlp_cmd->callback([&] {
        action = [&] {
            auto r = check_wlp_necessary(read_seq(seq), n);
            if (r.pass) std::cout << "pass\n";
            else std::cout << "fail (" << r.clause << ") at d=" << r.degree << ": " << r.reason << "\n";
        };
    });

    auto* construct = app.add_subcommand("construct", "level sequences");
    construct->require_subcommand(1);
    std::string base;
    int r = 3, k = 4;
    auto* iar = construct->add_subcommand("iarrobino", "extend a level base by a generic form");
    iar->add_option("--base", base)->required();
    iar->add_option("--r", r)->required();
    iar->callback([&] { action = [&] { std::cout << iarrobino_extend(read_seq(base), r).to_string() << "\n"; }; });
    auto* plat = construct->add_subcommand("plateau", "level sequence with a plateau at d");
    plat->add_option("--d", d_opt)->required();
    plat->add_option("--k", k)->required();
    plat->callback([&] { action = [&] { std::cout << plateau_level_family(d_opt, k).to_string() << "\n"; }; });

    auto* oracle = app.add_subcommand("oracle", "exact computations on an explicit ideal");
    oracle->require_subcommand(1);
    std::string ideal_path;
    std::uint64_t seed = 1;
    int max_degree = -1;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--ideal", ideal_path, "ideal JSON file")->required();
        c->add_option("--seed", seed);
        c->add_option("--max-degree", max_degree, "degree cap (default OSEQ_MAX_DEGREE or 20)");
    };
    auto on = [&](const char* name, const char* help, std::function<void(const GradedIdeal&)> body) {
        auto* c = oracle->add_subcommand(name, help);
        add_common(c);
        c->callback([&, body] { action = [&, body] { body(read_ideal(ideal_path)); }; });
    };
    on("hilbert", "Hilbert function of R/I", [&](const GradedIdeal& I) {
        std::cout << hilbert_sequence(I, max_degree).to_string() << "\n";
    });
    on("betti", "Koszul Betti diagram of I", [&](const GradedIdeal& I) {
        std::cout << render_diagram(koszul_betti(I, max_degree));
    });
    on("gin", "generic initial ideal (degrevlex)", [&](const GradedIdeal& I) {
        std::cout << to_json(gin_sample(I, seed, max_degree)).dump() << "\n";
    });
    on("socle", "socle dimensions of R/I", [&](const GradedIdeal& I) {
        int s = I.socle_degree(max_degree);
        std::cout << join(socle_dims(I, 0, s)) << "\n";
    });
    on("r1", "reduction number via a random linear form", [&](const GradedIdeal& I) {
        std::cout << r1_general(I, seed, max_degree) << "\n";
    });
    on("cancel", "check beta(I) <= beta(Gin) <= beta(lex)", [&](const GradedIdeal& I) {
        auto rep = verify_cancellation(I, seed, max_degree);
        std::cout << "hilbert: " << rep.hilbert.to_string() << "\nideal:\n"
                  << render_diagram(rep.ideal) << "gin:\n"
                  << render_diagram(rep.gin) << "lex:\n"
                  << render_diagram(rep.lex) << "chain: " << (rep.chain_ok ? "ok" : "FAILED")
                  << "\nidentity: " << (rep.identity_ok ? "ok" : "FAILED") << "\n";
        for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
        if (!rep.chain_ok || !rep.identity_ok) throw Exit{kExitInternal};
    });

    long long codim = 3;
    int socle = 0;
    std::string out_path;
    unsigned threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "classify every O-sequence of a given shape");
    sweep_cmd->add_option("--codim", codim)->required();
    sweep_cmd->add_option("--socle-degree", socle)->required();
    sweep_cmd->add_option("--out", out_path, "CSV output (default stdout)");
    sweep_cmd->add_option("--threads", threads, "workers (default: hardware concurrency)");
    sweep_cmd->callback([&] {
        action = [&] {
            auto rows = sweep(codim, socle, threads);
            if (out_path.empty()) {
                write_csv(std::cout, std::move(rows));
                return;
            }
            std::ofstream out(out_path);
            if (!out) throw Error(Errc::ParseError, "cannot write " + out_path);
            write_csv(out, std::move(rows));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }
    try {
        if (action) action();
    } catch (const Exit& e) {
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool internal = e.code() == Errc::Overflow || e.code() == Errc::LowGenericity;
        return internal ? kExitInternal : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
