#pragma once

// Enumeration of O-sequences with fixed codimension and socle degree, and a
// parallel classification pass that writes a CSV atlas.

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "oseq/level.hpp"
#include "oseq/osequence.hpp"

namespace oseq {

/// Calls visit(h) for every O-sequence with h_1 = codim and socle degree s,
/// in lexicographic order of entries.
inline void enumerate_osequences(count_t codim, int s, const std::function<void(const std::vector<count_t>&)>& visit) {
    if (s < 0 || codim < 0) throw Error(Errc::ParameterOutOfRange, "need codim >= 0 and s >= 0");
    if (s == 0) {
        if (codim == 0) visit({1});
        return;
    }
    if (codim == 0) return;
    std::vector<count_t> h{1, codim};
    std::function<void()> rec = [&] {
        int d = static_cast<int>(h.size()) - 1;
        if (d == s) {
            visit(h);
            return;
        }
        count_t bound = upper_shift(h.back(), d);
        for (count_t v = 1; v <= bound; ++v) {
            h.push_back(v);
            rec();
            h.pop_back();
        }
    };
    rec();
}

inline std::vector<OSequence> all_osequences(count_t codim, int s) {
    std::vector<OSequence> out;
    enumerate_osequences(codim, s, [&](const std::vector<count_t>& h) { out.push_back(require_valid(OSequence(h))); });
    return out;
}

struct SweepRow {
    OSequence sequence{1};
    LevelVerdict verdict;
};

/// Classifies every sequence with check_level on `threads` workers; rows come
/// back in enumeration order regardless of the worker count.
inline std::vector<SweepRow> sweep(count_t codim, int s, unsigned threads = 0) {
    auto seqs = all_osequences(codim, s);
    std::vector<SweepRow> rows(seqs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < seqs.size();) rows[i] = {seqs[i], check_level(seqs[i])};
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

/// Columns: sequence, status, kinds, degrees (";"-separated, same order).
inline void write_csv(std::ostream& out, std::vector<SweepRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        auto x = a.sequence.entries(), y = b.sequence.entries();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    out << "sequence,status,kinds,degrees\n";
    for (const auto& r : rows) {
        std::string kinds, degs;
        for (const auto& c : r.verdict.certificates) {
            if (!kinds.empty()) {
                kinds += ';';
                degs += ';';
            }
            kinds += kind_name(c.kind);
            degs += std::to_string(c.d);
        }
        out << '"' << r.sequence.to_string() << "\"," << status_name(r.verdict.status) << ',' << kinds << ',' << degs
            << '\n';
    }
}

} // namespace oseq
