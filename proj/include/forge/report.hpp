#pragma once

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forge/judge.hpp"

namespace forge {

// Summary of how subset composition/ordering moves response quality, and how
// the preferred ordering differs across generators.
struct PhenomenonReport {
    struct SchemeCell {
        double mean_score = 0.0;
        std::size_t n = 0;
    };
    struct QueryCell {
        double min_score = 1.0;
        double max_score = 0.0;
        std::string argmax_key;  // ties broken toward the smallest canonical key
        std::size_t n = 0;

        double spread() const { return n == 0 ? 0.0 : max_score - min_score; }
    };

    // (generator_id, provenance label) -> mean judged score
    std::map<std::pair<std::string, std::string>, SchemeCell> per_scheme;
    // (query_id, generator_id) -> spread statistics
    std::map<std::pair<std::string, std::string>, QueryCell> per_query;
    // Fraction of queries, among those judged under >= 2 generators, whose
    // argmax ordering is not shared by all generators.
    double argmax_disagreement_rate = 0.0;
    std::size_t queries_with_multiple_generators = 0;
};

inline PhenomenonReport phenomenon_report(const std::vector<JudgedSample>& judged) {
    PhenomenonReport report;
    std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
    struct SchemeAccum {
        double sum = 0.0;
        std::size_t n = 0;
    };
    std::map<std::pair<std::string, std::string>, SchemeAccum> scheme_accum;

    for (const auto& s : judged) {
        if (!seen.insert({s.query_id, s.generator_id, s.canonical_key, s.judge_kind}).second) {
            throw std::runtime_error("duplicate judged sample for subset " + s.canonical_key);
        }
        std::string label = s.provenance.empty() ? "unknown" : s.provenance;
        auto& cell = scheme_accum[{s.generator_id, label}];
        cell.sum += s.score;
        ++cell.n;

        auto& q = report.per_query[{s.query_id, s.generator_id}];
        if (q.n == 0 || s.score > q.max_score ||
            (s.score == q.max_score && s.canonical_key < q.argmax_key)) {
            q.argmax_key = s.canonical_key;
        }
        q.min_score = q.n == 0 ? s.score : std::min(q.min_score, s.score);
        q.max_score = q.n == 0 ? s.score : std::max(q.max_score, s.score);
        ++q.n;
    }
    for (const auto& [key, acc] : scheme_accum) {
        report.per_scheme[key] = {acc.sum / acc.n, acc.n};
    }

    std::map<std::string, std::vector<std::string>> argmax_by_query;  // query -> argmax keys
    for (const auto& [key, cell] : report.per_query) {
        argmax_by_query[key.first].push_back(cell.argmax_key);
    }
    std::size_t multi = 0, disagreements = 0;
    for (const auto& [query_id, keys] : argmax_by_query) {
        if (keys.size() < 2) continue;
        ++multi;
        if (std::adjacent_find(keys.begin(), keys.end(), std::not_equal_to<>()) != keys.end()) {
            ++disagreements;
        }
    }
    report.queries_with_multiple_generators = multi;
    report.argmax_disagreement_rate =
        multi == 0 ? 0.0 : static_cast<double>(disagreements) / static_cast<double>(multi);
    return report;
}

inline std::string phenomenon_csv(const PhenomenonReport& report) {
    std::ostringstream out;
    out << std::setprecision(6);
    out << "section,query_id,generator,provenance,mean_score,spread,argmax_key,n\n";
    for (const auto& [key, cell] : report.per_scheme) {
        out << "scheme,," << key.first << ',' << key.second << ',' << cell.mean_score << ",,,"
            << cell.n << '\n';
    }
    for (const auto& [key, cell] : report.per_query) {
        out << "query," << key.first << ',' << key.second << ",,," << cell.spread() << ','
            << cell.argmax_key << ',' << cell.n << '\n';
    }
    out << "summary,,,,," << report.argmax_disagreement_rate << ",,"
        << report.queries_with_multiple_generators << '\n';
    return out.str();
}

inline std::string phenomenon_summary(const PhenomenonReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    out << "per-generator mean score by subset provenance:\n";
    for (const auto& [key, cell] : report.per_scheme) {
        out << "  " << key.first << "  " << key.second << "  mean=" << cell.mean_score
            << "  n=" << cell.n << '\n';
    }
    std::size_t nonzero_spread = 0;
    for (const auto& [_, cell] : report.per_query) {
        if (cell.spread() > 0.0) ++nonzero_spread;
    }
    out << "query/generator cells with nonzero spread: " << nonzero_spread << " / "
        << report.per_query.size() << '\n';
    out << "cross-generator argmax disagreement rate: " << report.argmax_disagreement_rate
        << " over " << report.queries_with_multiple_generators << " queries\n";
    return out.str();
}

}  // namespace forge
