#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forge/corpus.hpp"
#include "forge/text.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Answer normalization and the EM / token-F1 metrics
// ---------------------------------------------------------------------------

// EN: compatibility fold, lowercase, drop punctuation characters, split on
// whitespace. ZH: compatibility fold, drop whitespace and punctuation, one
// token per codepoint. EM and F1 both score over these tokens; keeping the
// articles makes the worked overlap values (P=2/3, R=1 -> 0.8) come out and
// preserves EM=1 => F1=1 under one shared tokenization.
inline std::vector<std::string> metric_tokens(std::string_view text, Language language) {
    std::string folded = nfkc_fold(text);
    std::vector<std::string> tokens;
    if (language == Language::EN) {
        std::string current;
        std::size_t i = 0;
        while (i < folded.size()) {
            char32_t cp = utf8::decode(folded, i);
            cp = to_lower(cp);
            if (is_space(cp)) {
                if (!current.empty()) tokens.push_back(std::move(current));
                current.clear();
            } else if (!is_punct(cp)) {
                utf8::append(current, cp);
            }
        }
        if (!current.empty()) tokens.push_back(std::move(current));
    } else {
        std::size_t i = 0;
        while (i < folded.size()) {
            char32_t cp = utf8::decode(folded, i);
            if (is_space(cp) || is_punct(cp)) continue;
            std::string tok;
            utf8::append(tok, cp);
            tokens.push_back(std::move(tok));
        }
    }
    return tokens;
}

// General answer normalization: metric tokens with the articles {a, an, the}
// additionally dropped in EN.
inline std::vector<std::string> normalize_tokens(std::string_view text, Language language) {
    std::vector<std::string> tokens = metric_tokens(text, language);
    if (language == Language::EN) {
        std::erase_if(tokens, [](const std::string& t) {
            return t == "a" || t == "an" || t == "the";
        });
    }
    return tokens;
}

inline std::string normalized_text(std::string_view text, Language language) {
    std::vector<std::string> tokens = normalize_tokens(text, language);
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

// True when `needle` occurs as a substring of `haystack` after normalization
// (both space-joined). Used to decide whether a document carries a gold answer.
inline bool normalized_contains(std::string_view haystack, std::string_view needle,
                                Language language) {
    std::string h = normalized_text(haystack, language);
    std::string n = normalized_text(needle, language);
    if (n.empty()) return false;
    return h.find(n) != std::string::npos;
}

inline int exact_match(std::string_view pred, const std::vector<std::string>& golds,
                       Language language) {
    std::vector<std::string> p = metric_tokens(pred, language);
    for (const auto& gold : golds) {
        if (p == metric_tokens(gold, language)) return 1;
    }
    return 0;
}

inline double token_f1_single(const std::vector<std::string>& pred,
                              const std::vector<std::string>& gold) {
    if (pred.empty() && gold.empty()) return 1.0;
    if (pred.empty() || gold.empty()) return 0.0;
    std::map<std::string, std::size_t> counts;
    for (const auto& t : pred) ++counts[t];
    std::size_t overlap = 0;
    for (const auto& t : gold) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    if (overlap == 0) return 0.0;
    double precision = static_cast<double>(overlap) / pred.size();
    double recall = static_cast<double>(overlap) / gold.size();
    return 2.0 * precision * recall / (precision + recall);
}

// Bag-of-tokens F1, maximized over the gold answers.
inline double token_f1(std::string_view pred, const std::vector<std::string>& golds,
                       Language language) {
    std::vector<std::string> p = metric_tokens(pred, language);
    double best = 0.0;
    for (const auto& gold : golds) {
        best = std::max(best, token_f1_single(p, metric_tokens(gold, language)));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Run evaluation
// ---------------------------------------------------------------------------

struct EvalItem {
    std::string query_id;
    std::string generator_id;
    std::string ranker_label = "-";
    std::string answer_text;
};

struct MetricsRow {
    std::string dataset;
    std::string generator_id;
    std::string ranker_label;
    double em = 0.0;  // percentage
    double f1 = 0.0;  // percentage
    std::size_t n = 0;
};

// Per-(dataset, generator, ranker) means x100 plus an unweighted cross-dataset
// "Avg." row per (generator, ranker).
inline std::vector<MetricsRow> evaluate_run(const std::vector<EvalItem>& items,
                                            const std::map<std::string, QueryRecord>& corpus) {
    struct Accum {
        double em_sum = 0.0, f1_sum = 0.0;
        std::size_t n = 0;
    };
    std::map<std::tuple<std::string, std::string, std::string>, Accum> cells;
    for (const auto& item : items) {
        auto it = corpus.find(item.query_id);
        if (it == corpus.end()) {
            throw std::runtime_error("result references unknown query_id: " + item.query_id);
        }
        const QueryRecord& r = it->second;
        Accum& cell = cells[{r.source, item.generator_id, item.ranker_label}];
        cell.em_sum += exact_match(item.answer_text, r.gold_answers, r.language);
        cell.f1_sum += token_f1(item.answer_text, r.gold_answers, r.language);
        ++cell.n;
    }

    std::vector<MetricsRow> rows;
    std::map<std::pair<std::string, std::string>, std::vector<const MetricsRow*>> by_group;
    for (const auto& [key, acc] : cells) {
        MetricsRow row;
        row.dataset = std::get<0>(key);
        row.generator_id = std::get<1>(key);
        row.ranker_label = std::get<2>(key);
        row.em = 100.0 * acc.em_sum / acc.n;
        row.f1 = 100.0 * acc.f1_sum / acc.n;
        row.n = acc.n;
        rows.push_back(row);
    }
    for (const auto& row : rows) {
        by_group[{row.generator_id, row.ranker_label}].push_back(&row);
    }
    std::vector<MetricsRow> avg_rows;
    for (const auto& [group, members] : by_group) {
        MetricsRow avg;
        avg.dataset = "Avg.";
        avg.generator_id = group.first;
        avg.ranker_label = group.second;
        for (const MetricsRow* m : members) {
            avg.em += m->em;
            avg.f1 += m->f1;
            avg.n += m->n;
        }
        avg.em /= members.size();
        avg.f1 /= members.size();
        avg_rows.push_back(avg);
    }
    rows.insert(rows.end(), avg_rows.begin(), avg_rows.end());
    std::sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        return std::tie(a.generator_id, a.ranker_label, a.dataset) <
               std::tie(b.generator_id, b.ranker_label, b.dataset);
    });
    return rows;
}

inline std::string metrics_csv(const std::vector<MetricsRow>& rows) {
    std::ostringstream out;
    out << "dataset,generator,ranker,em,f1,n\n";
    out << std::fixed << std::setprecision(2);
    for (const auto& r : rows) {
        out << r.dataset << ',' << r.generator_id << ',' << r.ranker_label << ',' << r.em << ','
            << r.f1 << ',' << r.n << '\n';
    }
    return out.str();
}

inline std::string metrics_table(const std::vector<MetricsRow>& rows) {
    std::size_t dataset_w = 7, gen_w = 9, ranker_w = 6;
    for (const auto& r : rows) {
        dataset_w = std::max(dataset_w, r.dataset.size());
        gen_w = std::max(gen_w, r.generator_id.size());
        ranker_w = std::max(ranker_w, r.ranker_label.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(dataset_w) + 2) << "dataset"
        << std::setw(static_cast<int>(gen_w) + 2) << "generator"
        << std::setw(static_cast<int>(ranker_w) + 2) << "ranker" << std::right << std::setw(8)
        << "EM" << std::setw(8) << "F1" << std::setw(8) << "n" << '\n';
    out << std::fixed << std::setprecision(2);
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(dataset_w) + 2) << r.dataset
            << std::setw(static_cast<int>(gen_w) + 2) << r.generator_id
            << std::setw(static_cast<int>(ranker_w) + 2) << r.ranker_label << std::right
            << std::setw(8) << r.em << std::setw(8) << r.f1 << std::setw(8) << r.n << '\n';
    }
    return out.str();
}

}  // namespace forge
