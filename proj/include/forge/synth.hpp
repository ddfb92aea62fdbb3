#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "forge/corpus.hpp"
#include "forge/rng.hpp"

namespace forge {

// Deterministic synthetic QA corpus: every record has >= 2 positives with
// exactly one carrying the gold answer verbatim, plus filler negatives of
// varied length. That is the minimal structure the mock generators need to
// produce ordering-dependent answers.
struct SynthOptions {
    std::map<std::string, std::size_t> per_source;          // source -> record count
    std::map<std::string, std::string> language_of;         // source -> "EN"/"ZH" (default EN)
    std::uint64_t seed = 0;
    int min_positives = 2;
    int max_positives = 3;
    int min_negatives = 3;
    int max_negatives = 6;
};

namespace detail {

inline const std::vector<std::string>& en_filler() {
    static const std::vector<std::string> words = {
        "archive",  "ledger",   "catalog", "survey",   "report",  "station",
        "harbor",   "village",  "council", "festival", "anthem",  "granite",
        "meadow",   "lantern",  "orchard", "compass",  "voyage",  "treaty",
        "chamber",  "monument", "gallery", "forge",    "quarry",  "summit"};
    return words;
}

// Filler and gold alphabets are disjoint so fillers never carry the answer.
inline const std::vector<std::string>& zh_filler() {
    static const std::vector<std::string> chars = {
        "数", "据", "检", "索", "文", "档", "排", "序", "生", "成", "模", "型",
        "问", "答", "系", "统", "内", "容", "信", "息", "方", "法", "结", "果"};
    return chars;
}

inline const std::vector<std::string>& zh_gold_alphabet() {
    static const std::vector<std::string> chars = {"金", "木", "水", "火", "土",
                                                   "天", "地", "玄", "黄", "宇"};
    return chars;
}

inline std::string en_filler_text(Rng& rng, std::size_t words) {
    std::string out;
    for (std::size_t i = 0; i < words; ++i) {
        if (i > 0) out += ' ';
        out += en_filler()[rng.next_below(en_filler().size())];
    }
    return out;
}

inline std::string zh_filler_text(Rng& rng, std::size_t chars) {
    std::string out;
    for (std::size_t i = 0; i < chars; ++i) {
        out += zh_filler()[rng.next_below(zh_filler().size())];
    }
    return out;
}

}  // namespace detail

inline std::vector<QueryRecord> make_synthetic_corpus(const SynthOptions& options) {
    std::vector<QueryRecord> out;
    for (const auto& [source, count] : options.per_source) {
        Language lang = Language::EN;
        auto lang_it = options.language_of.find(source);
        if (lang_it != options.language_of.end()) lang = language_from_string(lang_it->second);

        for (std::size_t i = 0; i < count; ++i) {
            Rng rng = Rng::derive(options.seed, source + "#" + std::to_string(i));
            QueryRecord r;
            r.source = source;
            r.language = lang;
            char qid[32];
            std::snprintf(qid, sizeof(qid), "q%06zu", i);
            r.query_id = source + "-" + qid;

            std::string gold;
            if (lang == Language::EN) {
                gold = "zq" + std::to_string(rng.next_below(9000) + 1000) + " xv" +
                       std::to_string(rng.next_below(9000) + 1000);
                r.query = "what code is recorded for entry " + std::to_string(i) + " of " +
                          source + "?";
            } else {
                const auto& alphabet = detail::zh_gold_alphabet();
                for (int c = 0; c < 3; ++c) gold += alphabet[rng.next_below(alphabet.size())];
                r.query = "条目" + std::to_string(i) + "在" + source + "中的记录代码是什么？";
            }
            r.gold_answers = {gold};

            int n_pos = options.min_positives +
                        static_cast<int>(rng.next_below(
                            options.max_positives - options.min_positives + 1));
            int n_neg = options.min_negatives +
                        static_cast<int>(rng.next_below(
                            options.max_negatives - options.min_negatives + 1));
            std::size_t gold_doc = rng.next_below(n_pos);

            std::vector<Document> docs;
            for (int p = 0; p < n_pos; ++p) {
                Document d;
                d.doc_id = "p" + std::to_string(p + 1);
                d.label = DocLabel::positive;
                if (lang == Language::EN) {
                    std::string body = detail::en_filler_text(rng, 12 + rng.next_below(30));
                    d.text = "entry " + r.query_id + " passage " + d.doc_id + ": " + body;
                    if (static_cast<std::size_t>(p) == gold_doc) {
                        d.text += " the recorded code is " + gold + ".";
                    } else {
                        d.text += " related background for entry " + std::to_string(i) + ".";
                    }
                } else {
                    std::string body = detail::zh_filler_text(rng, 20 + rng.next_below(50));
                    d.text = "条目" + r.query_id + "第" + d.doc_id + "篇：" + body;
                    if (static_cast<std::size_t>(p) == gold_doc) {
                        d.text += "记录代码是" + gold + "。";
                    } else {
                        d.text += "相关背景资料。";
                    }
                }
                docs.push_back(std::move(d));
            }
            for (int q = 0; q < n_neg; ++q) {
                Document d;
                d.doc_id = "n" + std::to_string(q + 1);
                d.label = DocLabel::negative;
                if (lang == Language::EN) {
                    d.text = "entry " + r.query_id + " distractor " + d.doc_id + ": " +
                             detail::en_filler_text(rng, 8 + rng.next_below(60));
                } else {
                    d.text = "条目" + r.query_id + "干扰" + d.doc_id + "：" +
                             detail::zh_filler_text(rng, 12 + rng.next_below(80));
                }
                docs.push_back(std::move(d));
            }

            std::vector<std::size_t> order(docs.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
            rng.shuffle(order);
            for (std::size_t rank = 0; rank < order.size(); ++rank) {
                docs[order[rank]].retrieval_rank = static_cast<int>(rank) + 1;
                docs[order[rank]].retrieval_score = 1.0 - 0.04 * static_cast<double>(rank);
            }
            r.candidates = std::move(docs);
            out.push_back(std::move(r));
        }
    }
    sort_canonical(out);
    return out;
}

}  // namespace forge
