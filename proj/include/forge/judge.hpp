#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forge/composer.hpp"
#include "forge/corpus.hpp"
#include "forge/eval.hpp"
#include "forge/generator.hpp"

namespace forge {

struct JudgedSample {
    std::string query_id;
    std::string generator_id;
    std::string canonical_key;
    double score = 0.0;  // in [0, 1]
    std::string judge_kind;  // "oracle" | "llm"
    std::string provenance;  // subset provenance label, carried for reporting
    std::string rationale;
};

inline Json to_json(const JudgedSample& s) {
    Json j;
    j["query_id"] = s.query_id;
    j["generator_id"] = s.generator_id;
    j["canonical_key"] = s.canonical_key;
    j["score"] = s.score;
    j["judge_kind"] = s.judge_kind;
    if (!s.provenance.empty()) j["provenance"] = s.provenance;
    if (!s.rationale.empty()) j["rationale"] = s.rationale;
    return j;
}

inline JudgedSample judged_sample_from_json(const Json& j) {
    JudgedSample s;
    s.query_id = j.at("query_id").get<std::string>();
    s.generator_id = j.at("generator_id").get<std::string>();
    s.canonical_key = j.at("canonical_key").get<std::string>();
    s.score = j.at("score").get<double>();
    s.judge_kind = j.at("judge_kind").get<std::string>();
    s.provenance = j.value("provenance", std::string());
    s.rationale = j.value("rationale", std::string());
    return s;
}

// ---------------------------------------------------------------------------
// Oracle judge
// ---------------------------------------------------------------------------

// Deterministic stand-in for the listwise LLM judge: score = token F1 of the
// extracted answer against the gold answers.
inline std::vector<JudgedSample> judge_oracle(const QueryRecord& record,
                                              const std::vector<GenerationResult>& results) {
    std::vector<JudgedSample> out;
    out.reserve(results.size());
    for (const auto& r : results) {
        JudgedSample s;
        s.query_id = r.query_id;
        s.generator_id = r.generator_id;
        s.canonical_key = r.canonical_key;
        s.score = token_f1(r.answer_text, record.gold_answers, record.language);
        s.judge_kind = "oracle";
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Listwise LLM judge
// ---------------------------------------------------------------------------

struct JudgeOptions {
    int max_tokens = 256;
    int reasks = 1;  // one re-ask on malformed output, then mark unjudged
};

// One listwise grading request for a batch of responses to the same query.
// Responses are numbered; the judge must emit one `[k] g` line per response
// with g in 1..5.
inline Prompt render_judge_prompt(const QueryRecord& record,
                                  const std::vector<std::string>& responses) {
    const bool en = record.language == Language::EN;
    Prompt p;
    p.system = en ? "You are grading answers to a question against a reference answer. Grade "
                    "both the reasoning and the final answer of each response on a 1-5 scale "
                    "(1 = wrong, 5 = fully correct). Output one line per response, formatted "
                    "exactly as: [k] g   where k is the response number and g is the grade. "
                    "Output nothing else."
                  : "你是一名评分员，需要根据参考答案为多条回答评分。请综合推理过程与最终答案，"
                    "按 1-5 分制打分（1 分完全错误，5 分完全正确）。每条回答输出一行，"
                    "格式严格为：[k] g，其中 k 是回答编号，g 是分数。不要输出其他内容。";
    p.user = (en ? "Question: " : "问题：") + record.query + "\n";
    p.user += en ? "Reference answers: " : "参考答案：";
    for (std::size_t i = 0; i < record.gold_answers.size(); ++i) {
        if (i > 0) p.user += " | ";
        p.user += record.gold_answers[i];
    }
    p.user += en ? "\nResponses:\n" : "\n回答：\n";
    for (std::size_t i = 0; i < responses.size(); ++i) {
        p.user += "[" + std::to_string(i + 1) + "] " + responses[i] + "\n";
    }
    return p;
}

// Expects exactly one grade line per response, indices 1..n each exactly once.
inline std::optional<std::vector<int>> parse_judge_grades(std::string_view text, std::size_t n) {
    std::map<long long, int> grades;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (!line.empty()) {
            std::size_t i = 0;
            long long idx = 0;
            if (i < line.size() && line[i] == '[') {
                std::size_t j = i + 1;
                while (j < line.size() && line[j] >= '0' && line[j] <= '9') {
                    idx = idx * 10 + (line[j] - '0');
                    ++j;
                }
                if (j < line.size() && line[j] == ']' && j > i + 1) {
                    ++j;
                    while (j < line.size() && (line[j] == ' ' || line[j] == ':' || line[j] == '=')) {
                        ++j;
                    }
                    if (j < line.size() && line[j] >= '1' && line[j] <= '5' &&
                        (j + 1 == line.size())) {
                        if (grades.count(idx)) return std::nullopt;  // duplicate grade line
                        grades[idx] = line[j] - '0';
                    } else {
                        return std::nullopt;
                    }
                } else {
                    return std::nullopt;
                }
            } else {
                return std::nullopt;
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (grades.size() != n) return std::nullopt;
    std::vector<int> out(n);
    for (const auto& [idx, g] : grades) {
        if (idx < 1 || idx > static_cast<long long>(n)) return std::nullopt;
        out[static_cast<std::size_t>(idx) - 1] = g;
    }
    return out;
}

struct JudgeBatchResult {
    std::vector<JudgedSample> samples;     // judged, score = (grade-1)/4
    std::vector<std::string> unjudged;     // canonical keys excluded from pairing
};

// Identical answer texts are judged once and the grade fanned out, which both
// saves judge calls and forces consistency across duplicates.
inline JudgeBatchResult judge_llm(const QueryRecord& record,
                                  const std::vector<GenerationResult>& results,
                                  const ChatFn& judge_chat, const JudgeOptions& options = {}) {
    JudgeBatchResult out;
    if (results.empty()) return out;

    std::vector<std::string> unique_texts;
    std::map<std::string, std::size_t> text_slot;
    for (const auto& r : results) {
        if (!text_slot.count(r.answer_text)) {
            text_slot[r.answer_text] = unique_texts.size();
            unique_texts.push_back(r.answer_text);
        }
    }

    Prompt prompt = render_judge_prompt(record, unique_texts);
    std::optional<std::vector<int>> grades;
    for (int attempt = 0; attempt <= options.reasks && !grades; ++attempt) {
        ChatResponse resp = judge_chat(ChatRequest{prompt.system, prompt.user, 0.0,
                                                   options.max_tokens});
        if (resp.ok) grades = parse_judge_grades(resp.text, unique_texts.size());
    }
    if (!grades) {
        for (const auto& r : results) out.unjudged.push_back(r.canonical_key);
        return out;
    }

    for (const auto& r : results) {
        JudgedSample s;
        s.query_id = r.query_id;
        s.generator_id = r.generator_id;
        s.canonical_key = r.canonical_key;
        int grade = (*grades)[text_slot[r.answer_text]];
        s.score = static_cast<double>(grade - 1) / 4.0;
        s.judge_kind = "llm";
        out.samples.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Preference derivation
// ---------------------------------------------------------------------------

struct PreferencePair {
    std::string query_id;
    std::string generator_id;
    OrderedSubset chosen;
    OrderedSubset rejected;
    double chosen_score = 0.0;
    double rejected_score = 0.0;
    double margin = 0.0;  // chosen_score - rejected_score
};

inline Json to_json(const PreferencePair& p) {
    Json j;
    j["query_id"] = p.query_id;
    j["generator_id"] = p.generator_id;
    j["chosen"] = to_json(p.chosen);
    j["rejected"] = to_json(p.rejected);
    j["chosen_score"] = p.chosen_score;
    j["rejected_score"] = p.rejected_score;
    j["margin"] = p.margin;
    return j;
}

inline PreferencePair preference_pair_from_json(const Json& j) {
    PreferencePair p;
    p.query_id = j.at("query_id").get<std::string>();
    p.generator_id = j.at("generator_id").get<std::string>();
    p.chosen = subset_from_json(j.at("chosen"));
    p.rejected = subset_from_json(j.at("rejected"));
    p.chosen_score = j.at("chosen_score").get<double>();
    p.rejected_score = j.at("rejected_score").get<double>();
    p.margin = j.at("margin").get<double>();
    return p;
}

struct PreferenceOptions {
    double margin = 0.25;  // one grade step on the 1-5 scale
    std::size_t max_pairs_per_query = 4;
    std::uint64_t seed = 0;  // selection is deterministic; reserved for future use
};

// Pairs are selected per (query, generator): all (chosen, rejected)
// combinations with a score gap >= margin, ranked by chosen score descending,
// then gap descending, then canonical keys, truncated to max_pairs_per_query.
// This pairs the strongest subsets against progressively weaker ones first.
inline std::vector<PreferencePair> derive_preferences(
    const std::vector<JudgedSample>& samples,
    const std::map<std::string, OrderedSubset>& subsets_by_key,
    const PreferenceOptions& options = {}) {
    if (options.margin <= 0.0) throw std::invalid_argument("margin must be > 0");

    std::map<std::pair<std::string, std::string>, std::vector<const JudgedSample*>> groups;
    for (const auto& s : samples) {
        groups[{s.query_id, s.generator_id}].push_back(&s);
    }

    std::vector<PreferencePair> out;
    for (const auto& [group_key, group] : groups) {
        if (group.size() < 2) continue;
        struct Candidate {
            const JudgedSample* chosen;
            const JudgedSample* rejected;
            double gap;
        };
        std::vector<Candidate> candidates;
        for (const JudgedSample* a : group) {
            for (const JudgedSample* b : group) {
                if (a == b || a->canonical_key == b->canonical_key) continue;
                double gap = a->score - b->score;
                if (gap >= options.margin) candidates.push_back({a, b, gap});
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
            if (x.chosen->score != y.chosen->score) return x.chosen->score > y.chosen->score;
            if (x.gap != y.gap) return x.gap > y.gap;
            if (x.chosen->canonical_key != y.chosen->canonical_key) {
                return x.chosen->canonical_key < y.chosen->canonical_key;
            }
            return x.rejected->canonical_key < y.rejected->canonical_key;
        });
        for (std::size_t i = 0; i < candidates.size() && i < options.max_pairs_per_query; ++i) {
            const Candidate& c = candidates[i];
            auto chosen_it = subsets_by_key.find(c.chosen->canonical_key);
            auto rejected_it = subsets_by_key.find(c.rejected->canonical_key);
            if (chosen_it == subsets_by_key.end() || rejected_it == subsets_by_key.end()) {
                throw std::runtime_error("judged sample references unknown subset key");
            }
            PreferencePair pair;
            pair.query_id = group_key.first;
            pair.generator_id = group_key.second;
            pair.chosen = chosen_it->second;
            pair.rejected = rejected_it->second;
            pair.chosen_score = c.chosen->score;
            pair.rejected_score = c.rejected->score;
            pair.margin = c.gap;
            out.push_back(std::move(pair));
        }
    }
    return out;
}

}  // namespace forge
