#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "forge/composer.hpp"
#include "forge/corpus.hpp"
#include "forge/generator.hpp"
#include "forge/text.hpp"

namespace forge {

enum class RankMode { index, snapshot };

inline std::string to_string(RankMode m) { return m == RankMode::index ? "/index" : "/snapshot"; }

inline RankMode rank_mode_from_string(std::string_view s) {
    if (s == "/index" || s == "index") return RankMode::index;
    if (s == "/snapshot" || s == "snapshot") return RankMode::snapshot;
    throw std::invalid_argument("unknown rank mode: " + std::string(s));
}

// ---------------------------------------------------------------------------
// Prompt rendering
// ---------------------------------------------------------------------------

// System prompt layout: role statement, mode token, generator block (omitted
// for the default profile), output-grammar instruction.
inline Prompt render_ranker_prompt(const QueryRecord& record, const GeneratorProfile& profile,
                                   RankMode mode) {
    const bool en = record.language == Language::EN;
    std::string system;
    system += en ? "You are a document ranking assistant for retrieval-augmented generation. "
                   "Select the documents that help answer the query and output them in the "
                   "best reading order for the generator.\n"
                 : "你是一个面向检索增强生成的文档排序助手。请选出有助于回答问题的文档，"
                   "并按照最利于生成器阅读的顺序输出。\n";
    system += "Mode: " + to_string(mode) + "\n";
    if (!profile.is_default()) {
        system += "Generator: " + profile.generator_id + "\n";
        system += "Description: " + profile.description + "\n";
    }
    if (mode == RankMode::index) {
        system += en ? "Output one line listing the selected document numbers in order, "
                       "formatted exactly as: [2] > [1] > [3]"
                     : "请只输出一行，按顺序列出所选文档编号，格式严格为：[2] > [1] > [3]";
    } else {
        system += en ? "Output one line per selected document, in order, each formatted "
                       "exactly as: [2] <first 100 characters of document 2>"
                     : "请为每个所选文档输出一行，按顺序排列，每行格式严格为："
                       "[2] <该文档的前100个字符>";
    }

    std::string user;
    user += en ? "Query: " : "问题：";
    user += record.query;
    user += en ? "\nDocuments:\n" : "\n文档：\n";
    for (const Document* d : record.by_rank()) {
        user += "[" + std::to_string(d->retrieval_rank) + "] " + d->text + "\n";
    }
    return Prompt{std::move(system), std::move(user)};
}

// ---------------------------------------------------------------------------
// Output grammar: serialization and parsing
// ---------------------------------------------------------------------------

// Candidate index of a document is its 1-based retrieval rank, matching the
// numbering in the user prompt.
inline std::string serialize_subset(const QueryRecord& record, const OrderedSubset& subset,
                                    RankMode mode) {
    std::string out;
    for (std::size_t i = 0; i < subset.doc_ids.size(); ++i) {
        const Document* d = record.find(subset.doc_ids[i]);
        if (d == nullptr) {
            throw std::invalid_argument("subset references unknown doc '" + subset.doc_ids[i] +
                                        "'");
        }
        if (mode == RankMode::index) {
            if (i > 0) out += " > ";
            out += "[" + std::to_string(d->retrieval_rank) + "]";
        } else {
            if (i > 0) out += "\n";
            out += "[" + std::to_string(d->retrieval_rank) + "] " + canonical_prefix(d->text);
        }
    }
    return out;
}

struct RankerEntry {
    long long index = 0;                  // 1-based candidate index
    std::optional<std::string> snapshot;  // /snapshot mode only
};

enum class RankerStatus { valid, parse_error, validation_error };

inline std::string to_string(RankerStatus s) {
    switch (s) {
        case RankerStatus::valid: return "valid";
        case RankerStatus::parse_error: return "parse_error";
        default: return "validation_error";
    }
}

struct RankerOutput {
    RankMode mode = RankMode::index;
    std::vector<RankerEntry> entries;
    RankerStatus status = RankerStatus::parse_error;
    std::string detail;

    bool valid() const { return status == RankerStatus::valid; }
};

namespace detail {

inline bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

// `[i]` with at most 12 digits; returns the value and advances `i` past ']'.
inline bool scan_bracketed_index(std::string_view s, std::size_t& i, long long& value) {
    if (i >= s.size() || s[i] != '[') return false;
    std::size_t j = i + 1, digits = 0;
    long long v = 0;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9' && digits <= 12) {
        v = v * 10 + (s[j] - '0');
        ++j;
        ++digits;
    }
    if (digits == 0 || digits > 12 || j >= s.size() || s[j] != ']') return false;
    i = j + 1;
    value = v;
    return true;
}

// Full-line /index grammar: [i1] > [i2] > ... > [ik], optional surrounding
// whitespace.
inline std::optional<std::vector<long long>> parse_index_line(std::string_view line) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_ws();
    std::vector<long long> out;
    long long v = 0;
    if (!scan_bracketed_index(line, i, v)) return std::nullopt;
    out.push_back(v);
    while (true) {
        std::size_t checkpoint = i;
        skip_ws();
        if (i >= line.size()) return out;
        if (line[i] != '>') {
            i = checkpoint;
            break;
        }
        ++i;
        skip_ws();
        if (!scan_bracketed_index(line, i, v)) return std::nullopt;
        out.push_back(v);
    }
    skip_ws();
    if (i != line.size()) return std::nullopt;
    return out;
}

// Snapshot line grammar: '[' digits ']' single space, then the snippet
// verbatim (possibly empty).
inline std::optional<std::pair<long long, std::string>> parse_snapshot_line(
    std::string_view line) {
    std::size_t i = 0;
    long long v = 0;
    if (!scan_bracketed_index(line, i, v)) return std::nullopt;
    if (i >= line.size() || line[i] != ' ') return std::nullopt;
    return std::make_pair(v, std::string(line.substr(i + 1)));
}

// First differing codepoint offset between two strings (for error detail).
inline std::size_t first_diff_offset(std::string_view got, std::string_view want) {
    std::vector<char32_t> a = utf8::decode_all(got);
    std::vector<char32_t> b = utf8::decode_all(want);
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return i;
    }
    return n;
}

}  // namespace detail

// Parses arbitrary ranker text; never throws on malformed input. /index takes
// the last line matching the grammar (tolerating chain-of-thought above it).
// /snapshot takes the block of `[i] <snippet>` lines that starts at the
// beginning of the text or after a blank line and runs to the end; every
// nonblank line from there on must conform. Snapshot snippets must equal the
// referenced document's canonical prefix.
inline RankerOutput parse_ranker_output(std::string_view text, RankMode mode,
                                        const QueryRecord& record) {
    RankerOutput out;
    out.mode = mode;

    if (mode == RankMode::index) {
        std::optional<std::vector<long long>> best;
        for (std::string_view line : detail::split_lines(text)) {
            if (auto parsed = detail::parse_index_line(line)) best = std::move(parsed);
        }
        if (!best) {
            out.status = RankerStatus::parse_error;
            out.detail = "no line matches the /index grammar";
            return out;
        }
        for (long long v : *best) out.entries.push_back(RankerEntry{v, std::nullopt});
    } else {
        std::vector<std::string_view> lines = detail::split_lines(text);
        std::optional<std::size_t> block_start;
        for (std::size_t s = 0; s < lines.size(); ++s) {
            if (!detail::parse_snapshot_line(lines[s])) continue;
            if (s != 0 && !detail::is_blank(lines[s - 1])) continue;
            bool all_conform = true;
            for (std::size_t t = s; t < lines.size(); ++t) {
                if (detail::is_blank(lines[t])) continue;
                if (!detail::parse_snapshot_line(lines[t])) {
                    all_conform = false;
                    break;
                }
            }
            if (all_conform) {
                block_start = s;
                break;
            }
        }
        if (!block_start) {
            out.status = RankerStatus::parse_error;
            out.detail = "no block matches the /snapshot grammar";
            return out;
        }
        for (std::size_t t = *block_start; t < lines.size(); ++t) {
            if (detail::is_blank(lines[t])) continue;
            auto parsed = detail::parse_snapshot_line(lines[t]);
            out.entries.push_back(RankerEntry{parsed->first, std::move(parsed->second)});
        }
    }

    // Validation against the record.
    const long long n = static_cast<long long>(record.candidates.size());
    std::set<long long> seen;
    std::vector<const Document*> by_rank = record.by_rank();
    for (const RankerEntry& e : out.entries) {
        if (e.index < 1 || e.index > n) {
            out.status = RankerStatus::validation_error;
            out.detail = "index " + std::to_string(e.index) + " out of range 1.." +
                         std::to_string(n);
            return out;
        }
        if (!seen.insert(e.index).second) {
            out.status = RankerStatus::validation_error;
            out.detail = "duplicate index " + std::to_string(e.index);
            return out;
        }
        if (mode == RankMode::snapshot) {
            std::string want = canonical_prefix(by_rank[e.index - 1]->text);
            if (*e.snapshot != want) {
                std::size_t off = detail::first_diff_offset(*e.snapshot, want);
                out.status = RankerStatus::validation_error;
                out.detail = "index " + std::to_string(e.index) +
                             ": snapshot differs from the document prefix at character " +
                             std::to_string(off);
                return out;
            }
        }
    }
    if (out.entries.empty()) {
        out.status = RankerStatus::parse_error;
        out.detail = "empty output";
        return out;
    }
    out.status = RankerStatus::valid;
    return out;
}

inline OrderedSubset subset_from_output(const RankerOutput& output, const QueryRecord& record,
                                        ProvenanceKind kind = ProvenanceKind::ranker) {
    if (!output.valid()) throw std::invalid_argument("cannot build a subset from invalid output");
    std::vector<const Document*> by_rank = record.by_rank();
    std::vector<std::string> ids;
    ids.reserve(output.entries.size());
    for (const RankerEntry& e : output.entries) {
        ids.push_back(by_rank[e.index - 1]->doc_id);
    }
    return make_subset(record.query_id, std::move(ids), Provenance{kind, "", 0});
}

// ---------------------------------------------------------------------------
// Dynamic-temperature retries
// ---------------------------------------------------------------------------

struct RetrySchedule {
    std::vector<double> temperatures = {0.0, 0.7, 1.0};

    std::size_t max_attempts() const { return temperatures.size(); }
};

struct RankAttempt {
    int attempt = 0;
    double temperature = 0.0;
    bool chat_ok = false;
    std::string status;  // chat_error | parse_error | validation_error | valid
    std::string detail;
    std::string raw;
};

inline Json to_json(const RankAttempt& a, const std::string& query_id) {
    Json j;
    j["query_id"] = query_id;
    j["attempt"] = a.attempt;
    j["temperature"] = a.temperature;
    j["chat_ok"] = a.chat_ok;
    j["status"] = a.status;
    if (!a.detail.empty()) j["detail"] = a.detail;
    j["raw"] = a.raw;
    return j;
}

// First min(5, N) candidates in retrieval order.
inline OrderedSubset fallback_subset(const QueryRecord& record) {
    std::vector<const Document*> by_rank = record.by_rank();
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < by_rank.size() && i < 5; ++i) ids.push_back(by_rank[i]->doc_id);
    return make_subset(record.query_id, std::move(ids), Provenance{ProvenanceKind::fallback, "", 0});
}

// Attempt i uses schedule.temperatures[i]; the first parseable and valid
// output wins; endpoint failures count as failed attempts. When every attempt
// fails the top-5 original-order fallback is returned.
inline OrderedSubset rank_with_retries(const ChatFn& chat, const QueryRecord& record,
                                       const GeneratorProfile& profile, RankMode mode,
                                       const RetrySchedule& schedule,
                                       std::vector<RankAttempt>* transcript = nullptr,
                                       int max_tokens = 1024) {
    if (schedule.temperatures.empty()) throw std::invalid_argument("empty retry schedule");
    Prompt prompt = render_ranker_prompt(record, profile, mode);
    for (std::size_t i = 0; i < schedule.temperatures.size(); ++i) {
        ChatRequest req{prompt.system, prompt.user, schedule.temperatures[i], max_tokens};
        ChatResponse resp = chat(req);
        RankAttempt attempt;
        attempt.attempt = static_cast<int>(i) + 1;
        attempt.temperature = schedule.temperatures[i];
        attempt.chat_ok = resp.ok;
        if (!resp.ok) {
            attempt.status = "chat_error";
            attempt.detail = resp.error;
            if (transcript) transcript->push_back(std::move(attempt));
            continue;
        }
        attempt.raw = resp.text;
        RankerOutput parsed = parse_ranker_output(resp.text, mode, record);
        attempt.status = to_string(parsed.status);
        attempt.detail = parsed.detail;
        bool ok = parsed.valid();
        if (transcript) transcript->push_back(std::move(attempt));
        if (ok) return subset_from_output(parsed, record);
    }
    return fallback_subset(record);
}

// ---------------------------------------------------------------------------
// Baseline ranking paradigms
// ---------------------------------------------------------------------------

enum class Paradigm { pointwise, listwise, set_selection };

inline Paradigm paradigm_from_string(std::string_view s) {
    if (s == "pointwise") return Paradigm::pointwise;
    if (s == "listwise") return Paradigm::listwise;
    if (s == "set_selection") return Paradigm::set_selection;
    throw std::invalid_argument("unknown paradigm: " + std::string(s));
}

struct ParadigmOptions {
    bool top10 = false;  // restrict pointwise/listwise to the top-10 retrieved documents
    RankMode mode = RankMode::index;   // set_selection output mode
    RetrySchedule schedule = RetrySchedule{{0.0}};
    int max_tokens = 1024;
};

namespace detail {

enum class YesNo { yes, no, unknown };

inline YesNo parse_yes_no(std::string_view raw) {
    std::string t;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!t.empty()) {
            break;
        }
    }
    if (t.rfind("yes", 0) == 0) return YesNo::yes;
    if (t.rfind("no", 0) == 0) return YesNo::no;
    return YesNo::unknown;
}

inline Prompt render_pointwise_prompt(const QueryRecord& record, const Document& doc) {
    const bool en = record.language == Language::EN;
    Prompt p;
    p.system = en ? "You are a relevance classifier. Decide whether the document is relevant "
                    "to answering the query. Reply with exactly one word: yes or no."
                  : "你是一个相关性分类器。请判断该文档是否有助于回答问题。"
                    "只回复一个词：yes 或 no。";
    p.user = (en ? "Query: " : "问题：") + record.query + (en ? "\nDocument: " : "\n文档：") +
             doc.text;
    return p;
}

inline Prompt render_listwise_prompt(const QueryRecord& record,
                                     const std::vector<const Document*>& pool) {
    const bool en = record.language == Language::EN;
    Prompt p;
    p.system = en ? "You are a document ranking assistant. Order ALL of the documents from "
                    "most to least useful for answering the query. Output one line listing "
                    "every document number, formatted exactly as: [2] > [1] > [3]"
                  : "你是一个文档排序助手。请将所有文档按照对回答问题的有用程度从高到低排序。"
                    "只输出一行，列出全部文档编号，格式严格为：[2] > [1] > [3]";
    p.user = (en ? "Query: " : "问题：") + record.query + (en ? "\nDocuments:\n" : "\n文档：\n");
    for (const Document* d : pool) {
        p.user += "[" + std::to_string(d->retrieval_rank) + "] " + d->text + "\n";
    }
    return p;
}

}  // namespace detail

// Pointwise: one yes/no relevance call per candidate; relevant documents keep
// their original order ahead of the rest, and failed calls leave the affected
// candidate unpromoted. Listwise: one call producing a full ordering, repaired
// by dropping bad indices and appending missing ones in original order. Set
// selection: the /index-grammar subset is used as parsed.
inline OrderedSubset rank_paradigm(Paradigm paradigm, const ChatFn& chat,
                                   const QueryRecord& record, const GeneratorProfile& profile,
                                   const ParadigmOptions& options = {}) {
    std::vector<const Document*> pool = record.by_rank();
    if (options.top10 && paradigm != Paradigm::set_selection && pool.size() > 10) {
        pool.resize(10);
    }

    if (paradigm == Paradigm::set_selection) {
        return rank_with_retries(chat, record, profile, options.mode, options.schedule, nullptr,
                                 options.max_tokens);
    }

    if (paradigm == Paradigm::pointwise) {
        std::vector<std::string> relevant, rest;
        for (const Document* d : pool) {
            Prompt p = detail::render_pointwise_prompt(record, *d);
            ChatResponse resp = chat(ChatRequest{p.system, p.user, 0.0, 8});
            detail::YesNo verdict =
                resp.ok ? detail::parse_yes_no(resp.text) : detail::YesNo::unknown;
            (verdict == detail::YesNo::yes ? relevant : rest).push_back(d->doc_id);
        }
        relevant.insert(relevant.end(), rest.begin(), rest.end());
        return make_subset(record.query_id, std::move(relevant),
                           Provenance{ProvenanceKind::ranker, "", 0});
    }

    // Listwise.
    Prompt p = detail::render_listwise_prompt(record, pool);
    ChatResponse resp = chat(ChatRequest{p.system, p.user, 0.0, options.max_tokens});
    std::vector<long long> ordered;
    if (resp.ok) {
        std::optional<std::vector<long long>> best;
        for (std::string_view line : detail::split_lines(resp.text)) {
            if (auto parsed = detail::parse_index_line(line)) best = std::move(parsed);
        }
        if (best) {
            std::set<long long> seen;
            for (long long v : *best) {
                if (v >= 1 && v <= static_cast<long long>(pool.size()) && seen.insert(v).second) {
                    ordered.push_back(v);
                }
            }
        }
    }
    std::set<long long> present(ordered.begin(), ordered.end());
    for (const Document* d : pool) {
        if (!present.count(d->retrieval_rank)) ordered.push_back(d->retrieval_rank);
    }
    std::vector<std::string> ids;
    for (long long v : ordered) ids.push_back(pool[static_cast<std::size_t>(v) - 1]->doc_id);
    return make_subset(record.query_id, std::move(ids), Provenance{ProvenanceKind::ranker, "", 0});
}

}  // namespace forge
