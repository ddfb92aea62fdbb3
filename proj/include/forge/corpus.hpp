#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/jsonl.hpp"
#include "forge/rng.hpp"
#include "forge/text.hpp"

namespace forge {

enum class DocLabel { positive, negative, unknown };

inline std::string to_string(DocLabel label) {
    switch (label) {
        case DocLabel::positive: return "positive";
        case DocLabel::negative: return "negative";
        default: return "unknown";
    }
}

inline DocLabel doc_label_from_string(std::string_view s) {
    if (s == "positive") return DocLabel::positive;
    if (s == "negative") return DocLabel::negative;
    if (s == "unknown") return DocLabel::unknown;
    throw std::invalid_argument("unknown document label: " + std::string(s));
}

struct Document {
    std::string doc_id;
    std::string text;
    int retrieval_rank = 0;  // 1-based position in the original candidate ordering
    std::optional<double> retrieval_score;
    DocLabel label = DocLabel::unknown;
};

struct QueryRecord {
    std::string query_id;
    std::string query;
    std::vector<std::string> gold_answers;
    Language language = Language::EN;
    std::string source;
    std::vector<Document> candidates;

    std::vector<const Document*> positives() const {
        std::vector<const Document*> out;
        for (const auto& d : candidates) {
            if (d.label == DocLabel::positive) out.push_back(&d);
        }
        return out;
    }

    std::vector<const Document*> negatives() const {
        std::vector<const Document*> out;
        for (const auto& d : candidates) {
            if (d.label != DocLabel::positive) out.push_back(&d);
        }
        return out;
    }

    const Document* find(std::string_view doc_id) const {
        for (const auto& d : candidates) {
            if (d.doc_id == doc_id) return &d;
        }
        return nullptr;
    }

    // Candidates by retrieval_rank (1-based); ranks form a 1..N permutation.
    std::vector<const Document*> by_rank() const {
        std::vector<const Document*> out(candidates.size(), nullptr);
        for (const auto& d : candidates) {
            out[static_cast<std::size_t>(d.retrieval_rank) - 1] = &d;
        }
        return out;
    }
};

struct CorpusStats {
    std::map<std::string, std::size_t> per_source;
    std::map<std::string, std::size_t> per_language;
    std::map<std::size_t, std::size_t> positive_count_histogram;
    std::size_t accepted = 0;
    std::size_t rejected = 0;

    void add(const QueryRecord& r) {
        ++accepted;
        ++per_source[r.source];
        ++per_language[to_string(r.language)];
        ++positive_count_histogram[r.positives().size()];
    }

    Json to_json() const {
        Json j;
        j["accepted"] = accepted;
        j["rejected"] = rejected;
        j["per_source"] = Json::object();
        for (const auto& [k, v] : per_source) j["per_source"][k] = v;
        j["per_language"] = Json::object();
        for (const auto& [k, v] : per_language) j["per_language"][k] = v;
        j["positive_count_histogram"] = Json::object();
        for (const auto& [k, v] : positive_count_histogram) {
            j["positive_count_histogram"][std::to_string(k)] = v;
        }
        return j;
    }
};

// ---------------------------------------------------------------------------
// Canonical serialization
// ---------------------------------------------------------------------------

inline Json to_json(const Document& d) {
    Json j;
    j["doc_id"] = d.doc_id;
    j["text"] = d.text;
    j["retrieval_rank"] = d.retrieval_rank;
    if (d.retrieval_score) j["retrieval_score"] = *d.retrieval_score;
    j["label"] = to_string(d.label);
    return j;
}

inline Json to_json(const QueryRecord& r) {
    Json j;
    j["query_id"] = r.query_id;
    j["query"] = r.query;
    j["gold_answers"] = r.gold_answers;
    j["language"] = to_string(r.language);
    j["source"] = r.source;
    j["candidates"] = Json::array();
    for (const auto& d : r.candidates) j["candidates"].push_back(to_json(d));
    return j;
}

inline Document document_from_json(const Json& j) {
    Document d;
    d.doc_id = j.at("doc_id").get<std::string>();
    d.text = j.at("text").get<std::string>();
    d.retrieval_rank = j.at("retrieval_rank").get<int>();
    if (j.contains("retrieval_score")) d.retrieval_score = j["retrieval_score"].get<double>();
    d.label = doc_label_from_string(j.at("label").get<std::string>());
    return d;
}

inline QueryRecord record_from_json(const Json& j) {
    QueryRecord r;
    r.query_id = j.at("query_id").get<std::string>();
    r.query = j.at("query").get<std::string>();
    r.gold_answers = j.at("gold_answers").get<std::vector<std::string>>();
    r.language = language_from_string(j.at("language").get<std::string>());
    r.source = j.at("source").get<std::string>();
    for (const auto& dj : j.at("candidates")) r.candidates.push_back(document_from_json(dj));
    return r;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

// Returns a reason string when the record violates an invariant, or nullopt.
inline std::optional<std::string> validate_record(const QueryRecord& r, bool require_positive) {
    if (r.query_id.empty()) return "empty query_id";
    if (r.query.empty()) return "empty query";
    if (r.gold_answers.empty()) return "no gold answers";
    if (r.candidates.empty()) return "no candidate documents";
    std::set<std::string> ids;
    std::vector<int> ranks;
    for (const auto& d : r.candidates) {
        if (d.doc_id.empty()) return "empty doc_id";
        if (!ids.insert(d.doc_id).second) return "duplicate doc_id '" + d.doc_id + "'";
        if (d.text.empty()) return "empty text for doc '" + d.doc_id + "'";
        ranks.push_back(d.retrieval_rank);
    }
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] != static_cast<int>(i) + 1) {
            return "retrieval ranks are not a contiguous 1..N permutation";
        }
    }
    if (require_positive && r.positives().empty()) return "no positive documents";
    return std::nullopt;
}

// Extra filters may reject otherwise-valid records (the exact corpus filtering
// policy is configuration, not fixed here). Return a reason to reject.
using RecordFilter = std::function<std::optional<std::string>(const QueryRecord&)>;

// ---------------------------------------------------------------------------
// Source schemas
// ---------------------------------------------------------------------------

struct SourceSchema {
    std::string name;        // schema selector
    std::string source;      // value stored in QueryRecord::source
    Language default_language = Language::EN;
    bool canonical = false;  // parses the canonical QueryRecord layout
};

// "canonical" is the unified layout every adapter normalizes into. The named
// source schemas share a compact retrieval-dump layout:
//   {"id", "question", "answers": [..], "docs": [{"text", "label",
//    "doc_id"?, "score"?}, ..]}   (doc order = retrieval order)
// and differ in source tag and default language. A record-level "language"
// field overrides the default.
inline const std::vector<SourceSchema>& known_schemas() {
    static const std::vector<SourceSchema> schemas = {
        {"canonical", "", Language::EN, true},
        {"hotpotqa", "HotpotQA", Language::EN, false},
        {"2wiki", "2WikiMultiHopQA", Language::EN, false},
        {"musique", "MUSIQUE", Language::EN, false},
        {"msmarco", "MSMARCO", Language::EN, false},
        {"crud", "CRUD", Language::ZH, false},
    };
    return schemas;
}

inline const SourceSchema& schema_by_name(const std::string& name) {
    for (const auto& s : known_schemas()) {
        if (s.name == name) return s;
    }
    throw std::invalid_argument("unknown source schema: " + name);
}

inline QueryRecord parse_source_record(const Json& j, const SourceSchema& schema) {
    if (schema.canonical) return record_from_json(j);
    QueryRecord r;
    r.query_id = j.at("id").get<std::string>();
    r.query = j.at("question").get<std::string>();
    r.gold_answers = j.at("answers").get<std::vector<std::string>>();
    r.source = schema.source;
    r.language = j.contains("language")
                     ? language_from_string(j["language"].get<std::string>())
                     : schema.default_language;
    int rank = 0;
    for (const auto& dj : j.at("docs")) {
        Document d;
        d.retrieval_rank = ++rank;
        d.doc_id = dj.contains("doc_id") ? dj["doc_id"].get<std::string>()
                                         : "d" + std::to_string(rank);
        d.text = dj.at("text").get<std::string>();
        if (dj.contains("score")) d.retrieval_score = dj["score"].get<double>();
        d.label = doc_label_from_string(dj.at("label").get<std::string>());
        r.candidates.push_back(std::move(d));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ingestion
// ---------------------------------------------------------------------------

struct IngestOptions {
    bool require_positive = true;  // downstream stages assume >= 1 positive
    std::vector<RecordFilter> filters;
};

struct IngestResult {
    std::vector<QueryRecord> records;  // sorted by (source, query_id)
    CorpusStats stats;
};

inline void sort_canonical(std::vector<QueryRecord>& records) {
    std::sort(records.begin(), records.end(), [](const QueryRecord& a, const QueryRecord& b) {
        if (a.source != b.source) return a.source < b.source;
        return a.query_id < b.query_id;
    });
}

// Parses `path` under the named schema. Invalid lines are counted, skipped,
// and their reasons written to `<path>.rejects` (always created, possibly
// empty). Emitted order is canonicalized by (source, query_id).
inline IngestResult ingest_corpus(const std::string& path, const std::string& schema_name,
                                  const IngestOptions& options = {}) {
    const SourceSchema& schema = schema_by_name(schema_name);
    IngestResult result;
    jsonl::Writer rejects(path + ".rejects");
    std::set<std::string> seen_ids;

    jsonl::for_each_line(path, [&](std::size_t line_no, const std::string& line) {
        if (line.empty()) return;
        std::string reason;
        try {
            Json j = Json::parse(line);
            QueryRecord r = parse_source_record(j, schema);
            if (auto why = validate_record(r, options.require_positive)) {
                reason = *why;
            } else if (!seen_ids.insert(r.source + "\x1f" + r.query_id).second) {
                reason = "duplicate query_id '" + r.query_id + "'";
            } else {
                for (const auto& filter : options.filters) {
                    if (auto why2 = filter(r)) {
                        reason = *why2;
                        break;
                    }
                }
            }
            if (reason.empty()) {
                result.stats.add(r);
                result.records.push_back(std::move(r));
                return;
            }
        } catch (const std::exception& e) {
            reason = std::string("malformed line: ") + e.what();
        }
        ++result.stats.rejected;
        rejects.write_line("line " + std::to_string(line_no) + ": " + reason);
    });

    sort_canonical(result.records);
    return result;
}

inline void write_corpus(const std::string& path, const std::vector<QueryRecord>& records) {
    jsonl::Writer w(path);
    for (const auto& r : records) w.write(to_json(r));
}

inline std::vector<QueryRecord> read_corpus(const std::string& path) {
    std::vector<QueryRecord> out;
    for (const auto& j : jsonl::read_all(path)) out.push_back(record_from_json(j));
    return out;
}

// ---------------------------------------------------------------------------
// Quota sampling
// ---------------------------------------------------------------------------

// Seeded uniform sampling without replacement, quota[s] records per source s.
// Output is sorted by (source, query_id), so results are independent of the
// input order and identical across runs with the same seed.
inline std::vector<QueryRecord> sample_quota(const std::vector<QueryRecord>& corpus,
                                             const std::map<std::string, std::size_t>& quotas,
                                             std::uint64_t seed) {
    std::map<std::string, std::vector<const QueryRecord*>> pools;
    for (const auto& r : corpus) pools[r.source].push_back(&r);
    for (auto& [source, pool] : pools) {
        std::sort(pool.begin(), pool.end(), [](const QueryRecord* a, const QueryRecord* b) {
            return a->query_id < b->query_id;
        });
    }

    std::vector<QueryRecord> out;
    for (const auto& [source, want] : quotas) {
        auto it = pools.find(source);
        std::size_t have = it == pools.end() ? 0 : it->second.size();
        if (want > have) {
            throw std::runtime_error("quota for source '" + source + "' is " +
                                     std::to_string(want) + " but only " + std::to_string(have) +
                                     " records are available");
        }
        if (want == 0) continue;
        Rng rng = Rng::derive(seed, source);
        for (std::size_t idx : rng.sample_indices(have, want)) {
            out.push_back(*it->second[idx]);
        }
    }
    sort_canonical(out);
    return out;
}

inline std::map<std::string, std::size_t> parse_quota_spec(const std::string& spec) {
    std::map<std::string, std::size_t> quotas;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        std::string part = spec.substr(start, end - start);
        if (!part.empty()) {
            std::size_t eq = part.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("bad quota entry (want source=count): " + part);
            }
            quotas[part.substr(0, eq)] = std::stoull(part.substr(eq + 1));
        }
        start = end + 1;
    }
    return quotas;
}

}  // namespace forge
