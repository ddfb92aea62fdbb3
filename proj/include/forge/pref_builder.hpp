#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/corpus.hpp"
#include "forge/generator.hpp"
#include "forge/judge.hpp"
#include "forge/ranker.hpp"
#include "forge/rng.hpp"

namespace forge {

struct SftRecord {
    std::string query_id;
    std::string system;
    std::string user;
    std::string assistant;
    std::string tag_kind;      // "relevance_default" | "cold_start"
    std::string generator_id;  // set for cold_start
    RankMode mode = RankMode::index;
};

inline Json to_json(const SftRecord& r) {
    Json j;
    j["messages"] = Json::array({Json{{"role", "system"}, {"content", r.system}},
                                 Json{{"role", "user"}, {"content", r.user}},
                                 Json{{"role", "assistant"}, {"content", r.assistant}}});
    Json tags;
    tags["kind"] = r.tag_kind;
    tags["query_id"] = r.query_id;
    if (!r.generator_id.empty()) tags["generator_id"] = r.generator_id;
    j["tags"] = tags;
    j["mode"] = to_string(r.mode);
    return j;
}

struct DpoRecord {
    std::string system;
    std::string user;
    std::string chosen;
    std::string rejected;
    std::string generator_id;
    double chosen_score = 0.0;
    double rejected_score = 0.0;
    double margin = 0.0;
    RankMode mode = RankMode::index;
};

inline Json to_json(const DpoRecord& r) {
    Json j;
    j["system"] = r.system;
    j["user"] = r.user;
    j["chosen"] = r.chosen;
    j["rejected"] = r.rejected;
    Json meta;
    meta["generator_id"] = r.generator_id;
    meta["chosen_score"] = r.chosen_score;
    meta["rejected_score"] = r.rejected_score;
    meta["margin"] = r.margin;
    meta["mode"] = to_string(r.mode);
    j["meta"] = meta;
    return j;
}

namespace detail {

// Seeded per-item coin; keyed by context so the draw is independent of the
// order records are processed in.
inline RankMode draw_mode(double snapshot_fraction, std::uint64_t seed,
                          std::initializer_list<std::string_view> context) {
    std::uint64_t h = hash_parts(context) ^ seed;
    double u = static_cast<double>(splitmix64(h) >> 11) * 0x1.0p-53;
    return u < snapshot_fraction ? RankMode::snapshot : RankMode::index;
}

}  // namespace detail

struct BuildOptions {
    double mode_mix = 0.5;  // fraction of /snapshot targets
    std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Relevance SFT
// ---------------------------------------------------------------------------

// One record per query under the default (unconditioned) profile: the target
// is all positive documents in default ordering, serialized in a mode drawn
// by a seeded per-record coin.
inline std::vector<SftRecord> build_sft(const std::vector<QueryRecord>& corpus,
                                        const GeneratorRegistry& registry,
                                        const BuildOptions& options = {}) {
    std::vector<SftRecord> out;
    out.reserve(corpus.size());
    for (const QueryRecord& record : corpus) {
        RankMode mode = detail::draw_mode(options.mode_mix, options.seed,
                                          {"sft", record.query_id});
        Prompt prompt = render_ranker_prompt(record, registry.default_profile(), mode);
        OrderedSubset target = make_subset(record.query_id, default_positive_order(record),
                                           Provenance{ProvenanceKind::permutation, "", 0});
        SftRecord r;
        r.query_id = record.query_id;
        r.system = prompt.system;
        r.user = prompt.user;
        r.assistant = serialize_subset(record, target, mode);
        r.tag_kind = "relevance_default";
        r.mode = mode;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const SftRecord& a, const SftRecord& b) {
        return std::tie(a.query_id, a.generator_id) < std::tie(b.query_id, b.generator_id);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Preference cold start
// ---------------------------------------------------------------------------

namespace detail {

// Pairwise inversions of `ids` relative to the default ordering.
inline std::size_t inversions_vs_default(const std::vector<std::string>& ids,
                                         const std::vector<std::string>& default_ids) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < default_ids.size(); ++i) pos[default_ids[i]] = i;
    std::size_t inv = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (pos.at(ids[i]) > pos.at(ids[j])) ++inv;
        }
    }
    return inv;
}

}  // namespace detail

// For each (query, generator): the argmax-score judged permutation, emitted
// only when it differs from the default ordering AND strictly beats the
// default's score. Score ties go to the permutation with the fewest
// inversions against the default (so the default itself wins any tie it is
// part of), then lexicographically.
inline std::vector<SftRecord> build_cold_start(
    const std::map<std::string, QueryRecord>& corpus_by_qid,
    const std::vector<JudgedSample>& judged,
    const std::map<std::string, OrderedSubset>& subsets_by_key,
    const GeneratorRegistry& registry, const BuildOptions& options = {}) {
    std::map<std::pair<std::string, std::string>, std::vector<const JudgedSample*>> groups;
    for (const auto& s : judged) {
        if (s.generator_id == kDefaultGeneratorId) continue;
        if (s.provenance != "permutation") continue;
        groups[{s.query_id, s.generator_id}].push_back(&s);
    }

    std::vector<SftRecord> out;
    for (const auto& [group_key, group] : groups) {
        const auto& [query_id, generator_id] = group_key;
        auto rec_it = corpus_by_qid.find(query_id);
        if (rec_it == corpus_by_qid.end()) {
            throw std::runtime_error("judged sample references unknown query " + query_id);
        }
        const QueryRecord& record = rec_it->second;
        std::vector<std::string> default_ids = default_positive_order(record);
        std::string default_key = make_canonical_key(query_id, default_ids);

        std::optional<double> default_score;
        for (const JudgedSample* s : group) {
            if (s->canonical_key == default_key) default_score = s->score;
        }
        if (!default_score) continue;  // default ordering was not judged; no baseline

        const JudgedSample* best = nullptr;
        std::size_t best_inv = 0;
        const OrderedSubset* best_subset = nullptr;
        for (const JudgedSample* s : group) {
            auto sub_it = subsets_by_key.find(s->canonical_key);
            if (sub_it == subsets_by_key.end()) {
                throw std::runtime_error("judged sample references unknown subset key");
            }
            std::size_t inv = detail::inversions_vs_default(sub_it->second.doc_ids, default_ids);
            bool better = false;
            if (best == nullptr) {
                better = true;
            } else if (s->score != best->score) {
                better = s->score > best->score;
            } else if (inv != best_inv) {
                better = inv < best_inv;
            } else {
                better = sub_it->second.doc_ids < best_subset->doc_ids;
            }
            if (better) {
                best = s;
                best_inv = inv;
                best_subset = &sub_it->second;
            }
        }
        if (best == nullptr || best->canonical_key == default_key) continue;
        if (!(best->score > *default_score)) continue;

        const GeneratorProfile& profile = registry.get(generator_id);
        RankMode mode = detail::draw_mode(options.mode_mix, options.seed,
                                          {"cold", query_id, generator_id});
        Prompt prompt = render_ranker_prompt(record, profile, mode);
        SftRecord r;
        r.query_id = query_id;
        r.system = prompt.system;
        r.user = prompt.user;
        r.assistant = serialize_subset(record, *best_subset, mode);
        r.tag_kind = "cold_start";
        r.generator_id = generator_id;
        r.mode = mode;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const SftRecord& a, const SftRecord& b) {
        return std::tie(a.query_id, a.generator_id) < std::tie(b.query_id, b.generator_id);
    });
    return out;
}

// ---------------------------------------------------------------------------
// DPO pairs
// ---------------------------------------------------------------------------

struct DpoBuildResult {
    std::vector<DpoRecord> records;
    std::size_t dropped = 0;  // pairs whose serialization failed validation
};

// Chosen and rejected are serialized in the same drawn mode; the user prompt
// is byte-identical between the two sides. Pairs that fail the round-trip
// validation are dropped and counted.
inline DpoBuildResult build_dpo(const std::vector<PreferencePair>& pairs,
                                const std::map<std::string, QueryRecord>& corpus_by_qid,
                                const GeneratorRegistry& registry,
                                const BuildOptions& options = {}) {
    DpoBuildResult out;
    for (const PreferencePair& pair : pairs) {
        auto rec_it = corpus_by_qid.find(pair.query_id);
        if (rec_it == corpus_by_qid.end()) {
            throw std::runtime_error("pair references unknown query " + pair.query_id);
        }
        const QueryRecord& record = rec_it->second;
        const GeneratorProfile& profile = registry.get(pair.generator_id);
        RankMode mode = detail::draw_mode(
            options.mode_mix, options.seed,
            {"dpo", pair.query_id, pair.generator_id, pair.chosen.canonical_key,
             pair.rejected.canonical_key});

        Prompt prompt = render_ranker_prompt(record, profile, mode);
        DpoRecord r;
        r.system = prompt.system;
        r.user = prompt.user;
        try {
            r.chosen = serialize_subset(record, pair.chosen, mode);
            r.rejected = serialize_subset(record, pair.rejected, mode);
        } catch (const std::exception&) {
            ++out.dropped;
            continue;
        }
        r.generator_id = pair.generator_id;
        r.chosen_score = pair.chosen_score;
        r.rejected_score = pair.rejected_score;
        r.margin = pair.margin;
        r.mode = mode;

        RankerOutput chosen_check = parse_ranker_output(r.chosen, mode, record);
        RankerOutput rejected_check = parse_ranker_output(r.rejected, mode, record);
        if (!chosen_check.valid() || !rejected_check.valid() ||
            subset_from_output(chosen_check, record).doc_ids != pair.chosen.doc_ids ||
            subset_from_output(rejected_check, record).doc_ids != pair.rejected.doc_ids) {
            ++out.dropped;
            continue;
        }
        out.records.push_back(std::move(r));
    }
    return out;
}

}  // namespace forge
