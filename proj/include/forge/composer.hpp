#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/corpus.hpp"
#include "forge/rng.hpp"

namespace forge {

enum class ProvenanceKind { permutation, scheme, mixed, ranker, fallback };

inline std::string to_string(ProvenanceKind k) {
    switch (k) {
        case ProvenanceKind::permutation: return "permutation";
        case ProvenanceKind::scheme: return "scheme";
        case ProvenanceKind::mixed: return "mixed";
        case ProvenanceKind::ranker: return "ranker";
        default: return "fallback";
    }
}

inline ProvenanceKind provenance_kind_from_string(std::string_view s) {
    if (s == "permutation") return ProvenanceKind::permutation;
    if (s == "scheme") return ProvenanceKind::scheme;
    if (s == "mixed") return ProvenanceKind::mixed;
    if (s == "ranker") return ProvenanceKind::ranker;
    if (s == "fallback") return ProvenanceKind::fallback;
    throw std::invalid_argument("unknown provenance kind: " + std::string(s));
}

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::permutation;
    std::string scheme;   // set when kind == scheme
    int mixed_negatives = 0;  // set when kind == mixed

    std::string label() const {
        if (kind == ProvenanceKind::scheme) return "scheme:" + scheme;
        if (kind == ProvenanceKind::mixed) return "mixed:" + std::to_string(mixed_negatives);
        return to_string(kind);
    }
};

struct OrderedSubset {
    std::string query_id;
    std::vector<std::string> doc_ids;  // duplicate-free, all present in the record
    Provenance provenance;
    std::string canonical_key;

    bool operator==(const OrderedSubset& other) const {
        return canonical_key == other.canonical_key;
    }
};

inline std::string make_canonical_key(const std::string& query_id,
                                      const std::vector<std::string>& doc_ids) {
    std::string key = query_id;
    key += '|';
    for (std::size_t i = 0; i < doc_ids.size(); ++i) {
        if (i > 0) key += ',';
        key += doc_ids[i];
    }
    return key;
}

inline OrderedSubset make_subset(const std::string& query_id, std::vector<std::string> doc_ids,
                                 Provenance provenance) {
    OrderedSubset s;
    s.query_id = query_id;
    s.canonical_key = make_canonical_key(query_id, doc_ids);
    s.doc_ids = std::move(doc_ids);
    s.provenance = provenance;
    return s;
}

inline Json to_json(const OrderedSubset& s) {
    Json j;
    j["query_id"] = s.query_id;
    j["doc_ids"] = s.doc_ids;
    Json p;
    p["kind"] = to_string(s.provenance.kind);
    if (s.provenance.kind == ProvenanceKind::scheme) p["scheme"] = s.provenance.scheme;
    if (s.provenance.kind == ProvenanceKind::mixed) p["m"] = s.provenance.mixed_negatives;
    j["provenance"] = p;
    j["canonical_key"] = s.canonical_key;
    return j;
}

inline OrderedSubset subset_from_json(const Json& j) {
    OrderedSubset s;
    s.query_id = j.at("query_id").get<std::string>();
    s.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
    const Json& p = j.at("provenance");
    s.provenance.kind = provenance_kind_from_string(p.at("kind").get<std::string>());
    if (p.contains("scheme")) s.provenance.scheme = p["scheme"].get<std::string>();
    if (p.contains("m")) s.provenance.mixed_negatives = p["m"].get<int>();
    s.canonical_key = j.at("canonical_key").get<std::string>();
    return s;
}

// Positives in default ordering (ascending retrieval_rank).
inline std::vector<std::string> default_positive_order(const QueryRecord& record) {
    std::vector<const Document*> pos = record.positives();
    std::sort(pos.begin(), pos.end(), [](const Document* a, const Document* b) {
        return a->retrieval_rank < b->retrieval_rank;
    });
    std::vector<std::string> ids;
    ids.reserve(pos.size());
    for (const Document* d : pos) ids.push_back(d->doc_id);
    return ids;
}

namespace detail {

// n! saturated at a value larger than any sane budget.
inline std::uint64_t saturating_factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f > (1ull << 62) / i) return 1ull << 62;
        f *= i;
    }
    return f;
}

}  // namespace detail

struct PermutationOptions {
    std::size_t cap = 5;      // full enumeration only when n <= cap
    std::size_t budget = 12;  // and n! <= budget; otherwise sample this many
    std::uint64_t seed = 0;
};

// All orderings of the record's positive documents when that is affordable
// (n! <= budget and n <= cap, in lexicographic index order over the default
// ordering), otherwise a seeded sample of distinct permutations that always
// includes the default ordering.
inline std::vector<OrderedSubset> enumerate_permutations(const QueryRecord& record,
                                                         const PermutationOptions& options) {
    std::vector<std::string> base = default_positive_order(record);
    if (base.empty()) throw std::invalid_argument("record has no positive documents");
    const std::size_t n = base.size();
    const std::uint64_t total = detail::saturating_factorial(n);
    std::vector<OrderedSubset> out;
    Provenance prov{ProvenanceKind::permutation, "", 0};

    if (total <= options.budget && n <= options.cap) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            std::vector<std::string> ids;
            ids.reserve(n);
            for (std::size_t i : idx) ids.push_back(base[i]);
            out.push_back(make_subset(record.query_id, std::move(ids), prov));
        } while (std::next_permutation(idx.begin(), idx.end()));
        return out;
    }

    const std::size_t target = static_cast<std::size_t>(
        std::min<std::uint64_t>(options.budget, total));
    std::set<std::string> seen;
    out.push_back(make_subset(record.query_id, base, prov));
    seen.insert(out.back().canonical_key);
    Rng rng = Rng::derive(options.seed, "perm:" + record.query_id);
    while (out.size() < target) {
        std::vector<std::string> ids = base;
        rng.shuffle(ids);
        std::string key = make_canonical_key(record.query_id, ids);
        if (seen.insert(key).second) {
            out.push_back(make_subset(record.query_id, std::move(ids), prov));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arrangement schemes
// ---------------------------------------------------------------------------

enum class SchemeId { ORIGINAL, REVERSED, SCORE_DESC, SCORE_ASC, EDGES_FIRST, MIDDLE_FIRST };

inline const std::vector<SchemeId>& all_schemes() {
    static const std::vector<SchemeId> schemes = {
        SchemeId::ORIGINAL,    SchemeId::REVERSED,    SchemeId::SCORE_DESC,
        SchemeId::SCORE_ASC,   SchemeId::EDGES_FIRST, SchemeId::MIDDLE_FIRST};
    return schemes;
}

inline std::string to_string(SchemeId s) {
    switch (s) {
        case SchemeId::ORIGINAL: return "ORIGINAL";
        case SchemeId::REVERSED: return "REVERSED";
        case SchemeId::SCORE_DESC: return "SCORE_DESC";
        case SchemeId::SCORE_ASC: return "SCORE_ASC";
        case SchemeId::EDGES_FIRST: return "EDGES_FIRST";
        default: return "MIDDLE_FIRST";
    }
}

inline SchemeId scheme_from_string(std::string_view s) {
    for (SchemeId id : all_schemes()) {
        if (to_string(id) == s) return id;
    }
    throw std::invalid_argument("unknown scheme id: " + std::string(s));
}

// Position sequence used by EDGES_FIRST: the k-th highest-scoring document
// goes to front, back, front+1, back-1, ... MIDDLE_FIRST assigns the same
// positions in exactly reversed order, concentrating top scores in the middle.
inline std::vector<std::size_t> edges_first_positions(std::size_t n) {
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) {
        pos[k] = (k % 2 == 0) ? k / 2 : n - 1 - k / 2;
    }
    return pos;
}

// `candidates` is the record's candidate list in retrieval order; `scores`
// aligns with it. Output is always a permutation of the input; score ties
// keep the original relative order.
inline std::vector<std::size_t> scheme_order(std::size_t n, const std::vector<double>& scores,
                                             SchemeId scheme) {
    if (n == 0) throw std::invalid_argument("empty candidate list");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    switch (scheme) {
        case SchemeId::ORIGINAL:
            return order;
        case SchemeId::REVERSED:
            std::reverse(order.begin(), order.end());
            return order;
        case SchemeId::SCORE_DESC:
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
            return order;
        case SchemeId::SCORE_ASC:
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
            return order;
        case SchemeId::EDGES_FIRST:
        case SchemeId::MIDDLE_FIRST: {
            std::vector<std::size_t> by_score = order;
            std::stable_sort(by_score.begin(), by_score.end(),
                             [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
            std::vector<std::size_t> positions = edges_first_positions(n);
            if (scheme == SchemeId::MIDDLE_FIRST) {
                std::reverse(positions.begin(), positions.end());
            }
            std::vector<std::size_t> placed(n);
            for (std::size_t k = 0; k < n; ++k) placed[positions[k]] = by_score[k];
            return placed;
        }
    }
    throw std::invalid_argument("unknown scheme id");
}

inline OrderedSubset apply_scheme(const std::string& query_id,
                                  const std::vector<const Document*>& candidates,
                                  const std::vector<double>& scores, SchemeId scheme) {
    if (candidates.size() != scores.size()) {
        throw std::invalid_argument("scores must align with candidates");
    }
    std::vector<std::size_t> order = scheme_order(candidates.size(), scores, scheme);
    std::vector<std::string> ids;
    ids.reserve(order.size());
    for (std::size_t i : order) ids.push_back(candidates[i]->doc_id);
    return make_subset(query_id, std::move(ids),
                       Provenance{ProvenanceKind::scheme, to_string(scheme), 0});
}

// Scores from retrieval_score when every candidate carries one; otherwise the
// retrieval rank inverted so that SCORE_DESC matches the original ordering.
inline std::vector<double> scheme_scores(const std::vector<const Document*>& candidates) {
    bool all_scored = std::all_of(candidates.begin(), candidates.end(),
                                  [](const Document* d) { return d->retrieval_score.has_value(); });
    std::vector<double> scores;
    scores.reserve(candidates.size());
    for (const Document* d : candidates) {
        scores.push_back(all_scored
                             ? *d->retrieval_score
                             : static_cast<double>(candidates.size() + 1 - d->retrieval_rank));
    }
    return scores;
}

inline OrderedSubset apply_scheme(const QueryRecord& record, SchemeId scheme) {
    std::vector<const Document*> candidates = record.by_rank();
    return apply_scheme(record.query_id, candidates, scheme_scores(candidates), scheme);
}

// ---------------------------------------------------------------------------
// Positive + negative mixes
// ---------------------------------------------------------------------------

struct MixOptions {
    std::vector<int> m_options = {1, 2};  // candidate negative counts per subset
    std::size_t per_query_budget = 6;
    std::uint64_t seed = 0;
};

struct MixResult {
    std::vector<OrderedSubset> subsets;
    bool skipped_no_negatives = false;
    bool dedup_shortfall = false;  // colliding compositions left us under budget
};

// Every emitted subset contains all positives (in a seeded-random relative
// order) plus m sampled negatives inserted at seeded-uniform positions.
inline MixResult mix_subsets(const QueryRecord& record,
                             const std::vector<std::string>& sampled_negatives,
                             const MixOptions& options) {
    MixResult result;
    std::vector<std::string> positives = default_positive_order(record);
    if (positives.empty()) throw std::invalid_argument("record has no positive documents");
    if (sampled_negatives.empty()) {
        result.skipped_no_negatives = true;
        return result;
    }
    if (options.m_options.empty()) throw std::invalid_argument("m_options must be nonempty");

    Rng rng = Rng::derive(options.seed, "mix:" + record.query_id);
    std::set<std::string> seen;
    const std::size_t max_attempts = options.per_query_budget * 10 + 10;
    for (std::size_t attempt = 0;
         attempt < max_attempts && result.subsets.size() < options.per_query_budget; ++attempt) {
        int m = options.m_options[rng.next_below(options.m_options.size())];
        if (m < 0) throw std::invalid_argument("negative m in m_options");
        std::size_t m_eff = std::min<std::size_t>(m, sampled_negatives.size());

        std::vector<std::string> seq = positives;
        rng.shuffle(seq);
        for (std::size_t idx : rng.sample_indices(sampled_negatives.size(), m_eff)) {
            std::size_t at = rng.next_below(seq.size() + 1);
            seq.insert(seq.begin() + at, sampled_negatives[idx]);
        }
        std::string key = make_canonical_key(record.query_id, seq);
        if (!seen.insert(key).second) continue;
        result.subsets.push_back(make_subset(
            record.query_id, std::move(seq),
            Provenance{ProvenanceKind::mixed, "", static_cast<int>(m_eff)}));
    }
    result.dedup_shortfall = result.subsets.size() < options.per_query_budget;
    return result;
}

}  // namespace forge
