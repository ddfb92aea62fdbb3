#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/corpus.hpp"
#include "forge/rng.hpp"
#include "forge/text.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Tokenization for TF-IDF (distinct from the answer-normalization tokenizers)
// ---------------------------------------------------------------------------

// EN: lowercase, whitespace/punctuation act as separators.
// ZH: one token per non-whitespace codepoint.
inline std::vector<std::string> tfidf_tokens(std::string_view text, Language language) {
    std::vector<std::string> tokens;
    if (language == Language::EN) {
        std::string current;
        std::size_t i = 0;
        while (i < text.size()) {
            char32_t cp = utf8::decode(text, i);
            if (is_space(cp) || is_punct(cp)) {
                if (!current.empty()) tokens.push_back(std::move(current));
                current.clear();
            } else {
                utf8::append(current, to_lower(cp));
            }
        }
        if (!current.empty()) tokens.push_back(std::move(current));
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            char32_t cp = utf8::decode(text, i);
            if (is_space(cp)) continue;
            std::string tok;
            utf8::append(tok, cp);
            tokens.push_back(std::move(tok));
        }
    }
    return tokens;
}

// ---------------------------------------------------------------------------
// Sparse vectors
// ---------------------------------------------------------------------------

using SparseVector = std::map<std::string, double>;

inline double norm(const SparseVector& v) {
    double sum = 0.0;
    for (const auto& [_, w] : v) sum += w * w;
    return std::sqrt(sum);
}

inline double cosine(const SparseVector& a, const SparseVector& b) {
    double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("cosine of zero vector");
    double dot = 0.0;
    const SparseVector& small = a.size() <= b.size() ? a : b;
    const SparseVector& large = a.size() <= b.size() ? b : a;
    for (const auto& [term, w] : small) {
        auto it = large.find(term);
        if (it != large.end()) dot += w * it->second;
    }
    return dot / (na * nb);
}

using DenseVector = std::vector<double>;

inline double cosine(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("cosine dimension mismatch");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("cosine of zero vector");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

struct TfidfModel {
    std::map<std::string, SparseVector> doc_vectors;  // doc_id -> L2-normalized vector
    std::vector<std::string> zero_term_docs;          // tokenized to nothing; flagged
    std::map<std::string, double> idf;                // over the per-record pool
    std::size_t pool_size = 0;

    // TF-IDF for arbitrary text against this pool's idf (unseen terms get the
    // df=0 idf). Returns an L2-normalized vector; empty when no tokens.
    SparseVector vectorize(std::string_view text, Language language) const {
        std::vector<std::string> tokens = tfidf_tokens(text, language);
        if (tokens.empty()) return {};
        std::map<std::string, double> counts;
        for (const auto& t : tokens) counts[t] += 1.0;
        SparseVector v;
        double df0_idf = std::log((1.0 + pool_size) / 1.0) + 1.0;
        for (const auto& [term, count] : counts) {
            auto it = idf.find(term);
            double term_idf = it != idf.end() ? it->second : df0_idf;
            v[term] = (count / tokens.size()) * term_idf;
        }
        double n = norm(v);
        if (n > 0.0) {
            for (auto& [_, w] : v) w /= n;
        }
        return v;
    }
};

// TF = raw term count / token count, IDF = ln((1+N)/(1+df)) + 1 over the
// per-record candidate pool, vectors L2-normalized.
inline TfidfModel tfidf_vectors(const std::vector<const Document*>& docs, Language language) {
    if (docs.empty()) throw std::invalid_argument("tfidf over empty document pool");
    TfidfModel model;
    model.pool_size = docs.size();

    std::map<std::string, std::vector<std::string>> doc_tokens;
    std::map<std::string, std::size_t> df;
    for (const Document* d : docs) {
        auto tokens = tfidf_tokens(d->text, language);
        std::set<std::string> unique(tokens.begin(), tokens.end());
        for (const auto& t : unique) ++df[t];
        doc_tokens[d->doc_id] = std::move(tokens);
    }
    for (const auto& [term, count] : df) {
        model.idf[term] = std::log((1.0 + docs.size()) / (1.0 + count)) + 1.0;
    }

    for (const Document* d : docs) {
        const auto& tokens = doc_tokens[d->doc_id];
        if (tokens.empty()) {
            model.zero_term_docs.push_back(d->doc_id);
            model.doc_vectors[d->doc_id] = {};
            continue;
        }
        std::map<std::string, double> counts;
        for (const auto& t : tokens) counts[t] += 1.0;
        SparseVector v;
        for (const auto& [term, count] : counts) {
            v[term] = (count / tokens.size()) * model.idf[term];
        }
        double n = norm(v);
        for (auto& [_, w] : v) w /= n;
        model.doc_vectors[d->doc_id] = std::move(v);
    }
    return model;
}

// ---------------------------------------------------------------------------
// Embedding providers
// ---------------------------------------------------------------------------

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::optional<DenseVector> embed_query(const QueryRecord& record) = 0;
    virtual std::optional<DenseVector> embed_document(const QueryRecord& record,
                                                      const Document& doc) = 0;
};

// Deterministic hash-derived pseudo-embeddings (unit-normalized); lets the
// pipeline and tests run without any embedding model.
class HashEmbedder : public EmbeddingProvider {
public:
    explicit HashEmbedder(std::size_t dim = 64, std::uint64_t seed = 0)
        : dim_(dim), seed_(seed) {}

    DenseVector embed_text(std::string_view text) const {
        std::uint64_t base = fnv1a64(text) ^ seed_;
        DenseVector v(dim_);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            std::uint64_t s = base + 0x9E3779B97F4A7C15ull * (i + 1);
            double u = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
            v[i] = 2.0 * u - 1.0;
            norm_sq += v[i] * v[i];
        }
        double n = std::sqrt(norm_sq);
        for (double& x : v) x /= n;
        return v;
    }

    std::optional<DenseVector> embed_query(const QueryRecord& record) override {
        return embed_text(record.query);
    }
    std::optional<DenseVector> embed_document(const QueryRecord&, const Document& doc) override {
        return embed_text(doc.text);
    }

private:
    std::size_t dim_;
    std::uint64_t seed_;
};

// Sidecar file of precomputed embeddings, one JSON object per line:
//   {"id": "...", "vector": [..]}
// Keys: "q:<query_id>" for queries, "d:<query_id>:<doc_id>" for documents.
class SidecarEmbeddings : public EmbeddingProvider {
public:
    explicit SidecarEmbeddings(const std::string& path) {
        for (const auto& j : jsonl::read_all(path)) {
            vectors_[j.at("id").get<std::string>()] = j.at("vector").get<DenseVector>();
        }
    }

    std::optional<DenseVector> embed_query(const QueryRecord& record) override {
        return lookup("q:" + record.query_id);
    }
    std::optional<DenseVector> embed_document(const QueryRecord& record,
                                              const Document& doc) override {
        return lookup("d:" + record.query_id + ":" + doc.doc_id);
    }

private:
    std::optional<DenseVector> lookup(const std::string& key) const {
        auto it = vectors_.find(key);
        if (it == vectors_.end()) return std::nullopt;
        return it->second;
    }

    std::map<std::string, DenseVector> vectors_;
};

// Falls back to hash pseudo-embeddings for ids the primary provider lacks.
class FallbackEmbeddings : public EmbeddingProvider {
public:
    FallbackEmbeddings(std::unique_ptr<EmbeddingProvider> primary, std::size_t dim,
                       std::uint64_t seed)
        : primary_(std::move(primary)), hash_(dim, seed) {}

    std::optional<DenseVector> embed_query(const QueryRecord& record) override {
        if (auto v = primary_->embed_query(record)) return v;
        return hash_.embed_query(record);
    }
    std::optional<DenseVector> embed_document(const QueryRecord& record,
                                              const Document& doc) override {
        if (auto v = primary_->embed_document(record, doc)) return v;
        return hash_.embed_document(record, doc);
    }

private:
    std::unique_ptr<EmbeddingProvider> primary_;
    HashEmbedder hash_;
};

// ---------------------------------------------------------------------------
// Three-dimensional fusion clustering
// ---------------------------------------------------------------------------

using ClusterCoordinate = std::array<int, 3>;  // (len_label, dense_label, sparse_label)

struct ClusterAssignment {
    std::map<std::string, ClusterCoordinate> coordinates;          // per negative doc
    std::map<ClusterCoordinate, std::vector<std::string>> buckets; // doc_ids sorted
    std::vector<std::string> zero_sparse_docs;  // excluded from sparse thresholds
};

namespace detail {

// Lower empirical quantile: value at index ceil(p*n)-1 of the sorted sample.
inline double quantile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    std::size_t idx = static_cast<std::size_t>(std::ceil(p * values.size()));
    if (idx > 0) --idx;
    return values[idx];
}

inline int tertile_label(double x, double t1, double t2) {
    if (x <= t1) return 0;
    if (x <= t2) return 1;
    return 2;
}

}  // namespace detail

// Buckets the record's negative documents by the tertile label triple over
// (character length, dense query-doc cosine, sparse query-doc cosine).
// Thresholds are per-record quantiles, so the assignment is invariant to the
// candidate input order. Fewer than 3 negatives degenerate to one (0,0,0)
// bucket.
inline ClusterAssignment bucket_documents(const QueryRecord& record,
                                          EmbeddingProvider& embeddings) {
    ClusterAssignment assignment;
    std::vector<const Document*> negatives = record.negatives();
    std::sort(negatives.begin(), negatives.end(), [](const Document* a, const Document* b) {
        return a->doc_id < b->doc_id;
    });
    if (negatives.empty()) return assignment;

    if (negatives.size() < 3) {
        for (const Document* d : negatives) {
            assignment.coordinates[d->doc_id] = {0, 0, 0};
            assignment.buckets[{0, 0, 0}].push_back(d->doc_id);
        }
        return assignment;
    }

    // Scalars per dimension.
    std::map<std::string, double> len_of, dense_of, sparse_of;
    for (const Document* d : negatives) {
        len_of[d->doc_id] = static_cast<double>(utf8::count_codepoints(d->text));
    }

    auto query_emb = embeddings.embed_query(record);
    if (!query_emb) throw std::runtime_error("no embedding for query " + record.query_id);
    for (const Document* d : negatives) {
        auto doc_emb = embeddings.embed_document(record, *d);
        if (!doc_emb) {
            throw std::runtime_error("no embedding for document " + d->doc_id + " of query " +
                                     record.query_id);
        }
        dense_of[d->doc_id] = cosine(*query_emb, *doc_emb);
    }

    std::vector<const Document*> pool;
    for (const Document& d : record.candidates) pool.push_back(&d);
    TfidfModel tfidf = tfidf_vectors(pool, record.language);
    SparseVector query_vec = tfidf.vectorize(record.query, record.language);
    std::set<std::string> zero_sparse(tfidf.zero_term_docs.begin(), tfidf.zero_term_docs.end());
    for (const Document* d : negatives) {
        const SparseVector& dv = tfidf.doc_vectors[d->doc_id];
        if (zero_sparse.count(d->doc_id) || query_vec.empty() || dv.empty()) {
            if (zero_sparse.count(d->doc_id)) assignment.zero_sparse_docs.push_back(d->doc_id);
            sparse_of[d->doc_id] = 0.0;  // excluded from thresholds, label 0
        } else {
            sparse_of[d->doc_id] = cosine(query_vec, dv);
        }
    }

    auto labels_for = [&](const std::map<std::string, double>& scalar,
                          const std::set<std::string>& excluded) {
        std::vector<double> values;
        for (const auto& [doc_id, x] : scalar) {
            if (!excluded.count(doc_id)) values.push_back(x);
        }
        std::map<std::string, int> labels;
        if (values.empty()) {
            for (const auto& [doc_id, _] : scalar) labels[doc_id] = 0;
            return labels;
        }
        double t1 = detail::quantile(values, 1.0 / 3.0);
        double t2 = detail::quantile(values, 2.0 / 3.0);
        for (const auto& [doc_id, x] : scalar) {
            labels[doc_id] = excluded.count(doc_id) ? 0 : detail::tertile_label(x, t1, t2);
        }
        return labels;
    };

    std::map<std::string, int> len_labels = labels_for(len_of, {});
    std::map<std::string, int> dense_labels = labels_for(dense_of, {});
    std::map<std::string, int> sparse_labels = labels_for(sparse_of, zero_sparse);

    for (const Document* d : negatives) {
        ClusterCoordinate coord = {len_labels[d->doc_id], dense_labels[d->doc_id],
                                   sparse_labels[d->doc_id]};
        assignment.coordinates[d->doc_id] = coord;
        assignment.buckets[coord].push_back(d->doc_id);
    }
    return assignment;
}

struct NegativeSample {
    std::vector<std::string> doc_ids;  // draw order, duplicate-free
    bool truncated = false;            // m exceeded the available negatives
};

// One document per bucket round-robin (buckets by descending size, ties by
// lexicographic coordinate), seeded-uniform choice within a bucket, wrapping
// around while excluding already-picked documents.
inline NegativeSample sample_negatives(const ClusterAssignment& assignment, std::size_t m,
                                       std::uint64_t seed) {
    NegativeSample result;
    std::size_t total = 0;
    for (const auto& [_, docs] : assignment.buckets) total += docs.size();
    if (m > total) {
        result.truncated = true;
        m = total;
    }
    if (m == 0) return result;

    std::vector<std::pair<ClusterCoordinate, std::vector<std::string>>> buckets(
        assignment.buckets.begin(), assignment.buckets.end());
    std::stable_sort(buckets.begin(), buckets.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
        return a.first < b.first;
    });

    // Pre-shuffling each bucket with its own stream gives uniform
    // without-replacement draws in a fixed pick order.
    for (auto& [coord, docs] : buckets) {
        std::string key = "bucket:" + std::to_string(coord[0]) + "," +
                          std::to_string(coord[1]) + "," + std::to_string(coord[2]);
        Rng rng = Rng::derive(seed, key);
        rng.shuffle(docs);
    }

    std::vector<std::size_t> cursor(buckets.size(), 0);
    while (result.doc_ids.size() < m) {
        for (std::size_t b = 0; b < buckets.size() && result.doc_ids.size() < m; ++b) {
            if (cursor[b] < buckets[b].second.size()) {
                result.doc_ids.push_back(buckets[b].second[cursor[b]++]);
            }
        }
    }
    return result;
}

inline Json to_json(const ClusterAssignment& assignment, const std::string& query_id) {
    Json j;
    j["query_id"] = query_id;
    Json coords = Json::object();
    for (const auto& [doc_id, c] : assignment.coordinates) {
        coords[doc_id] = Json::array({c[0], c[1], c[2]});
    }
    j["coordinates"] = coords;
    j["zero_sparse_docs"] = assignment.zero_sparse_docs;
    return j;
}

}  // namespace forge
