#include <algorithm>
#include <cmath>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "forge/features.hpp"
#include "forge/synth.hpp"

using namespace forge;

namespace {

Document make_doc(const std::string& id, const std::string& text, int rank,
                  DocLabel label = DocLabel::negative) {
    Document d;
    d.doc_id = id;
    d.text = text;
    d.retrieval_rank = rank;
    d.label = label;
    return d;
}

// All documents embed to the same vector; isolates the length dimension.
class ConstantEmbedder : public EmbeddingProvider {
public:
    std::optional<DenseVector> embed_query(const QueryRecord&) override {
        return DenseVector{1.0, 0.0};
    }
    std::optional<DenseVector> embed_document(const QueryRecord&, const Document&) override {
        return DenseVector{0.5, 0.5};
    }
};

}  // namespace

TEST_CASE("tfidf matches the hand-computed 3-doc oracle") {
    Document d1 = make_doc("d1", "a b a", 1);
    Document d2 = make_doc("d2", "b c", 2);
    Document d3 = make_doc("d3", "c d", 3);
    TfidfModel model = tfidf_vectors({&d1, &d2, &d3}, Language::EN);

    // Frozen from an independent reference computation of
    // tf = count/len, idf = ln((1+N)/(1+df)) + 1, then L2 normalization.
    CHECK(model.idf.at("a") == Catch::Approx(1.6931471805599454).margin(1e-12));
    CHECK(model.idf.at("b") == Catch::Approx(1.2876820724517808).margin(1e-12));
    const auto& v1 = model.doc_vectors.at("d1");
    CHECK(v1.at("a") == Catch::Approx(0.93470196362143276).margin(1e-9));
    CHECK(v1.at("b") == Catch::Approx(0.35543246785041749).margin(1e-9));
    const auto& v2 = model.doc_vectors.at("d2");
    CHECK(v2.at("b") == Catch::Approx(0.70710678118654757).margin(1e-9));
    CHECK(v2.at("c") == Catch::Approx(0.70710678118654757).margin(1e-9));
    const auto& v3 = model.doc_vectors.at("d3");
    CHECK(v3.at("c") == Catch::Approx(0.60534850810629159).margin(1e-9));
    CHECK(v3.at("d") == Catch::Approx(0.79596054156816520).margin(1e-9));

    SparseVector q = model.vectorize("a c", Language::EN);
    CHECK(cosine(q, v1) == Catch::Approx(0.74398588116894304).margin(1e-9));
}

TEST_CASE("sparse cosine identities") {
    Document d1 = make_doc("d1", "same words here", 1);
    Document d2 = make_doc("d2", "same words here", 2);
    Document d3 = make_doc("d3", "totally different tokens", 3);
    TfidfModel model = tfidf_vectors({&d1, &d2, &d3}, Language::EN);
    CHECK(cosine(model.doc_vectors.at("d1"), model.doc_vectors.at("d2")) ==
          Catch::Approx(1.0).margin(1e-12));
    CHECK(cosine(model.doc_vectors.at("d1"), model.doc_vectors.at("d3")) ==
          Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("zh tfidf tokenizes per character") {
    Document d1 = make_doc("d1", "北京 大学", 1);
    Document d2 = make_doc("d2", "北海", 2);
    TfidfModel model = tfidf_vectors({&d1, &d2}, Language::ZH);
    CHECK(model.doc_vectors.at("d1").count("北") == 1);
    CHECK(model.doc_vectors.at("d1").count("京") == 1);
    CHECK(model.doc_vectors.at("d1").size() == 4);  // whitespace dropped
    CHECK(cosine(model.doc_vectors.at("d1"), model.doc_vectors.at("d2")) > 0.0);
}

TEST_CASE("zero-term documents are flagged") {
    Document d1 = make_doc("d1", "real words", 1);
    Document d2 = make_doc("d2", "!!! ...", 2);  // tokenizes to nothing in EN
    TfidfModel model = tfidf_vectors({&d1, &d2}, Language::EN);
    REQUIRE(model.zero_term_docs.size() == 1);
    CHECK(model.zero_term_docs[0] == "d2");
    CHECK(model.doc_vectors.at("d2").empty());
}

TEST_CASE("dense cosine contract") {
    DenseVector a{1.0, 2.0, 3.0};
    DenseVector b{-1.0, 0.5, 2.0};
    CHECK(cosine(a, a) == Catch::Approx(1.0).margin(1e-12));
    CHECK(cosine(DenseVector{1, 0}, DenseVector{0, 1}) == Catch::Approx(0.0).margin(1e-12));
    CHECK(cosine(a, b) == Catch::Approx(cosine(b, a)).margin(1e-12));

    // brute-force recomputation
    double dot = 0, na = 0, nb = 0;
    for (int i = 0; i < 3; ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    CHECK(cosine(a, b) == Catch::Approx(dot / std::sqrt(na * nb)).margin(1e-12));

    CHECK_THROWS_AS(cosine(a, DenseVector{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(cosine(DenseVector{0, 0}, DenseVector{1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(cosine(SparseVector{}, SparseVector{{"a", 1.0}}), std::invalid_argument);
}

TEST_CASE("hash embeddings are deterministic unit vectors") {
    HashEmbedder em(64, 3);
    DenseVector v1 = em.embed_text("some document");
    DenseVector v2 = em.embed_text("some document");
    DenseVector v3 = em.embed_text("another document");
    CHECK(v1 == v2);
    CHECK(v1 != v3);
    double norm_sq = 0;
    for (double x : v1) norm_sq += x * x;
    CHECK(norm_sq == Catch::Approx(1.0).margin(1e-9));
    CHECK(v1.size() == 64);
}

TEST_CASE("nine negatives with increasing length split into tertiles") {
    QueryRecord r;
    r.query_id = "q";
    r.query = "irrelevant query";
    r.gold_answers = {"x"};
    r.source = "unit";
    int rank = 0;
    r.candidates.push_back(make_doc("pos", "gold text", ++rank, DocLabel::positive));
    for (int i = 1; i <= 9; ++i) {
        r.candidates.push_back(make_doc("n" + std::to_string(i), std::string(10 * i, 'z'), ++rank));
    }
    ConstantEmbedder embedder;
    ClusterAssignment assignment = bucket_documents(r, embedder);

    // identical dense and sparse values leave only the length dimension
    std::map<int, int> len_label_count;
    for (int i = 1; i <= 9; ++i) {
        auto coord = assignment.coordinates.at("n" + std::to_string(i));
        ++len_label_count[coord[0]];
        CHECK(coord[1] == 0);
        int expected = i <= 3 ? 0 : (i <= 6 ? 1 : 2);
        CHECK(coord[0] == expected);
    }
    CHECK(len_label_count[0] == 3);
    CHECK(len_label_count[1] == 3);
    CHECK(len_label_count[2] == 3);
    CHECK(assignment.buckets.size() <= 3);
}

TEST_CASE("fewer than three negatives collapse to a single bucket") {
    QueryRecord r;
    r.query_id = "q";
    r.query = "q text";
    r.gold_answers = {"x"};
    r.source = "unit";
    r.candidates.push_back(make_doc("p", "positive text", 1, DocLabel::positive));
    r.candidates.push_back(make_doc("n1", "one", 2));
    r.candidates.push_back(make_doc("n2", "two two", 3));
    HashEmbedder embedder(16, 0);
    ClusterAssignment assignment = bucket_documents(r, embedder);
    CHECK(assignment.buckets.size() == 1);
    CHECK((assignment.coordinates.at("n1") == ClusterCoordinate{0, 0, 0}));
    CHECK((assignment.coordinates.at("n2") == ClusterCoordinate{0, 0, 0}));
}

TEST_CASE("bucketing partitions negatives and ignores candidate order") {
    SynthOptions options;
    options.per_source = {{"src", 40}, {"src-zh", 20}};
    options.language_of = {{"src-zh", "ZH"}};
    options.seed = 77;
    options.min_negatives = 4;
    options.max_negatives = 9;
    HashEmbedder embedder(32, 1);
    Rng rng(5);

    for (const auto& record : make_synthetic_corpus(options)) {
        ClusterAssignment assignment = bucket_documents(record, embedder);

        std::set<std::string> expected;
        for (const auto* d : record.negatives()) expected.insert(d->doc_id);
        std::set<std::string> assigned;
        for (const auto& [doc_id, _] : assignment.coordinates) assigned.insert(doc_id);
        REQUIRE(assigned == expected);
        std::size_t in_buckets = 0;
        std::set<std::string> bucket_docs;
        for (const auto& [_, docs] : assignment.buckets) {
            in_buckets += docs.size();
            bucket_docs.insert(docs.begin(), docs.end());
        }
        REQUIRE(in_buckets == expected.size());
        REQUIRE(bucket_docs == expected);

        QueryRecord shuffled = record;
        rng.shuffle(shuffled.candidates);
        ClusterAssignment again = bucket_documents(shuffled, embedder);
        REQUIRE(again.coordinates == assignment.coordinates);
    }
}

TEST_CASE("sample_negatives walks buckets by size and never repeats") {
    ClusterAssignment assignment;
    assignment.buckets[{0, 0, 0}] = {"a1", "a2", "a3"};
    assignment.buckets[{1, 1, 1}] = {"b1", "b2"};
    assignment.buckets[{2, 2, 2}] = {"c1"};
    for (const auto& [coord, docs] : assignment.buckets) {
        for (const auto& d : docs) assignment.coordinates[d] = coord;
    }

    SECTION("m=0") { CHECK(sample_negatives(assignment, 0, 1).doc_ids.empty()); }

    SECTION("one per bucket when m equals bucket count") {
        NegativeSample s = sample_negatives(assignment, 3, 1);
        REQUIRE(s.doc_ids.size() == 3);
        CHECK(s.doc_ids[0][0] == 'a');
        CHECK(s.doc_ids[1][0] == 'b');
        CHECK(s.doc_ids[2][0] == 'c');
        CHECK_FALSE(s.truncated);
    }

    SECTION("wrap-around excludes already-picked docs") {
        NegativeSample s = sample_negatives(assignment, 5, 9);
        REQUIRE(s.doc_ids.size() == 5);
        std::set<std::string> uniq(s.doc_ids.begin(), s.doc_ids.end());
        CHECK(uniq.size() == 5);
        std::set<char> families;
        for (const auto& d : s.doc_ids) families.insert(d[0]);
        CHECK(families.size() == 3);  // at least one from each bucket
    }

    SECTION("m beyond the pool returns everything with a truncation flag") {
        NegativeSample s = sample_negatives(assignment, 99, 2);
        CHECK(s.doc_ids.size() == 6);
        CHECK(s.truncated);
        std::set<std::string> uniq(s.doc_ids.begin(), s.doc_ids.end());
        CHECK(uniq.size() == 6);
    }

    SECTION("deterministic for a fixed seed") {
        CHECK(sample_negatives(assignment, 4, 12).doc_ids ==
              sample_negatives(assignment, 4, 12).doc_ids);
    }
}
