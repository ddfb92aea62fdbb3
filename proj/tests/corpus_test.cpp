#include <cstdio>
#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "forge/corpus.hpp"
#include "forge/synth.hpp"

using namespace forge;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "forge-corpus-test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Json valid_record_json(const std::string& qid) {
    Json j;
    j["query_id"] = qid;
    j["query"] = "what is recorded for " + qid + "?";
    j["gold_answers"] = Json::array({"answer " + qid});
    j["language"] = "EN";
    j["source"] = "unit";
    j["candidates"] = Json::array();
    for (int i = 1; i <= 3; ++i) {
        Json d;
        d["doc_id"] = "d" + std::to_string(i);
        d["text"] = "text for doc " + std::to_string(i);
        d["retrieval_rank"] = i;
        d["label"] = i == 1 ? "positive" : "negative";
        j["candidates"].push_back(d);
    }
    return j;
}

}  // namespace

TEST_CASE("ingest accepts valid records and rejects invariant violations") {
    fs::path in = temp_dir() / "mixed.jsonl";
    {
        std::ofstream out(in);
        for (int i = 0; i < 5; ++i) out << valid_record_json("q" + std::to_string(i)).dump() << "\n";
        Json bad = valid_record_json("qdup");
        bad["candidates"][1]["doc_id"] = "d1";  // duplicate doc_id
        out << bad.dump() << "\n";
    }
    IngestResult result = ingest_corpus(in.string(), "canonical");
    CHECK(result.records.size() == 5);
    CHECK(result.stats.rejected == 1);
    CHECK(result.stats.accepted == 5);

    std::string rejects = read_file(in.string() + ".rejects");
    CHECK(rejects.find("duplicate doc_id 'd1'") != std::string::npos);
    CHECK(rejects.find("line 6") != std::string::npos);
}

TEST_CASE("ingest of an empty file yields empty stream and zero stats") {
    fs::path in = temp_dir() / "empty.jsonl";
    std::ofstream(in).close();
    IngestResult result = ingest_corpus(in.string(), "canonical");
    CHECK(result.records.empty());
    CHECK(result.stats.accepted == 0);
    CHECK(result.stats.rejected == 0);
}

TEST_CASE("ingest rejects malformed lines, bad ranks, and zero-positive records") {
    fs::path in = temp_dir() / "bad.jsonl";
    {
        std::ofstream out(in);
        out << "this is not json\n";
        Json bad_rank = valid_record_json("qr");
        bad_rank["candidates"][2]["retrieval_rank"] = 5;  // 1,2,5 is not contiguous
        out << bad_rank.dump() << "\n";
        Json no_pos = valid_record_json("qn");
        for (auto& d : no_pos["candidates"]) d["label"] = "negative";
        out << no_pos.dump() << "\n";
        Json no_gold = valid_record_json("qg");
        no_gold["gold_answers"] = Json::array();
        out << no_gold.dump() << "\n";
        out << valid_record_json("qok").dump() << "\n";
    }
    IngestResult result = ingest_corpus(in.string(), "canonical");
    CHECK(result.records.size() == 1);
    CHECK(result.stats.rejected == 4);
    std::string rejects = read_file(in.string() + ".rejects");
    CHECK(rejects.find("not a contiguous 1..N permutation") != std::string::npos);
    CHECK(rejects.find("no positive documents") != std::string::npos);
    CHECK(rejects.find("no gold answers") != std::string::npos);
}

TEST_CASE("source schemas set source tag and language defaults") {
    fs::path in = temp_dir() / "crud.jsonl";
    {
        Json j;
        j["id"] = "c1";
        j["question"] = "问题一";
        j["answers"] = Json::array({"回答"});
        j["docs"] = Json::array();
        for (int i = 0; i < 2; ++i) {
            j["docs"].push_back(Json{{"text", "文档" + std::to_string(i)},
                                     {"label", i == 0 ? "positive" : "negative"},
                                     {"score", 0.9 - 0.1 * i}});
        }
        std::ofstream out(in);
        out << j.dump() << "\n";
        j["id"] = "c2";
        j["language"] = "EN";  // explicit tag overrides the per-source default
        out << j.dump() << "\n";
    }
    IngestResult result = ingest_corpus(in.string(), "crud");
    REQUIRE(result.records.size() == 2);
    CHECK(result.records[0].source == "CRUD");
    CHECK(result.records[0].language == Language::ZH);
    CHECK(result.records[1].language == Language::EN);
    CHECK(result.records[0].candidates[0].retrieval_rank == 1);
    CHECK(result.records[0].candidates[0].retrieval_score.has_value());

    CHECK_THROWS_AS(ingest_corpus(in.string(), "no-such-schema"), std::invalid_argument);
    CHECK_THROWS(ingest_corpus((temp_dir() / "missing.jsonl").string(), "canonical"));
}

TEST_CASE("canonical emission is idempotent byte-for-byte") {
    SynthOptions options;
    options.per_source = {{"alpha", 20}, {"beta-zh", 15}};
    options.language_of = {{"beta-zh", "ZH"}};
    options.seed = 9;
    auto corpus = make_synthetic_corpus(options);

    fs::path first = temp_dir() / "canon1.jsonl";
    write_corpus(first.string(), corpus);
    IngestResult again = ingest_corpus(first.string(), "canonical");
    CHECK(again.stats.rejected == 0);
    fs::path second = temp_dir() / "canon2.jsonl";
    write_corpus(second.string(), again.records);
    CHECK(read_file(first.string()) == read_file(second.string()));

    // stats invariant: counts sum to total
    std::size_t by_source = 0;
    for (const auto& [_, n] : again.stats.per_source) by_source += n;
    CHECK(by_source == again.stats.accepted);
    std::size_t by_hist = 0;
    for (const auto& [_, n] : again.stats.positive_count_histogram) by_hist += n;
    CHECK(by_hist == again.stats.accepted);
}

TEST_CASE("retrieval ranks always form a 1..N permutation after ingest") {
    SynthOptions options;
    options.per_source = {{"alpha", 30}};
    options.seed = 4;
    for (const auto& r : make_synthetic_corpus(options)) {
        std::vector<int> ranks;
        for (const auto& d : r.candidates) ranks.push_back(d.retrieval_rank);
        std::sort(ranks.begin(), ranks.end());
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            REQUIRE(ranks[i] == static_cast<int>(i) + 1);
        }
    }
}

TEST_CASE("quota sampling is exact, duplicate-free, and deterministic") {
    SynthOptions options;
    options.per_source = {{"hot", 120}, {"wiki", 60}};
    options.seed = 21;
    auto corpus = make_synthetic_corpus(options);

    std::map<std::string, std::size_t> quotas{{"hot", 40}, {"wiki", 60}};
    auto sampled = sample_quota(corpus, quotas, 7);
    CHECK(sampled.size() == 100);
    std::map<std::string, std::size_t> counts;
    std::set<std::string> ids;
    for (const auto& r : sampled) {
        ++counts[r.source];
        CHECK(ids.insert(r.query_id).second);
    }
    CHECK(counts["hot"] == 40);
    CHECK(counts["wiki"] == 60);

    fs::path a = temp_dir() / "sample-a.jsonl";
    fs::path b = temp_dir() / "sample-b.jsonl";
    write_corpus(a.string(), sample_quota(corpus, quotas, 7));
    write_corpus(b.string(), sample_quota(corpus, quotas, 7));
    CHECK(read_file(a.string()) == read_file(b.string()));

    // different seed, different selection (overwhelmingly likely)
    auto other = sample_quota(corpus, quotas, 8);
    bool any_diff = false;
    for (std::size_t i = 0; i < sampled.size(); ++i) {
        if (sampled[i].query_id != other[i].query_id) any_diff = true;
    }
    CHECK(any_diff);

    SECTION("zero quota yields empty output") {
        auto none = sample_quota(corpus, {{"hot", 0}}, 7);
        CHECK(none.empty());
    }
    SECTION("overflow quota names the offending source") {
        try {
            sample_quota(corpus, {{"wiki", 61}}, 7);
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("wiki") != std::string::npos);
        }
    }
}

TEST_CASE("quota spec parsing") {
    auto q = parse_quota_spec("a=10,b=0,c=3");
    CHECK(q.size() == 3);
    CHECK(q["a"] == 10);
    CHECK(q["b"] == 0);
    CHECK(q["c"] == 3);
    CHECK_THROWS_AS(parse_quota_spec("nocount"), std::invalid_argument);
}
