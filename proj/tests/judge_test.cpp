#include <atomic>
#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "forge/eval.hpp"
#include "forge/judge.hpp"

using namespace forge;

namespace {

QueryRecord judge_fixture() {
    QueryRecord r;
    r.query_id = "q1";
    r.query = "who wrote the ledger?";
    r.gold_answers = {"the cat"};
    r.source = "unit";
    r.language = Language::EN;
    Document d;
    d.doc_id = "d1";
    d.text = "the ledger was written by the cat";
    d.retrieval_rank = 1;
    d.label = DocLabel::positive;
    r.candidates.push_back(d);
    return r;
}

GenerationResult result_for(const QueryRecord& r, const std::string& key,
                            const std::string& answer, const std::string& gen = "g1") {
    GenerationResult g;
    g.query_id = r.query_id;
    g.generator_id = gen;
    g.canonical_key = key;
    g.answer_text = answer;
    g.raw_response = "Answer: " + answer;
    return g;
}

JudgedSample sample_for(const std::string& qid, const std::string& gen, const std::string& key,
                        double score) {
    JudgedSample s;
    s.query_id = qid;
    s.generator_id = gen;
    s.canonical_key = key;
    s.score = score;
    s.judge_kind = "oracle";
    return s;
}

std::map<std::string, OrderedSubset> subsets_for(const std::string& qid,
                                                 const std::vector<std::string>& keys) {
    std::map<std::string, OrderedSubset> out;
    int i = 0;
    for (const auto& key : keys) {
        OrderedSubset s;
        s.query_id = qid;
        s.doc_ids = {"d" + std::to_string(++i)};
        s.canonical_key = key;
        out[key] = s;
    }
    return out;
}

}  // namespace

TEST_CASE("oracle judge scores by token F1") {
    QueryRecord r = judge_fixture();
    std::vector<GenerationResult> results = {
        result_for(r, "k1", "the cat"),           // exact -> 1.0
        result_for(r, "k2", "WRONG-abcd1234"),    // disjoint -> 0.0
        result_for(r, "k3", "the cat sat"),       // P=2/3, R=1 -> 0.8
    };
    auto judged = judge_oracle(r, results);
    REQUIRE(judged.size() == 3);
    CHECK(judged[0].score == Catch::Approx(1.0));
    CHECK(judged[1].score == Catch::Approx(0.0));
    CHECK(judged[2].score == Catch::Approx(0.8).margin(1e-12));
    CHECK(judged[0].judge_kind == "oracle");
}

TEST_CASE("llm judge grades listwise batches") {
    QueryRecord r = judge_fixture();

    SECTION("grades map to scores and duplicates share one grade") {
        std::vector<GenerationResult> results = {
            result_for(r, "k1", "the cat"),
            result_for(r, "k2", "a dog"),
            result_for(r, "k3", "the cat"),  // duplicate text of k1
        };
        std::atomic<int> calls{0};
        std::string seen_user;
        ChatFn judge_chat = [&](const ChatRequest& req) -> ChatResponse {
            ++calls;
            seen_user = req.user;
            return {true, "[1] 5\n[2] 2\n", ""};  // two unique texts only
        };
        JudgeBatchResult batch = judge_llm(r, results, judge_chat);
        REQUIRE(batch.samples.size() == 3);
        CHECK(calls == 1);  // deduped into one listwise request
        CHECK(batch.samples[0].score == Catch::Approx(1.0));
        CHECK(batch.samples[1].score == Catch::Approx(0.25));
        CHECK(batch.samples[2].score == Catch::Approx(1.0));  // fanned out
        CHECK(batch.samples[0].judge_kind == "llm");
        // the listwise prompt carries the gold answer and the unique responses
        CHECK(seen_user.find("the cat") != std::string::npos);
        CHECK(seen_user.find("[2] a dog") != std::string::npos);
        CHECK(seen_user.find("[3]") == std::string::npos);
    }

    SECTION("malformed output triggers exactly one re-ask") {
        std::vector<GenerationResult> results = {result_for(r, "k1", "x")};
        std::atomic<int> calls{0};
        ChatFn judge_chat = [&](const ChatRequest&) -> ChatResponse {
            return ++calls == 1 ? ChatResponse{true, "gibberish", ""}
                                : ChatResponse{true, "[1] 4", ""};
        };
        JudgeBatchResult batch = judge_llm(r, results, judge_chat);
        CHECK(calls == 2);
        REQUIRE(batch.samples.size() == 1);
        CHECK(batch.samples[0].score == Catch::Approx(0.75));
    }

    SECTION("persistently malformed output marks the batch unjudged") {
        std::vector<GenerationResult> results = {result_for(r, "k1", "x"),
                                                 result_for(r, "k2", "y")};
        ChatFn judge_chat = [](const ChatRequest&) -> ChatResponse {
            return {true, "no grades here", ""};
        };
        JudgeBatchResult batch = judge_llm(r, results, judge_chat);
        CHECK(batch.samples.empty());
        CHECK(batch.unjudged == std::vector<std::string>{"k1", "k2"});
    }

    SECTION("grade parser demands exactly one line per response") {
        CHECK(parse_judge_grades("[1] 3\n[2] 5", 2).has_value());
        CHECK(parse_judge_grades("[1] 3", 2) == std::nullopt);            // missing
        CHECK(parse_judge_grades("[1] 3\n[1] 4", 2) == std::nullopt);     // duplicate
        CHECK(parse_judge_grades("[1] 3\n[2] 9", 2) == std::nullopt);     // out of scale
        CHECK(parse_judge_grades("[1] 3\n[3] 4", 2) == std::nullopt);     // out of range
        CHECK(parse_judge_grades("[1]: 3\n[2] = 5", 2).has_value());      // tolerated separators
    }

    SECTION("judge-mock grades agree monotonically with oracle scores") {
        std::vector<GenerationResult> results = {
            result_for(r, "k1", "the cat"),        // f1 = 1.0
            result_for(r, "k2", "the cat sat"),    // f1 = 0.8
            result_for(r, "k3", "cat dog bird"),   // f1 = 0.4
            result_for(r, "k4", "nothing"),        // f1 = 0.0
        };
        // scripted judge-mock: grade = 1 + round(4 * f1), precomputed
        ChatFn judge_chat = [](const ChatRequest&) -> ChatResponse {
            return {true, "[1] 5\n[2] 4\n[3] 3\n[4] 1", ""};
        };
        auto oracle = judge_oracle(r, results);
        auto llm = judge_llm(r, results, judge_chat).samples;
        REQUIRE(llm.size() == oracle.size());
        // Spearman rank correlation over the shared ordering
        auto rank_of = [](const std::vector<double>& v) {
            std::vector<double> rank(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (v[j] > v[i]) rank[i] += 1.0;
                }
            }
            return rank;
        };
        std::vector<double> a, b;
        for (std::size_t i = 0; i < llm.size(); ++i) {
            a.push_back(oracle[i].score);
            b.push_back(llm[i].score);
        }
        auto ra = rank_of(a), rb = rank_of(b);
        double d2 = 0.0;
        for (std::size_t i = 0; i < ra.size(); ++i) d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
        double n = static_cast<double>(ra.size());
        double spearman = 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
        CHECK(spearman >= 0.99);
    }
}

TEST_CASE("preference derivation") {
    SECTION("two scores a margin apart give one pair with the actual gap") {
        auto subsets = subsets_for("q", {"k1", "k2"});
        std::vector<JudgedSample> samples = {sample_for("q", "g", "k1", 1.0),
                                             sample_for("q", "g", "k2", 0.0)};
        auto pairs = derive_preferences(samples, subsets, {0.2, 4, 0});
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].chosen.canonical_key == "k1");
        CHECK(pairs[0].rejected.canonical_key == "k2");
        CHECK(pairs[0].margin == Catch::Approx(1.0));
    }

    SECTION("equal scores give no pairs") {
        auto subsets = subsets_for("q", {"k1", "k2", "k3"});
        std::vector<JudgedSample> samples = {sample_for("q", "g", "k1", 0.5),
                                             sample_for("q", "g", "k2", 0.5),
                                             sample_for("q", "g", "k3", 0.5)};
        CHECK(derive_preferences(samples, subsets, {0.25, 4, 0}).empty());
    }

    SECTION("selection pairs the best subsets against weaker ones first") {
        auto subsets = subsets_for("q", {"k1", "k2", "k3", "k4"});
        std::vector<JudgedSample> samples = {sample_for("q", "g", "k1", 1.0),
                                             sample_for("q", "g", "k2", 0.75),
                                             sample_for("q", "g", "k3", 0.5),
                                             sample_for("q", "g", "k4", 0.0)};
        auto pairs = derive_preferences(samples, subsets, {0.3, 2, 0});
        REQUIRE(pairs.size() == 2);
        CHECK(pairs[0].chosen_score == Catch::Approx(1.0));
        CHECK(pairs[0].rejected_score == Catch::Approx(0.0));
        CHECK(pairs[1].chosen_score == Catch::Approx(1.0));
        CHECK(pairs[1].rejected_score == Catch::Approx(0.5));
    }

    SECTION("margin must be positive") {
        auto subsets = subsets_for("q", {"k1", "k2"});
        std::vector<JudgedSample> samples = {sample_for("q", "g", "k1", 1.0),
                                             sample_for("q", "g", "k2", 0.0)};
        CHECK_THROWS_AS(derive_preferences(samples, subsets, {0.0, 4, 0}),
                        std::invalid_argument);
    }

    SECTION("antisymmetry and strictness over randomized scores") {
        Rng rng(13);
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<std::string> keys;
            std::vector<JudgedSample> samples;
            int n = 2 + static_cast<int>(rng.next_below(8));
            for (int i = 0; i < n; ++i) {
                std::string key = "k" + std::to_string(i);
                keys.push_back(key);
                samples.push_back(
                    sample_for("q", "g", key, static_cast<double>(rng.next_below(5)) / 4.0));
            }
            auto subsets = subsets_for("q", keys);
            auto pairs = derive_preferences(samples, subsets, {0.25, 100, 0});
            std::set<std::pair<std::string, std::string>> seen;
            for (const auto& p : pairs) {
                REQUIRE(p.chosen_score > p.rejected_score);
                REQUIRE(p.chosen_score - p.rejected_score >= 0.25);
                REQUIRE(p.chosen.canonical_key != p.rejected.canonical_key);
                seen.insert({p.chosen.canonical_key, p.rejected.canonical_key});
            }
            for (const auto& [a, b] : seen) {
                REQUIRE(seen.count({b, a}) == 0);
            }
        }
    }

    SECTION("pairs group per generator") {
        auto subsets = subsets_for("q", {"k1", "k2"});
        std::vector<JudgedSample> samples = {sample_for("q", "g1", "k1", 1.0),
                                             sample_for("q", "g1", "k2", 0.0),
                                             sample_for("q", "g2", "k2", 1.0),
                                             sample_for("q", "g2", "k1", 0.0)};
        auto pairs = derive_preferences(samples, subsets, {0.25, 4, 0});
        REQUIRE(pairs.size() == 2);
        CHECK(pairs[0].generator_id == "g1");
        CHECK(pairs[0].chosen.canonical_key == "k1");
        CHECK(pairs[1].generator_id == "g2");
        CHECK(pairs[1].chosen.canonical_key == "k2");
    }

    SECTION("pair json round-trip") {
        auto subsets = subsets_for("q", {"k1", "k2"});
        std::vector<JudgedSample> samples = {sample_for("q", "g", "k1", 1.0),
                                             sample_for("q", "g", "k2", 0.0)};
        auto pairs = derive_preferences(samples, subsets, {0.25, 4, 0});
        REQUIRE(pairs.size() == 1);
        PreferencePair p = preference_pair_from_json(to_json(pairs[0]));
        CHECK(p.chosen.canonical_key == "k1");
        CHECK(p.margin == Catch::Approx(1.0));
    }
}
