#include <algorithm>
#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "forge/eval.hpp"
#include "forge/report.hpp"
#include "forge/rng.hpp"

using namespace forge;

namespace {

QueryRecord stub_record(const std::string& qid, const std::string& source,
                        const std::vector<std::string>& golds, Language lang = Language::EN) {
    QueryRecord r;
    r.query_id = qid;
    r.query = "q";
    r.gold_answers = golds;
    r.source = source;
    r.language = lang;
    Document d;
    d.doc_id = "d1";
    d.text = "text";
    d.retrieval_rank = 1;
    d.label = DocLabel::positive;
    r.candidates.push_back(d);
    return r;
}

}  // namespace

TEST_CASE("normalization") {
    CHECK(normalize_tokens("The Cat!", Language::EN) == std::vector<std::string>{"cat"});
    CHECK(normalize_tokens("北京市", Language::ZH) ==
          std::vector<std::string>{"北", "京", "市"});
    CHECK(normalize_tokens("", Language::EN).empty());
    CHECK(normalize_tokens("An  apple:  a   day", Language::EN) ==
          std::vector<std::string>{"apple", "day"});
    CHECK(normalize_tokens("ＡＢＣ ｄｅｆ", Language::EN) ==
          std::vector<std::string>{"abc", "def"});
    CHECK(normalize_tokens("你好，世界。", Language::ZH) ==
          std::vector<std::string>{"你", "好", "世", "界"});
    // punctuation characters are deleted, not turned into separators
    CHECK(normalize_tokens("ice-cream", Language::EN) ==
          std::vector<std::string>{"icecream"});
}

TEST_CASE("exact match") {
    CHECK(exact_match("Paris", {"Paris"}, Language::EN) == 1);
    CHECK(exact_match("Paris France", {"Paris"}, Language::EN) == 0);
    CHECK(exact_match("PARIS!", {"paris"}, Language::EN) == 1);
    // articles count as tokens for the metrics
    CHECK(exact_match("the Paris", {"Paris"}, Language::EN) == 0);
    CHECK(exact_match("北京。", {"北京"}, Language::ZH) == 1);
    CHECK(exact_match("wrong", {"right", "also right"}, Language::EN) == 0);
    CHECK(exact_match("also right", {"right", "also right"}, Language::EN) == 1);

    // 20 punctuation/casing variants against a normalize-then-compare oracle
    std::vector<std::string> variants = {
        "Paris",    "paris",    "PARIS",     "Paris.",   "Paris!",   " Paris ",
        "the Paris", "Paris,",  "(Paris)",   "'Paris'",  "\"Paris\"", "Paris?",
        "paris;",   "PaRiS",    "Paris:",    "a Paris",  "об Paris", "Ｐａｒｉｓ",
        "pà ris",   "par is"};
    for (const auto& v : variants) {
        int expected =
            metric_tokens(v, Language::EN) == metric_tokens("Paris", Language::EN) ? 1 : 0;
        CHECK(exact_match(v, {"Paris"}, Language::EN) == expected);
    }
}

TEST_CASE("token F1") {
    CHECK(token_f1("identical answer", {"identical answer"}, Language::EN) ==
          Catch::Approx(1.0));
    CHECK(token_f1("completely different", {"nothing shared"}, Language::EN) ==
          Catch::Approx(0.0));
    CHECK(token_f1("the cat sat", {"the cat"}, Language::EN) == Catch::Approx(0.8).margin(1e-12));
    CHECK(token_f1("", {""}, Language::EN) == Catch::Approx(1.0));  // both empty
    CHECK(token_f1("", {"something"}, Language::EN) == Catch::Approx(0.0));
    CHECK(token_f1("something", {""}, Language::EN) == Catch::Approx(0.0));
    CHECK(token_f1("x", {"zzz", "x"}, Language::EN) == Catch::Approx(1.0));  // max over golds
    CHECK(token_f1("北京大学", {"北京"}, Language::ZH) ==
          Catch::Approx(2.0 * (2.0 / 4.0) * 1.0 / (2.0 / 4.0 + 1.0)).margin(1e-12));

    SECTION("multiset counting does not double-count repeated tokens") {
        // pred has one "cat", gold wants two
        double f1 = token_f1("cat", {"cat cat"}, Language::EN);
        CHECK(f1 == Catch::Approx(2.0 * 1.0 * 0.5 / 1.5).margin(1e-12));
    }

    SECTION("symmetry for single-gold inputs") {
        Rng rng(17);
        const char* words[] = {"red", "blue", "green", "cat", "dog", "tree"};
        for (int iter = 0; iter < 300; ++iter) {
            auto sentence = [&]() {
                std::string s;
                std::size_t n = rng.next_below(6);
                for (std::size_t i = 0; i < n; ++i) {
                    if (!s.empty()) s += ' ';
                    s += words[rng.next_below(6)];
                }
                return s;
            };
            std::string a = sentence(), b = sentence();
            CHECK(token_f1(a, {b}, Language::EN) ==
                  Catch::Approx(token_f1(b, {a}, Language::EN)).margin(1e-12));
        }
    }

    SECTION("EM=1 implies F1=1") {
        Rng rng(29);
        const char* words[] = {"alpha", "beta", "Gamma", "DELTA!", "ε", "中"};
        for (int iter = 0; iter < 2000; ++iter) {
            std::string s;
            std::size_t n = 1 + rng.next_below(5);
            for (std::size_t i = 0; i < n; ++i) {
                if (!s.empty()) s += ' ';
                s += words[rng.next_below(6)];
            }
            Language lang = rng.next_bool(0.5) ? Language::EN : Language::ZH;
            if (exact_match(s, {s}, lang) == 1) {
                REQUIRE(token_f1(s, {s}, lang) == Catch::Approx(1.0));
            }
        }
    }
}

TEST_CASE("run evaluation aggregates per dataset with an unweighted average") {
    std::map<std::string, QueryRecord> corpus;
    corpus["a1"] = stub_record("a1", "setA", {"gold one"});
    corpus["a2"] = stub_record("a2", "setA", {"gold two"});
    corpus["b1"] = stub_record("b1", "setB", {"gold three"});

    SECTION("single correct result scores 100") {
        std::vector<EvalItem> items = {{"a1", "gen", "-", "gold one"}};
        auto rows = evaluate_run(items, corpus);
        REQUIRE(rows.size() == 2);  // the cell and its Avg.
        CHECK(rows[1].dataset == "setA");
        CHECK(rows[1].em == Catch::Approx(100.0));
        CHECK(rows[1].f1 == Catch::Approx(100.0));
        CHECK(rows[0].dataset == "Avg.");
    }

    SECTION("average is the unweighted mean across datasets") {
        // setA: EM 40% is impossible with 2 items; use 50/0 -> Avg 25
        std::vector<EvalItem> items = {
            {"a1", "gen", "-", "gold one"},   // EM 1
            {"a2", "gen", "-", "wrong"},      // EM 0
            {"b1", "gen", "-", "also wrong"}, // EM 0 (setB: 0)
        };
        auto rows = evaluate_run(items, corpus);
        std::map<std::string, MetricsRow> by_dataset;
        for (const auto& r : rows) by_dataset[r.dataset] = r;
        CHECK(by_dataset["setA"].em == Catch::Approx(50.0));
        CHECK(by_dataset["setB"].em == Catch::Approx(0.0));
        CHECK(by_dataset["Avg."].em == Catch::Approx(25.0));  // (50 + 0) / 2
        CHECK(by_dataset["setA"].n == 2);
        CHECK(by_dataset["Avg."].n == 3);  // total count for bookkeeping
    }

    SECTION("hand-aggregated fixture reproduces exactly") {
        std::map<std::string, QueryRecord> c2;
        for (int i = 0; i < 5; ++i) {
            std::string qid = "x" + std::to_string(i);
            c2[qid] = stub_record(qid, "dsX", {"tok" + std::to_string(i)});
        }
        for (int i = 0; i < 5; ++i) {
            std::string qid = "y" + std::to_string(i);
            c2[qid] = stub_record(qid, "dsY", {"tok" + std::to_string(i) + " extra"});
        }
        std::vector<EvalItem> items;
        // dsX: 3 exact, 2 miss -> EM 60, F1 60
        for (int i = 0; i < 5; ++i) {
            items.push_back({"x" + std::to_string(i), "g", "-",
                             i < 3 ? "tok" + std::to_string(i) : "miss"});
        }
        // dsY: every answer half-overlaps (1 of 2 gold tokens) -> EM 0, F1 = 2/3
        for (int i = 0; i < 5; ++i) {
            items.push_back({"y" + std::to_string(i), "g", "-", "tok" + std::to_string(i)});
        }
        auto rows = evaluate_run(items, c2);
        std::map<std::string, MetricsRow> by_dataset;
        for (const auto& r : rows) by_dataset[r.dataset] = r;
        CHECK(by_dataset["dsX"].em == Catch::Approx(60.0));
        CHECK(by_dataset["dsX"].f1 == Catch::Approx(60.0));
        CHECK(by_dataset["dsY"].em == Catch::Approx(0.0));
        CHECK(by_dataset["dsY"].f1 == Catch::Approx(100.0 * 2.0 / 3.0).margin(1e-9));
        CHECK(by_dataset["Avg."].em == Catch::Approx(30.0));
        CHECK(by_dataset["Avg."].f1 ==
              Catch::Approx((60.0 + 100.0 * 2.0 / 3.0) / 2.0).margin(1e-9));
    }

    SECTION("shuffled input yields identical tables and totals") {
        std::vector<EvalItem> items = {
            {"a1", "g1", "r1", "gold one"}, {"a2", "g1", "r1", "nope"},
            {"b1", "g1", "r1", "gold three"}, {"a1", "g2", "r1", "x"},
            {"b1", "g2", "r2", "gold three"},
        };
        auto rows1 = evaluate_run(items, corpus);
        Rng rng(2);
        rng.shuffle(items);
        auto rows2 = evaluate_run(items, corpus);
        CHECK(metrics_csv(rows1) == metrics_csv(rows2));

        std::size_t total = 0;
        for (const auto& r : rows1) {
            if (r.dataset != "Avg.") total += r.n;
        }
        CHECK(total == items.size());
    }

    SECTION("unknown query ids are an error") {
        std::vector<EvalItem> items = {{"zz", "g", "-", "a"}};
        CHECK_THROWS(evaluate_run(items, corpus));
    }
}

TEST_CASE("phenomenon report") {
    auto sample = [](const std::string& qid, const std::string& gen, const std::string& key,
                     double score, const std::string& prov) {
        JudgedSample s;
        s.query_id = qid;
        s.generator_id = gen;
        s.canonical_key = key;
        s.score = score;
        s.judge_kind = "oracle";
        s.provenance = prov;
        return s;
    };

    SECTION("single subset has zero spread") {
        PhenomenonReport rep = phenomenon_report({sample("q", "g", "k", 0.7, "permutation")});
        CHECK(rep.per_query.at({"q", "g"}).spread() == Catch::Approx(0.0));
    }

    SECTION("spread is max minus min, argmax ties break to the smaller key") {
        PhenomenonReport rep = phenomenon_report({
            sample("q", "g", "kb", 1.0, "permutation"),
            sample("q", "g", "ka", 1.0, "permutation"),
            sample("q", "g", "kc", 0.25, "permutation"),
        });
        const auto& cell = rep.per_query.at({"q", "g"});
        CHECK(cell.spread() == Catch::Approx(0.75));
        CHECK(cell.argmax_key == "ka");
    }

    SECTION("cross-generator disagreement rate") {
        PhenomenonReport rep = phenomenon_report({
            sample("q1", "g1", "k1", 1.0, "permutation"),
            sample("q1", "g1", "k2", 0.0, "permutation"),
            sample("q1", "g2", "k1", 0.0, "permutation"),
            sample("q1", "g2", "k2", 1.0, "permutation"),  // disagrees with g1
            sample("q2", "g1", "k3", 1.0, "permutation"),
            sample("q2", "g2", "k3", 1.0, "permutation"),  // agrees
            sample("q3", "g1", "k4", 1.0, "permutation"),  // single generator: not counted
        });
        CHECK(rep.queries_with_multiple_generators == 2);
        CHECK(rep.argmax_disagreement_rate == Catch::Approx(0.5));
    }

    SECTION("per-provenance means") {
        PhenomenonReport rep = phenomenon_report({
            sample("q1", "g", "k1", 1.0, "scheme:REVERSED"),
            sample("q2", "g", "k2", 0.0, "scheme:REVERSED"),
            sample("q3", "g", "k3", 1.0, "mixed:2"),
        });
        CHECK(rep.per_scheme.at({"g", "scheme:REVERSED"}).mean_score == Catch::Approx(0.5));
        CHECK(rep.per_scheme.at({"g", "mixed:2"}).n == 1);
    }

    SECTION("duplicate judged subsets are rejected") {
        std::vector<JudgedSample> dup = {sample("q", "g", "k", 1.0, "permutation"),
                                         sample("q", "g", "k", 0.5, "permutation")};
        CHECK_THROWS(phenomenon_report(dup));
    }

    SECTION("csv includes all sections") {
        std::string csv = phenomenon_csv(phenomenon_report(
            {sample("q", "g", "k", 0.7, "permutation")}));
        CHECK(csv.find("scheme,") != std::string::npos);
        CHECK(csv.find("query,") != std::string::npos);
        CHECK(csv.find("summary,") != std::string::npos);
    }
}
