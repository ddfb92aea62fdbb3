#include <atomic>
#include <set>
#include <thread>

#include <catch2/catch_amalgamated.hpp>

#include "forge/chat_client.hpp"
#include "forge/composer.hpp"
#include "forge/generator.hpp"
#include "forge/synth.hpp"

using namespace forge;

namespace {

QueryRecord gold_fixture() {
    QueryRecord r;
    r.query_id = "q1";
    r.query = "what code is recorded?";
    r.gold_answers = {"zq42 xv7"};
    r.source = "unit";
    r.language = Language::EN;
    const char* texts[] = {
        "passage one: the recorded code is zq42 xv7.",  // gold-bearing positive
        "passage two: related background only.",
        "passage three: more context without the code.",
        "distractor four: archive ledger catalog.",
        "distractor five: harbor village council.",
    };
    for (int i = 0; i < 5; ++i) {
        Document d;
        d.doc_id = "d" + std::to_string(i + 1);
        d.text = texts[i];
        d.retrieval_rank = i + 1;
        d.label = i < 3 ? DocLabel::positive : DocLabel::negative;
        r.candidates.push_back(d);
    }
    return r;
}

OrderedSubset subset_of(const QueryRecord& r, std::vector<std::string> ids) {
    return make_subset(r.query_id, std::move(ids), Provenance{ProvenanceKind::permutation, "", 0});
}

Json seven_profile_config() {
    const char* names[] = {"Qwen3-8B",
                           "gpt-oss-20b",
                           "gemma-3-12b-it",
                           "Qwen3-8B-thinking",
                           "Qwen2.5-7B-Instruct",
                           "Llama-3.1-8B-Instruct",
                           "DeepSeek-R1-Distill-Qwen-7B"};
    Json profiles = Json::array();
    for (const char* name : names) {
        profiles.push_back(Json{
            {"generator_id", name},
            {"description", std::string("profile for ") + name},
            {"binding", Json{{"kind", "endpoint"},
                             {"base_url", "http://localhost:9/v1"},
                             {"model", name}}}});
    }
    return Json{{"profiles", profiles}};
}

}  // namespace

TEST_CASE("registry loads profiles and enforces invariants") {
    SECTION("seven endpoint profiles plus the implicit default") {
        GeneratorRegistry reg = GeneratorRegistry::from_json(seven_profile_config());
        CHECK(reg.size() == 8);
        CHECK(reg.contains("Qwen3-8B"));
        CHECK(reg.contains(kDefaultGeneratorId));
        CHECK(reg.default_profile().description.empty());
        CHECK_FALSE(reg.get("gemma-3-12b-it").is_default());
    }

    SECTION("empty config has only the default profile") {
        GeneratorRegistry reg = GeneratorRegistry::from_json(Json::object());
        CHECK(reg.size() == 1);
        CHECK(reg.default_profile().is_default());
    }

    SECTION("duplicate ids are rejected") {
        Json cfg = seven_profile_config();
        cfg["profiles"].push_back(cfg["profiles"][0]);
        CHECK_THROWS_AS(GeneratorRegistry::from_json(cfg), std::invalid_argument);
    }

    SECTION("endpoint bindings need a base_url") {
        Json cfg = Json{{"profiles",
                         Json::array({Json{{"generator_id", "g"},
                                           {"description", "d"},
                                           {"binding", Json{{"kind", "endpoint"}}}}})}};
        CHECK_THROWS_AS(GeneratorRegistry::from_json(cfg), std::invalid_argument);
    }

    SECTION("non-default profiles need a description") {
        Json cfg = Json{{"profiles", Json::array({Json{{"generator_id", "g"}}})}};
        CHECK_THROWS_AS(GeneratorRegistry::from_json(cfg), std::invalid_argument);
    }

    SECTION("unknown ids throw") {
        GeneratorRegistry reg;
        CHECK_THROWS_AS(reg.get("nope"), std::invalid_argument);
    }
}

TEST_CASE("mock generators follow their contracts") {
    QueryRecord r = gold_fixture();

    SECTION("positional window") {
        MockParams pos2{MockKind::positional, 2, 0.5, 0};
        OrderedSubset gold_first = subset_of(r, {"d1", "d2", "d3"});
        OrderedSubset gold_third = subset_of(r, {"d2", "d3", "d1"});
        CHECK(mock_answer(r, gold_first, pos2) == "zq42 xv7");
        std::string wrong = mock_answer(r, gold_third, pos2);
        CHECK(wrong == "WRONG-" + hash8(gold_third.canonical_key));
    }

    SECTION("gold_last window") {
        MockParams last1{MockKind::gold_last, 1, 0.5, 0};
        CHECK(mock_answer(r, subset_of(r, {"d2", "d3", "d1"}), last1) == "zq42 xv7");
        CHECK(mock_answer(r, subset_of(r, {"d1", "d2", "d3"}), last1) != "zq42 xv7");
    }

    SECTION("noise_averse wants an all-positive subset") {
        MockParams noise{MockKind::noise_averse, 1, 0.5, 0};
        CHECK(mock_answer(r, subset_of(r, {"d1", "d2"}), noise) == "zq42 xv7");
        CHECK(mock_answer(r, subset_of(r, {"d1", "d4"}), noise) != "zq42 xv7");
    }

    SECTION("oracle always answers and random is seed-stable") {
        MockParams oracle{MockKind::oracle, 1, 0.5, 0};
        CHECK(mock_answer(r, subset_of(r, {"d4"}), oracle) == "zq42 xv7");
        MockParams rnd{MockKind::random, 1, 0.5, 17};
        auto s = subset_of(r, {"d1", "d4"});
        CHECK(mock_answer(r, s, rnd) == mock_answer(r, s, rnd));
    }

    SECTION("mocks are pure functions of record, subset, and params") {
        MockParams pos1{MockKind::positional, 1, 0.5, 0};
        auto s = subset_of(r, {"d3", "d1"});
        GeneratorProfile p;
        p.generator_id = "m";
        p.description = "mock";
        p.binding = pos1;
        GenerationResult a = generate_answer(r, s, p);
        GenerationResult b = generate_answer(r, s, p);
        CHECK(a.answer_text == b.answer_text);
        CHECK(a.raw_response == b.raw_response);
    }

    SECTION("two mock kinds prefer different permutations of the same record") {
        MockParams pos1{MockKind::positional, 1, 0.5, 0};
        MockParams last1{MockKind::gold_last, 1, 0.5, 0};
        OrderedSubset gold_first = subset_of(r, {"d1", "d2", "d3"});
        OrderedSubset gold_last_sub = subset_of(r, {"d2", "d3", "d1"});
        // positional(1) prefers gold-first, gold_last(1) prefers gold-last
        CHECK(mock_answer(r, gold_first, pos1) == "zq42 xv7");
        CHECK(mock_answer(r, gold_last_sub, pos1) != "zq42 xv7");
        CHECK(mock_answer(r, gold_first, last1) != "zq42 xv7");
        CHECK(mock_answer(r, gold_last_sub, last1) == "zq42 xv7");
    }
}

TEST_CASE("qa prompt renders numbered documents in subset order") {
    QueryRecord r = gold_fixture();
    OrderedSubset s = subset_of(r, {"d3", "d1"});
    Prompt p = render_qa_prompt(r, s);
    CHECK(p.system.find("Answer:") != std::string::npos);
    std::size_t pos1 = p.user.find("[1] passage three");
    std::size_t pos2 = p.user.find("[2] passage one");
    REQUIRE(pos1 != std::string::npos);
    REQUIRE(pos2 != std::string::npos);
    CHECK(pos1 < pos2);
    CHECK(p.user.find("Question: what code is recorded?") != std::string::npos);

    QueryRecord zh = r;
    zh.language = Language::ZH;
    Prompt pz = render_qa_prompt(zh, s);
    CHECK(pz.user.find("问题：") != std::string::npos);
    CHECK(pz.system.find("Answer:") != std::string::npos);  // extraction marker stays ASCII
}

TEST_CASE("answer extraction takes the text after the last marker") {
    CHECK(extract_answer("Answer: Paris") == "Paris");
    CHECK(extract_answer("thinking...\nAnswer: first\nmore\nAnswer: second\n") == "second");
    CHECK(extract_answer("no marker at all\n") == "no marker at all");
    CHECK(extract_answer("  padded  ") == "padded");
}

TEST_CASE("endpoint generation retries and carries failures") {
    QueryRecord r = gold_fixture();
    OrderedSubset s = subset_of(r, {"d1", "d2"});
    GeneratorProfile profile;
    profile.generator_id = "endpoint-gen";
    profile.description = "endpoint";
    profile.binding = EndpointBinding{"http://example.invalid/v1", "m", ""};
    GenerateOptions fast{3, 0};

    SECTION("two failures then success") {
        std::atomic<int> calls{0};
        ChatFn chat = [&](const ChatRequest&) -> ChatResponse {
            if (++calls <= 2) return {false, "", "boom"};
            return {true, "Answer: recovered", ""};
        };
        GenerationResult g = generate_answer(r, s, profile, chat, fast);
        CHECK(g.ok);
        CHECK(g.attempts == 3);
        CHECK(g.answer_text == "recovered");
        CHECK(calls == 3);
    }

    SECTION("persistent failure becomes a carried failure result") {
        ChatFn chat = [&](const ChatRequest&) -> ChatResponse { return {false, "", "down"}; };
        GenerationResult g = generate_answer(r, s, profile, chat, fast);
        CHECK_FALSE(g.ok);
        CHECK(g.attempts == 3);
        CHECK(g.error == "down");
        CHECK(g.answer_text.empty());
    }

    SECTION("missing chat client for an endpoint profile throws") {
        CHECK_THROWS_AS(generate_answer(r, s, profile, nullptr, fast), std::invalid_argument);
    }
}

TEST_CASE("generate_batch is schedule-independent and logs in task order") {
    SynthOptions so;
    so.per_source = {{"batch", 25}};
    so.seed = 3;
    auto corpus = make_synthetic_corpus(so);
    GeneratorProfile mock;
    mock.generator_id = "mock";
    mock.description = "m";
    mock.binding = MockParams{MockKind::positional, 1, 0.5, 0};

    std::vector<OrderedSubset> subsets;
    for (const auto& rec : corpus) {
        subsets.push_back(make_subset(rec.query_id, default_positive_order(rec),
                                      Provenance{ProvenanceKind::permutation, "", 0}));
    }
    std::vector<GenerationTask> tasks;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        tasks.push_back({&corpus[i], &subsets[i], &mock});
    }

    std::vector<std::string> log_order;
    auto results8 = generate_batch(tasks, nullptr, 8, {3, 0},
                                   [&](const GenerationResult& g) {
                                       log_order.push_back(g.canonical_key);
                                   });
    auto results1 = generate_batch(tasks, nullptr, 1, {3, 0});
    REQUIRE(results8.size() == results1.size());
    for (std::size_t i = 0; i < results8.size(); ++i) {
        CHECK(results8[i].canonical_key == results1[i].canonical_key);
        CHECK(results8[i].answer_text == results1[i].answer_text);
    }
    // the append-only log sees tasks in submission order regardless of threads
    REQUIRE(log_order.size() == tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        CHECK(log_order[i] == tasks[i].subset->canonical_key);
    }
}

TEST_CASE("chat endpoint client speaks the chat-completions protocol") {
    httplib::Server server;
    std::string seen_auth, seen_body;
    server.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        seen_auth = req.get_header_value("Authorization");
        seen_body = req.body;
        Json body = Json::parse(req.body);
        std::string user = body["messages"].back()["content"].get<std::string>();
        Json reply;
        reply["choices"] =
            Json::array({Json{{"message", Json{{"role", "assistant"},
                                               {"content", "echo: " + user}}}}});
        res.set_content(reply.dump(), "application/json");
    });
    server.Post("/v1/embeddings", [&](const httplib::Request& req, httplib::Response& res) {
        Json reply;
        reply["data"] = Json::array({Json{{"embedding", Json::array({0.6, 0.8})}}});
        res.set_content(reply.dump(), "application/json");
    });

    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread server_thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    setenv("FORGE_TEST_KEY", "sekret", 1);
    EndpointBinding binding{"http://127.0.0.1:" + std::to_string(port) + "/v1", "test-model",
                            "FORGE_TEST_KEY"};
    ChatFn chat = make_endpoint_chat(binding, 5);
    ChatResponse resp = chat({"sys", "hello", 0.3, 64});
    CHECK(resp.ok);
    CHECK(resp.text == "echo: hello");
    CHECK(seen_auth == "Bearer sekret");
    Json sent = Json::parse(seen_body);
    CHECK(sent["model"] == "test-model");
    CHECK(sent["temperature"].get<double>() == Catch::Approx(0.3));
    CHECK(sent["messages"][0]["role"] == "system");

    // embeddings route
    EndpointEmbeddings embedder(binding, 5);
    QueryRecord r = gold_fixture();
    auto v = embedder.embed_query(r);
    REQUIRE(v.has_value());
    CHECK(*v == DenseVector{0.6, 0.8});

    server.stop();
    server_thread.join();

    // a dead endpoint yields a transport error, not a crash
    ChatFn dead = make_endpoint_chat(
        EndpointBinding{"http://127.0.0.1:" + std::to_string(port) + "/v1", "m", ""}, 1);
    ChatResponse bad = dead({"s", "u", 0.0, 8});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.error.empty());
}
