#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "forge/composer.hpp"
#include "forge/corpus.hpp"
#include "forge/eval.hpp"
#include "forge/rng.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Profiles and registry
// ---------------------------------------------------------------------------

inline constexpr const char* kDefaultGeneratorId = "default";

enum class MockKind { positional, gold_last, noise_averse, oracle, random };

inline std::string to_string(MockKind k) {
    switch (k) {
        case MockKind::positional: return "positional";
        case MockKind::gold_last: return "gold_last";
        case MockKind::noise_averse: return "noise_averse";
        case MockKind::oracle: return "oracle";
        default: return "random";
    }
}

inline MockKind mock_kind_from_string(std::string_view s) {
    if (s == "positional") return MockKind::positional;
    if (s == "gold_last") return MockKind::gold_last;
    if (s == "noise_averse") return MockKind::noise_averse;
    if (s == "oracle") return MockKind::oracle;
    if (s == "random") return MockKind::random;
    throw std::invalid_argument("unknown mock kind: " + std::string(s));
}

struct MockParams {
    MockKind kind = MockKind::oracle;
    int window = 1;       // positional / gold_last
    double p = 0.5;       // random
    std::uint64_t seed = 0;
};

struct EndpointBinding {
    std::string base_url;     // e.g. https://host:port/v1
    std::string model;
    std::string api_key_env;  // environment variable holding the bearer token
};

struct GeneratorProfile {
    std::string generator_id;
    std::string description;
    std::variant<std::monostate, EndpointBinding, MockParams> binding;
    double temperature = 0.0;
    int max_tokens = 512;

    bool is_default() const { return generator_id == kDefaultGeneratorId; }
    bool is_mock() const { return std::holds_alternative<MockParams>(binding); }
    bool is_endpoint() const { return std::holds_alternative<EndpointBinding>(binding); }
};

inline GeneratorProfile parse_profile(const Json& j) {
    GeneratorProfile p;
    p.generator_id = j.at("generator_id").get<std::string>();
    p.description = j.value("description", std::string());
    if (j.contains("temperature")) p.temperature = j["temperature"].get<double>();
    if (j.contains("max_tokens")) p.max_tokens = j["max_tokens"].get<int>();
    if (j.contains("binding")) {
        const Json& b = j["binding"];
        std::string kind = b.at("kind").get<std::string>();
        if (kind == "endpoint") {
            EndpointBinding e;
            if (!b.contains("base_url") || b["base_url"].get<std::string>().empty()) {
                throw std::invalid_argument("endpoint binding for '" + p.generator_id +
                                            "' is missing base_url");
            }
            e.base_url = b["base_url"].get<std::string>();
            e.model = b.value("model", p.generator_id);
            e.api_key_env = b.value("api_key_env", std::string());
            p.binding = e;
        } else if (kind == "mock") {
            MockParams m;
            m.kind = mock_kind_from_string(b.at("mock").get<std::string>());
            m.window = b.value("window", 1);
            m.p = b.value("p", 0.5);
            m.seed = b.value("seed", std::uint64_t{0});
            p.binding = m;
        } else if (kind == "none") {
            p.binding = std::monostate{};
        } else {
            throw std::invalid_argument("unknown binding kind: " + kind);
        }
    }
    return p;
}

inline Json to_json(const GeneratorProfile& p) {
    Json j;
    j["generator_id"] = p.generator_id;
    j["description"] = p.description;
    Json b;
    if (p.is_endpoint()) {
        const auto& e = std::get<EndpointBinding>(p.binding);
        b["kind"] = "endpoint";
        b["base_url"] = e.base_url;
        b["model"] = e.model;
        b["api_key_env"] = e.api_key_env;
    } else if (p.is_mock()) {
        const auto& m = std::get<MockParams>(p.binding);
        b["kind"] = "mock";
        b["mock"] = to_string(m.kind);
        b["window"] = m.window;
        b["p"] = m.p;
        b["seed"] = m.seed;
    } else {
        b["kind"] = "none";
    }
    j["binding"] = b;
    j["temperature"] = p.temperature;
    j["max_tokens"] = p.max_tokens;
    return j;
}

// Validated profile set; the reserved id "default" denotes the unconditioned
// setting and is always present.
class GeneratorRegistry {
public:
    GeneratorRegistry() {
        GeneratorProfile def;
        def.generator_id = kDefaultGeneratorId;
        profiles_[def.generator_id] = def;
    }

    static GeneratorRegistry from_json(const Json& config) {
        GeneratorRegistry reg;
        if (!config.contains("profiles")) return reg;
        for (const auto& pj : config["profiles"]) {
            reg.add(parse_profile(pj));
        }
        return reg;
    }

    static GeneratorRegistry from_file(const std::string& path) {
        return from_json(Json::parse(read_file(path)));
    }

    void add(GeneratorProfile profile) {
        if (!profile.is_default() && profile.description.empty()) {
            throw std::invalid_argument("profile '" + profile.generator_id +
                                        "' needs a nonempty description");
        }
        auto [it, inserted] = profiles_.emplace(profile.generator_id, profile);
        if (!inserted && !profile.is_default()) {
            throw std::invalid_argument("duplicate generator id: " + profile.generator_id);
        }
        if (!inserted) it->second = profile;  // explicit default overrides the implicit one
    }

    const GeneratorProfile& get(const std::string& id) const {
        auto it = profiles_.find(id);
        if (it == profiles_.end()) throw std::invalid_argument("unknown generator id: " + id);
        return it->second;
    }

    bool contains(const std::string& id) const { return profiles_.count(id) > 0; }
    const GeneratorProfile& default_profile() const { return get(kDefaultGeneratorId); }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        for (const auto& [id, _] : profiles_) out.push_back(id);
        return out;
    }

    std::size_t size() const { return profiles_.size(); }

private:
    std::map<std::string, GeneratorProfile> profiles_;
};

// ---------------------------------------------------------------------------
// Downstream QA prompt
// ---------------------------------------------------------------------------

struct Prompt {
    std::string system;
    std::string user;
};

inline constexpr const char* kAnswerMarker = "Answer:";

// Numbered documents in subset order, then the question, then the answer
// format instruction. The final-line marker is ASCII in both languages so
// extraction stays unambiguous.
inline Prompt render_qa_prompt(const QueryRecord& record, const OrderedSubset& subset) {
    Prompt p;
    if (record.language == Language::EN) {
        p.system =
            "You are a question answering assistant. Answer the question using only the "
            "documents provided. Keep the answer short. End your reply with a final line "
            "formatted exactly as:\nAnswer: <your answer>";
    } else {
        p.system =
            "你是一个问答助手。请仅根据提供的文档回答问题，答案保持简短。"
            "回复的最后一行必须严格按照以下格式输出：\nAnswer: <你的答案>";
    }
    std::string user;
    user += record.language == Language::EN ? "Documents:\n" : "文档：\n";
    int i = 0;
    for (const auto& doc_id : subset.doc_ids) {
        const Document* d = record.find(doc_id);
        if (d == nullptr) {
            throw std::invalid_argument("subset references unknown doc '" + doc_id + "'");
        }
        user += "[" + std::to_string(++i) + "] " + d->text + "\n";
    }
    user += record.language == Language::EN ? "\nQuestion: " : "\n问题：";
    user += record.query;
    p.user = user;
    return p;
}

// Text after the last `Answer:` marker, else the whole trimmed response.
inline std::string extract_answer(std::string_view raw) {
    auto trim = [](std::string_view s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string_view::npos) return std::string();
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return std::string(s.substr(b, e - b + 1));
    };
    std::size_t pos = raw.rfind(kAnswerMarker);
    if (pos == std::string_view::npos) return trim(raw);
    return trim(raw.substr(pos + std::string_view(kAnswerMarker).size()));
}

// ---------------------------------------------------------------------------
// Chat transport
// ---------------------------------------------------------------------------

struct ChatRequest {
    std::string system;
    std::string user;
    double temperature = 0.0;
    int max_tokens = 512;
};

struct ChatResponse {
    bool ok = false;
    std::string text;
    std::string error;
};

// One request, one response; retry policies live with the callers.
using ChatFn = std::function<ChatResponse(const ChatRequest&)>;

// ---------------------------------------------------------------------------
// Mock generators
// ---------------------------------------------------------------------------

// A document carries gold evidence when its text contains a gold answer as a
// substring after normalization.
inline bool is_gold_bearing(const Document& doc, const QueryRecord& record) {
    for (const auto& gold : record.gold_answers) {
        if (normalized_contains(doc.text, gold, record.language)) return true;
    }
    return false;
}

// Deterministic answer for a mock generator; pure in (record, subset, params).
inline std::string mock_answer(const QueryRecord& record, const OrderedSubset& subset,
                               const MockParams& params) {
    const std::string& gold = record.gold_answers.front();
    const std::string wrong = "WRONG-" + hash8(subset.canonical_key);
    auto doc_at = [&](std::size_t i) -> const Document& {
        const Document* d = record.find(subset.doc_ids[i]);
        if (d == nullptr) throw std::invalid_argument("subset references unknown doc");
        return *d;
    };
    const std::size_t k = subset.doc_ids.size();
    switch (params.kind) {
        case MockKind::positional: {
            std::size_t w = std::min<std::size_t>(std::max(params.window, 0), k);
            for (std::size_t i = 0; i < w; ++i) {
                if (is_gold_bearing(doc_at(i), record)) return gold;
            }
            return wrong;
        }
        case MockKind::gold_last: {
            std::size_t w = std::min<std::size_t>(std::max(params.window, 0), k);
            for (std::size_t i = k - w; i < k; ++i) {
                if (is_gold_bearing(doc_at(i), record)) return gold;
            }
            return wrong;
        }
        case MockKind::noise_averse: {
            for (std::size_t i = 0; i < k; ++i) {
                if (doc_at(i).label != DocLabel::positive) return wrong;
            }
            return gold;
        }
        case MockKind::oracle:
            return gold;
        case MockKind::random: {
            std::uint64_t h = hash_parts({std::to_string(params.seed), record.query_id,
                                          subset.canonical_key});
            double u = static_cast<double>(h >> 11) * 0x1.0p-53;
            return u < params.p ? gold : wrong;
        }
    }
    throw std::invalid_argument("unknown mock kind");
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

struct GenerationResult {
    std::string query_id;
    std::string generator_id;
    std::string canonical_key;
    std::string answer_text;
    std::string raw_response;
    double latency_ms = 0.0;
    int attempts = 1;
    bool ok = true;
    std::string error;
};

inline Json to_json(const GenerationResult& r) {
    Json j;
    j["query_id"] = r.query_id;
    j["generator_id"] = r.generator_id;
    j["canonical_key"] = r.canonical_key;
    j["answer_text"] = r.answer_text;
    j["raw_response"] = r.raw_response;
    j["latency_ms"] = r.latency_ms;
    j["attempts"] = r.attempts;
    j["ok"] = r.ok;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline GenerationResult generation_result_from_json(const Json& j) {
    GenerationResult r;
    r.query_id = j.at("query_id").get<std::string>();
    r.generator_id = j.at("generator_id").get<std::string>();
    r.canonical_key = j.at("canonical_key").get<std::string>();
    r.answer_text = j.at("answer_text").get<std::string>();
    r.raw_response = j.value("raw_response", std::string());
    r.latency_ms = j.value("latency_ms", 0.0);
    r.attempts = j.value("attempts", 1);
    r.ok = j.value("ok", true);
    r.error = j.value("error", std::string());
    return r;
}

struct GenerateOptions {
    int max_attempts = 3;
    int backoff_ms = 200;  // doubled per attempt; 0 in tests
};

// Produces the RAG answer for one ordered subset. Endpoint failures are
// retried with exponential backoff and then carried as a failure result so a
// batch never aborts.
inline GenerationResult generate_answer(const QueryRecord& record, const OrderedSubset& subset,
                                        const GeneratorProfile& profile,
                                        const ChatFn& chat = nullptr,
                                        const GenerateOptions& options = {}) {
    GenerationResult result;
    result.query_id = record.query_id;
    result.generator_id = profile.generator_id;
    result.canonical_key = subset.canonical_key;

    if (profile.is_mock()) {
        const auto& params = std::get<MockParams>(profile.binding);
        std::string payload = mock_answer(record, subset, params);
        result.raw_response = std::string(kAnswerMarker) + " " + payload;
        result.answer_text = extract_answer(result.raw_response);
        return result;
    }
    if (!profile.is_endpoint()) {
        throw std::invalid_argument("profile '" + profile.generator_id +
                                    "' has no generation binding");
    }
    if (!chat) {
        throw std::invalid_argument("endpoint profile '" + profile.generator_id +
                                    "' requires a chat client");
    }

    Prompt prompt = render_qa_prompt(record, subset);
    ChatRequest req{prompt.system, prompt.user, profile.temperature, profile.max_tokens};
    auto start = std::chrono::steady_clock::now();
    std::string last_error;
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
        result.attempts = attempt;
        ChatResponse resp = chat(req);
        if (resp.ok) {
            result.raw_response = resp.text;
            result.answer_text = extract_answer(resp.text);
            result.latency_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
            return result;
        }
        last_error = resp.error;
        if (attempt < options.max_attempts && options.backoff_ms > 0) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(options.backoff_ms << (attempt - 1)));
        }
    }
    result.ok = false;
    result.error = last_error.empty() ? "request failed" : last_error;
    result.latency_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

struct GenerationTask {
    const QueryRecord* record = nullptr;
    const OrderedSubset* subset = nullptr;
    const GeneratorProfile* profile = nullptr;
};

// Runs tasks under a bounded in-flight limit. Results are slot-indexed and
// then sorted by (query_id, canonical_key, generator_id), so the output is
// independent of scheduling. `on_result` (optional) receives each result as
// soon as it and all earlier tasks have completed: the append-only result log
// gets task order regardless of thread timing, making its bytes reproducible.
inline std::vector<GenerationResult> generate_batch(
    const std::vector<GenerationTask>& tasks, const ChatFn& chat, std::size_t max_inflight = 8,
    const GenerateOptions& options = {},
    const std::function<void(const GenerationResult&)>& on_result = nullptr) {
    std::vector<GenerationResult> results(tasks.size());
    std::vector<char> ready(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    std::size_t log_cursor = 0;

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const auto& t = tasks[i];
            results[i] = generate_answer(*t.record, *t.subset, *t.profile, chat, options);
            std::lock_guard<std::mutex> lock(log_mutex);
            ready[i] = 1;
            while (log_cursor < tasks.size() && ready[log_cursor]) {
                if (on_result) on_result(results[log_cursor]);
                ++log_cursor;
            }
        }
    };

    std::size_t n_threads = std::min<std::size_t>(std::max<std::size_t>(max_inflight, 1),
                                                  tasks.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < n_threads; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    std::sort(results.begin(), results.end(),
              [](const GenerationResult& a, const GenerationResult& b) {
                  return std::tie(a.query_id, a.canonical_key, a.generator_id) <
                         std::tie(b.query_id, b.canonical_key, b.generator_id);
              });
    return results;
}

}  // namespace forge
