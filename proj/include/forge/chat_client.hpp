#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <httplib.h>

#include "forge/features.hpp"
#include "forge/generator.hpp"
#include "forge/jsonl.hpp"

namespace forge {

struct ParsedUrl {
    std::string origin;       // scheme://host[:port]
    std::string path_prefix;  // e.g. /v1 (no trailing slash)
};

inline ParsedUrl parse_base_url(const std::string& base_url) {
    std::size_t scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos) {
        throw std::invalid_argument("base_url needs a scheme: " + base_url);
    }
    std::size_t path_start = base_url.find('/', scheme_end + 3);
    ParsedUrl out;
    if (path_start == std::string::npos) {
        out.origin = base_url;
    } else {
        out.origin = base_url.substr(0, path_start);
        out.path_prefix = base_url.substr(path_start);
        while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
            out.path_prefix.pop_back();
        }
    }
    return out;
}

inline httplib::Headers auth_headers(const std::string& api_key_env) {
    httplib::Headers headers;
    if (!api_key_env.empty()) {
        if (const char* key = std::getenv(api_key_env.c_str()); key != nullptr && *key != '\0') {
            headers.emplace("Authorization", std::string("Bearer ") + key);
        }
    }
    return headers;
}

// One chat-completions request per call; no internal retries (the generator
// retries with backoff, the ranker walks its temperature schedule).
inline ChatFn make_endpoint_chat(const EndpointBinding& binding, int timeout_s = 60) {
    ParsedUrl url = parse_base_url(binding.base_url);
    return [binding, url, timeout_s](const ChatRequest& req) -> ChatResponse {
        httplib::Client client(url.origin);
        client.set_connection_timeout(timeout_s);
        client.set_read_timeout(timeout_s);

        Json body;
        body["model"] = binding.model;
        body["messages"] = Json::array();
        if (!req.system.empty()) {
            body["messages"].push_back(Json{{"role", "system"}, {"content", req.system}});
        }
        body["messages"].push_back(Json{{"role", "user"}, {"content", req.user}});
        body["temperature"] = req.temperature;
        body["max_tokens"] = req.max_tokens;

        auto res = client.Post((url.path_prefix + "/chat/completions").c_str(),
                               auth_headers(binding.api_key_env), body.dump(),
                               "application/json");
        ChatResponse out;
        if (!res) {
            out.error = "transport error: " + httplib::to_string(res.error());
            return out;
        }
        if (res->status != 200) {
            out.error = "HTTP " + std::to_string(res->status) + ": " + res->body;
            return out;
        }
        try {
            Json parsed = Json::parse(res->body);
            out.text = parsed.at("choices").at(0).at("message").at("content").get<std::string>();
            out.ok = true;
        } catch (const std::exception& e) {
            out.error = std::string("bad response payload: ") + e.what();
        }
        return out;
    };
}

// Embeddings over the same base protocol's /embeddings route; vectors are
// cached per id so repeat lookups stay cheap.
class EndpointEmbeddings : public EmbeddingProvider {
public:
    EndpointEmbeddings(EndpointBinding binding, int timeout_s = 60)
        : binding_(std::move(binding)), url_(parse_base_url(binding_.base_url)),
          timeout_s_(timeout_s) {}

    std::optional<DenseVector> embed_query(const QueryRecord& record) override {
        return fetch("q:" + record.query_id, record.query);
    }
    std::optional<DenseVector> embed_document(const QueryRecord& record,
                                              const Document& doc) override {
        return fetch("d:" + record.query_id + ":" + doc.doc_id, doc.text);
    }

private:
    std::optional<DenseVector> fetch(const std::string& cache_key, const std::string& text) {
        auto it = cache_.find(cache_key);
        if (it != cache_.end()) return it->second;

        httplib::Client client(url_.origin);
        client.set_connection_timeout(timeout_s_);
        client.set_read_timeout(timeout_s_);
        Json body;
        body["model"] = binding_.model;
        body["input"] = Json::array({text});
        auto res = client.Post((url_.path_prefix + "/embeddings").c_str(),
                               auth_headers(binding_.api_key_env), body.dump(),
                               "application/json");
        if (!res || res->status != 200) return std::nullopt;
        try {
            Json parsed = Json::parse(res->body);
            DenseVector v = parsed.at("data").at(0).at("embedding").get<DenseVector>();
            cache_[cache_key] = v;
            return v;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    EndpointBinding binding_;
    ParsedUrl url_;
    int timeout_s_;
    std::map<std::string, DenseVector> cache_;
};

}  // namespace forge
