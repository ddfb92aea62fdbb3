#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "forge/chat_client.hpp"
#include "forge/composer.hpp"
#include "forge/corpus.hpp"
#include "forge/eval.hpp"
#include "forge/features.hpp"
#include "forge/generator.hpp"
#include "forge/judge.hpp"
#include "forge/jsonl.hpp"
#include "forge/pref_builder.hpp"
#include "forge/ranker.hpp"
#include "forge/report.hpp"
#include "forge/sha256.hpp"
#include "forge/synth.hpp"
#include "forge/version.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct ClusterConfig {
    std::string embeddings = "hash";  // hash | sidecar | endpoint
    std::string sidecar_path;
    EndpointBinding endpoint;
    bool fallback_to_hash = true;  // for ids a sidecar/endpoint lacks
    std::size_t dim = 64;
    std::uint64_t embed_seed = 0;
    std::size_t negatives_per_query = 4;
    std::uint64_t seed = 0;
};

struct ComposeConfig {
    PermutationOptions perm;
    std::vector<SchemeId> schemes;  // empty = schemes disabled
    MixOptions mix;
    std::uint64_t seed = 0;
};

struct GenerateConfig {
    std::vector<std::string> generators;
    std::size_t max_inflight = 8;
    GenerateOptions options;
};

struct JudgeConfig {
    std::string kind = "oracle";  // oracle | llm
    EndpointBinding endpoint;     // llm judge
    PreferenceOptions prefs;
};

struct PipelineConfig {
    std::filesystem::path workdir;
    std::string input;  // raw corpus path; empty when synth is used
    std::string schema = "canonical";
    std::optional<SynthOptions> synth;
    Json profiles_json;  // registry config ({"profiles": [...]})
    std::optional<std::map<std::string, std::size_t>> quotas;
    std::uint64_t sample_seed = 0;
    ClusterConfig cluster;
    ComposeConfig compose;
    GenerateConfig generate;
    JudgeConfig judge;
    BuildOptions build;

    Json raw;  // canonical form, hashed into the manifest
};

namespace detail {

inline std::uint64_t require_seed(const Json& j, const std::string& stage) {
    if (!j.contains("seed")) {
        throw std::invalid_argument("config: '" + stage +
                                    "' needs an explicit \"seed\" (no implicit entropy)");
    }
    return j["seed"].get<std::uint64_t>();
}

inline EndpointBinding parse_endpoint(const Json& j) {
    EndpointBinding e;
    e.base_url = j.at("base_url").get<std::string>();
    e.model = j.value("model", std::string());
    e.api_key_env = j.value("api_key_env", std::string());
    return e;
}

}  // namespace detail

// Relative paths inside the config resolve against the config file's
// directory.
inline PipelineConfig parse_pipeline_config(const Json& j,
                                            const std::filesystem::path& base_dir) {
    PipelineConfig cfg;
    cfg.raw = j;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() ? path.string() : (base_dir / path).string();
    };

    cfg.workdir = resolve(j.value("workdir", std::string("out")));
    if (j.contains("synth")) {
        const Json& s = j["synth"];
        SynthOptions synth;
        synth.seed = detail::require_seed(s, "synth");
        for (const auto& [source, count] : s.at("per_source").items()) {
            synth.per_source[source] = count.get<std::size_t>();
        }
        if (s.contains("language_of")) {
            for (const auto& [source, lang] : s["language_of"].items()) {
                synth.language_of[source] = lang.get<std::string>();
            }
        }
        if (s.contains("min_positives")) synth.min_positives = s["min_positives"].get<int>();
        if (s.contains("max_positives")) synth.max_positives = s["max_positives"].get<int>();
        if (s.contains("min_negatives")) synth.min_negatives = s["min_negatives"].get<int>();
        if (s.contains("max_negatives")) synth.max_negatives = s["max_negatives"].get<int>();
        cfg.synth = synth;
    } else {
        cfg.input = resolve(j.at("input").get<std::string>());
        cfg.schema = j.value("schema", std::string("canonical"));
    }

    if (j.contains("profiles_file")) {
        cfg.profiles_json = Json::parse(read_file(resolve(j["profiles_file"].get<std::string>())));
    } else if (j.contains("profiles")) {
        cfg.profiles_json = Json{{"profiles", j["profiles"]}};
    } else {
        cfg.profiles_json = Json::object();
    }

    if (j.contains("sample")) {
        const Json& s = j["sample"];
        std::map<std::string, std::size_t> quotas;
        for (const auto& [source, count] : s.at("quotas").items()) {
            quotas[source] = count.get<std::size_t>();
        }
        cfg.quotas = quotas;
        cfg.sample_seed = detail::require_seed(s, "sample");
    }

    if (j.contains("cluster")) {
        const Json& c = j["cluster"];
        cfg.cluster.embeddings = c.value("embeddings", std::string("hash"));
        if (c.contains("sidecar_path")) {
            cfg.cluster.sidecar_path = resolve(c["sidecar_path"].get<std::string>());
        }
        if (c.contains("endpoint")) cfg.cluster.endpoint = detail::parse_endpoint(c["endpoint"]);
        cfg.cluster.fallback_to_hash = c.value("fallback_to_hash", true);
        cfg.cluster.dim = c.value("dim", std::size_t{64});
        cfg.cluster.embed_seed = c.value("embed_seed", std::uint64_t{0});
        cfg.cluster.negatives_per_query = c.value("negatives_per_query", std::size_t{4});
        cfg.cluster.seed = detail::require_seed(c, "cluster");
    } else {
        throw std::invalid_argument("config: missing 'cluster' section");
    }

    {
        const Json& c = j.at("compose");
        cfg.compose.seed = detail::require_seed(c, "compose");
        cfg.compose.perm.cap = c.value("perm_cap", std::size_t{5});
        cfg.compose.perm.budget = c.value("perm_budget", std::size_t{12});
        cfg.compose.perm.seed = cfg.compose.seed;
        if (c.contains("schemes")) {
            for (const auto& s : c["schemes"]) {
                std::string name = s.get<std::string>();
                if (name == "all") {
                    cfg.compose.schemes = all_schemes();
                    break;
                }
                cfg.compose.schemes.push_back(scheme_from_string(name));
            }
        }
        if (c.contains("m_options")) {
            cfg.compose.mix.m_options = c["m_options"].get<std::vector<int>>();
        }
        cfg.compose.mix.per_query_budget = c.value("mix_budget", std::size_t{6});
        cfg.compose.mix.seed = cfg.compose.seed;
    }

    {
        const Json& g = j.at("generate");
        cfg.generate.generators = g.at("generators").get<std::vector<std::string>>();
        cfg.generate.max_inflight = g.value("max_inflight", std::size_t{8});
        cfg.generate.options.max_attempts = g.value("max_attempts", 3);
        cfg.generate.options.backoff_ms = g.value("backoff_ms", 200);
    }

    {
        const Json& jj = j.at("judge");
        cfg.judge.kind = jj.value("kind", std::string("oracle"));
        if (cfg.judge.kind != "oracle" && cfg.judge.kind != "llm") {
            throw std::invalid_argument("config: judge.kind must be 'oracle' or 'llm'");
        }
        if (jj.contains("endpoint")) cfg.judge.endpoint = detail::parse_endpoint(jj["endpoint"]);
        if (cfg.judge.kind == "llm" && cfg.judge.endpoint.base_url.empty()) {
            throw std::invalid_argument("config: llm judge needs judge.endpoint.base_url");
        }
        cfg.judge.prefs.margin = jj.value("margin", 0.25);
        cfg.judge.prefs.max_pairs_per_query = jj.value("max_pairs_per_query", std::size_t{4});
        cfg.judge.prefs.seed = detail::require_seed(jj, "judge");
    }

    {
        const Json& b = j.at("build");
        cfg.build.mode_mix = b.value("mode_mix", 0.5);
        cfg.build.seed = detail::require_seed(b, "build");
    }

    return cfg;
}

inline PipelineConfig load_pipeline_config(const std::string& path) {
    Json j = Json::parse(read_file(path));
    return parse_pipeline_config(j, std::filesystem::absolute(path).parent_path());
}

// ---------------------------------------------------------------------------
// Manifest and stage cache
// ---------------------------------------------------------------------------

class Manifest {
public:
    Manifest() {
        data_["forge_version"] = kVersion;
        data_["template_version"] = kTemplateVersion;
        data_["stages"] = Json::object();
    }

    static std::optional<Manifest> load(const std::filesystem::path& path) {
        if (!std::filesystem::exists(path)) return std::nullopt;
        Manifest m;
        try {
            m.data_ = Json::parse(read_file(path.string()));
        } catch (const std::exception&) {
            return std::nullopt;  // unreadable manifest disables caching
        }
        return m;
    }

    void set_config_hash(const std::string& h) { data_["config_hash"] = h; }

    const Json& data() const { return data_; }
    Json& data() { return data_; }

    void save(const std::filesystem::path& path) const {
        write_file(path.string(), data_.dump(2) + "\n");
    }

private:
    Json data_;
};

// Runs stages with content-hash keyed caching: a stage whose key (inputs +
// params + template version) matches the previous manifest and whose outputs
// still hash-match is skipped. Judge/generator calls are the cost center and
// must never be repeated accidentally.
class StageRunner {
public:
    StageRunner(const std::filesystem::path& workdir, std::optional<Manifest> previous)
        : workdir_(workdir), previous_(std::move(previous)) {}

    // `inputs`/`outputs` are workdir-relative file names.
    template <typename Fn>
    bool run_stage(Manifest& manifest, const std::string& name,
                   const std::vector<std::string>& inputs, const Json& params,
                   const std::vector<std::string>& outputs, Fn&& body) {
        Json entry;
        std::string key_material = std::string(kTemplateVersion) + "|" + params.dump();
        Json input_hashes = Json::object();
        for (const auto& in : inputs) {
            std::string h = file_hash(in);
            input_hashes[in] = h;
            key_material += "|" + in + ":" + h;
        }
        std::string key = sha256_hex(key_material);
        entry["key"] = key;
        entry["params"] = params;
        entry["inputs"] = input_hashes;

        if (cached_entry_valid(name, key, outputs)) {
            entry["outputs"] = previous_->data()["stages"][name]["outputs"];
            manifest.data()["stages"][name] = entry;
            return false;  // skipped
        }

        try {
            body();
        } catch (const std::exception& e) {
            throw std::runtime_error("stage '" + name + "' failed: " + e.what());
        }

        Json output_hashes = Json::object();
        for (const auto& out : outputs) {
            hash_cache_.erase(out);
            output_hashes[out] = file_hash(out);
        }
        entry["outputs"] = output_hashes;
        manifest.data()["stages"][name] = entry;
        return true;
    }

    std::filesystem::path abs(const std::string& relative) const { return workdir_ / relative; }

private:
    std::string file_hash(const std::string& relative) {
        auto it = hash_cache_.find(relative);
        if (it != hash_cache_.end()) return it->second;
        std::string h = sha256_file((workdir_ / relative).string());
        hash_cache_[relative] = h;
        return h;
    }

    bool cached_entry_valid(const std::string& name, const std::string& key,
                            const std::vector<std::string>& outputs) {
        if (!previous_) return false;
        const Json& stages = previous_->data()["stages"];
        if (!stages.contains(name)) return false;
        const Json& prev = stages[name];
        if (prev.value("key", std::string()) != key) return false;
        if (!prev.contains("outputs")) return false;
        for (const auto& out : outputs) {
            if (!prev["outputs"].contains(out)) return false;
            std::filesystem::path p = workdir_ / out;
            if (!std::filesystem::exists(p)) return false;
            if (file_hash(out) != prev["outputs"][out].get<std::string>()) return false;
        }
        return true;
    }

    std::filesystem::path workdir_;
    std::optional<Manifest> previous_;
    std::map<std::string, std::string> hash_cache_;
};

// ---------------------------------------------------------------------------
// Pipeline stages
// ---------------------------------------------------------------------------

inline std::unique_ptr<EmbeddingProvider> make_embedding_provider(const ClusterConfig& cfg) {
    if (cfg.embeddings == "hash") {
        return std::make_unique<HashEmbedder>(cfg.dim, cfg.embed_seed);
    }
    std::unique_ptr<EmbeddingProvider> primary;
    if (cfg.embeddings == "sidecar") {
        primary = std::make_unique<SidecarEmbeddings>(cfg.sidecar_path);
    } else if (cfg.embeddings == "endpoint") {
        primary = std::make_unique<EndpointEmbeddings>(cfg.endpoint);
    } else {
        throw std::invalid_argument("unknown embeddings kind: " + cfg.embeddings);
    }
    if (cfg.fallback_to_hash) {
        return std::make_unique<FallbackEmbeddings>(std::move(primary), cfg.dim, cfg.embed_seed);
    }
    return primary;
}

namespace detail {

inline std::map<std::string, QueryRecord> index_by_qid(const std::vector<QueryRecord>& records) {
    std::map<std::string, QueryRecord> out;
    for (const auto& r : records) out[r.query_id] = r;
    return out;
}

}  // namespace detail

struct PipelineResult {
    Manifest manifest;
    std::vector<std::string> stages_run;      // executed this time
    std::vector<std::string> stages_cached;   // skipped via cache
};

inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.workdir);

    GeneratorRegistry registry = GeneratorRegistry::from_json(cfg.profiles_json);
    for (const auto& gen : cfg.generate.generators) {
        if (!registry.contains(gen)) {
            throw std::invalid_argument("config references unknown generator '" + gen + "'");
        }
    }

    PipelineResult result;
    Manifest& manifest = result.manifest;
    Json hashable_config = cfg.raw;
    hashable_config.erase("workdir");  // an output location, not pipeline content
    manifest.set_config_hash(sha256_hex(hashable_config.dump()));
    StageRunner runner(cfg.workdir, Manifest::load(cfg.workdir / "manifest.json"));

    auto note = [&](const std::string& name, bool ran) {
        (ran ? result.stages_run : result.stages_cached).push_back(name);
    };

    // --- ingest -----------------------------------------------------------
    std::string raw_file;  // workdir-relative input of the ingest stage
    if (cfg.synth) {
        Json synth_params;
        synth_params["seed"] = cfg.synth->seed;
        synth_params["per_source"] = Json::object();
        for (const auto& [s, c] : cfg.synth->per_source) synth_params["per_source"][s] = c;
        for (const auto& [s, l] : cfg.synth->language_of) synth_params["language_of"][s] = l;
        synth_params["positives"] = {cfg.synth->min_positives, cfg.synth->max_positives};
        synth_params["negatives"] = {cfg.synth->min_negatives, cfg.synth->max_negatives};
        note("synth", runner.run_stage(manifest, "synth", {}, synth_params, {"synth.jsonl"}, [&] {
            write_corpus(runner.abs("synth.jsonl").string(), make_synthetic_corpus(*cfg.synth));
        }));
        raw_file = "synth.jsonl";
    } else {
        fs::copy_file(cfg.input, cfg.workdir / "raw-input.jsonl",
                      fs::copy_options::overwrite_existing);
        raw_file = "raw-input.jsonl";
    }

    Json ingest_params;
    ingest_params["schema"] = cfg.synth ? "canonical" : cfg.schema;
    note("ingest",
         runner.run_stage(manifest, "ingest", {raw_file}, ingest_params,
                          {"corpus.jsonl", "corpus.stats.json", "ingest.rejects"}, [&] {
                              IngestResult ingest = ingest_corpus(
                                  runner.abs(raw_file).string(), ingest_params["schema"]);
                              write_corpus(runner.abs("corpus.jsonl").string(), ingest.records);
                              write_file(runner.abs("corpus.stats.json").string(),
                                         ingest.stats.to_json().dump(2) + "\n");
                              fs::rename(runner.abs(raw_file).string() + ".rejects",
                                         runner.abs("ingest.rejects"));
                          }));

    // --- sample -----------------------------------------------------------
    std::string working = "corpus.jsonl";
    if (cfg.quotas) {
        Json params;
        params["seed"] = cfg.sample_seed;
        params["quotas"] = Json::object();
        for (const auto& [s, c] : *cfg.quotas) params["quotas"][s] = c;
        note("sample",
             runner.run_stage(manifest, "sample", {working}, params, {"sampled.jsonl"}, [&] {
                 auto corpus = read_corpus(runner.abs(working).string());
                 auto sampled = sample_quota(corpus, *cfg.quotas, cfg.sample_seed);
                 write_corpus(runner.abs("sampled.jsonl").string(), sampled);
             }));
        working = "sampled.jsonl";
    }

    // --- cluster ----------------------------------------------------------
    {
        Json params;
        params["embeddings"] = cfg.cluster.embeddings;
        params["dim"] = cfg.cluster.dim;
        params["embed_seed"] = cfg.cluster.embed_seed;
        params["negatives_per_query"] = cfg.cluster.negatives_per_query;
        params["seed"] = cfg.cluster.seed;
        std::vector<std::string> inputs = {working};
        if (cfg.cluster.embeddings == "sidecar") {
            fs::copy_file(cfg.cluster.sidecar_path, cfg.workdir / "embeddings.sidecar.jsonl",
                          fs::copy_options::overwrite_existing);
            inputs.push_back("embeddings.sidecar.jsonl");
        }
        note("cluster",
             runner.run_stage(
                 manifest, "cluster", inputs, params,
                 {"clusters.jsonl", "cluster.stats.json"}, [&] {
                     ClusterConfig cluster_cfg = cfg.cluster;
                     if (cluster_cfg.embeddings == "sidecar") {
                         cluster_cfg.sidecar_path =
                             runner.abs("embeddings.sidecar.jsonl").string();
                     }
                     auto provider = make_embedding_provider(cluster_cfg);
                     auto corpus = read_corpus(runner.abs(working).string());
                     jsonl::Writer out(runner.abs("clusters.jsonl").string());
                     std::map<std::size_t, std::size_t> bucket_histogram;
                     for (const auto& record : corpus) {
                         ClusterAssignment assignment = bucket_documents(record, *provider);
                         NegativeSample negs = sample_negatives(
                             assignment, cfg.cluster.negatives_per_query, cfg.cluster.seed);
                         ++bucket_histogram[assignment.buckets.size()];
                         Json j = to_json(assignment, record.query_id);
                         j["negatives"] = negs.doc_ids;
                         j["truncated"] = negs.truncated;
                         out.write(j);
                     }
                     Json stats;
                     stats["bucket_count_histogram"] = Json::object();
                     for (const auto& [buckets, n] : bucket_histogram) {
                         stats["bucket_count_histogram"][std::to_string(buckets)] = n;
                     }
                     write_file(runner.abs("cluster.stats.json").string(),
                                stats.dump(2) + "\n");
                 }));
    }

    // --- compose ----------------------------------------------------------
    {
        Json params;
        params["seed"] = cfg.compose.seed;
        params["perm_cap"] = cfg.compose.perm.cap;
        params["perm_budget"] = cfg.compose.perm.budget;
        params["schemes"] = Json::array();
        for (SchemeId s : cfg.compose.schemes) params["schemes"].push_back(to_string(s));
        params["m_options"] = cfg.compose.mix.m_options;
        params["mix_budget"] = cfg.compose.mix.per_query_budget;
        note("compose",
             runner.run_stage(
                 manifest, "compose", {working, "clusters.jsonl"}, params, {"subsets.jsonl"},
                 [&] {
                     auto corpus = read_corpus(runner.abs(working).string());
                     std::map<std::string, std::vector<std::string>> negatives_of;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("clusters.jsonl").string())) {
                         negatives_of[j.at("query_id").get<std::string>()] =
                             j.at("negatives").get<std::vector<std::string>>();
                     }
                     jsonl::Writer out(runner.abs("subsets.jsonl").string());
                     PermutationOptions perm = cfg.compose.perm;
                     MixOptions mix = cfg.compose.mix;
                     for (const auto& record : corpus) {
                         std::set<std::string> seen;
                         auto emit = [&](const OrderedSubset& s) {
                             if (seen.insert(s.canonical_key).second) out.write(to_json(s));
                         };
                         for (const auto& s : enumerate_permutations(record, perm)) emit(s);
                         if (record.candidates.size() >= 2) {
                             for (SchemeId scheme : cfg.compose.schemes) {
                                 emit(apply_scheme(record, scheme));
                             }
                         }
                         auto it = negatives_of.find(record.query_id);
                         if (it != negatives_of.end() && !it->second.empty()) {
                             for (const auto& s : mix_subsets(record, it->second, mix).subsets) {
                                 emit(s);
                             }
                         }
                     }
                 }));
    }

    // --- generate ---------------------------------------------------------
    {
        Json params;
        params["generators"] = cfg.generate.generators;
        params["max_inflight"] = cfg.generate.max_inflight;
        Json profile_params = Json::array();
        for (const auto& gen : cfg.generate.generators) {
            profile_params.push_back(to_json(registry.get(gen)));
        }
        params["profiles"] = profile_params;
        note("generate",
             runner.run_stage(
                 manifest, "generate", {working, "subsets.jsonl"}, params,
                 {"results.jsonl", "results.log.jsonl"}, [&] {
                     auto corpus_by_qid =
                         detail::index_by_qid(read_corpus(runner.abs(working).string()));
                     std::vector<OrderedSubset> subsets;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("subsets.jsonl").string())) {
                         subsets.push_back(subset_from_json(j));
                     }
                     jsonl::Writer log(runner.abs("results.log.jsonl").string());
                     jsonl::Writer out(runner.abs("results.jsonl").string());
                     std::vector<GenerationResult> all;
                     for (const auto& gen : cfg.generate.generators) {
                         const GeneratorProfile& profile = registry.get(gen);
                         ChatFn chat;
                         if (profile.is_endpoint()) {
                             chat = make_endpoint_chat(std::get<EndpointBinding>(profile.binding));
                         }
                         std::vector<GenerationTask> tasks;
                         for (const auto& subset : subsets) {
                             auto rec_it = corpus_by_qid.find(subset.query_id);
                             if (rec_it == corpus_by_qid.end()) {
                                 throw std::runtime_error("subset references unknown query " +
                                                          subset.query_id);
                             }
                             tasks.push_back({&rec_it->second, &subset, &profile});
                         }
                         auto results = generate_batch(
                             tasks, chat, cfg.generate.max_inflight, cfg.generate.options,
                             [&](const GenerationResult& r) { log.write(to_json(r)); });
                         all.insert(all.end(), results.begin(), results.end());
                     }
                     std::sort(all.begin(), all.end(),
                               [](const GenerationResult& a, const GenerationResult& b) {
                                   return std::tie(a.query_id, a.canonical_key, a.generator_id) <
                                          std::tie(b.query_id, b.canonical_key, b.generator_id);
                               });
                     for (const auto& r : all) out.write(to_json(r));
                 }));
    }

    // --- judge ------------------------------------------------------------
    {
        Json params;
        params["kind"] = cfg.judge.kind;
        if (cfg.judge.kind == "llm") {
            params["endpoint"] = cfg.judge.endpoint.base_url + "#" + cfg.judge.endpoint.model;
        }
        note("judge",
             runner.run_stage(
                 manifest, "judge", {working, "subsets.jsonl", "results.jsonl"}, params,
                 {"judged.jsonl", "judge.unjudged.jsonl"}, [&] {
                     auto corpus_by_qid =
                         detail::index_by_qid(read_corpus(runner.abs(working).string()));
                     std::map<std::string, std::string> provenance_of;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("subsets.jsonl").string())) {
                         OrderedSubset s = subset_from_json(j);
                         provenance_of[s.canonical_key] = s.provenance.label();
                     }
                     // (query, generator) -> results, judged listwise per batch
                     std::map<std::pair<std::string, std::string>,
                              std::vector<GenerationResult>>
                         batches;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("results.jsonl").string())) {
                         GenerationResult r = generation_result_from_json(j);
                         batches[{r.query_id, r.generator_id}].push_back(std::move(r));
                     }
                     ChatFn judge_chat;
                     if (cfg.judge.kind == "llm") {
                         judge_chat = make_endpoint_chat(cfg.judge.endpoint);
                     }
                     // Batches run concurrently under the shared in-flight
                     // limit; slot-indexed results keep the merge
                     // schedule-independent.
                     std::vector<std::pair<std::pair<std::string, std::string>,
                                           std::vector<GenerationResult>>>
                         batch_list(batches.begin(), batches.end());
                     std::vector<JudgeBatchResult> batch_results(batch_list.size());
                     std::atomic<std::size_t> next{0};
                     auto worker = [&] {
                         while (true) {
                             std::size_t i = next.fetch_add(1);
                             if (i >= batch_list.size()) return;
                             const QueryRecord& record =
                                 corpus_by_qid.at(batch_list[i].first.first);
                             if (cfg.judge.kind == "oracle") {
                                 batch_results[i].samples =
                                     judge_oracle(record, batch_list[i].second);
                             } else {
                                 batch_results[i] =
                                     judge_llm(record, batch_list[i].second, judge_chat);
                             }
                         }
                     };
                     std::size_t n_threads = std::min<std::size_t>(
                         std::max<std::size_t>(cfg.generate.max_inflight, 1),
                         batch_list.size());
                     if (n_threads <= 1) {
                         worker();
                     } else {
                         std::vector<std::thread> pool;
                         for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
                         for (auto& th : pool) th.join();
                     }

                     std::vector<JudgedSample> judged;
                     jsonl::Writer unjudged(runner.abs("judge.unjudged.jsonl").string());
                     for (std::size_t i = 0; i < batch_list.size(); ++i) {
                         for (const auto& k : batch_results[i].unjudged) {
                             unjudged.write(Json{{"query_id", batch_list[i].first.first},
                                                 {"generator_id", batch_list[i].first.second},
                                                 {"canonical_key", k}});
                         }
                         for (auto& s : batch_results[i].samples) {
                             s.provenance = provenance_of.count(s.canonical_key)
                                                ? provenance_of[s.canonical_key]
                                                : "unknown";
                             judged.push_back(std::move(s));
                         }
                     }
                     std::sort(judged.begin(), judged.end(),
                               [](const JudgedSample& a, const JudgedSample& b) {
                                   return std::tie(a.query_id, a.generator_id, a.canonical_key) <
                                          std::tie(b.query_id, b.generator_id, b.canonical_key);
                               });
                     jsonl::Writer out(runner.abs("judged.jsonl").string());
                     for (const auto& s : judged) out.write(to_json(s));
                 }));
    }

    // --- pair -------------------------------------------------------------
    {
        Json params;
        params["margin"] = cfg.judge.prefs.margin;
        params["max_pairs_per_query"] = cfg.judge.prefs.max_pairs_per_query;
        params["seed"] = cfg.judge.prefs.seed;
        note("pair",
             runner.run_stage(
                 manifest, "pair", {"judged.jsonl", "subsets.jsonl"}, params, {"pairs.jsonl"},
                 [&] {
                     std::vector<JudgedSample> judged;
                     for (const auto& j : jsonl::read_all(runner.abs("judged.jsonl").string())) {
                         judged.push_back(judged_sample_from_json(j));
                     }
                     std::map<std::string, OrderedSubset> subsets_by_key;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("subsets.jsonl").string())) {
                         OrderedSubset s = subset_from_json(j);
                         subsets_by_key[s.canonical_key] = std::move(s);
                     }
                     auto pairs = derive_preferences(judged, subsets_by_key, cfg.judge.prefs);
                     jsonl::Writer out(runner.abs("pairs.jsonl").string());
                     for (const auto& p : pairs) out.write(to_json(p));
                 }));
    }

    // --- build ------------------------------------------------------------
    {
        Json params;
        params["mode_mix"] = cfg.build.mode_mix;
        params["seed"] = cfg.build.seed;
        params["profiles"] = cfg.profiles_json;
        note("build",
             runner.run_stage(
                 manifest, "build",
                 {working, "judged.jsonl", "subsets.jsonl", "pairs.jsonl"}, params,
                 {"sft.jsonl", "dpo.jsonl", "build.stats.json"}, [&] {
                     auto corpus = read_corpus(runner.abs(working).string());
                     auto corpus_by_qid = detail::index_by_qid(corpus);
                     std::vector<JudgedSample> judged;
                     for (const auto& j : jsonl::read_all(runner.abs("judged.jsonl").string())) {
                         judged.push_back(judged_sample_from_json(j));
                     }
                     std::map<std::string, OrderedSubset> subsets_by_key;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("subsets.jsonl").string())) {
                         OrderedSubset s = subset_from_json(j);
                         subsets_by_key[s.canonical_key] = std::move(s);
                     }
                     std::vector<PreferencePair> pairs;
                     for (const auto& j : jsonl::read_all(runner.abs("pairs.jsonl").string())) {
                         pairs.push_back(preference_pair_from_json(j));
                     }

                     jsonl::Writer sft_out(runner.abs("sft.jsonl").string());
                     for (const auto& r : build_sft(corpus, registry, cfg.build)) {
                         sft_out.write(to_json(r));
                     }
                     auto cold = build_cold_start(corpus_by_qid, judged, subsets_by_key,
                                                  registry, cfg.build);
                     for (const auto& r : cold) sft_out.write(to_json(r));

                     DpoBuildResult dpo = build_dpo(pairs, corpus_by_qid, registry, cfg.build);
                     jsonl::Writer dpo_out(runner.abs("dpo.jsonl").string());
                     for (const auto& r : dpo.records) dpo_out.write(to_json(r));

                     Json stats;
                     stats["sft_records"] = sft_out.count();
                     stats["cold_start_records"] = cold.size();
                     stats["dpo_records"] = dpo.records.size();
                     stats["dpo_dropped"] = dpo.dropped;
                     write_file(runner.abs("build.stats.json").string(),
                                stats.dump(2) + "\n");
                 }));
    }

    // --- report -----------------------------------------------------------
    {
        Json params = Json::object();
        note("report",
             runner.run_stage(
                 manifest, "report", {working, "judged.jsonl", "results.jsonl"}, params,
                 {"phenomenon.csv", "phenomenon.txt", "metrics.csv"}, [&] {
                     std::vector<JudgedSample> judged;
                     for (const auto& j : jsonl::read_all(runner.abs("judged.jsonl").string())) {
                         judged.push_back(judged_sample_from_json(j));
                     }
                     PhenomenonReport report = phenomenon_report(judged);
                     write_file(runner.abs("phenomenon.csv").string(), phenomenon_csv(report));
                     write_file(runner.abs("phenomenon.txt").string(),
                                phenomenon_summary(report));

                     auto corpus_by_qid =
                         detail::index_by_qid(read_corpus(runner.abs(working).string()));
                     std::vector<EvalItem> items;
                     for (const auto& j :
                          jsonl::read_all(runner.abs("results.jsonl").string())) {
                         GenerationResult r = generation_result_from_json(j);
                         items.push_back({r.query_id, r.generator_id, "-", r.answer_text});
                     }
                     write_file(runner.abs("metrics.csv").string(),
                                metrics_csv(evaluate_run(items, corpus_by_qid)));
                 }));
    }

    manifest.save(cfg.workdir / "manifest.json");
    return result;
}

}  // namespace forge
