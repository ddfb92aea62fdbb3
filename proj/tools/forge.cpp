// forge: build generator-aware ranking preference data and run the ranking
// harness. Subcommand help: forge <cmd> --help.

#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forge/chat_client.hpp"
#include "forge/composer.hpp"
#include "forge/corpus.hpp"
#include "forge/eval.hpp"
#include "forge/features.hpp"
#include "forge/generator.hpp"
#include "forge/judge.hpp"
#include "forge/pipeline.hpp"
#include "forge/pref_builder.hpp"
#include "forge/ranker.hpp"
#include "forge/report.hpp"
#include "forge/synth.hpp"
#include "forge/version.hpp"

namespace {

using namespace forge;

std::vector<double> parse_schedule(const std::string& spec) {
    std::vector<double> temps;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        std::string part = spec.substr(start, end - start);
        if (!part.empty()) temps.push_back(std::stod(part));
        start = end + 1;
    }
    if (temps.empty()) throw std::invalid_argument("empty schedule");
    return temps;
}

std::vector<QueryRecord> load_corpus(const std::string& path) { return read_corpus(path); }

std::map<std::string, OrderedSubset> load_subsets_by_key(const std::string& path) {
    std::map<std::string, OrderedSubset> out;
    for (const auto& j : jsonl::read_all(path)) {
        OrderedSubset s = subset_from_json(j);
        out[s.canonical_key] = std::move(s);
    }
    return out;
}

std::vector<JudgedSample> load_judged(const std::string& path) {
    std::vector<JudgedSample> out;
    for (const auto& j : jsonl::read_all(path)) out.push_back(judged_sample_from_json(j));
    return out;
}

struct EndpointFlags {
    std::string url;
    std::string model;
    std::string api_key_env;

    void add_to(CLI::App* cmd, const std::string& prefix) {
        cmd->add_option("--" + prefix + "-url", url, "chat endpoint base URL (e.g. .../v1)");
        cmd->add_option("--" + prefix + "-model", model, "model name sent to the endpoint");
        cmd->add_option("--" + prefix + "-key-env", api_key_env,
                        "environment variable holding the API key");
    }

    EndpointBinding binding() const { return EndpointBinding{url, model, api_key_env}; }
};

int cmd_ingest(const std::string& schema, const std::string& in, const std::string& out) {
    IngestResult result = ingest_corpus(in, schema);
    write_corpus(out, result.records);
    write_file(out + ".stats.json", result.stats.to_json().dump(2) + "\n");
    std::cerr << "ingested " << result.stats.accepted << " records, rejected "
              << result.stats.rejected << " (reasons in " << in << ".rejects)\n";
    return 0;
}

int cmd_sample(const std::string& in, const std::string& out, const std::string& quota_spec,
               std::uint64_t seed) {
    auto corpus = load_corpus(in);
    auto sampled = sample_quota(corpus, parse_quota_spec(quota_spec), seed);
    write_corpus(out, sampled);
    std::cerr << "sampled " << sampled.size() << " records\n";
    return 0;
}

int cmd_synth(const std::string& out, std::uint64_t seed,
              const std::vector<std::string>& source_specs) {
    SynthOptions options;
    options.seed = seed;
    for (const auto& spec : source_specs) {
        // name=count[:EN|ZH]
        std::size_t eq = spec.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad --source: " + spec);
        std::string name = spec.substr(0, eq);
        std::string rest = spec.substr(eq + 1);
        std::size_t colon = rest.find(':');
        if (colon != std::string::npos) {
            options.language_of[name] = rest.substr(colon + 1);
            rest = rest.substr(0, colon);
        }
        options.per_source[name] = std::stoull(rest);
    }
    auto corpus = make_synthetic_corpus(options);
    write_corpus(out, corpus);
    std::cerr << "wrote " << corpus.size() << " synthetic records to " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forge: generator-aware ranking data pipeline and harness"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    try {
        // ingest ------------------------------------------------------------
        auto* ingest = app.add_subcommand("ingest", "validate a raw corpus into canonical records");
        std::string ingest_schema = "canonical", ingest_in, ingest_out;
        ingest->add_option("--schema", ingest_schema, "source schema name")->capture_default_str();
        ingest->add_option("--in", ingest_in, "input JSONL")->required();
        ingest->add_option("--out", ingest_out, "canonical output JSONL")->required();

        // sample ------------------------------------------------------------
        auto* sample = app.add_subcommand("sample", "seeded per-source quota sampling");
        std::string sample_in, sample_out, sample_quotas;
        std::uint64_t sample_seed = 0;
        sample->add_option("--in", sample_in)->required();
        sample->add_option("--out", sample_out)->required();
        sample->add_option("--quota", sample_quotas, "source=count[,source=count..]")->required();
        sample->add_option("--seed", sample_seed)->required();

        // synth ---------------------------------------------------------------
        auto* synth = app.add_subcommand("synth", "emit a deterministic synthetic corpus");
        std::string synth_out;
        std::uint64_t synth_seed = 0;
        std::vector<std::string> synth_sources;
        synth->add_option("--out", synth_out)->required();
        synth->add_option("--seed", synth_seed)->required();
        synth->add_option("--source", synth_sources, "name=count[:EN|ZH], repeatable")
            ->required();

        // cluster -------------------------------------------------------------
        auto* cluster = app.add_subcommand(
            "cluster", "three-dimensional negative clustering and sampling");
        std::string cluster_in, cluster_out, cluster_embeddings = "hash", cluster_sidecar;
        std::size_t cluster_m = 4, cluster_dim = 64;
        std::uint64_t cluster_seed = 0, cluster_embed_seed = 0;
        EndpointFlags cluster_endpoint;
        cluster->add_option("--in", cluster_in)->required();
        cluster->add_option("--out", cluster_out)->required();
        cluster->add_option("--negatives", cluster_m, "negatives sampled per query")
            ->capture_default_str();
        cluster->add_option("--embeddings", cluster_embeddings, "hash | sidecar | endpoint")
            ->capture_default_str();
        cluster->add_option("--sidecar", cluster_sidecar, "sidecar embeddings JSONL");
        cluster->add_option("--dim", cluster_dim)->capture_default_str();
        cluster->add_option("--embed-seed", cluster_embed_seed)->capture_default_str();
        cluster->add_option("--seed", cluster_seed)->required();
        cluster_endpoint.add_to(cluster, "endpoint");

        // compose -------------------------------------------------------------
        auto* compose = app.add_subcommand(
            "compose", "permutations, arrangement schemes, and positive+negative mixes");
        std::string compose_in, compose_negatives, compose_out, compose_schemes = "all";
        std::size_t perm_cap = 5, perm_budget = 12, mix_budget = 6;
        std::vector<int> m_options = {1, 2};
        std::uint64_t compose_seed = 0;
        compose->add_option("--in", compose_in)->required();
        compose->add_option("--negatives", compose_negatives, "clusters JSONL (enables mixing)");
        compose->add_option("--out", compose_out)->required();
        compose->add_option("--schemes", compose_schemes, "all | none | comma list")
            ->capture_default_str();
        compose->add_option("--perm-cap", perm_cap)->capture_default_str();
        compose->add_option("--perm-budget", perm_budget)->capture_default_str();
        compose->add_option("--m-options", m_options, "negative counts for mixing")
            ->capture_default_str();
        compose->add_option("--mix-budget", mix_budget)->capture_default_str();
        compose->add_option("--seed", compose_seed)->required();

        // generate ------------------------------------------------------------
        auto* generate = app.add_subcommand("generate", "produce RAG answers for ordered subsets");
        std::string gen_corpus, gen_subsets, gen_profiles, gen_out, gen_log;
        std::vector<std::string> gen_ids;
        std::size_t gen_inflight = 8;
        int gen_backoff = 200;
        generate->add_option("--corpus", gen_corpus)->required();
        generate->add_option("--subsets", gen_subsets)->required();
        generate->add_option("--profiles", gen_profiles, "generator registry JSON")->required();
        generate->add_option("--generator", gen_ids, "generator id, repeatable")->required();
        generate->add_option("--out", gen_out)->required();
        generate->add_option("--log", gen_log, "append-only result log");
        generate->add_option("--max-inflight", gen_inflight)->capture_default_str();
        generate->add_option("--backoff-ms", gen_backoff)->capture_default_str();

        // judge ---------------------------------------------------------------
        auto* judge = app.add_subcommand("judge", "score generated answers per subset");
        std::string judge_corpus, judge_subsets, judge_results, judge_out,
            judge_kind = "oracle";
        EndpointFlags judge_endpoint;
        judge->add_option("--corpus", judge_corpus)->required();
        judge->add_option("--subsets", judge_subsets)->required();
        judge->add_option("--results", judge_results)->required();
        judge->add_option("--out", judge_out)->required();
        judge->add_option("--judge", judge_kind, "oracle | llm")->capture_default_str();
        judge_endpoint.add_to(judge, "judge");

        // pair ----------------------------------------------------------------
        auto* pair = app.add_subcommand("pair", "derive preference pairs from judged samples");
        std::string pair_judged, pair_subsets, pair_out;
        double pair_margin = 0.25;
        std::size_t pair_max = 4;
        std::uint64_t pair_seed = 0;
        pair->add_option("--judged", pair_judged)->required();
        pair->add_option("--subsets", pair_subsets)->required();
        pair->add_option("--out", pair_out)->required();
        pair->add_option("--margin", pair_margin)->capture_default_str();
        pair->add_option("--max-pairs", pair_max)->capture_default_str();
        pair->add_option("--seed", pair_seed)->required();

        // build-sft -------------------------------------------------------------
        auto* build_sft_cmd = app.add_subcommand(
            "build-sft", "emit relevance SFT records (plus cold start when judged data given)");
        std::string bs_corpus, bs_out, bs_profiles, bs_judged, bs_subsets;
        double bs_mode_mix = 0.5;
        std::uint64_t bs_seed = 0;
        build_sft_cmd->add_option("--corpus", bs_corpus)->required();
        build_sft_cmd->add_option("--out", bs_out)->required();
        build_sft_cmd->add_option("--profiles", bs_profiles, "generator registry JSON");
        build_sft_cmd->add_option("--judged", bs_judged, "judged samples (enables cold start)");
        build_sft_cmd->add_option("--subsets", bs_subsets, "subsets JSONL (needed with --judged)");
        build_sft_cmd->add_option("--mode-mix", bs_mode_mix)->capture_default_str();
        build_sft_cmd->add_option("--seed", bs_seed)->required();

        // build-dpo -------------------------------------------------------------
        auto* build_dpo_cmd = app.add_subcommand("build-dpo", "emit DPO pair records");
        std::string bd_pairs, bd_corpus, bd_profiles, bd_out;
        double bd_mode_mix = 0.5;
        std::uint64_t bd_seed = 0;
        build_dpo_cmd->add_option("--pairs", bd_pairs)->required();
        build_dpo_cmd->add_option("--corpus", bd_corpus)->required();
        build_dpo_cmd->add_option("--profiles", bd_profiles)->required();
        build_dpo_cmd->add_option("--out", bd_out)->required();
        build_dpo_cmd->add_option("--mode-mix", bd_mode_mix)->capture_default_str();
        build_dpo_cmd->add_option("--seed", bd_seed)->required();

        // rank ----------------------------------------------------------------
        auto* rank = app.add_subcommand("rank", "inference-time ranking over a corpus");
        std::string rank_corpus, rank_profiles, rank_generator = "default",
                    rank_paradigm_name = "set_selection", rank_mode = "/index",
                    rank_schedule = "0.0,0.7,1.0", rank_out, rank_log;
        bool rank_top10 = false, rank_oracle = false;
        EndpointFlags rank_endpoint;
        rank->add_option("--corpus", rank_corpus)->required();
        rank->add_option("--profiles", rank_profiles, "generator registry JSON");
        rank->add_option("--generator", rank_generator, "conditioning generator id")
            ->capture_default_str();
        rank->add_option("--paradigm", rank_paradigm_name, "pointwise | listwise | set_selection")
            ->capture_default_str();
        rank->add_option("--mode", rank_mode, "/index | /snapshot")->capture_default_str();
        rank->add_option("--schedule", rank_schedule, "retry temperatures")
            ->capture_default_str();
        rank->add_flag("--top10", rank_top10, "restrict pointwise/listwise input to top-10");
        rank->add_flag("--oracle-ranker", rank_oracle,
                       "use the built-in oracle ranker mock instead of an endpoint");
        rank->add_option("--out", rank_out)->required();
        rank->add_option("--log", rank_log, "attempt transcript JSONL");
        rank_endpoint.add_to(rank, "ranker");

        // eval ----------------------------------------------------------------
        auto* eval_cmd = app.add_subcommand("eval", "EM/F1 tables for generation results");
        std::string eval_results, eval_corpus, eval_out;
        eval_cmd->add_option("--results", eval_results)->required();
        eval_cmd->add_option("--corpus", eval_corpus)->required();
        eval_cmd->add_option("--out", eval_out, "CSV output path");

        // report-phenomenon ---------------------------------------------------
        auto* report_cmd = app.add_subcommand("report-phenomenon",
                                              "ordering-preference report over judged samples");
        std::string report_judged, report_out;
        report_cmd->add_option("--judged", report_judged)->required();
        report_cmd->add_option("--out", report_out, "CSV output path");

        // run -------------------------------------------------------------------
        auto* run = app.add_subcommand("run", "run the full pipeline from a config file");
        std::string run_config, run_workdir;
        run->add_option("--config", run_config)->required();
        run->add_option("--workdir", run_workdir, "override the config's workdir");

        CLI11_PARSE(app, argc, argv);

        if (*ingest) return cmd_ingest(ingest_schema, ingest_in, ingest_out);
        if (*sample) return cmd_sample(sample_in, sample_out, sample_quotas, sample_seed);
        if (*synth) return cmd_synth(synth_out, synth_seed, synth_sources);

        if (*cluster) {
            ClusterConfig cc;
            cc.embeddings = cluster_embeddings;
            cc.sidecar_path = cluster_sidecar;
            cc.endpoint = cluster_endpoint.binding();
            cc.dim = cluster_dim;
            cc.embed_seed = cluster_embed_seed;
            cc.negatives_per_query = cluster_m;
            cc.seed = cluster_seed;
            auto provider = make_embedding_provider(cc);
            jsonl::Writer out(cluster_out);
            for (const auto& record : load_corpus(cluster_in)) {
                ClusterAssignment assignment = bucket_documents(record, *provider);
                NegativeSample negs = sample_negatives(assignment, cluster_m, cluster_seed);
                Json j = to_json(assignment, record.query_id);
                j["negatives"] = negs.doc_ids;
                j["truncated"] = negs.truncated;
                out.write(j);
            }
            return 0;
        }

        if (*compose) {
            auto corpus = load_corpus(compose_in);
            std::map<std::string, std::vector<std::string>> negatives_of;
            if (!compose_negatives.empty()) {
                for (const auto& j : jsonl::read_all(compose_negatives)) {
                    negatives_of[j.at("query_id").get<std::string>()] =
                        j.at("negatives").get<std::vector<std::string>>();
                }
            }
            std::vector<SchemeId> schemes;
            if (compose_schemes == "all") {
                schemes = all_schemes();
            } else if (compose_schemes != "none") {
                std::size_t start = 0;
                while (start <= compose_schemes.size()) {
                    std::size_t end = compose_schemes.find(',', start);
                    if (end == std::string::npos) end = compose_schemes.size();
                    if (end > start) {
                        schemes.push_back(
                            scheme_from_string(compose_schemes.substr(start, end - start)));
                    }
                    start = end + 1;
                }
            }
            PermutationOptions perm{perm_cap, perm_budget, compose_seed};
            MixOptions mix{m_options, mix_budget, compose_seed};
            jsonl::Writer out(compose_out);
            for (const auto& record : corpus) {
                std::set<std::string> seen;
                auto emit = [&](const OrderedSubset& s) {
                    if (seen.insert(s.canonical_key).second) out.write(to_json(s));
                };
                for (const auto& s : enumerate_permutations(record, perm)) emit(s);
                if (record.candidates.size() >= 2) {
                    for (SchemeId scheme : schemes) emit(apply_scheme(record, scheme));
                }
                auto it = negatives_of.find(record.query_id);
                if (it != negatives_of.end() && !it->second.empty()) {
                    for (const auto& s : mix_subsets(record, it->second, mix).subsets) emit(s);
                }
            }
            return 0;
        }

        if (*generate) {
            GeneratorRegistry registry = GeneratorRegistry::from_file(gen_profiles);
            auto corpus_by_qid = [&] {
                std::map<std::string, QueryRecord> m;
                for (auto& r : load_corpus(gen_corpus)) m[r.query_id] = std::move(r);
                return m;
            }();
            std::vector<OrderedSubset> subsets;
            for (const auto& j : jsonl::read_all(gen_subsets)) {
                subsets.push_back(subset_from_json(j));
            }
            std::unique_ptr<jsonl::Writer> log;
            if (!gen_log.empty()) log = std::make_unique<jsonl::Writer>(gen_log);
            GenerateOptions gopt;
            gopt.backoff_ms = gen_backoff;
            std::vector<GenerationResult> all;
            for (const auto& gen_id : gen_ids) {
                const GeneratorProfile& profile = registry.get(gen_id);
                ChatFn chat;
                if (profile.is_endpoint()) {
                    chat = make_endpoint_chat(std::get<EndpointBinding>(profile.binding));
                }
                std::vector<GenerationTask> tasks;
                for (const auto& subset : subsets) {
                    auto it = corpus_by_qid.find(subset.query_id);
                    if (it == corpus_by_qid.end()) {
                        throw std::runtime_error("subset references unknown query " +
                                                 subset.query_id);
                    }
                    tasks.push_back({&it->second, &subset, &profile});
                }
                auto results = generate_batch(tasks, chat, gen_inflight, gopt,
                                              [&](const GenerationResult& r) {
                                                  if (log) log->write(to_json(r));
                                              });
                all.insert(all.end(), results.begin(), results.end());
            }
            std::sort(all.begin(), all.end(),
                      [](const GenerationResult& a, const GenerationResult& b) {
                          return std::tie(a.query_id, a.canonical_key, a.generator_id) <
                                 std::tie(b.query_id, b.canonical_key, b.generator_id);
                      });
            jsonl::Writer out(gen_out);
            for (const auto& r : all) out.write(to_json(r));
            return 0;
        }

        if (*judge) {
            auto corpus_by_qid = [&] {
                std::map<std::string, QueryRecord> m;
                for (auto& r : load_corpus(judge_corpus)) m[r.query_id] = std::move(r);
                return m;
            }();
            auto subsets_by_key = load_subsets_by_key(judge_subsets);
            std::map<std::pair<std::string, std::string>, std::vector<GenerationResult>> batches;
            for (const auto& j : jsonl::read_all(judge_results)) {
                GenerationResult r = generation_result_from_json(j);
                batches[{r.query_id, r.generator_id}].push_back(std::move(r));
            }
            ChatFn judge_chat;
            if (judge_kind == "llm") judge_chat = make_endpoint_chat(judge_endpoint.binding());
            std::vector<JudgedSample> judged;
            for (auto& [key, results] : batches) {
                const QueryRecord& record = corpus_by_qid.at(key.first);
                std::vector<JudgedSample> samples;
                if (judge_kind == "oracle") {
                    samples = judge_oracle(record, results);
                } else {
                    samples = judge_llm(record, results, judge_chat).samples;
                }
                for (auto& s : samples) {
                    auto it = subsets_by_key.find(s.canonical_key);
                    s.provenance = it != subsets_by_key.end() ? it->second.provenance.label()
                                                              : "unknown";
                    judged.push_back(std::move(s));
                }
            }
            std::sort(judged.begin(), judged.end(),
                      [](const JudgedSample& a, const JudgedSample& b) {
                          return std::tie(a.query_id, a.generator_id, a.canonical_key) <
                                 std::tie(b.query_id, b.generator_id, b.canonical_key);
                      });
            jsonl::Writer out(judge_out);
            for (const auto& s : judged) out.write(to_json(s));
            return 0;
        }

        if (*pair) {
            auto judged = load_judged(pair_judged);
            auto subsets_by_key = load_subsets_by_key(pair_subsets);
            PreferenceOptions prefs{pair_margin, pair_max, pair_seed};
            auto pairs = derive_preferences(judged, subsets_by_key, prefs);
            jsonl::Writer out(pair_out);
            for (const auto& p : pairs) out.write(to_json(p));
            std::cerr << "derived " << pairs.size() << " preference pairs\n";
            return 0;
        }

        if (*build_sft_cmd) {
            auto corpus = load_corpus(bs_corpus);
            GeneratorRegistry registry = bs_profiles.empty()
                                             ? GeneratorRegistry()
                                             : GeneratorRegistry::from_file(bs_profiles);
            BuildOptions opts{bs_mode_mix, bs_seed};
            jsonl::Writer out(bs_out);
            for (const auto& r : build_sft(corpus, registry, opts)) out.write(to_json(r));
            if (!bs_judged.empty()) {
                if (bs_subsets.empty()) {
                    throw std::invalid_argument("--judged also needs --subsets");
                }
                std::map<std::string, QueryRecord> by_qid;
                for (auto& r : corpus) by_qid[r.query_id] = r;
                auto cold = build_cold_start(by_qid, load_judged(bs_judged),
                                             load_subsets_by_key(bs_subsets), registry, opts);
                for (const auto& r : cold) out.write(to_json(r));
            }
            return 0;
        }

        if (*build_dpo_cmd) {
            std::vector<PreferencePair> pairs;
            for (const auto& j : jsonl::read_all(bd_pairs)) {
                pairs.push_back(preference_pair_from_json(j));
            }
            std::map<std::string, QueryRecord> by_qid;
            for (auto& r : load_corpus(bd_corpus)) by_qid[r.query_id] = std::move(r);
            GeneratorRegistry registry = GeneratorRegistry::from_file(bd_profiles);
            DpoBuildResult result =
                build_dpo(pairs, by_qid, registry, BuildOptions{bd_mode_mix, bd_seed});
            jsonl::Writer out(bd_out);
            for (const auto& r : result.records) out.write(to_json(r));
            std::cerr << "emitted " << result.records.size() << " DPO records, dropped "
                      << result.dropped << "\n";
            return 0;
        }

        if (*rank) {
            GeneratorRegistry registry = rank_profiles.empty()
                                             ? GeneratorRegistry()
                                             : GeneratorRegistry::from_file(rank_profiles);
            const GeneratorProfile& profile = registry.get(rank_generator);
            RankMode mode = rank_mode_from_string(rank_mode);
            Paradigm paradigm = paradigm_from_string(rank_paradigm_name);
            RetrySchedule schedule{parse_schedule(rank_schedule)};
            std::unique_ptr<jsonl::Writer> log;
            if (!rank_log.empty()) log = std::make_unique<jsonl::Writer>(rank_log);

            jsonl::Writer out(rank_out);
            for (const auto& record : load_corpus(rank_corpus)) {
                ChatFn chat;
                if (rank_oracle) {
                    chat = [&record, mode](const ChatRequest&) -> ChatResponse {
                        OrderedSubset target =
                            make_subset(record.query_id, default_positive_order(record),
                                        Provenance{ProvenanceKind::ranker, "", 0});
                        return {true, serialize_subset(record, target, mode), ""};
                    };
                } else {
                    if (rank_endpoint.url.empty()) {
                        throw std::invalid_argument(
                            "rank needs --ranker-url or --oracle-ranker");
                    }
                    chat = make_endpoint_chat(rank_endpoint.binding());
                }
                OrderedSubset ranked;
                std::vector<RankAttempt> transcript;
                if (paradigm == Paradigm::set_selection) {
                    ranked = rank_with_retries(chat, record, profile, mode, schedule,
                                               &transcript);
                } else {
                    ParadigmOptions popt;
                    popt.top10 = rank_top10;
                    popt.mode = mode;
                    ranked = rank_paradigm(paradigm, chat, record, profile, popt);
                }
                out.write(to_json(ranked));
                if (log) {
                    for (const auto& a : transcript) log->write(to_json(a, record.query_id));
                }
            }
            return 0;
        }

        if (*eval_cmd) {
            std::map<std::string, QueryRecord> by_qid;
            for (auto& r : load_corpus(eval_corpus)) by_qid[r.query_id] = std::move(r);
            std::vector<EvalItem> items;
            for (const auto& j : jsonl::read_all(eval_results)) {
                EvalItem item;
                item.query_id = j.at("query_id").get<std::string>();
                item.generator_id = j.at("generator_id").get<std::string>();
                item.ranker_label = j.value("ranker_label", std::string("-"));
                item.answer_text = j.at("answer_text").get<std::string>();
                items.push_back(std::move(item));
            }
            auto rows = evaluate_run(items, by_qid);
            std::cout << metrics_table(rows);
            if (!eval_out.empty()) write_file(eval_out, metrics_csv(rows));
            return 0;
        }

        if (*report_cmd) {
            PhenomenonReport report = phenomenon_report(load_judged(report_judged));
            std::cout << phenomenon_summary(report);
            if (!report_out.empty()) write_file(report_out, phenomenon_csv(report));
            return 0;
        }

        if (*run) {
            PipelineConfig cfg = load_pipeline_config(run_config);
            if (!run_workdir.empty()) cfg.workdir = run_workdir;
            PipelineResult result = run_pipeline(cfg);
            std::cerr << "pipeline complete; artifacts in " << cfg.workdir.string() << "\n";
            for (const auto& s : result.stages_run) std::cerr << "  ran    " << s << "\n";
            for (const auto& s : result.stages_cached) std::cerr << "  cached " << s << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
