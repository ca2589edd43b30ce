// Copyright(C) 2026 park contributors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "park/pipeline/config.hpp"

#include <fstream>

#include "park/common/error.hpp"
#include "park/common/hash.hpp"

namespace park::pipeline {

using Json = nlohmann::ordered_json;

Json default_config_json()
{
    corpus::SynthConfig s;
    return Json{
        {"paths", {{"workdir", "work"}, {"corpus", ""}, {"authors", ""}}},
        {"seed", 7},
        {"threads", 1},
        {"synth",
         {{"n_docs", s.n_docs},
          {"n_authors", s.n_authors},
          {"n_venues", s.n_venues},
          {"n_affiliations", s.n_affiliations},
          {"n_topics", s.n_topics},
          {"subtopics_per_topic", s.subtopics_per_topic},
          {"vocab_size", s.vocab_size},
          {"year_min", s.year_min},
          {"year_max", s.year_max},
          {"yearly_growth", s.yearly_growth},
          {"general_vocab_fraction", s.general_vocab_fraction},
          {"zipf_exponent", s.zipf_exponent},
          {"title_min_tokens", s.title_min_tokens},
          {"title_max_tokens", s.title_max_tokens},
          {"abstract_min_tokens", s.abstract_min_tokens},
          {"abstract_max_tokens", s.abstract_max_tokens},
          {"title_stopword_prob", s.title_stopword_prob},
          {"abstract_stopword_prob", s.abstract_stopword_prob},
          {"title_general_prob", s.title_general_prob},
          {"abstract_general_prob", s.abstract_general_prob},
          {"inflection_prob", s.inflection_prob},
          {"synonyms_per_word", s.synonyms_per_word},
          {"spelling_mix_prob", s.spelling_mix_prob},
          {"subtopic_vocab_prob", s.subtopic_vocab_prob},
          {"focus_words", s.focus_words},
          {"focus_prob", s.focus_prob},
          {"subtopic_affinity_prob", s.subtopic_affinity_prob},
          {"secondary_topic_prob", s.secondary_topic_prob},
          {"secondary_topic_weight", s.secondary_topic_weight},
          {"affiliation_topic_prob", s.affiliation_topic_prob},
          {"affiliation_missing_prob", s.affiliation_missing_prob},
          {"same_affiliation_coauthor_prob", s.same_affiliation_coauthor_prob},
          {"initial_author_fraction", s.initial_author_fraction},
          {"productivity_sigma", s.productivity_sigma},
          {"venue_topic_prob", s.venue_topic_prob},
          {"no_venue_prob", s.no_venue_prob},
          {"mean_references", s.mean_references},
          {"citation_recency", s.citation_recency},
          {"cite_own_team", s.cite_own_team},
          {"cite_affiliation", s.cite_affiliation},
          {"cite_venue", s.cite_venue},
          {"cite_random", s.cite_random},
          {"cite_subtopic", s.cite_subtopic},
          {"topical_candidates", s.topical_candidates},
          {"social_candidates", s.social_candidates}}},
        {"split",
         {{"cutoff_fraction", 0.8}, {"cutoff_year", nullptr}, {"max_validation_queries", 500},
          {"max_test_queries", 1000}}},
        {"qrels", {{"mode", "citations"}, {"depth", 100}}},
        {"bm25", {{"k1", 0.9}, {"b", 0.4}, {"depth", 100}}},
        {"encoder", {{"dim", 128}, {"buckets", 65536}}},
        {"dense_train",
         {{"epochs", 3},
          {"lr", 1e-2},
          {"batch_size", 128},
          {"margin", 1.0},
          {"weight_decay", 0.01},
          {"max_pairs_per_query", 0},
          {"_note", "full-scale transformer fine-tuning used 10 epochs, lr 5e-5, batch 256"}}},
        {"kg", {{"include_venue", true}, {"include_affiliation", true}, {"include_self_citations", false}}},
        {"kg_train",
         {{"margin", 1.0},
          {"lr", 1e-3},
          {"weight_decay", 0.01},
          {"epochs", 50},
          {"batch_size", 4096},
          {"negatives", 1},
          {"soft_weight", 0.25},
          {"soft_epsilon", 1e-3},
          {"ablation_model", "transh"},
          {"_note", "full scale: 100 epochs, batch 16384"}}},
        {"user", {{"aggregation", "max"}}},
        {"pagerank", {{"alpha", 0.85}, {"tol", 1e-8}, {"max_iter", 100}}},
        {"fusion", {{"lambda_step", 0.05}, {"metric", "map@100"}}},
        {"eval", {{"map_depth", 100}, {"mrr_depth", 10}, {"ndcg_depth", 10}, {"permutations", 10000}}},
    };
}

namespace {

void reject_unknown(Json const &value, Json const &schema, std::string const &path)
{
    if (!value.is_object() || !schema.is_object()) {
        return;
    }
    for (auto const &[key, child] : value.items()) {
        auto it = schema.find(key);
        if (it == schema.end()) {
            throw ConfigError("unknown config key '" + path + key + "'");
        }
        if (it->is_object()) {
            if (!child.is_object()) {
                throw ConfigError("config key '" + path + key + "' must be a section");
            }
            reject_unknown(child, *it, path + key + ".");
        }
    }
}

template <typename T>
T get(Json const &j, char const *section, char const *key)
{
    try {
        return j.at(section).at(key).get<T>();
    } catch (nlohmann::json::exception const &e) {
        throw ConfigError(std::string("config ") + section + "." + key + ": " + e.what());
    }
}

void apply_override(Json &json, std::string const &assignment)
{
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + assignment + "' is not key.path=value");
    }
    auto key = assignment.substr(0, eq);
    auto text = assignment.substr(eq + 1);
    Json value = Json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        value = text;
    }
    Json *node = &json;
    std::size_t start = 0;
    while (true) {
        auto dot = key.find('.', start);
        auto part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (dot == std::string::npos) {
            (*node)[part] = value;
            break;
        }
        node = &(*node)[part];
        start = dot + 1;
    }
}

} // namespace

PipelineConfig from_json(Json json)
{
    reject_unknown(json, default_config_json(), "");
    PipelineConfig c;
    c.workdir = get<std::string>(json, "paths", "workdir");
    c.corpus_path = get<std::string>(json, "paths", "corpus");
    c.authors_path = get<std::string>(json, "paths", "authors");
    try {
        c.seed = json.at("seed").get<std::uint64_t>();
        c.threads = json.at("threads").get<unsigned>();
    } catch (nlohmann::json::exception const &e) {
        throw ConfigError(std::string("config seed/threads: ") + e.what());
    }
    if (c.threads == 0) {
        throw ConfigError("threads must be at least 1");
    }

    auto &s = c.synth;
    auto synth = [&](char const *key, auto &field) { field = get<std::decay_t<decltype(field)>>(json, "synth", key); };
    synth("n_docs", s.n_docs);
    synth("n_authors", s.n_authors);
    synth("n_venues", s.n_venues);
    synth("n_affiliations", s.n_affiliations);
    synth("n_topics", s.n_topics);
    synth("subtopics_per_topic", s.subtopics_per_topic);
    synth("vocab_size", s.vocab_size);
    synth("year_min", s.year_min);
    synth("year_max", s.year_max);
    synth("yearly_growth", s.yearly_growth);
    synth("general_vocab_fraction", s.general_vocab_fraction);
    synth("zipf_exponent", s.zipf_exponent);
    synth("title_min_tokens", s.title_min_tokens);
    synth("title_max_tokens", s.title_max_tokens);
    synth("abstract_min_tokens", s.abstract_min_tokens);
    synth("abstract_max_tokens", s.abstract_max_tokens);
    synth("title_stopword_prob", s.title_stopword_prob);
    synth("abstract_stopword_prob", s.abstract_stopword_prob);
    synth("title_general_prob", s.title_general_prob);
    synth("abstract_general_prob", s.abstract_general_prob);
    synth("inflection_prob", s.inflection_prob);
    synth("synonyms_per_word", s.synonyms_per_word);
    synth("spelling_mix_prob", s.spelling_mix_prob);
    synth("subtopic_vocab_prob", s.subtopic_vocab_prob);
    synth("focus_words", s.focus_words);
    synth("focus_prob", s.focus_prob);
    synth("subtopic_affinity_prob", s.subtopic_affinity_prob);
    synth("secondary_topic_prob", s.secondary_topic_prob);
    synth("secondary_topic_weight", s.secondary_topic_weight);
    synth("affiliation_topic_prob", s.affiliation_topic_prob);
    synth("affiliation_missing_prob", s.affiliation_missing_prob);
    synth("same_affiliation_coauthor_prob", s.same_affiliation_coauthor_prob);
    synth("initial_author_fraction", s.initial_author_fraction);
    synth("productivity_sigma", s.productivity_sigma);
    synth("venue_topic_prob", s.venue_topic_prob);
    synth("no_venue_prob", s.no_venue_prob);
    synth("mean_references", s.mean_references);
    synth("citation_recency", s.citation_recency);
    synth("cite_own_team", s.cite_own_team);
    synth("cite_affiliation", s.cite_affiliation);
    synth("cite_venue", s.cite_venue);
    synth("cite_random", s.cite_random);
    synth("cite_subtopic", s.cite_subtopic);
    synth("topical_candidates", s.topical_candidates);
    synth("social_candidates", s.social_candidates);
    s.validate();

    c.cutoff_fraction = get<double>(json, "split", "cutoff_fraction");
    if (!(c.cutoff_fraction > 0.0 && c.cutoff_fraction < 1.0)) {
        throw ConfigError("split.cutoff_fraction must lie in (0, 1)");
    }
    if (!json["split"]["cutoff_year"].is_null()) {
        c.cutoff_year = get<int>(json, "split", "cutoff_year");
    }
    c.sampling.max_validation_queries = get<std::size_t>(json, "split", "max_validation_queries");
    c.sampling.max_test_queries = get<std::size_t>(json, "split", "max_test_queries");

    auto mode = get<std::string>(json, "qrels", "mode");
    if (mode == "citations") {
        c.qrels.mode = corpus::QrelMode::Citations;
    } else if (mode == "union") {
        c.qrels.mode = corpus::QrelMode::Union;
    } else {
        throw ConfigError("qrels.mode must be 'citations' or 'union'");
    }
    c.qrels.depth = get<std::size_t>(json, "qrels", "depth");

    c.bm25.k1 = get<double>(json, "bm25", "k1");
    c.bm25.b = get<double>(json, "bm25", "b");
    c.bm25.validate();
    c.qrels.bm25 = c.bm25;
    c.retrieval_depth = get<std::size_t>(json, "bm25", "depth");
    if (c.retrieval_depth == 0) {
        throw ConfigError("bm25.depth must be positive");
    }

    c.encoder.dim = get<std::uint32_t>(json, "encoder", "dim");
    c.encoder.buckets = get<std::uint32_t>(json, "encoder", "buckets");
    if (c.encoder.dim == 0 || c.encoder.buckets == 0) {
        throw ConfigError("encoder.dim and encoder.buckets must be positive");
    }
    c.dense_train.epochs = get<std::uint32_t>(json, "dense_train", "epochs");
    c.dense_train.lr = get<double>(json, "dense_train", "lr");
    c.dense_train.batch_size = get<std::size_t>(json, "dense_train", "batch_size");
    c.dense_train.margin = get<double>(json, "dense_train", "margin");
    c.dense_train.weight_decay = get<double>(json, "dense_train", "weight_decay");
    c.dense_train.seed = c.seed + 3;
    c.dense_train.threads = c.threads;
    c.dense_train.validate();
    c.max_pairs_per_query = get<std::size_t>(json, "dense_train", "max_pairs_per_query");

    c.kg.include_venue = get<bool>(json, "kg", "include_venue");
    c.kg.include_affiliation = get<bool>(json, "kg", "include_affiliation");
    c.kg.include_self_citations = get<bool>(json, "kg", "include_self_citations");

    c.kg_train.margin = get<double>(json, "kg_train", "margin");
    c.kg_train.lr = get<double>(json, "kg_train", "lr");
    c.kg_train.weight_decay = get<double>(json, "kg_train", "weight_decay");
    c.kg_train.epochs = get<std::uint32_t>(json, "kg_train", "epochs");
    c.kg_train.batch_size = get<std::size_t>(json, "kg_train", "batch_size");
    c.kg_train.negatives = get<std::uint32_t>(json, "kg_train", "negatives");
    c.kg_train.soft_weight = get<double>(json, "kg_train", "soft_weight");
    c.kg_train.soft_epsilon = get<double>(json, "kg_train", "soft_epsilon");
    c.kg_train.threads = c.threads;
    c.kg_train.validate();
    auto ablation = kg::parse_model(get<std::string>(json, "kg_train", "ablation_model"));
    if (!ablation) {
        throw ConfigError("kg_train.ablation_model must be 'transe' or 'transh'");
    }
    c.ablation_model = *ablation;

    auto agg = user::parse_aggregation(get<std::string>(json, "user", "aggregation"));
    if (!agg) {
        throw ConfigError("user.aggregation must be 'max' or 'mean'");
    }
    c.aggregation = *agg;

    c.pagerank.alpha = get<double>(json, "pagerank", "alpha");
    c.pagerank.tol = get<double>(json, "pagerank", "tol");
    c.pagerank.max_iter = get<std::size_t>(json, "pagerank", "max_iter");
    c.pagerank.validate();

    c.lambda_step = get<double>(json, "fusion", "lambda_step");
    if (get<std::string>(json, "fusion", "metric") != "map@100") {
        throw ConfigError("fusion.metric: only 'map@100' is supported");
    }
    c.depths.map = get<std::size_t>(json, "eval", "map_depth");
    c.depths.mrr = get<std::size_t>(json, "eval", "mrr_depth");
    c.depths.ndcg = get<std::size_t>(json, "eval", "ndcg_depth");
    c.permutations = get<std::size_t>(json, "eval", "permutations");
    if (c.permutations == 0) {
        throw ConfigError("eval.permutations must be positive");
    }

    c.json = std::move(json);
    return c;
}

PipelineConfig load_config(std::optional<std::filesystem::path> const &file, std::vector<std::string> const &overrides)
{
    Json json = default_config_json();
    if (file) {
        std::ifstream in(*file);
        if (!in) {
            throw ConfigError("cannot read config file " + file->string());
        }
        Json patch = Json::parse(in, nullptr, false, true);
        if (patch.is_discarded() || !patch.is_object()) {
            throw ConfigError("config file " + file->string() + " is not a JSON object");
        }
        reject_unknown(patch, json, "");
        json.merge_patch(patch);
    }
    for (auto const &o : overrides) {
        apply_override(json, o);
    }
    return from_json(std::move(json));
}

std::string PipelineConfig::section_hash(std::initializer_list<std::string_view> sections) const
{
    Json subset;
    subset["seed"] = json.at("seed");
    for (auto s : sections) {
        std::string key(s);
        subset[key] = json.at(key);
    }
    return sha256_hex(subset.dump());
}

} // namespace park::pipeline
