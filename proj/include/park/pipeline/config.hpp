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

#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "park/corpus/qrels.hpp"
#include "park/corpus/split.hpp"
#include "park/corpus/synth.hpp"
#include "park/dense/encoder.hpp"
#include "park/dense/trainer.hpp"
#include "park/graph/citation.hpp"
#include "park/fusion/metrics.hpp"
#include "park/kg/embed.hpp"
#include "park/lexical/bm25.hpp"
#include "park/user/models.hpp"

namespace park::pipeline {

/// Effective pipeline configuration. The JSON file has one section per stage; every key
/// must exist in the built-in defaults, so typos fail loudly.
struct PipelineConfig {
    nlohmann::ordered_json json;

    std::filesystem::path workdir;
    /// External corpus for `ingest`; empty means synthetic.
    std::filesystem::path corpus_path;
    std::filesystem::path authors_path;
    std::uint64_t seed = 7;
    unsigned threads = 1;

    corpus::SynthConfig synth;
    double cutoff_fraction = 0.8;
    std::optional<int> cutoff_year;
    corpus::QuerySampling sampling;
    corpus::QrelOptions qrels;

    lexical::BM25Params bm25;
    std::size_t retrieval_depth = 100;

    dense::EncoderConfig encoder;
    dense::DenseTrainConfig dense_train;
    /// Cap on (query, cited doc) training pairs per training query; 0 keeps all.
    std::size_t max_pairs_per_query = 0;

    kg::KGConfig kg;
    kg::KGTrainConfig kg_train;
    kg::KGModel ablation_model = kg::KGModel::TransH;

    user::Aggregation aggregation = user::Aggregation::Max;
    graph::PageRankParams pagerank;

    double lambda_step = 0.05;
    fusion::MetricDepths depths;
    std::size_t permutations = 10000;

    /// SHA-256 over the listed top-level sections (plus seed), for staleness checks.
    [[nodiscard]] std::string section_hash(std::initializer_list<std::string_view> sections) const;
};

[[nodiscard]] nlohmann::ordered_json default_config_json();

/// Defaults, patched by the file (if any), then by `key.path=value` overrides. Values that
/// parse as JSON are taken as such, anything else as a string. Throws ConfigError.
[[nodiscard]] PipelineConfig load_config(std::optional<std::filesystem::path> const &file,
                                         std::vector<std::string> const &overrides = {});

/// Re-reads typed fields after edits to `config.json`.
[[nodiscard]] PipelineConfig from_json(nlohmann::ordered_json json);

} // namespace park::pipeline
