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

#include <string>
#include <vector>

#include "park/fusion/fusion.hpp"
#include "park/kg/embed.hpp"
#include "park/pipeline/config.hpp"

namespace park::pipeline {

struct RunOptions {
    /// Accept predecessor artifacts produced under a different config.
    bool force = false;
};

/// A knowledge-graph node/relation subset, named "user", "venue", "aff" or "full".
struct KgVariant {
    std::string name;
    kg::KGConfig config;
};

/// The main variant (from the kg section) followed by the ablation variants
/// user, venue, full, without duplicates.
[[nodiscard]] std::vector<KgVariant> kg_variants(PipelineConfig const &config);

struct KgJob {
    KgVariant variant;
    kg::KGModel model;

    /// "<variant>-<model>": the kgemb subdirectory and the candidate channel suffix.
    [[nodiscard]] std::string key() const;
};

/// TransE and TransH on the main variant, then the ablation model on every ablation variant.
[[nodiscard]] std::vector<KgJob> kg_jobs(PipelineConfig const &config);

/// A ranked system of the final report.
struct SystemSpec {
    enum class Fusion { Fixed, TwoChannel, ThreeChannel };

    std::string name;
    /// User channel of the candidate table; empty for BM25-only and BM25+Dense.
    std::string channel;
    Fusion fusion = Fusion::Fixed;
    fusion::Lambdas fixed;
    /// Part of the ablation table rather than the main report.
    bool ablation = false;
};

[[nodiscard]] std::vector<SystemSpec> systems(PipelineConfig const &config);

void synth(PipelineConfig const &config, RunOptions const &options);
void ingest(PipelineConfig const &config, RunOptions const &options);
void index(PipelineConfig const &config, RunOptions const &options);
void train_dense(PipelineConfig const &config, RunOptions const &options);
void embed(PipelineConfig const &config, RunOptions const &options);
void build_kg(PipelineConfig const &config, RunOptions const &options);
void train_kg(PipelineConfig const &config, RunOptions const &options);
void score(PipelineConfig const &config, RunOptions const &options);
void tune(PipelineConfig const &config, RunOptions const &options);
void eval(PipelineConfig const &config, RunOptions const &options);
void ablate(PipelineConfig const &config, RunOptions const &options);
/// Every stage in order; the corpus comes from `ingest` when paths.corpus is set.
void end_to_end(PipelineConfig const &config, RunOptions const &options);

} // namespace park::pipeline
