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

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "park/common/error.hpp"
#include "park/pipeline/config.hpp"

namespace park::pipeline {

/// A predecessor artifact was produced under a different configuration.
class StaleArtifact : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

enum class Stage { Corpus, Index, TrainDense, Embed, BuildKg, TrainKg, Score, Tune, Eval, Ablate };

/// Subcommand that produces the stage's artifacts (the corpus stage names `synth`).
[[nodiscard]] std::string_view command_of(Stage stage) noexcept;
/// Workdir subdirectory of the stage.
[[nodiscard]] std::string_view directory_of(Stage stage) noexcept;
/// Hash of the config sections the stage's output depends on (its own and upstream).
[[nodiscard]] std::string stage_hash(PipelineConfig const &config, Stage stage);

class Workdir {
  public:
    explicit Workdir(std::filesystem::path root) : m_root(std::move(root)) {}

    [[nodiscard]] std::filesystem::path const &root() const noexcept { return m_root; }
    [[nodiscard]] std::filesystem::path dir(Stage stage) const { return m_root / directory_of(stage); }
    [[nodiscard]] std::filesystem::path file(Stage stage, std::string const &name) const { return dir(stage) / name; }
    /// Creates the stage directory and returns it.
    std::filesystem::path prepare(Stage stage) const;

  private:
    std::filesystem::path m_root;
};

/// Throws MissingArtifact ("run `x` first") when the stage's manifest is absent and
/// StaleArtifact when it was written under a different config, unless `force`.
void require(Workdir const &workdir, PipelineConfig const &config, Stage stage, bool force);

/// Records a finished stage: config hash, effective config, SHA-256 of every input and
/// output file (paths relative to the workdir) and the wall time.
void write_manifest(Workdir const &workdir, PipelineConfig const &config, Stage stage,
                    std::vector<std::filesystem::path> const &inputs, std::vector<std::filesystem::path> const &outputs,
                    std::chrono::steady_clock::duration elapsed);

} // namespace park::pipeline
