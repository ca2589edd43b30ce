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

#include "park/pipeline/workdir.hpp"

#include <array>
#include <fstream>

#include "park/common/hash.hpp"

namespace park::pipeline {

namespace {

struct StageInfo {
    std::string_view command;
    std::string_view directory;
    std::vector<std::string_view> sections;
};

StageInfo const &info(Stage stage)
{
    static std::array<StageInfo, 10> const table{{
        {"synth", "corpus", {"synth"}},
        {"index", "index", {"synth", "split", "qrels", "bm25"}},
        {"train-dense", "dense", {"synth", "split", "qrels", "bm25", "encoder", "dense_train"}},
        {"embed", "embed", {"synth", "split", "qrels", "bm25", "encoder", "dense_train"}},
        {"build-kg", "kg", {"synth", "split", "qrels", "bm25", "kg"}},
        {"train-kg", "kgemb", {"synth", "split", "qrels", "bm25", "kg", "encoder", "dense_train", "kg_train"}},
        {"score",
         "score",
         {"synth", "split", "qrels", "bm25", "kg", "encoder", "dense_train", "kg_train", "user", "pagerank"}},
        {"tune",
         "tune",
         {"synth", "split", "qrels", "bm25", "kg", "encoder", "dense_train", "kg_train", "user", "pagerank", "fusion"}},
        {"eval",
         "eval",
         {"synth", "split", "qrels", "bm25", "kg", "encoder", "dense_train", "kg_train", "user", "pagerank", "fusion",
          "eval"}},
        {"ablate",
         "ablate",
         {"synth", "split", "qrels", "bm25", "kg", "encoder", "dense_train", "kg_train", "user", "pagerank", "fusion",
          "eval"}},
    }};
    return table[static_cast<std::size_t>(stage)];
}

} // namespace

std::string_view command_of(Stage stage) noexcept { return info(stage).command; }
std::string_view directory_of(Stage stage) noexcept { return info(stage).directory; }

std::string stage_hash(PipelineConfig const &config, Stage stage)
{
    nlohmann::ordered_json subset;
    subset["seed"] = config.json.at("seed");
    for (auto s : info(stage).sections) {
        std::string key(s);
        subset[key] = config.json.at(key);
    }
    // An ingested corpus replaces the synthetic one, so its location is part of the identity.
    subset["corpus"] = config.corpus_path.string();
    subset["authors"] = config.authors_path.string();
    return sha256_hex(subset.dump());
}

std::filesystem::path Workdir::prepare(Stage stage) const
{
    auto d = dir(stage);
    std::filesystem::create_directories(d);
    return d;
}

void require(Workdir const &workdir, PipelineConfig const &config, Stage stage, bool force)
{
    auto manifest = workdir.file(stage, "manifest.json");
    std::ifstream in(manifest);
    if (!in) {
        auto cmd = stage == Stage::Corpus ? std::string("synth` or `ingest") : std::string(command_of(stage));
        throw MissingArtifact("missing " + std::string(directory_of(stage)) + " artifacts in "
                              + workdir.root().string() + ": run `" + cmd + "` first");
    }
    auto json = nlohmann::json::parse(in, nullptr, false);
    if (json.is_discarded() || !json.contains("config_hash")) {
        throw DataError("corrupt manifest " + manifest.string());
    }
    if (!force && json["config_hash"].get<std::string>() != stage_hash(config, stage)) {
        throw StaleArtifact(std::string(directory_of(stage)) + " artifacts were produced with a different config; rerun `"
                            + std::string(command_of(stage)) + "` or pass --force");
    }
}

void write_manifest(Workdir const &workdir, PipelineConfig const &config, Stage stage,
                    std::vector<std::filesystem::path> const &inputs, std::vector<std::filesystem::path> const &outputs,
                    std::chrono::steady_clock::duration elapsed)
{
    nlohmann::ordered_json m;
    m["stage"] = command_of(stage);
    m["config_hash"] = stage_hash(config, stage);
    auto hashes = [&](std::vector<std::filesystem::path> const &files) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (auto const &f : files) {
            out[std::filesystem::relative(f, workdir.root()).generic_string()] = sha256_file(f);
        }
        return out;
    };
    m["inputs"] = hashes(inputs);
    m["outputs"] = hashes(outputs);
    m["duration_seconds"] = std::chrono::duration<double>(elapsed).count();
    m["config"] = config.json;
    auto path = workdir.prepare(stage) / "manifest.json";
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << m.dump(2) << '\n';
}

} // namespace park::pipeline
