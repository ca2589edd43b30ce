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

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "park/common/error.hpp"
#include "park/common/log.hpp"
#include "park/pipeline/config.hpp"
#include "park/pipeline/stages.hpp"

namespace {

using StageFn = void (*)(park::pipeline::PipelineConfig const &, park::pipeline::RunOptions const &);

struct Command {
    char const *name;
    char const *help;
    StageFn fn;
};

constexpr Command kCommands[] = {
    {"synth", "generate the synthetic corpus", park::pipeline::synth},
    {"ingest", "import a JSON-lines corpus (paths.corpus, paths.authors)", park::pipeline::ingest},
    {"index", "chronological split, queries, qrels and BM25 retrieval pools", park::pipeline::index},
    {"train-dense", "train the hashed bag-of-words encoder", park::pipeline::train_dense},
    {"embed", "embed every document with the trained encoder", park::pipeline::embed},
    {"build-kg", "build the academic knowledge graph variants", park::pipeline::build_kg},
    {"train-kg", "train TransE/TransH embeddings over the knowledge graphs", park::pipeline::train_kg},
    {"score", "retrieve candidates and compute every score channel", park::pipeline::score},
    {"tune", "tune fusion weights on the validation queries", park::pipeline::tune},
    {"eval", "write test runs and the metric report", park::pipeline::eval},
    {"ablate", "knowledge-graph ablation table", park::pipeline::ablate},
    {"end-to-end", "run every stage in order", park::pipeline::end_to_end},
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Personalized academic retrieval pipeline"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_file;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::string> workdir;
    std::vector<std::string> overrides;
    bool quiet = false;
    bool force = false;
    app.add_option("-c,--config", config_file, "JSON config file (missing keys take defaults)");
    app.add_option("--seed", seed, "global seed");
    app.add_option("--threads", threads, "worker threads; 1 runs every stage deterministically");
    app.add_option("-w,--workdir", workdir, "artifact directory");
    app.add_option("--set", overrides, "override a config value, e.g. --set kg_train.epochs=10");
    app.add_flag("-q,--quiet", quiet, "suppress progress output");
    app.add_flag("--force", force, "accept upstream artifacts produced under a different config");

    std::map<CLI::App *, StageFn> stages;
    for (auto const &c : kCommands) {
        stages[app.add_subcommand(c.name, c.help)] = c.fn;
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        park::log::set_quiet(quiet);
        if (seed) {
            overrides.push_back("seed=" + std::to_string(*seed));
        }
        if (threads) {
            overrides.push_back("threads=" + std::to_string(*threads));
        }
        if (workdir) {
            overrides.push_back("paths.workdir=\"" + *workdir + "\"");
        }
        auto config = park::pipeline::load_config(config_file, overrides);
        for (auto *sub : app.get_subcommands()) {
            stages.at(sub)(config, {force});
        }
    } catch (park::ConfigError const &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (park::MissingArtifact const &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (park::DataError const &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (std::exception const &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
