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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "park/corpus/types.hpp"
#include "park/dense/encoder.hpp"

namespace park::dense {

struct TrainingPair {
    std::string query;
    std::size_t doc = 0;
};

/// Desk-scale defaults. A fine-tuned transformer would instead use 10 epochs,
/// lr 5e-5 and batch 256.
struct DenseTrainConfig {
    std::uint32_t epochs = 3;
    double lr = 1e-3;
    std::size_t batch_size = 128;
    double margin = 1.0;
    double weight_decay = 0.01;
    std::uint64_t seed = 7;
    /// 1 = deterministic single-threaded mode.
    unsigned threads = 1;

    /// Throws ConfigError (batch_size < 2, non-positive lr or margin).
    void validate() const;
};

struct EpochLog {
    std::uint32_t epoch = 0;
    double mean_loss = 0.0;
    std::size_t batches = 0;
};

/// Triplet-margin training with random in-batch negatives: in every batch each query's
/// negatives are the other pairs' positive documents (the query's own positive document
/// excluded). Parameters move by AdamW steps on the bucket table.
std::vector<EpochLog> train_encoder(HashedBowEncoder &encoder, corpus::Corpus const &corpus,
                                    std::span<TrainingPair const> pairs, DenseTrainConfig const &config,
                                    std::function<void(EpochLog const &)> const &on_epoch = {});

} // namespace park::dense
