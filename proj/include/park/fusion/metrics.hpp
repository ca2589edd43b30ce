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

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "park/corpus/types.hpp"
#include "park/fusion/run.hpp"

namespace park::fusion {

using Relevant = std::set<std::string>;

/// (1 / min(|rel|, k)) * sum of precision@i over relevant positions i <= k.
[[nodiscard]] double map_at_k(std::span<std::string const> ranking, Relevant const &relevant, std::size_t k = 100);
/// 1 / rank of the first relevant document within k, else 0.
[[nodiscard]] double mrr_at_k(std::span<std::string const> ranking, Relevant const &relevant, std::size_t k = 10);
/// Binary-gain NDCG with discount 1 / log2(rank + 1).
[[nodiscard]] double ndcg_at_k(std::span<std::string const> ranking, Relevant const &relevant, std::size_t k = 10);

struct MetricDepths {
    std::size_t map = 100;
    std::size_t mrr = 10;
    std::size_t ndcg = 10;
};

struct QueryMetrics {
    std::string query_id;
    double map = 0.0;
    double mrr = 0.0;
    double ndcg = 0.0;
};

struct Evaluation {
    /// Ordered by query id; only queries with a nonempty qrel set.
    std::vector<QueryMetrics> per_query;
    double map = 0.0;
    double mrr = 0.0;
    double ndcg = 0.0;
    /// Run queries without relevance judgments, left out of the means.
    std::size_t excluded = 0;
};

/// Every judged query counts; a judged query missing from the run scores 0.
[[nodiscard]] Evaluation evaluate(Run const &run, corpus::QrelSet const &qrels, MetricDepths const &depths = {});

/// One metric column of an evaluation, for paired tests.
[[nodiscard]] std::vector<double> column(Evaluation const &e, double QueryMetrics::*metric);

} // namespace park::fusion
