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

#include <span>
#include <string>
#include <vector>

#include "park/corpus/types.hpp"
#include "park/fusion/metrics.hpp"
#include "park/fusion/run.hpp"

namespace park::fusion {

struct Lambdas {
    double bm25 = 1.0;
    double dense = 0.0;
    double user = 0.0;

    /// Throws ContractViolation unless all are >= 0 and they sum to 1 within 1e-9.
    void validate() const;
    friend bool operator==(Lambdas const &, Lambdas const &) = default;
};

/// First-stage candidates of one query with their raw channel scores.
struct CandidateList {
    std::string query_id;
    std::vector<std::string> doc_ids;
    std::vector<double> bm25;
    std::vector<double> dense;
    std::vector<double> user;

    [[nodiscard]] std::size_t size() const noexcept { return doc_ids.size(); }
};

/// (s - min) / (max - min); all zeros when max == min.
[[nodiscard]] std::vector<double> minmax_normalize(std::span<double const> scores);

/// Channel-wise normalized copy of a candidate list.
[[nodiscard]] CandidateList normalized(CandidateList const &list);

/// lambda . (bm25, dense, user) per candidate of an already normalized list.
[[nodiscard]] std::vector<double> fuse(Lambdas const &lambdas, CandidateList const &normalized_list);

struct Ranked {
    std::string doc_id;
    double score = 0.0;
};

/// Fused ranking of a normalized list: score descending, ties by ascending doc id.
[[nodiscard]] std::vector<Ranked> rank(Lambdas const &lambdas, CandidateList const &normalized_list);

/// Ranks every (normalized) list into a run.
[[nodiscard]] Run fused_run(Lambdas const &lambdas, std::span<CandidateList const> normalized_lists,
                            std::string tag);

/// Simplex lattice {i*step, j*step, (n-i-j)*step}, i outer, j inner. Throws ConfigError
/// unless 1/step is an integer.
[[nodiscard]] std::vector<Lambdas> lambda_grid(double step);

struct GridPoint {
    Lambdas lambdas;
    double map = 0.0;
};

struct TuneResult {
    Lambdas best;
    double best_map = 0.0;
    std::vector<GridPoint> grid;
};

/// Exhaustive grid search maximizing mean MAP@100 over judged validation queries. Ties go
/// to the larger dense weight, then the larger BM25 weight. `fixed_user_zero` restricts
/// the grid to lambda_user = 0. Throws DataError when no list has judgments.
[[nodiscard]] TuneResult tune_lambdas(std::span<CandidateList const> normalized_lists,
                                      corpus::QrelSet const &qrels, double step = 0.05,
                                      bool fixed_user_zero = false);

[[nodiscard]] std::string format_grid(TuneResult const &result);

} // namespace park::fusion
