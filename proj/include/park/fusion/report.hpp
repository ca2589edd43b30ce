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

#include <optional>
#include <span>
#include <string>

#include "park/fusion/fusion.hpp"
#include "park/fusion/metrics.hpp"

namespace park::fusion {

struct SystemResult {
    std::string name;
    Evaluation eval;
    std::optional<Lambdas> lambdas;
};

struct Comparison {
    std::string system;
    std::string baseline;
    double p_map = 1.0;
    double p_mrr = 1.0;
    double p_ndcg = 1.0;
};

/// Pairs two systems' per-query columns (same judged queries, same order) and tests
/// each metric.
[[nodiscard]] Comparison compare(SystemResult const &system, SystemResult const &baseline,
                                 std::size_t permutations, std::uint64_t seed);

/// Aligned text table: one row per system, then the significance comparisons.
[[nodiscard]] std::string format_report(std::span<SystemResult const> systems, std::span<Comparison const> comparisons);

/// Machine-readable `key=value` lines.
[[nodiscard]] std::string format_summary(std::span<SystemResult const> systems,
                                         std::span<Comparison const> comparisons);

/// Ablation table: one row per KG configuration in the given order.
[[nodiscard]] std::string format_ablation(std::span<SystemResult const> rows, std::string const &dataset);

} // namespace park::fusion
