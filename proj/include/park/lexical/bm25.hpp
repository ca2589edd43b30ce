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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "park/lexical/index.hpp"

namespace park::lexical {

struct BM25Params {
    double k1 = 0.9;
    double b = 0.4;

    /// Throws ConfigError unless k1 > 0 and 0 <= b <= 1.
    void validate() const;
};

/// Collection statistics entering BM25 besides per-term df.
struct CollectionStats {
    double doc_count = 0.0;
    double avg_doc_len = 0.0;
};

[[nodiscard]] inline CollectionStats stats_of(InvertedIndex const &index)
{
    return {static_cast<double>(index.doc_count()), index.avg_doc_len()};
}

/// ln(1 + (N - df + 0.5) / (df + 0.5)); never negative.
[[nodiscard]] double bm25_idf(double df, double doc_count);

/// Contribution of one query term occurrence.
[[nodiscard]] double bm25_term_weight(double tf, double df, double doc_len, CollectionStats const &stats,
                                      BM25Params const &params);

/// Sum over query tokens (repeats count). `stats` overrides the index's N and avg_doc_len.
[[nodiscard]] double bm25_score(InvertedIndex const &index, std::span<std::string const> query,
                                std::uint32_t ordinal, BM25Params const &params = {},
                                std::optional<CollectionStats> stats = std::nullopt);

struct ScoredDoc {
    std::uint32_t doc = 0;
    double score = 0.0;

    friend bool operator==(ScoredDoc const &, ScoredDoc const &) = default;
};

/// Top-k by descending score, ties by ascending ordinal. Only positive scores are returned.
[[nodiscard]] std::vector<ScoredDoc> retrieve_topk(InvertedIndex const &index, std::span<std::string const> query,
                                                   std::size_t k, BM25Params const &params = {});

} // namespace park::lexical
