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

#include "park/corpus/types.hpp"
#include "park/lexical/bm25.hpp"
#include "park/lexical/pools.hpp"

namespace park::corpus {

enum class QrelMode {
    /// Documents cited by the generating paper.
    Citations,
    /// Citations plus the BM25 top-`depth` hits of the exact (unprocessed) title.
    Union,
};

struct QrelOptions {
    QrelMode mode = QrelMode::Citations;
    std::size_t depth = 100;
    lexical::BM25Params bm25{};
};

struct QrelReport {
    std::size_t queries = 0;
    std::size_t dropped = 0;
};

/// Relevance labels for queries generated from corpus titles. Cited documents count only if
/// they lie in the query's retrieval pool (published strictly before the query year). The
/// generating paper is never relevant to itself. Queries left without relevant documents
/// are dropped and counted.
[[nodiscard]] QrelSet build_qrels(Corpus const &corpus, lexical::RetrievalPools &pools,
                                  std::span<Query const> queries, QrelOptions const &options,
                                  QrelReport *report = nullptr);

} // namespace park::corpus
