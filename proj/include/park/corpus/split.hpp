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
#include <vector>

#include "park/corpus/types.hpp"

namespace park::corpus {

struct SplitSpec {
    int cutoff_year = 0;
};

/// How many queries to draw for validation and test.
struct QuerySampling {
    /// Validation queries come from the last pre-cutoff year; capped at this many.
    std::size_t max_validation_queries = 500;
    /// Test queries come from documents at or after the cutoff; 0 keeps them all.
    std::size_t max_test_queries = 1000;
};

/// Chronological partition of a corpus.
struct Split {
    int cutoff_year = 0;
    /// Positions of documents published before the cutoff.
    std::vector<std::size_t> train_docs;
    /// Pre-cutoff documents whose titles became validation queries. They are held out of
    /// the knowledge graph, the user profiles and dense training.
    std::vector<std::size_t> validation_sources;
    /// train_docs minus validation_sources: the documents that build user models.
    std::vector<std::size_t> profile_docs;
    std::vector<Query> train_queries;
    std::vector<Query> validation_queries;
    std::vector<Query> test_queries;
    /// Titles that produced an empty query (all stopwords).
    std::size_t empty_queries_dropped = 0;
};

/// Smallest year such that the share of documents published before it reaches `fraction`.
[[nodiscard]] int percentile_cutoff(Corpus const &corpus, double fraction);

/// Throws DataError when either side of the cutoff is empty.
[[nodiscard]] Split chronological_split(Corpus const &corpus, SplitSpec const &spec,
                                        QuerySampling const &sampling = {}, std::uint64_t seed = 0);

} // namespace park::corpus
