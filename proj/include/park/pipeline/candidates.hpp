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

#include <filesystem>
#include <string>
#include <vector>

#include "park/fusion/fusion.hpp"

namespace park::pipeline {

struct QueryCandidates {
    std::string query_id;
    std::vector<std::string> doc_ids;
    std::vector<double> bm25;
    std::vector<double> dense;
    /// One column per user channel, aligned with CandidateTable::channels.
    std::vector<std::vector<double>> user;
};

/// First-stage candidates of every query with all raw channel scores.
struct CandidateTable {
    std::vector<std::string> channels;
    std::vector<QueryCandidates> queries;

    /// Throws DataError for an unknown channel.
    [[nodiscard]] std::size_t channel_index(std::string const &name) const;
    /// Lists with the given user channel (or a zero column for an empty name).
    [[nodiscard]] std::vector<fusion::CandidateList> lists(std::string const &channel) const;
};

/// Tab-separated: header `query_id doc_id bm25 dense <channels...>`, one row per
/// candidate in first-stage order, scores with 17 significant digits.
void write_candidates(CandidateTable const &table, std::filesystem::path const &path);
[[nodiscard]] CandidateTable read_candidates(std::filesystem::path const &path);

} // namespace park::pipeline
