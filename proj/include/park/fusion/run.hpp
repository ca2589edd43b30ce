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
#include <map>
#include <string>
#include <vector>

namespace park::fusion {

struct RunEntry {
    std::string doc_id;
    std::size_t rank = 0;
    double score = 0.0;

    friend bool operator==(RunEntry const &, RunEntry const &) = default;
};

/// query_id -> entries in rank order.
struct Run {
    std::string tag = "park";
    std::map<std::string, std::vector<RunEntry>> queries;
};

/// Throws ContractViolation unless ranks are 1..n and scores do not increase with rank.
void check_run(Run const &run);

/// TREC 6-column lines `query_id Q0 doc_id rank score tag`, score with 6 significant digits.
void write_run(Run const &run, std::filesystem::path const &path);
/// Throws ParseError with the line number on malformed input.
[[nodiscard]] Run read_run(std::filesystem::path const &path);

/// Doc ids of one query's entries in rank order.
[[nodiscard]] std::vector<std::string> ranking_of(std::vector<RunEntry> const &entries);

} // namespace park::fusion
