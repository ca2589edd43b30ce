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
#include <vector>

#include "park/corpus/types.hpp"

namespace park::corpus {

struct LoadReport {
    std::size_t documents = 0;
    std::size_t self_references_dropped = 0;
    std::size_t dangling_references_dropped = 0;
};

/// Reads one JSON document record per line. Self-references and references to unknown
/// doc_ids are dropped and counted. Throws ParseError (with line) or DataError (duplicates).
[[nodiscard]] Corpus load_corpus(std::filesystem::path const &path, LoadReport *report = nullptr);
void save_corpus(Corpus const &corpus, std::filesystem::path const &path);

/// One JSON author record per line. A list-valued affiliation_id keeps its first entry.
[[nodiscard]] std::vector<Author> load_authors(std::filesystem::path const &path);
void save_authors(std::vector<Author> const &authors, std::filesystem::path const &path);

/// TREC qrels: `query_id 0 doc_id relevance`. Only relevance 1 entries are kept on read.
void write_qrels(QrelSet const &qrels, std::filesystem::path const &path);
[[nodiscard]] QrelSet read_qrels(std::filesystem::path const &path);

/// Tab-separated: query_id, user_id, year, source_doc_id ("-" when absent), text.
void write_queries(std::vector<Query> const &queries, std::filesystem::path const &path);
[[nodiscard]] std::vector<Query> read_queries(std::filesystem::path const &path);

} // namespace park::corpus
