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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace park::corpus {

struct Document {
    std::string doc_id;
    std::string title;
    std::string abstract;
    std::vector<std::string> author_ids;
    std::optional<std::string> venue_id;
    int year = 0;
    std::vector<std::string> references;

    friend bool operator==(Document const &, Document const &) = default;
};

struct Author {
    std::string author_id;
    std::optional<std::string> affiliation_id;

    friend bool operator==(Author const &, Author const &) = default;
};

/// Ordered document collection. A document's position in the collection is its ordinal.
class Corpus {
  public:
    Corpus() = default;
    /// Throws DataError on a duplicate doc_id.
    explicit Corpus(std::vector<Document> documents);

    [[nodiscard]] std::size_t size() const noexcept { return m_documents.size(); }
    [[nodiscard]] bool empty() const noexcept { return m_documents.empty(); }
    [[nodiscard]] std::vector<Document> const &documents() const noexcept { return m_documents; }
    [[nodiscard]] Document const &operator[](std::size_t pos) const { return m_documents.at(pos); }
    [[nodiscard]] std::optional<std::size_t> find(std::string const &doc_id) const;

    friend bool operator==(Corpus const &a, Corpus const &b) { return a.m_documents == b.m_documents; }

  private:
    std::vector<Document> m_documents;
    std::unordered_map<std::string, std::size_t> m_positions;
};

struct Query {
    std::string query_id;
    std::string user_id;
    std::string text;
    int year = 0;
    std::optional<std::string> source_doc_id;

    friend bool operator==(Query const &, Query const &) = default;
};

/// query_id -> relevant doc_ids (binary relevance).
using QrelSet = std::map<std::string, std::set<std::string>>;

/// Author lookup keyed by author_id.
[[nodiscard]] std::unordered_map<std::string, Author> index_authors(std::vector<Author> const &authors);

} // namespace park::corpus
