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

#include "park/corpus/types.hpp"

#include "park/common/error.hpp"

namespace park::corpus {

Corpus::Corpus(std::vector<Document> documents) : m_documents(std::move(documents))
{
    m_positions.reserve(m_documents.size());
    for (std::size_t i = 0; i < m_documents.size(); ++i) {
        auto [it, inserted] = m_positions.emplace(m_documents[i].doc_id, i);
        if (!inserted) {
            throw DataError("duplicate doc_id '" + m_documents[i].doc_id + "'");
        }
    }
}

std::optional<std::size_t> Corpus::find(std::string const &doc_id) const
{
    if (auto it = m_positions.find(doc_id); it != m_positions.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::unordered_map<std::string, Author> index_authors(std::vector<Author> const &authors)
{
    std::unordered_map<std::string, Author> by_id;
    by_id.reserve(authors.size());
    for (auto const &a : authors) {
        by_id.emplace(a.author_id, a);
    }
    return by_id;
}

} // namespace park::corpus
