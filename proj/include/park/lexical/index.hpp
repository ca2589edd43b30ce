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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "park/corpus/types.hpp"

namespace park::lexical {

struct Posting {
    std::uint32_t doc = 0;
    std::uint32_t tf = 0;

    friend bool operator==(Posting const &, Posting const &) = default;
};

/// In-memory inverted index over a corpus view. Immutable after build; safe for
/// concurrent readers. Index ordinals follow the order of the view.
class InvertedIndex {
  public:
    /// Indexes title + " " + abstract of each listed corpus position, analyzed with
    /// lexical::analyze. Throws DataError when `positions` is empty.
    static InvertedIndex build(corpus::Corpus const &corpus, std::span<std::size_t const> positions);
    /// Indexes raw texts; position i maps to ordinal i.
    static InvertedIndex from_texts(std::span<std::string const> texts);

    [[nodiscard]] std::uint32_t doc_count() const noexcept { return static_cast<std::uint32_t>(m_doc_lengths.size()); }
    [[nodiscard]] double avg_doc_len() const noexcept { return m_avg_doc_len; }
    [[nodiscard]] std::uint32_t doc_length(std::uint32_t ordinal) const { return m_doc_lengths.at(ordinal); }
    /// Corpus position of an index ordinal.
    [[nodiscard]] std::size_t position(std::uint32_t ordinal) const { return m_positions.at(ordinal); }
    [[nodiscard]] std::span<std::uint32_t const> positions() const noexcept { return m_positions; }

    [[nodiscard]] std::size_t term_count() const noexcept { return m_terms.size(); }
    /// Terms in lexicographic order.
    [[nodiscard]] std::span<std::string const> terms() const noexcept { return m_terms; }
    /// Empty span for unknown terms.
    [[nodiscard]] std::span<Posting const> postings(std::string_view term) const;
    [[nodiscard]] std::uint32_t df(std::string_view term) const
    {
        return static_cast<std::uint32_t>(postings(term).size());
    }

    /// Binary snapshot; layout in docs/formats.md.
    void save(std::filesystem::path const &path) const;
    [[nodiscard]] static InvertedIndex load(std::filesystem::path const &path);

    friend bool operator==(InvertedIndex const &a, InvertedIndex const &b)
    {
        return a.m_avg_doc_len == b.m_avg_doc_len && a.m_doc_lengths == b.m_doc_lengths
               && a.m_positions == b.m_positions && a.m_terms == b.m_terms && a.m_postings == b.m_postings;
    }

  private:
    static InvertedIndex from_token_lists(std::vector<std::vector<std::string>> const &docs,
                                          std::vector<std::uint32_t> positions);

    std::vector<std::uint32_t> m_doc_lengths;
    std::vector<std::uint32_t> m_positions;
    double m_avg_doc_len = 0.0;
    std::vector<std::string> m_terms;
    std::vector<std::vector<Posting>> m_postings;
    std::unordered_map<std::string, std::uint32_t> m_lookup;
};

} // namespace park::lexical
