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

#include "park/lexical/index.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "park/common/binary_io.hpp"
#include "park/common/error.hpp"
#include "park/lexical/tokenize.hpp"

namespace park::lexical {

namespace {
constexpr std::array<char, 4> kMagic{'P', 'K', 'I', 'X'};
constexpr std::uint32_t kVersion = 1;
} // namespace

InvertedIndex InvertedIndex::build(corpus::Corpus const &corpus, std::span<std::size_t const> positions)
{
    if (positions.empty()) {
        throw DataError("cannot build an index over an empty document set");
    }
    std::vector<std::vector<std::string>> docs;
    std::vector<std::uint32_t> pos;
    docs.reserve(positions.size());
    pos.reserve(positions.size());
    for (auto p : positions) {
        auto const &d = corpus[p];
        docs.push_back(analyze(d.title + " " + d.abstract));
        pos.push_back(static_cast<std::uint32_t>(p));
    }
    return from_token_lists(docs, std::move(pos));
}

InvertedIndex InvertedIndex::from_texts(std::span<std::string const> texts)
{
    if (texts.empty()) {
        throw DataError("cannot build an index over an empty document set");
    }
    std::vector<std::vector<std::string>> docs;
    for (auto const &t : texts) {
        docs.push_back(analyze(t));
    }
    std::vector<std::uint32_t> pos(texts.size());
    std::iota(pos.begin(), pos.end(), 0U);
    return from_token_lists(docs, std::move(pos));
}

InvertedIndex InvertedIndex::from_token_lists(std::vector<std::vector<std::string>> const &docs,
                                              std::vector<std::uint32_t> positions)
{
    InvertedIndex index;
    index.m_positions = std::move(positions);
    std::unordered_map<std::string, std::vector<Posting>> postings;
    std::uint64_t total = 0;
    for (std::uint32_t ord = 0; ord < docs.size(); ++ord) {
        auto const &tokens = docs[ord];
        index.m_doc_lengths.push_back(static_cast<std::uint32_t>(tokens.size()));
        total += tokens.size();
        // Ordinals are visited in increasing order, so each list stays sorted.
        for (auto const &t : tokens) {
            auto &list = postings[t];
            if (list.empty() || list.back().doc != ord) {
                list.push_back({ord, 1});
            } else {
                ++list.back().tf;
            }
        }
    }
    index.m_avg_doc_len = static_cast<double>(total) / static_cast<double>(docs.size());

    index.m_terms.reserve(postings.size());
    for (auto const &entry : postings) {
        index.m_terms.push_back(entry.first);
    }
    std::sort(index.m_terms.begin(), index.m_terms.end());
    index.m_postings.reserve(index.m_terms.size());
    for (std::uint32_t id = 0; id < index.m_terms.size(); ++id) {
        index.m_postings.push_back(std::move(postings[index.m_terms[id]]));
        index.m_lookup.emplace(index.m_terms[id], id);
    }
    return index;
}

std::span<Posting const> InvertedIndex::postings(std::string_view term) const
{
    auto it = m_lookup.find(std::string(term));
    if (it == m_lookup.end()) {
        return {};
    }
    return m_postings[it->second];
}

void InvertedIndex::save(std::filesystem::path const &path) const
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError("cannot write index snapshot " + path.string());
    }
    binary::write_magic(out, kMagic, kVersion);
    binary::write<std::uint32_t>(out, doc_count());
    binary::write<double>(out, m_avg_doc_len);
    for (std::uint32_t i = 0; i < doc_count(); ++i) {
        binary::write<std::uint32_t>(out, m_positions[i]);
        binary::write<std::uint32_t>(out, m_doc_lengths[i]);
    }
    binary::write<std::uint32_t>(out, static_cast<std::uint32_t>(m_terms.size()));
    for (std::size_t t = 0; t < m_terms.size(); ++t) {
        binary::write_string(out, m_terms[t]);
        binary::write<std::uint32_t>(out, static_cast<std::uint32_t>(m_postings[t].size()));
        for (auto const &p : m_postings[t]) {
            binary::write<std::uint32_t>(out, p.doc);
            binary::write<std::uint32_t>(out, p.tf);
        }
    }
    if (!out) {
        throw DataError("failed writing index snapshot " + path.string());
    }
}

InvertedIndex InvertedIndex::load(std::filesystem::path const &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open index snapshot " + path.string());
    }
    binary::expect_magic(in, kMagic, kVersion, path.string());
    InvertedIndex index;
    auto n = binary::read<std::uint32_t>(in);
    index.m_avg_doc_len = binary::read<double>(in);
    index.m_positions.resize(n);
    index.m_doc_lengths.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        index.m_positions[i] = binary::read<std::uint32_t>(in);
        index.m_doc_lengths[i] = binary::read<std::uint32_t>(in);
    }
    auto terms = binary::read<std::uint32_t>(in);
    index.m_terms.reserve(terms);
    index.m_postings.reserve(terms);
    for (std::uint32_t t = 0; t < terms; ++t) {
        index.m_terms.push_back(binary::read_string(in));
        auto count = binary::read<std::uint32_t>(in);
        std::vector<Posting> list(count);
        for (auto &p : list) {
            p.doc = binary::read<std::uint32_t>(in);
            p.tf = binary::read<std::uint32_t>(in);
            if (p.doc >= n) {
                throw DataError(path.string() + ": posting refers to ordinal beyond doc_count");
            }
        }
        index.m_postings.push_back(std::move(list));
        index.m_lookup.emplace(index.m_terms.back(), t);
    }
    return index;
}

} // namespace park::lexical
