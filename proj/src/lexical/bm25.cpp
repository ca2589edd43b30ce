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

#include "park/lexical/bm25.hpp"

#include <algorithm>
#include <cmath>

#include "park/common/error.hpp"

namespace park::lexical {

void BM25Params::validate() const
{
    if (!(k1 > 0.0)) {
        throw ConfigError("bm25: k1 must be positive");
    }
    if (!(b >= 0.0 && b <= 1.0)) {
        throw ConfigError("bm25: b must lie in [0, 1]");
    }
}

double bm25_idf(double df, double doc_count)
{
    return std::log(1.0 + (doc_count - df + 0.5) / (df + 0.5));
}

double bm25_term_weight(double tf, double df, double doc_len, CollectionStats const &stats,
                        BM25Params const &params)
{
    double norm = params.k1 * (1.0 - params.b + params.b * doc_len / stats.avg_doc_len);
    return bm25_idf(df, stats.doc_count) * tf * (params.k1 + 1.0) / (tf + norm);
}

double bm25_score(InvertedIndex const &index, std::span<std::string const> query, std::uint32_t ordinal,
                  BM25Params const &params, std::optional<CollectionStats> stats)
{
    expects(ordinal < index.doc_count(), "bm25_score: ordinal out of range");
    auto const collection = stats.value_or(stats_of(index));
    double doc_len = index.doc_length(ordinal);
    double score = 0.0;
    for (auto const &term : query) {
        auto list = index.postings(term);
        auto it = std::lower_bound(list.begin(), list.end(), ordinal,
                                   [](Posting const &p, std::uint32_t doc) { return p.doc < doc; });
        if (it == list.end() || it->doc != ordinal) {
            continue;
        }
        score += bm25_term_weight(it->tf, static_cast<double>(list.size()), doc_len, collection, params);
    }
    return score;
}

std::vector<ScoredDoc> retrieve_topk(InvertedIndex const &index, std::span<std::string const> query,
                                     std::size_t k, BM25Params const &params)
{
    expects(k >= 1, "retrieve_topk: k must be at least 1");
    auto const collection = stats_of(index);
    // Term-at-a-time accumulation; per document the terms are summed in query order,
    // which reproduces bm25_score bit for bit.
    std::vector<double> acc(index.doc_count(), 0.0);
    std::vector<std::uint32_t> touched;
    for (auto const &term : query) {
        auto list = index.postings(term);
        auto df = static_cast<double>(list.size());
        for (auto const &p : list) {
            if (acc[p.doc] == 0.0) {
                touched.push_back(p.doc);
            }
            acc[p.doc] += bm25_term_weight(p.tf, df, index.doc_length(p.doc), collection, params);
        }
    }
    std::vector<ScoredDoc> hits;
    hits.reserve(touched.size());
    for (auto doc : touched) {
        if (acc[doc] > 0.0) {
            hits.push_back({doc, acc[doc]});
        }
    }
    auto better = [](ScoredDoc const &a, ScoredDoc const &b) {
        return a.score > b.score || (a.score == b.score && a.doc < b.doc);
    };
    auto keep = std::min(k, hits.size());
    std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(keep), hits.end(), better);
    hits.resize(keep);
    return hits;
}

} // namespace park::lexical
