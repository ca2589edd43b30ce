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

#include "park/corpus/split.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "park/common/error.hpp"
#include "park/corpus/text.hpp"

namespace park::corpus {

namespace {

std::vector<std::size_t> sample(std::vector<std::size_t> pool, std::size_t cap, std::mt19937_64 &rng)
{
    if (cap > 0 && pool.size() > cap) {
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(cap);
        std::sort(pool.begin(), pool.end());
    }
    return pool;
}

} // namespace

int percentile_cutoff(Corpus const &corpus, double fraction)
{
    if (corpus.empty()) {
        throw DataError("percentile_cutoff: empty corpus");
    }
    std::vector<int> years;
    years.reserve(corpus.size());
    for (auto const &d : corpus.documents()) {
        years.push_back(d.year);
    }
    std::sort(years.begin(), years.end());
    auto idx = static_cast<std::size_t>(fraction * static_cast<double>(years.size()));
    return years[std::min(idx, years.size() - 1)];
}

Split chronological_split(Corpus const &corpus, SplitSpec const &spec, QuerySampling const &sampling,
                          std::uint64_t seed)
{
    Split split;
    split.cutoff_year = spec.cutoff_year;
    std::vector<std::size_t> test_pool;
    for (std::size_t p = 0; p < corpus.size(); ++p) {
        if (corpus[p].year < spec.cutoff_year) {
            split.train_docs.push_back(p);
        } else {
            test_pool.push_back(p);
        }
    }
    if (split.train_docs.empty()) {
        throw DataError("chronological split: no documents before cutoff " + std::to_string(spec.cutoff_year));
    }
    if (test_pool.empty()) {
        throw DataError("chronological split: no documents at or after cutoff "
                        + std::to_string(spec.cutoff_year));
    }

    std::mt19937_64 rng(seed);
    auto with_authors = [&](std::size_t p) { return !corpus[p].author_ids.empty(); };

    int last_train_year = corpus[split.train_docs.front()].year;
    for (auto p : split.train_docs) {
        last_train_year = std::max(last_train_year, corpus[p].year);
    }
    std::vector<std::size_t> validation_pool;
    for (auto p : split.train_docs) {
        if (corpus[p].year == last_train_year && with_authors(p) && !corpus[p].references.empty()) {
            validation_pool.push_back(p);
        }
    }
    split.validation_sources = sample(std::move(validation_pool), sampling.max_validation_queries, rng);
    std::unordered_set<std::size_t> held_out(split.validation_sources.begin(), split.validation_sources.end());
    for (auto p : split.train_docs) {
        if (held_out.count(p) == 0) {
            split.profile_docs.push_back(p);
        }
    }

    // Query writers must have a profile; prefer the first listed author who has one.
    std::unordered_map<std::string, std::size_t> profile_size;
    for (auto p : split.profile_docs) {
        for (auto const &a : corpus[p].author_ids) {
            ++profile_size[a];
        }
    }
    auto query_for = [&](std::size_t p, std::vector<Query> &out) {
        auto const &d = corpus[p];
        auto text = make_query(d.title);
        if (text.empty()) {
            ++split.empty_queries_dropped;
            return;
        }
        Query q;
        q.query_id = "q_" + d.doc_id;
        q.text = std::move(text);
        q.year = d.year;
        q.source_doc_id = d.doc_id;
        if (!d.author_ids.empty()) {
            q.user_id = d.author_ids.front();
            for (auto const &a : d.author_ids) {
                if (profile_size.count(a) != 0) {
                    q.user_id = a;
                    break;
                }
            }
        }
        out.push_back(std::move(q));
    };

    for (auto p : split.profile_docs) {
        query_for(p, split.train_queries);
    }
    for (auto p : split.validation_sources) {
        query_for(p, split.validation_queries);
    }
    std::vector<std::size_t> test_sources;
    for (auto p : test_pool) {
        if (with_authors(p)) {
            test_sources.push_back(p);
        }
    }
    for (auto p : sample(std::move(test_sources), sampling.max_test_queries, rng)) {
        query_for(p, split.test_queries);
    }
    return split;
}

} // namespace park::corpus
