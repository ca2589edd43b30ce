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

#include "park/fusion/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace park::fusion {

double map_at_k(std::span<std::string const> ranking, Relevant const &relevant, std::size_t k)
{
    if (relevant.empty() || k == 0) {
        return 0.0;
    }
    double sum = 0.0;
    std::size_t hits = 0;
    auto depth = std::min(k, ranking.size());
    for (std::size_t i = 0; i < depth; ++i) {
        if (relevant.contains(ranking[i])) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(std::min(relevant.size(), k));
}

double mrr_at_k(std::span<std::string const> ranking, Relevant const &relevant, std::size_t k)
{
    auto depth = std::min(k, ranking.size());
    for (std::size_t i = 0; i < depth; ++i) {
        if (relevant.contains(ranking[i])) {
            return 1.0 / static_cast<double>(i + 1);
        }
    }
    return 0.0;
}

double ndcg_at_k(std::span<std::string const> ranking, Relevant const &relevant, std::size_t k)
{
    if (relevant.empty() || k == 0) {
        return 0.0;
    }
    double dcg = 0.0;
    auto depth = std::min(k, ranking.size());
    for (std::size_t i = 0; i < depth; ++i) {
        if (relevant.contains(ranking[i])) {
            dcg += 1.0 / std::log2(static_cast<double>(i + 2));
        }
    }
    double ideal = 0.0;
    auto ideal_depth = std::min(k, relevant.size());
    for (std::size_t i = 0; i < ideal_depth; ++i) {
        ideal += 1.0 / std::log2(static_cast<double>(i + 2));
    }
    return dcg / ideal;
}

Evaluation evaluate(Run const &run, corpus::QrelSet const &qrels, MetricDepths const &depths)
{
    Evaluation e;
    for (auto const &[qid, entries] : run.queries) {
        auto it = qrels.find(qid);
        if (it == qrels.end() || it->second.empty()) {
            ++e.excluded;
        }
    }
    std::vector<std::string> empty;
    for (auto const &[qid, relevant] : qrels) {
        if (relevant.empty()) {
            continue;
        }
        auto it = run.queries.find(qid);
        auto ranking = it == run.queries.end() ? empty : ranking_of(it->second);
        QueryMetrics m{qid, map_at_k(ranking, relevant, depths.map), mrr_at_k(ranking, relevant, depths.mrr),
                       ndcg_at_k(ranking, relevant, depths.ndcg)};
        e.map += m.map;
        e.mrr += m.mrr;
        e.ndcg += m.ndcg;
        e.per_query.push_back(std::move(m));
    }
    if (!e.per_query.empty()) {
        auto n = static_cast<double>(e.per_query.size());
        e.map /= n;
        e.mrr /= n;
        e.ndcg /= n;
    }
    return e;
}

std::vector<double> column(Evaluation const &e, double QueryMetrics::*metric)
{
    std::vector<double> out;
    out.reserve(e.per_query.size());
    for (auto const &q : e.per_query) {
        out.push_back(q.*metric);
    }
    return out;
}

} // namespace park::fusion
