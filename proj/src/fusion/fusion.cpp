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

#include "park/fusion/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "park/common/error.hpp"

namespace park::fusion {

void Lambdas::validate() const
{
    expects(bm25 >= 0.0 && dense >= 0.0 && user >= 0.0, "lambdas must be non-negative");
    expects(std::abs(bm25 + dense + user - 1.0) <= 1e-9, "lambdas must sum to 1");
}

std::vector<double> minmax_normalize(std::span<double const> scores)
{
    std::vector<double> out(scores.size(), 0.0);
    if (scores.empty()) {
        return out;
    }
    auto [lo, hi] = std::ranges::minmax_element(scores);
    double range = *hi - *lo;
    if (range == 0.0) {
        return out;
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out[i] = (scores[i] - *lo) / range;
    }
    return out;
}

CandidateList normalized(CandidateList const &list)
{
    expects(list.bm25.size() == list.size() && list.dense.size() == list.size() && list.user.size() == list.size(),
            "candidate channels must match the candidate count");
    return {list.query_id, list.doc_ids, minmax_normalize(list.bm25), minmax_normalize(list.dense),
            minmax_normalize(list.user)};
}

std::vector<double> fuse(Lambdas const &lambdas, CandidateList const &list)
{
    lambdas.validate();
    std::vector<double> out(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        out[i] = lambdas.bm25 * list.bm25[i] + lambdas.dense * list.dense[i] + lambdas.user * list.user[i];
    }
    return out;
}

std::vector<Ranked> rank(Lambdas const &lambdas, CandidateList const &list)
{
    auto scores = fuse(lambdas, list);
    std::vector<std::size_t> order(list.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) {
            return scores[a] > scores[b];
        }
        return list.doc_ids[a] < list.doc_ids[b];
    });
    std::vector<Ranked> out;
    out.reserve(order.size());
    for (auto i : order) {
        out.push_back({list.doc_ids[i], scores[i]});
    }
    return out;
}

Run fused_run(Lambdas const &lambdas, std::span<CandidateList const> lists, std::string tag)
{
    Run run;
    run.tag = std::move(tag);
    for (auto const &list : lists) {
        auto ranked = rank(lambdas, list);
        auto &entries = run.queries[list.query_id];
        entries.reserve(ranked.size());
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            entries.push_back({ranked[i].doc_id, i + 1, ranked[i].score});
        }
    }
    return run;
}

std::vector<Lambdas> lambda_grid(double step)
{
    if (!(step > 0.0 && step <= 1.0)) {
        throw ConfigError("lambda grid step must lie in (0, 1]");
    }
    double steps = 1.0 / step;
    auto n = static_cast<int>(std::lround(steps));
    if (std::abs(steps - n) > 1e-9) {
        throw ConfigError("lambda grid step must divide 1");
    }
    std::vector<Lambdas> grid;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            grid.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n, static_cast<double>(n - i - j) / n});
        }
    }
    return grid;
}

namespace {

double mean_map(Lambdas const &lambdas, std::span<CandidateList const> lists,
                std::vector<corpus::QrelSet::const_iterator> const &judged)
{
    double sum = 0.0;
    std::size_t count = 0;
    std::vector<std::string> ranking;
    for (std::size_t q = 0; q < lists.size(); ++q) {
        if (judged[q] == corpus::QrelSet::const_iterator{}) {
            continue;
        }
        auto ranked = rank(lambdas, lists[q]);
        ranking.clear();
        for (auto const &r : ranked) {
            ranking.push_back(r.doc_id);
        }
        sum += map_at_k(ranking, judged[q]->second, 100);
        ++count;
    }
    return sum / static_cast<double>(count);
}

} // namespace

TuneResult tune_lambdas(std::span<CandidateList const> lists, corpus::QrelSet const &qrels, double step,
                        bool fixed_user_zero)
{
    auto grid = lambda_grid(step);
    std::vector<corpus::QrelSet::const_iterator> judged(lists.size());
    std::size_t count = 0;
    for (std::size_t q = 0; q < lists.size(); ++q) {
        auto it = qrels.find(lists[q].query_id);
        if (it != qrels.end() && !it->second.empty()) {
            judged[q] = it;
            ++count;
        }
    }
    if (count == 0) {
        throw DataError("lambda tuning: no judged validation queries");
    }
    TuneResult result;
    bool have = false;
    for (auto const &l : grid) {
        if (fixed_user_zero && l.user != 0.0) {
            continue;
        }
        double m = mean_map(l, lists, judged);
        result.grid.push_back({l, m});
        bool better = !have || m > result.best_map
                      || (m == result.best_map
                          && (l.dense > result.best.dense || (l.dense == result.best.dense && l.bm25 > result.best.bm25)));
        if (better) {
            result.best = l;
            result.best_map = m;
            have = true;
        }
    }
    return result;
}

std::string format_grid(TuneResult const &result)
{
    std::ostringstream out;
    out << "lambda_bm25\tlambda_dense\tlambda_user\tmap@100\n";
    char line[128];
    for (auto const &p : result.grid) {
        std::snprintf(line, sizeof line, "%.2f\t%.2f\t%.2f\t%.6f\n", p.lambdas.bm25, p.lambdas.dense, p.lambdas.user,
                      p.map);
        out << line;
    }
    std::snprintf(line, sizeof line, "best\t%.2f\t%.2f\t%.2f\t%.6f\n", result.best.bm25, result.best.dense,
                  result.best.user, result.best_map);
    out << line;
    return out.str();
}

} // namespace park::fusion
