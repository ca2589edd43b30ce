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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "park/common/error.hpp"
#include "park/fusion/fusion.hpp"
#include "park/fusion/metrics.hpp"
#include "park/fusion/report.hpp"
#include "park/fusion/run.hpp"
#include "park/fusion/significance.hpp"

using namespace park;
using fusion::CandidateList;
using fusion::Lambdas;

namespace {

std::vector<std::string> ids(std::size_t n, std::string const &prefix = "d")
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(100 + i));
    }
    return out;
}

CandidateList random_list(std::mt19937_64 &rng, std::string qid, std::size_t n)
{
    std::uniform_real_distribution<double> u(0.0, 10.0);
    CandidateList l;
    l.query_id = std::move(qid);
    l.doc_ids = ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        l.bm25.push_back(u(rng));
        l.dense.push_back(u(rng) - 5.0);
        l.user.push_back(u(rng) / 10.0);
    }
    return l;
}

std::vector<std::string> order_by(std::vector<std::string> const &doc_ids, std::vector<double> const &scores)
{
    std::vector<std::size_t> idx(doc_ids.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
        return scores[a] != scores[b] ? scores[a] > scores[b] : doc_ids[a] < doc_ids[b];
    });
    std::vector<std::string> out;
    for (auto i : idx) {
        out.push_back(doc_ids[i]);
    }
    return out;
}

std::vector<std::string> ranked_ids(std::vector<fusion::Ranked> const &r)
{
    std::vector<std::string> out;
    for (auto const &x : r) {
        out.push_back(x.doc_id);
    }
    return out;
}

} // namespace

TEST(Metrics, PerfectSingleRelevant)
{
    std::vector<std::string> r{"a", "b", "c"};
    fusion::Relevant rel{"a"};
    EXPECT_EQ(fusion::map_at_k(r, rel), 1.0);
    EXPECT_EQ(fusion::mrr_at_k(r, rel), 1.0);
    EXPECT_EQ(fusion::ndcg_at_k(r, rel), 1.0);
}

TEST(Metrics, CutoffsAndAnalyticNdcg)
{
    auto r = ids(20);
    EXPECT_EQ(fusion::mrr_at_k(r, {r[10]}), 0.0);
    EXPECT_NEAR(fusion::ndcg_at_k(r, {r[1]}), 1.0 / std::log2(3.0), 1e-12);
    EXPECT_NEAR(fusion::ndcg_at_k(r, {r[1]}), 0.63093, 1e-5);
}

TEST(Metrics, MatchNaiveOracle)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto pool = ids(150);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::string> ranking(pool.begin(), pool.begin() + 120);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<std::size_t> nrel(1, 15);
        fusion::Relevant rel(pool.begin(), pool.begin() + static_cast<long>(nrel(rng)));
        EXPECT_NEAR(fusion::map_at_k(ranking, rel, 100), test::oracle_average_precision(ranking, rel, 100), 1e-9);
        EXPECT_NEAR(fusion::mrr_at_k(ranking, rel, 10), test::oracle_reciprocal_rank(ranking, rel, 10), 1e-9);
        EXPECT_NEAR(fusion::ndcg_at_k(ranking, rel, 10), test::oracle_ndcg(ranking, rel, 10), 1e-9);
    }
}

TEST(Metrics, NdcgIsOneIffTopPositionsRelevant)
{
    auto r = ids(12);
    fusion::Relevant top3{r[0], r[1], r[2]};
    EXPECT_NEAR(fusion::ndcg_at_k(r, top3), 1.0, 1e-12);
    fusion::Relevant gap{r[0], r[1], r[3]};
    EXPECT_LT(fusion::ndcg_at_k(r, gap), 1.0);
}

TEST(Evaluate, ExcludesUnjudgedAndScoresMissingQueriesZero)
{
    fusion::Run run;
    run.queries["q1"] = {{"a", 1, 2.0}, {"b", 2, 1.0}};
    run.queries["q2"] = {{"c", 1, 1.0}};
    corpus::QrelSet qrels{{"q1", {"b"}}, {"q3", {"x"}}};
    auto e = fusion::evaluate(run, qrels);
    EXPECT_EQ(e.excluded, 1U);
    ASSERT_EQ(e.per_query.size(), 2U);
    EXPECT_EQ(e.per_query[0].query_id, "q1");
    EXPECT_EQ(e.per_query[1].map, 0.0);
    EXPECT_NEAR(e.mrr, 0.25, 1e-12);
}

TEST(MinMax, Examples)
{
    std::vector<double> a{2, 4, 6};
    EXPECT_EQ(fusion::minmax_normalize(a), (std::vector<double>{0, 0.5, 1}));
    std::vector<double> b{5, 5, 5};
    EXPECT_EQ(fusion::minmax_normalize(b), (std::vector<double>{0, 0, 0}));
    std::mt19937_64 rng(4);
    std::normal_distribution<double> dist(3.0, 10.0);
    std::vector<double> c(100);
    for (auto &x : c) {
        x = dist(rng);
    }
    auto n = fusion::minmax_normalize(c);
    EXPECT_EQ(*std::min_element(n.begin(), n.end()), 0.0);
    EXPECT_EQ(*std::max_element(n.begin(), n.end()), 1.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[i] < c[j]) {
                EXPECT_LE(n[i], n[j]);
            }
        }
    }
}

TEST(Fuse, HandComputedWeightedSums)
{
    CandidateList l;
    l.query_id = "q";
    l.doc_ids = {"a", "b", "c", "d", "e"};
    l.bm25 = {1.0, 0.5, 0.0, 0.25, 0.75};
    l.dense = {0.0, 1.0, 0.5, 0.5, 0.2};
    l.user = {0.3, 0.0, 1.0, 0.9, 0.1};
    Lambdas lam{0.4, 0.4, 0.2};
    auto s = fusion::fuse(lam, l);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_NEAR(s[i], 0.4 * l.bm25[i] + 0.4 * l.dense[i] + 0.2 * l.user[i], 1e-12);
    }
    EXPECT_THROW((Lambdas{0.5, 0.4, 0.2}.validate()), ContractViolation);
    EXPECT_THROW((Lambdas{1.2, -0.2, 0.0}.validate()), ContractViolation);
}

TEST(Fuse, SingleChannelProjections)
{
    std::mt19937_64 rng(5);
    for (int q = 0; q < 20; ++q) {
        auto raw = random_list(rng, "q", 100);
        // Force ties in BM25 so the doc-id tie-break is exercised.
        raw.bm25[10] = raw.bm25[20];
        auto n = fusion::normalized(raw);
        EXPECT_EQ(ranked_ids(fusion::rank({1, 0, 0}, n)), order_by(raw.doc_ids, raw.bm25));
        EXPECT_EQ(ranked_ids(fusion::rank({0, 1, 0}, n)), order_by(raw.doc_ids, raw.dense));
        EXPECT_EQ(ranked_ids(fusion::rank({0, 0, 1}, n)), order_by(raw.doc_ids, raw.user));
    }
}

TEST(Fuse, ScaleInvariance)
{
    std::mt19937_64 rng(6);
    auto raw = random_list(rng, "q", 50);
    auto scaled = raw;
    for (auto &x : scaled.dense) {
        x *= 7.5;
    }
    for (auto const &lam : fusion::lambda_grid(0.1)) {
        EXPECT_EQ(ranked_ids(fusion::rank(lam, fusion::normalized(raw))),
                  ranked_ids(fusion::rank(lam, fusion::normalized(scaled))));
    }
}

TEST(LambdaGrid, Counts)
{
    EXPECT_EQ(fusion::lambda_grid(0.5).size(), 6U);
    EXPECT_EQ(fusion::lambda_grid(0.05).size(), 231U);
    EXPECT_THROW((void)fusion::lambda_grid(0.3), ConfigError);
    for (auto const &l : fusion::lambda_grid(0.05)) {
        EXPECT_NO_THROW(l.validate());
    }
}

namespace {

struct Validation {
    std::vector<CandidateList> lists;
    corpus::QrelSet qrels;
};

// Relevant documents have a slightly higher expected value in each channel.
Validation validation_set(std::uint64_t seed, bool constant_user = false)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    Validation v;
    for (int q = 0; q < 30; ++q) {
        CandidateList l;
        l.query_id = "q" + std::to_string(q);
        l.doc_ids = ids(40);
        std::set<std::string> rel;
        for (std::size_t i = 0; i < 40; ++i) {
            bool r = i % 9 == 0;
            if (r) {
                rel.insert(l.doc_ids[i]);
            }
            l.bm25.push_back(noise(rng) + (r ? 0.8 : 0.0));
            l.dense.push_back(noise(rng) + (r ? 0.5 : 0.0));
            l.user.push_back(constant_user ? 0.3 : noise(rng) + (r ? 0.4 : 0.0));
        }
        v.qrels[l.query_id] = rel;
        v.lists.push_back(fusion::normalized(l));
    }
    return v;
}

double validation_map(Lambdas const &lam, Validation const &v)
{
    double total = 0.0;
    for (auto const &l : v.lists) {
        total += test::oracle_average_precision(ranked_ids(fusion::rank(lam, l)), v.qrels.at(l.query_id), 100);
    }
    return total / static_cast<double>(v.lists.size());
}

} // namespace

TEST(Tune, ReturnsGridMaximumUnderOracle)
{
    auto v = validation_set(8);
    auto result = fusion::tune_lambdas(v.lists, v.qrels, 0.05);
    ASSERT_EQ(result.grid.size(), 231U);
    double best = -1.0;
    for (auto const &lam : fusion::lambda_grid(0.05)) {
        best = std::max(best, validation_map(lam, v));
    }
    EXPECT_NEAR(result.best_map, best, 1e-12);
    EXPECT_NEAR(validation_map(result.best, v), best, 1e-12);
    EXPECT_FALSE(fusion::format_grid(result).empty());
}

TEST(Tune, ConstantUserChannelCannotChangeMetric)
{
    auto v = validation_set(9, true);
    auto full = fusion::tune_lambdas(v.lists, v.qrels, 0.05);
    auto two = fusion::tune_lambdas(v.lists, v.qrels, 0.05, true);
    EXPECT_NEAR(full.best_map, two.best_map, 1e-12);
    EXPECT_EQ(two.best.user, 0.0);
}

TEST(Tune, EmptyValidationFails)
{
    std::vector<CandidateList> none;
    EXPECT_THROW((void)fusion::tune_lambdas(none, {}, 0.05), DataError);
}

TEST(Significance, Examples)
{
    std::vector<double> a{0.1, 0.5, 0.3, 0.9};
    EXPECT_EQ(fusion::paired_randomization_test(a, a), 1.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> b(50);
    std::vector<double> c(50);
    for (std::size_t i = 0; i < 50; ++i) {
        b[i] = u(rng);
        c[i] = b[i] + 1.0;
    }
    double p = fusion::paired_randomization_test(c, b, 10000, 3);
    EXPECT_LT(p, 0.001);
    EXPECT_EQ(p, fusion::paired_randomization_test(c, b, 10000, 3));
    std::vector<double> shorter{1.0};
    EXPECT_THROW((void)fusion::paired_randomization_test(a, shorter), Error);
}

TEST(RunFile, RoundTripAndValidation)
{
    test::TempDir dir("run");
    fusion::Run run;
    run.tag = "sys";
    run.queries["q1"] = {{"a", 1, 3.5}, {"b", 2, 1.25}, {"c", 3, 1.25}};
    run.queries["q2"] = {{"z", 1, -0.5}};
    fusion::write_run(run, dir.path() / "r.run");
    auto back = fusion::read_run(dir.path() / "r.run");
    EXPECT_EQ(back.queries, run.queries);
    EXPECT_EQ(back.tag, "sys");
    std::ifstream in(dir.path() / "r.run");
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "q1 Q0 a 1 3.5 sys");

    fusion::Run bad;
    bad.queries["q"] = {{"a", 1, 1.0}, {"b", 3, 0.5}};
    EXPECT_THROW(fusion::check_run(bad), ContractViolation);
    EXPECT_THROW(fusion::write_run(bad, dir.path() / "bad.run"), ContractViolation);
    fusion::Run rising;
    rising.queries["q"] = {{"a", 1, 1.0}, {"b", 2, 2.0}};
    EXPECT_THROW(fusion::check_run(rising), ContractViolation);
}

TEST(RunFile, ExternalFileParsesAndMalformedLineIsReported)
{
    test::TempDir dir("run");
    {
        std::ofstream out(dir.path() / "ext.run");
        out << "7 Q0 docA 1 12.0 external\n7 Q0 docB 2 11.5 external\n";
    }
    auto run = fusion::read_run(dir.path() / "ext.run");
    corpus::QrelSet qrels{{"7", {"docB"}}};
    EXPECT_NEAR(fusion::evaluate(run, qrels).mrr, 0.5, 1e-12);
    {
        std::ofstream out(dir.path() / "bad.run");
        out << "7 Q0 docA 1 12.0 external\n7 Q0 docB\n";
    }
    try {
        (void)fusion::read_run(dir.path() / "bad.run");
        FAIL() << "expected ParseError";
    } catch (ParseError const &e) {
        EXPECT_EQ(e.line(), 2U);
    }
}

TEST(Report, AblationRowsInGivenOrder)
{
    fusion::Evaluation e;
    e.map = 0.1;
    std::vector<fusion::SystemResult> rows{{"Only User", e, {}}, {"+ Venue", e, {}}, {"+ Affiliation", e, {}}};
    auto table = fusion::format_ablation(rows, "synthetic");
    auto a = table.find("Only User");
    auto b = table.find("+ Venue");
    auto c = table.find("+ Affiliation");
    ASSERT_NE(a, std::string::npos);
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
}
