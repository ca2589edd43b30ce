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

#include "park/graph/citation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>

#include "park/common/error.hpp"

namespace park::graph {

CitationGraph::CitationGraph(std::size_t nodes, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : m_out(nodes), m_in_degree(nodes, 0)
{
    add_edges(std::move(edges));
}

CitationGraph::CitationGraph(corpus::Corpus const &corpus, std::span<std::size_t const> members)
    : m_out(corpus.size()), m_in_degree(corpus.size(), 0)
{
    std::vector<std::uint8_t> member(corpus.size(), 0);
    for (auto m : members) {
        member.at(m) = 1;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (auto m : members) {
        for (auto const &ref : corpus[m].references) {
            auto target = corpus.find(ref);
            if (target && member[*target] != 0 && *target != m) {
                edges.emplace_back(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(*target));
            }
        }
    }
    add_edges(std::move(edges));
}

void CitationGraph::add_edges(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
{
    std::ranges::sort(edges);
    auto dup = std::ranges::unique(edges);
    edges.erase(dup.begin(), dup.end());
    for (auto [u, v] : edges) {
        expects(u < m_out.size() && v < m_out.size(), "citation edge endpoint out of range");
        expects(u != v, "citation graph does not allow self-loops");
        m_out[u].push_back(v);
        ++m_in_degree[v];
    }
    m_edges = edges.size();
}

void PageRankParams::validate() const
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("pagerank: alpha must lie in (0, 1)");
    }
    if (!(tol > 0.0)) {
        throw ConfigError("pagerank: tol must be positive");
    }
}

std::vector<double> pagerank(CitationGraph const &graph, PageRankParams const &params)
{
    params.validate();
    auto n = graph.node_count();
    if (n == 0) {
        throw DataError("pagerank: empty graph");
    }
    double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> rank(n, inv_n);
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < params.max_iter; ++iter) {
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (graph.out(u).empty()) {
                dangling += rank[u];
            }
        }
        double base = (1.0 - params.alpha) * inv_n + params.alpha * dangling * inv_n;
        std::ranges::fill(next, base);
        for (std::size_t u = 0; u < n; ++u) {
            auto out = graph.out(u);
            if (out.empty()) {
                continue;
            }
            double share = params.alpha * rank[u] / static_cast<double>(out.size());
            for (auto v : out) {
                next[v] += share;
            }
        }
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            change += std::abs(next[i] - rank[i]);
        }
        rank.swap(next);
        if (change < params.tol) {
            break;
        }
    }
    return rank;
}

std::size_t pop_score(CitationGraph const &graph, std::size_t doc) { return graph.in_degree(doc); }

void dump_scores(corpus::Corpus const &corpus, std::span<double const> scores, std::filesystem::path const &path)
{
    expects(scores.size() == corpus.size(), "score dump: one score per document expected");
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << std::setprecision(10);
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out << corpus[i].doc_id << '\t' << scores[i] << '\n';
    }
}

} // namespace park::graph
