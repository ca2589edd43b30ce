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
#include <vector>

#include "park/corpus/types.hpp"

namespace park::graph {

/// Directed citation graph over document ordinals (u -> v when u references v).
class CitationGraph {
  public:
    CitationGraph() = default;
    /// Edges from an explicit list; self-loops are a ContractViolation, duplicates collapse.
    CitationGraph(std::size_t nodes, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
    /// Edges among `members` only (normally the pre-cutoff documents). Every ordinal of
    /// the corpus is a node; non-members are isolated.
    CitationGraph(corpus::Corpus const &corpus, std::span<std::size_t const> members);

    [[nodiscard]] std::size_t node_count() const noexcept { return m_out.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return m_edges; }
    [[nodiscard]] std::span<std::uint32_t const> out(std::size_t node) const { return m_out.at(node); }
    [[nodiscard]] std::size_t in_degree(std::size_t node) const { return m_in_degree.at(node); }

  private:
    void add_edges(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::vector<std::vector<std::uint32_t>> m_out;
    std::vector<std::size_t> m_in_degree;
    std::size_t m_edges = 0;
};

struct PageRankParams {
    double alpha = 0.85;
    double tol = 1e-8;
    std::size_t max_iter = 100;

    void validate() const;
};

/// Power iteration with uniform teleport and dangling mass spread uniformly. Stops when the
/// L1 change drops below tol or after max_iter iterations. Throws DataError on an empty graph.
[[nodiscard]] std::vector<double> pagerank(CitationGraph const &graph, PageRankParams const &params = {});

/// Citations received inside the graph.
[[nodiscard]] std::size_t pop_score(CitationGraph const &graph, std::size_t doc);

/// `doc_id<TAB>score` lines in ordinal order.
void dump_scores(corpus::Corpus const &corpus, std::span<double const> scores, std::filesystem::path const &path);

} // namespace park::graph
