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

#include <map>
#include <memory>
#include <set>

#include "park/corpus/types.hpp"
#include "park/lexical/index.hpp"

namespace park::lexical {

/// Time-aware retrieval pools: the pool for year y indexes every document published
/// strictly before y, so a query never retrieves its own future.
class RetrievalPools {
  public:
    explicit RetrievalPools(corpus::Corpus const &corpus) : m_corpus(&corpus) {}

    /// Builds (once) the pools for the listed years. Years with an empty pool are skipped.
    void prepare(std::set<int> const &years);
    /// Adopts a prebuilt index (e.g. a loaded snapshot) as the pool for `year`.
    void adopt(int year, InvertedIndex index);

    /// Null when the pool for `year` is empty. Builds on demand if not prepared.
    [[nodiscard]] InvertedIndex const *for_year(int year);
    [[nodiscard]] InvertedIndex const *find(int year) const;
    [[nodiscard]] std::map<int, std::unique_ptr<InvertedIndex>> const &all() const noexcept { return m_pools; }

  private:
    corpus::Corpus const *m_corpus;
    std::map<int, std::unique_ptr<InvertedIndex>> m_pools;
};

} // namespace park::lexical
