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

#include "park/lexical/pools.hpp"

namespace park::lexical {

void RetrievalPools::prepare(std::set<int> const &years)
{
    for (int year : years) {
        (void)for_year(year);
    }
}

void RetrievalPools::adopt(int year, InvertedIndex index)
{
    m_pools[year] = std::make_unique<InvertedIndex>(std::move(index));
}

InvertedIndex const *RetrievalPools::for_year(int year)
{
    if (auto it = m_pools.find(year); it != m_pools.end()) {
        return it->second.get();
    }
    std::vector<std::size_t> eligible;
    for (std::size_t p = 0; p < m_corpus->size(); ++p) {
        if ((*m_corpus)[p].year < year) {
            eligible.push_back(p);
        }
    }
    if (eligible.empty()) {
        m_pools[year] = nullptr;
        return nullptr;
    }
    auto &slot = m_pools[year];
    slot = std::make_unique<InvertedIndex>(InvertedIndex::build(*m_corpus, eligible));
    return slot.get();
}

InvertedIndex const *RetrievalPools::find(int year) const
{
    auto it = m_pools.find(year);
    return it == m_pools.end() ? nullptr : it->second.get();
}

} // namespace park::lexical
