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

#include "park/corpus/qrels.hpp"

#include "park/common/log.hpp"
#include "park/lexical/tokenize.hpp"

namespace park::corpus {

QrelSet build_qrels(Corpus const &corpus, lexical::RetrievalPools &pools, std::span<Query const> queries,
                    QrelOptions const &options, QrelReport *report)
{
    QrelSet qrels;
    QrelReport local;
    for (auto const &q : queries) {
        ++local.queries;
        std::optional<std::size_t> source;
        if (q.source_doc_id) {
            source = corpus.find(*q.source_doc_id);
        }
        std::set<std::string> relevant;
        if (source) {
            auto const &paper = corpus[*source];
            for (auto const &ref : paper.references) {
                auto pos = corpus.find(ref);
                if (pos && corpus[*pos].year < q.year && ref != paper.doc_id) {
                    relevant.insert(ref);
                }
            }
            if (options.mode == QrelMode::Union) {
                if (auto const *index = pools.for_year(q.year)) {
                    auto title = lexical::analyze(paper.title);
                    for (auto const &hit : lexical::retrieve_topk(*index, title, options.depth, options.bm25)) {
                        auto const &id = corpus[index->position(hit.doc)].doc_id;
                        if (id != paper.doc_id) {
                            relevant.insert(id);
                        }
                    }
                }
            }
        }
        if (relevant.empty()) {
            ++local.dropped;
            continue;
        }
        qrels.emplace(q.query_id, std::move(relevant));
    }
    if (local.dropped > 0) {
        log::info("qrels: dropped ", local.dropped, " of ", local.queries, " queries without relevant documents");
    }
    if (report != nullptr) {
        *report = local;
    }
    return qrels;
}

} // namespace park::corpus
