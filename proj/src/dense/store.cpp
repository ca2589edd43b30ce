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

#include "park/dense/store.hpp"

#include <cmath>

#include "park/common/log.hpp"
#include "park/common/vector_ops.hpp"
#include "park/dense/embedding_io.hpp"

namespace park::dense {

DocEmbeddingStore embed_corpus(HashedBowEncoder const &encoder, corpus::Corpus const &corpus)
{
    DocEmbeddingStore store{Matrix<float>(corpus.size(), encoder.dim()), std::vector<std::uint8_t>(corpus.size(), 0)};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto const &doc = corpus[i];
        auto e = encoder.encode(doc.title + " " + doc.abstract);
        store.empty[i] = e.empty ? 1 : 0;
        auto row = store.rows.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = static_cast<float>(e.vector[j]);
        }
    }
    return store;
}

void save_store(DocEmbeddingStore const &store, std::filesystem::path const &path)
{
    save_embedding_matrix(store.rows, path);
}

DocEmbeddingStore load_precomputed_embeddings(std::filesystem::path const &path,
                                              std::optional<std::size_t> expected_count, StoreLoadReport *report)
{
    DocEmbeddingStore store{load_embedding_matrix(path), {}};
    if (expected_count && store.rows.rows() != *expected_count) {
        throw DataError(path.string() + ": embedding count mismatch: expected " + std::to_string(*expected_count)
                        + " rows, found " + std::to_string(store.rows.rows()));
    }
    StoreLoadReport local;
    store.empty.assign(store.rows.rows(), 0);
    for (std::size_t i = 0; i < store.rows.rows(); ++i) {
        auto row = store.rows.row(i);
        for (float x : row) {
            if (!std::isfinite(x)) {
                throw DataError(path.string() + ": non-finite value in row " + std::to_string(i));
            }
        }
        double n = norm(std::span<float const>(row));
        if (n == 0.0) {
            store.empty[i] = 1;
            ++local.empty_rows;
        } else if (std::abs(n - 1.0) > 1e-3) {
            normalize(row);
            ++local.renormalized;
        }
    }
    if (local.renormalized > 0) {
        log::warn(path.string(), ": renormalized ", local.renormalized, " rows with norm off by more than 1e-3");
    }
    if (report != nullptr) {
        *report = local;
    }
    return store;
}

double dense_score(std::span<double const> query, std::span<double const> doc)
{
    expects(query.size() == doc.size(), "dense_score: dimension mismatch");
    return simd::dot(query, doc);
}

double dense_score(std::span<double const> query, std::span<float const> doc)
{
    expects(query.size() == doc.size(), "dense_score: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < query.size(); ++i) {
        s += query[i] * static_cast<double>(doc[i]);
    }
    return s;
}

} // namespace park::dense
