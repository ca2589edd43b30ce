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
#include <optional>
#include <span>
#include <vector>

#include "park/common/matrix.hpp"
#include "park/corpus/types.hpp"
#include "park/dense/encoder.hpp"

namespace park::dense {

/// One float32 row per document ordinal. Rows are unit length except flagged empty rows,
/// which are zero.
struct DocEmbeddingStore {
    Matrix<float> rows;
    std::vector<std::uint8_t> empty;

    [[nodiscard]] std::size_t size() const noexcept { return rows.rows(); }
    [[nodiscard]] std::size_t dim() const noexcept { return rows.cols(); }
    [[nodiscard]] std::span<float const> row(std::size_t ordinal) const { return rows.row(ordinal); }
};

/// Embeds title + " " + abstract of every document, in corpus order.
[[nodiscard]] DocEmbeddingStore embed_corpus(HashedBowEncoder const &encoder, corpus::Corpus const &corpus);

void save_store(DocEmbeddingStore const &store, std::filesystem::path const &path);

struct StoreLoadReport {
    std::size_t renormalized = 0;
    std::size_t empty_rows = 0;
};

/// Loads a store in the embedding binary format. Rows whose norm is off by more than 1e-3
/// are renormalized (and counted); zero rows are flagged empty. With `expected_count`, a
/// row-count mismatch is a DataError naming both counts.
[[nodiscard]] DocEmbeddingStore load_precomputed_embeddings(std::filesystem::path const &path,
                                                            std::optional<std::size_t> expected_count = std::nullopt,
                                                            StoreLoadReport *report = nullptr);

/// Dot product of unit vectors; 0 when either side is a zero (empty) vector.
[[nodiscard]] double dense_score(std::span<double const> query, std::span<double const> doc);
[[nodiscard]] double dense_score(std::span<double const> query, std::span<float const> doc);

} // namespace park::dense
