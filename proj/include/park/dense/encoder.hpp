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
#include <string_view>
#include <vector>

#include "park/common/matrix.hpp"

namespace park::dense {

struct EncoderConfig {
    std::uint32_t dim = 64;
    std::uint32_t buckets = 1U << 16;
};

struct Encoded {
    std::vector<double> vector;
    /// No tokens survived analysis; `vector` is all zeros and not normalized.
    bool empty = false;
};

/// Hashed bag-of-words text encoder: every token hashes into a row of a trainable
/// bucket table; a text embeds as the L2-normalized mean of its tokens' rows.
/// Tokens are analyzed like the index (tokenize + stem) with stopwords removed.
class HashedBowEncoder {
  public:
    /// Rows drawn from N(0, 1/dim).
    [[nodiscard]] static HashedBowEncoder initialize(EncoderConfig const &config, std::uint64_t seed);
    explicit HashedBowEncoder(Matrix<float> table);

    [[nodiscard]] std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(m_table.cols()); }
    [[nodiscard]] std::uint32_t buckets() const noexcept { return static_cast<std::uint32_t>(m_table.rows()); }
    [[nodiscard]] Matrix<float> const &table() const noexcept { return m_table; }
    [[nodiscard]] Matrix<float> &table() noexcept { return m_table; }

    [[nodiscard]] std::uint32_t bucket(std::string_view token) const noexcept;
    /// Bucket of every surviving token, in text order (repeats kept).
    [[nodiscard]] std::vector<std::uint32_t> buckets_of(std::string_view text) const;

    [[nodiscard]] Encoded encode(std::string_view text) const;
    [[nodiscard]] Encoded encode_buckets(std::span<std::uint32_t const> buckets) const;

    void save(std::filesystem::path const &path) const;
    [[nodiscard]] static HashedBowEncoder load(std::filesystem::path const &path);

    friend bool operator==(HashedBowEncoder const &, HashedBowEncoder const &) = default;

  private:
    Matrix<float> m_table;
};

} // namespace park::dense
