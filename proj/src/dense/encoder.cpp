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

#include "park/dense/encoder.hpp"

#include <cmath>
#include <random>

#include "park/common/hash.hpp"
#include "park/common/vector_ops.hpp"
#include "park/corpus/text.hpp"
#include "park/dense/embedding_io.hpp"
#include "park/lexical/tokenize.hpp"

namespace park::dense {

HashedBowEncoder HashedBowEncoder::initialize(EncoderConfig const &config, std::uint64_t seed)
{
    if (config.dim == 0 || config.buckets == 0) {
        throw ConfigError("encoder: dim and buckets must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(static_cast<double>(config.dim)));
    Matrix<float> table(config.buckets, config.dim);
    for (auto &x : table.data()) {
        x = static_cast<float>(normal(rng));
    }
    return HashedBowEncoder(std::move(table));
}

HashedBowEncoder::HashedBowEncoder(Matrix<float> table) : m_table(std::move(table))
{
    if (m_table.rows() == 0 || m_table.cols() == 0) {
        throw ConfigError("encoder: bucket table must be non-empty");
    }
}

std::uint32_t HashedBowEncoder::bucket(std::string_view token) const noexcept
{
    return static_cast<std::uint32_t>(fnv1a64(token) % m_table.rows());
}

std::vector<std::uint32_t> HashedBowEncoder::buckets_of(std::string_view text) const
{
    std::vector<std::uint32_t> out;
    for (auto const &token : lexical::tokenize(text)) {
        if (corpus::is_stopword(token)) {
            continue;
        }
        auto stemmed = corpus::stem(token);
        if (corpus::is_stopword(stemmed)) {
            continue;
        }
        out.push_back(bucket(stemmed));
    }
    return out;
}

Encoded HashedBowEncoder::encode(std::string_view text) const
{
    auto b = buckets_of(text);
    return encode_buckets(b);
}

Encoded HashedBowEncoder::encode_buckets(std::span<std::uint32_t const> buckets) const
{
    Encoded out;
    out.vector.assign(dim(), 0.0);
    if (buckets.empty()) {
        out.empty = true;
        return out;
    }
    for (auto b : buckets) {
        expects(b < m_table.rows(), "bucket out of range");
        simd::axpy(1.0, m_table.row(b), std::span<double>(out.vector));
    }
    double inv = 1.0 / static_cast<double>(buckets.size());
    for (auto &x : out.vector) {
        x *= inv;
    }
    if (normalize(std::span<double>(out.vector)) == 0.0) {
        out.empty = true;
    }
    return out;
}

void HashedBowEncoder::save(std::filesystem::path const &path) const
{
    save_embedding_matrix(m_table, path);
}

HashedBowEncoder HashedBowEncoder::load(std::filesystem::path const &path)
{
    return HashedBowEncoder(load_embedding_matrix(path));
}

} // namespace park::dense
