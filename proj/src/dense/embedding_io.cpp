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

#include "park/dense/embedding_io.hpp"

#include <fstream>

#include "park/common/binary_io.hpp"

namespace park::dense {

namespace {
constexpr std::array<char, 4> kMagic{'P', 'K', 'E', 'M'};
constexpr std::uint32_t kVersion = 1;
} // namespace

void save_embedding_matrix(Matrix<float> const &matrix, std::filesystem::path const &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    binary::write_magic(out, kMagic, kVersion);
    binary::write<std::uint32_t>(out, static_cast<std::uint32_t>(matrix.rows()));
    binary::write<std::uint32_t>(out, static_cast<std::uint32_t>(matrix.cols()));
    auto data = matrix.data();
    out.write(reinterpret_cast<char const *>(data.data()), static_cast<std::streamsize>(data.size_bytes()));
    if (!out) {
        throw Error("failed writing " + path.string());
    }
}

Matrix<float> load_embedding_matrix(std::filesystem::path const &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingArtifact("missing embedding file " + path.string());
    }
    binary::expect_magic(in, kMagic, kVersion, path.string());
    auto count = binary::read<std::uint32_t>(in);
    auto dim = binary::read<std::uint32_t>(in);
    std::vector<float> values(static_cast<std::size_t>(count) * dim);
    in.read(reinterpret_cast<char *>(values.data()), static_cast<std::streamsize>(values.size() * sizeof(float)));
    if (!in) {
        throw DataError(path.string() + ": truncated embedding data (declared " + std::to_string(count) + " x "
                        + std::to_string(dim) + ")");
    }
    in.peek();
    if (!in.eof()) {
        throw DataError(path.string() + ": trailing bytes after embedding data");
    }
    return {count, dim, std::move(values)};
}

} // namespace park::dense
