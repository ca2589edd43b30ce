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

#include <filesystem>

#include "park/common/matrix.hpp"

namespace park::dense {

/// Embedding binary format: "PKEM", u32 version, u32 count, u32 dim, then count*dim
/// little-endian float32 values, row-major. Shared by document stores, encoder tables and
/// knowledge-graph embeddings.
void save_embedding_matrix(Matrix<float> const &matrix, std::filesystem::path const &path);
[[nodiscard]] Matrix<float> load_embedding_matrix(std::filesystem::path const &path);

} // namespace park::dense
