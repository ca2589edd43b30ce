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
#include <string>
#include <string_view>

namespace park {

/// Lowercase hex SHA-256 of a byte string.
[[nodiscard]] std::string sha256_hex(std::string_view bytes);

/// Lowercase hex SHA-256 of a file's contents.
[[nodiscard]] std::string sha256_file(std::filesystem::path const &path);

/// 64-bit FNV-1a. Stable across platforms; used for token hashing.
[[nodiscard]] constexpr std::uint64_t fnv1a64(std::string_view s) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace park
