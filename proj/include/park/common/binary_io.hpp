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

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include "park/common/error.hpp"

namespace park::binary {

static_assert(std::endian::native == std::endian::little,
              "on-disk formats are little-endian; big-endian hosts need byte swapping");

template <typename T>
    requires std::is_arithmetic_v<T>
void write(std::ostream &out, T value)
{
    out.write(reinterpret_cast<char const *>(&value), sizeof(T));
}

template <typename T>
    requires std::is_arithmetic_v<T>
T read(std::istream &in)
{
    T value{};
    in.read(reinterpret_cast<char *>(&value), sizeof(T));
    if (!in) {
        throw DataError("unexpected end of binary stream");
    }
    return value;
}

inline void write_string(std::ostream &out, std::string const &s)
{
    write<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream &in)
{
    auto size = read<std::uint32_t>(in);
    std::string s(size, '\0');
    in.read(s.data(), size);
    if (!in) {
        throw DataError("unexpected end of binary stream");
    }
    return s;
}

inline void write_magic(std::ostream &out, std::array<char, 4> const &magic, std::uint32_t version)
{
    out.write(magic.data(), 4);
    write<std::uint32_t>(out, version);
}

/// Reads and checks a 4-byte magic followed by a u32 version.
inline void expect_magic(std::istream &in, std::array<char, 4> const &magic, std::uint32_t version,
                         std::string const &what)
{
    std::array<char, 4> found{};
    in.read(found.data(), 4);
    if (!in || found != magic) {
        throw DataError(what + ": bad magic bytes");
    }
    auto v = read<std::uint32_t>(in);
    if (v != version) {
        throw DataError(what + ": unsupported format version " + std::to_string(v) + " (expected "
                        + std::to_string(version) + ")");
    }
}

} // namespace park::binary
