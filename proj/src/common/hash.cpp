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

#include "park/common/hash.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "park/common/error.hpp"

namespace park {

namespace {

struct DigestContext {
    DigestContext() : ctx(EVP_MD_CTX_new())
    {
        if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
            throw Error("sha256: digest initialisation failed");
        }
    }
    ~DigestContext() { EVP_MD_CTX_free(ctx); }
    DigestContext(DigestContext const &) = delete;
    DigestContext &operator=(DigestContext const &) = delete;

    void update(void const *data, std::size_t size)
    {
        if (EVP_DigestUpdate(ctx, data, size) != 1) {
            throw Error("sha256: digest update failed");
        }
    }

    std::string finish()
    {
        std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
        unsigned int length = 0;
        if (EVP_DigestFinal_ex(ctx, digest.data(), &length) != 1) {
            throw Error("sha256: digest finalisation failed");
        }
        std::ostringstream hex;
        for (unsigned i = 0; i < length; ++i) {
            hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
        }
        return hex.str();
    }

    EVP_MD_CTX *ctx;
};

} // namespace

std::string sha256_hex(std::string_view bytes)
{
    DigestContext digest;
    digest.update(bytes.data(), bytes.size());
    return digest.finish();
}

std::string sha256_file(std::filesystem::path const &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string() + " for hashing");
    }
    DigestContext digest;
    std::array<char, 1 << 16> buffer{};
    while (in) {
        in.read(buffer.data(), buffer.size());
        digest.update(buffer.data(), static_cast<std::size_t>(in.gcount()));
    }
    return digest.finish();
}

} // namespace park
