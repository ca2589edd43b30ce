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

#include <cmath>
#include <span>
#include <vector>

#include "park/simd/kernels.hpp"

namespace park {

[[nodiscard]] inline double norm(std::span<double const> v) { return std::sqrt(simd::dot(v, v)); }
[[nodiscard]] inline double norm(std::span<float const> v) { return std::sqrt(simd::dot(v, v)); }

/// Scales v to unit length in place. Returns the original norm; zero vectors are left alone.
inline double normalize(std::span<double> v)
{
    double n = norm(std::span<double const>(v));
    if (n > 0.0) {
        for (auto &x : v) {
            x /= n;
        }
    }
    return n;
}

inline double normalize(std::span<float> v)
{
    double n = norm(std::span<float const>(v));
    if (n > 0.0) {
        for (auto &x : v) {
            x = static_cast<float>(static_cast<double>(x) / n);
        }
    }
    return n;
}

/// Cosine similarity; 0 when either side is the zero vector.
[[nodiscard]] inline double cosine(std::span<double const> a, std::span<double const> b)
{
    double na = norm(a);
    double nb = norm(b);
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return simd::dot(a, b) / (na * nb);
}

[[nodiscard]] inline std::vector<double> widen(std::span<float const> v)
{
    return {v.begin(), v.end()};
}

} // namespace park
