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

#include "park/fusion/significance.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "park/common/error.hpp"

namespace park::fusion {

double paired_randomization_test(std::span<double const> a, std::span<double const> b, std::size_t permutations,
                                 std::uint64_t seed)
{
    if (a.size() != b.size()) {
        throw DataError("randomization test: paired arrays differ in length (" + std::to_string(a.size()) + " vs "
                        + std::to_string(b.size()) + ")");
    }
    if (a.empty()) {
        return 1.0;
    }
    std::vector<double> diff(a.size());
    double observed = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff[i] = a[i] - b[i];
        observed += diff[i];
    }
    auto n = static_cast<double>(diff.size());
    observed = std::abs(observed / n);
    // Guards the all-same assignment against summation-order rounding.
    double threshold = observed - 1e-12;
    std::mt19937_64 rng(seed);
    std::size_t extreme = 0;
    for (std::size_t p = 0; p < permutations; ++p) {
        double sum = 0.0;
        std::uint64_t bits = 0;
        int left = 0;
        for (double d : diff) {
            if (left == 0) {
                bits = rng();
                left = 64;
            }
            sum += (bits & 1U) != 0 ? d : -d;
            bits >>= 1U;
            --left;
        }
        if (std::abs(sum / n) >= threshold) {
            ++extreme;
        }
    }
    return static_cast<double>(extreme + 1) / static_cast<double>(permutations + 1);
}

} // namespace park::fusion
