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
#include <span>

namespace park::fusion {

/// Two-sided paired randomization test on the mean difference: each permutation flips
/// the sign of every paired difference with probability 1/2. Returns
/// (1 + #{|perm mean| >= |observed mean|}) / (1 + permutations).
[[nodiscard]] double paired_randomization_test(std::span<double const> a, std::span<double const> b,
                                               std::size_t permutations = 10000, std::uint64_t seed = 7);

} // namespace park::fusion
