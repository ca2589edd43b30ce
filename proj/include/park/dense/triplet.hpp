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

#include <span>
#include <vector>

namespace park::dense {

using VectorView = std::span<double const>;

/// Sum over negatives of max(|q - d+|_2 - |q - d-|_2 + margin, 0).
[[nodiscard]] double triplet_loss(VectorView query, VectorView positive, std::span<VectorView const> negatives,
                                  double margin);

struct TripletGradient {
    double loss = 0.0;
    std::vector<double> query;
    std::vector<double> positive;
    std::vector<std::vector<double>> negatives;
};

/// Loss and its gradient with respect to every input. Inactive hinges and zero-length
/// differences contribute a zero subgradient.
[[nodiscard]] TripletGradient triplet_loss_gradient(VectorView query, VectorView positive,
                                                    std::span<VectorView const> negatives, double margin);

} // namespace park::dense
