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

#include "park/dense/triplet.hpp"

#include <cmath>

#include "park/common/error.hpp"
#include "park/simd/kernels.hpp"

namespace park::dense {

namespace {

void check(VectorView query, VectorView positive, std::span<VectorView const> negatives, double margin)
{
    expects(margin > 0.0, "triplet margin must be positive");
    expects(query.size() == positive.size(), "triplet: dimension mismatch");
    for (auto n : negatives) {
        expects(n.size() == query.size(), "triplet: dimension mismatch");
    }
}

} // namespace

double triplet_loss(VectorView query, VectorView positive, std::span<VectorView const> negatives, double margin)
{
    check(query, positive, negatives, margin);
    double pos = std::sqrt(simd::squared_distance(query, positive));
    double loss = 0.0;
    for (auto n : negatives) {
        loss += std::max(pos - std::sqrt(simd::squared_distance(query, n)) + margin, 0.0);
    }
    return loss;
}

TripletGradient triplet_loss_gradient(VectorView query, VectorView positive,
                                      std::span<VectorView const> negatives, double margin)
{
    check(query, positive, negatives, margin);
    auto d = query.size();
    TripletGradient g;
    g.query.assign(d, 0.0);
    g.positive.assign(d, 0.0);
    g.negatives.assign(negatives.size(), std::vector<double>(d, 0.0));

    std::vector<double> pos_dir(d);
    double pos = std::sqrt(simd::squared_distance(query, positive));
    for (std::size_t i = 0; i < d; ++i) {
        pos_dir[i] = pos > 0.0 ? (query[i] - positive[i]) / pos : 0.0;
    }
    std::size_t active = 0;
    for (std::size_t k = 0; k < negatives.size(); ++k) {
        auto n = negatives[k];
        double neg = std::sqrt(simd::squared_distance(query, n));
        double hinge = pos - neg + margin;
        if (hinge <= 0.0) {
            continue;
        }
        g.loss += hinge;
        ++active;
        if (neg > 0.0) {
            for (std::size_t i = 0; i < d; ++i) {
                double dir = (query[i] - n[i]) / neg;
                g.query[i] -= dir;
                g.negatives[k][i] = dir;
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        g.query[i] += static_cast<double>(active) * pos_dir[i];
        g.positive[i] = -static_cast<double>(active) * pos_dir[i];
    }
    return g;
}

} // namespace park::dense
