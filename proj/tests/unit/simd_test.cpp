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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "park/simd/kernels.hpp"

using namespace park::simd;

namespace {

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
  protected:
    void SetUp() override
    {
        if (!supported(Isa::Avx2)) {
            GTEST_SKIP() << "CPU lacks AVX2/FMA";
        }
    }

    template <typename T>
    std::vector<T> random(std::size_t n, double scale = 1.0)
    {
        std::normal_distribution<double> dist(0.0, scale);
        std::vector<T> v(n);
        for (auto &x : v) {
            x = static_cast<T>(dist(m_rng));
        }
        return v;
    }

    std::mt19937_64 m_rng{GetParam() * 31 + 1};
};

double tolerance(std::size_t n) { return 1e-12 * static_cast<double>(n + 1); }

} // namespace

TEST_P(KernelEquivalence, Dot)
{
    auto n = GetParam();
    auto const &s = kernels(Isa::Scalar);
    auto const &a = kernels(Isa::Avx2);
    auto x = random<double>(n);
    auto y = random<double>(n);
    EXPECT_NEAR(s.dot_f64(x.data(), y.data(), n), a.dot_f64(x.data(), y.data(), n), tolerance(n));
    auto xf = random<float>(n);
    auto yf = random<float>(n);
    EXPECT_NEAR(s.dot_f32(xf.data(), yf.data(), n), a.dot_f32(xf.data(), yf.data(), n), tolerance(n));
    EXPECT_NEAR(s.squared_distance_f64(x.data(), y.data(), n), a.squared_distance_f64(x.data(), y.data(), n),
                tolerance(n));
}

TEST_P(KernelEquivalence, Axpy)
{
    auto n = GetParam();
    auto const &s = kernels(Isa::Scalar);
    auto const &a = kernels(Isa::Avx2);
    auto x = random<double>(n);
    auto y1 = random<double>(n);
    auto y2 = y1;
    s.axpy_f64(0.37, x.data(), y1.data(), n);
    a.axpy_f64(0.37, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(y1[i], y2[i], 1e-15);
    }
    auto xf = random<float>(n);
    s.axpy_widen(-1.5, xf.data(), y1.data(), n);
    a.axpy_widen(-1.5, xf.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(y1[i], y2[i], 1e-14);
    }
    auto z1 = random<float>(n);
    auto z2 = z1;
    s.axpy_narrow(0.25, x.data(), z1.data(), n);
    a.axpy_narrow(0.25, x.data(), z2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(z1[i], z2[i], 1e-6F);
    }
}

TEST_P(KernelEquivalence, AdamW)
{
    auto n = GetParam();
    auto const &s = kernels(Isa::Scalar);
    auto const &a = kernels(Isa::Avx2);
    auto w1 = random<float>(n);
    auto w2 = w1;
    std::vector<float> m1(n, 0.0F), v1(n, 0.0F);
    auto m2 = m1;
    auto v2 = v1;
    for (std::size_t step = 1; step <= 5; ++step) {
        auto g = random<float>(n, 0.1);
        auto st = adamw_step_for(1e-2F, 0.01F, step);
        s.adamw_f32(w1.data(), m1.data(), v1.data(), g.data(), n, st);
        a.adamw_f32(w2.data(), m2.data(), v2.data(), g.data(), n, st);
    }
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(w1[i], w2[i], 1e-6F);
        EXPECT_NEAR(m1[i], m2[i], 1e-6F);
        EXPECT_NEAR(v1[i], v2[i], 1e-7F);
    }
}

// Lengths around the 4/8-lane boundaries and the scalar tail.
INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence, ::testing::Values(0, 1, 3, 4, 7, 8, 9, 15, 16, 17, 64, 129, 1000));

TEST(Dispatch, ScalarAlwaysAvailable)
{
    EXPECT_TRUE(supported(Isa::Scalar));
    auto before = active_isa();
    select(Isa::Scalar);
    EXPECT_EQ(active_isa(), Isa::Scalar);
    std::vector<double> a{1, 2, 3};
    std::vector<double> b{4, 5, 6};
    EXPECT_EQ(dot(std::span<double const>(a), std::span<double const>(b)), 32.0);
    select(before);
}

TEST(AdamW, MatchesClosedFormFirstStep)
{
    // First step from zero moments moves each weight by lr * sign(g) (up to eps), plus decay.
    std::vector<float> w{1.0F, -2.0F};
    std::vector<float> m(2, 0.0F), v(2, 0.0F);
    std::vector<float> g{0.5F, -0.25F};
    auto st = adamw_step_for(0.1F, 0.0F, 1);
    kernels(Isa::Scalar).adamw_f32(w.data(), m.data(), v.data(), g.data(), 2, st);
    EXPECT_NEAR(w[0], 0.9F, 1e-6F);
    EXPECT_NEAR(w[1], -1.9F, 1e-6F);
}
