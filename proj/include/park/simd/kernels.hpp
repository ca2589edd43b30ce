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

#include <cstddef>
#include <span>
#include <string_view>

namespace park::simd {

/// Instruction-set variants of the dense kernels. Scalar is the reference.
enum class Isa { Scalar, Avx2 };

[[nodiscard]] std::string_view name(Isa isa) noexcept;
[[nodiscard]] bool supported(Isa isa) noexcept;

/// The variant currently used by the dispatching entry points below.
/// Chosen at startup: AVX2+FMA when the CPU has it, unless PARK_SIMD=scalar.
[[nodiscard]] Isa active_isa() noexcept;

/// Forces a variant. Throws ConfigError when the CPU lacks it.
void select(Isa isa);

/// One decoupled-weight-decay Adam step. Bias corrections are 1 - beta^t.
struct AdamWStep {
    float lr = 1e-3F;
    float beta1 = 0.9F;
    float beta2 = 0.999F;
    float eps = 1e-8F;
    float weight_decay = 0.01F;
    float bias_correction1 = 1.0F;
    float bias_correction2 = 1.0F;
};

[[nodiscard]] AdamWStep adamw_step_for(float lr, float weight_decay, std::size_t step) noexcept;

// Dispatching entry points. Sizes of paired spans must agree.

[[nodiscard]] double dot(std::span<double const> a, std::span<double const> b);
/// Float inputs, double accumulation.
[[nodiscard]] double dot(std::span<float const> a, std::span<float const> b);
[[nodiscard]] double squared_distance(std::span<double const> a, std::span<double const> b);
/// y += alpha * x
void axpy(double alpha, std::span<double const> x, std::span<double> y);
/// y += alpha * widen(x)
void axpy(double alpha, std::span<float const> x, std::span<double> y);
/// y += narrow(alpha * x)
void axpy(double alpha, std::span<double const> x, std::span<float> y);
void adamw(std::span<float> weights, std::span<float> m, std::span<float> v,
           std::span<float const> grad, AdamWStep const &step);

/// Raw kernel signatures shared by every variant.
struct KernelTable {
    double (*dot_f64)(double const *, double const *, std::size_t);
    double (*dot_f32)(float const *, float const *, std::size_t);
    double (*squared_distance_f64)(double const *, double const *, std::size_t);
    void (*axpy_f64)(double, double const *, double *, std::size_t);
    void (*axpy_widen)(double, float const *, double *, std::size_t);
    void (*axpy_narrow)(double, double const *, float *, std::size_t);
    void (*adamw_f32)(float *, float *, float *, float const *, std::size_t, AdamWStep const &);
};

/// Kernel table of a specific variant; used by the equivalence tests.
[[nodiscard]] KernelTable const &kernels(Isa isa);

namespace scalar {
extern KernelTable const table;
}

namespace avx2 {
/// Only valid when compiled with AVX2 support; check supported(Isa::Avx2) first.
extern KernelTable const table;
} // namespace avx2

} // namespace park::simd
