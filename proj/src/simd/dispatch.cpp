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

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "park/common/error.hpp"
#include "park/simd/kernels.hpp"

namespace park::simd {

namespace {

bool cpu_has_avx2() noexcept
{
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() noexcept
{
    if (char const *env = std::getenv("PARK_SIMD"); env != nullptr && std::string(env) == "scalar") {
        return Isa::Scalar;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa> &current()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

KernelTable const &active() { return kernels(current().load(std::memory_order_relaxed)); }

void check_sizes(std::size_t a, std::size_t b)
{
    expects(a == b, "simd kernel: operand sizes differ");
}

} // namespace

std::string_view name(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
        return cpu_has_avx2();
    }
    return false;
}

Isa active_isa() noexcept { return current().load(); }

void select(Isa isa)
{
    if (!supported(isa)) {
        throw ConfigError("simd variant " + std::string(name(isa)) + " is not supported on this CPU");
    }
    current().store(isa);
}

KernelTable const &kernels(Isa isa)
{
    if (isa == Isa::Avx2) {
        if (!supported(Isa::Avx2)) {
            throw ConfigError("avx2 kernels requested on a CPU without avx2/fma");
        }
        return avx2::table;
    }
    return scalar::table;
}

AdamWStep adamw_step_for(float lr, float weight_decay, std::size_t step) noexcept
{
    AdamWStep s;
    s.lr = lr;
    s.weight_decay = weight_decay;
    auto t = static_cast<double>(step);
    s.bias_correction1 = static_cast<float>(1.0 - std::pow(static_cast<double>(s.beta1), t));
    s.bias_correction2 = static_cast<float>(1.0 - std::pow(static_cast<double>(s.beta2), t));
    return s;
}

double dot(std::span<double const> a, std::span<double const> b)
{
    check_sizes(a.size(), b.size());
    return active().dot_f64(a.data(), b.data(), a.size());
}

double dot(std::span<float const> a, std::span<float const> b)
{
    check_sizes(a.size(), b.size());
    return active().dot_f32(a.data(), b.data(), a.size());
}

double squared_distance(std::span<double const> a, std::span<double const> b)
{
    check_sizes(a.size(), b.size());
    return active().squared_distance_f64(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<double const> x, std::span<double> y)
{
    check_sizes(x.size(), y.size());
    active().axpy_f64(alpha, x.data(), y.data(), x.size());
}

void axpy(double alpha, std::span<float const> x, std::span<double> y)
{
    check_sizes(x.size(), y.size());
    active().axpy_widen(alpha, x.data(), y.data(), x.size());
}

void axpy(double alpha, std::span<double const> x, std::span<float> y)
{
    check_sizes(x.size(), y.size());
    active().axpy_narrow(alpha, x.data(), y.data(), x.size());
}

void adamw(std::span<float> weights, std::span<float> m, std::span<float> v,
           std::span<float const> grad, AdamWStep const &step)
{
    check_sizes(weights.size(), m.size());
    check_sizes(weights.size(), v.size());
    check_sizes(weights.size(), grad.size());
    active().adamw_f32(weights.data(), m.data(), v.data(), grad.data(), weights.size(), step);
}

} // namespace park::simd
