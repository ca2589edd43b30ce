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

#include <cmath>

#include "park/simd/kernels.hpp"

namespace park::simd::scalar {

namespace {

double dot_f64(double const *a, double const *b, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double dot_f32(float const *a, float const *b, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return sum;
}

double squared_distance_f64(double const *a, double const *b, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

void axpy_f64(double alpha, double const *x, double *y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void axpy_widen(double alpha, float const *x, double *y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * static_cast<double>(x[i]);
    }
}

void axpy_narrow(double alpha, double const *x, float *y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += static_cast<float>(alpha * x[i]);
    }
}

// Operation order matches the AVX2 variant exactly so both produce identical bits.
void adamw_f32(float *w, float *m, float *v, float const *g, std::size_t n, AdamWStep const &s)
{
    float const decay = 1.0F - s.lr * s.weight_decay;
    float const one_minus_b1 = 1.0F - s.beta1;
    float const one_minus_b2 = 1.0F - s.beta2;
    for (std::size_t i = 0; i < n; ++i) {
        float grad = g[i];
        float mi = s.beta1 * m[i] + one_minus_b1 * grad;
        float vi = s.beta2 * v[i] + one_minus_b2 * (grad * grad);
        m[i] = mi;
        v[i] = vi;
        float m_hat = mi / s.bias_correction1;
        float v_hat = vi / s.bias_correction2;
        float update = m_hat / (std::sqrt(v_hat) + s.eps);
        w[i] = w[i] * decay - s.lr * update;
    }
}

} // namespace

KernelTable const table{
    dot_f64, dot_f32, squared_distance_f64, axpy_f64, axpy_widen, axpy_narrow, adamw_f32,
};

} // namespace park::simd::scalar
