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

#include <immintrin.h>

#include "park/simd/kernels.hpp"

namespace park::simd::avx2 {

namespace {

inline double horizontal_sum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_f64(double const *a, double const *b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double dot_f32(float const *a, float const *b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d a_lo = _mm256_cvtps_pd(_mm256_castps256_ps128(va));
        __m256d a_hi = _mm256_cvtps_pd(_mm256_extractf128_ps(va, 1));
        __m256d b_lo = _mm256_cvtps_pd(_mm256_castps256_ps128(vb));
        __m256d b_hi = _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1));
        acc0 = _mm256_fmadd_pd(a_lo, b_lo, acc0);
        acc1 = _mm256_fmadd_pd(a_hi, b_hi, acc1);
    }
    double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        sum += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return sum;
}

double squared_distance_f64(double const *a, double const *b, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(diff, diff, acc);
    }
    double sum = horizontal_sum(acc);
    for (; i < n; ++i) {
        double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

// The elementwise kernels avoid FMA so they round exactly like the scalar reference.

void axpy_f64(double alpha, double const *x, double *y, std::size_t n)
{
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void axpy_widen(double alpha, float const *x, double *y, std::size_t n)
{
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d wide = _mm256_cvtps_pd(_mm_loadu_ps(x + i));
        __m256d prod = _mm256_mul_pd(va, wide);
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
    }
    for (; i < n; ++i) {
        y[i] += alpha * static_cast<double>(x[i]);
    }
}

void axpy_narrow(double alpha, double const *x, float *y, std::size_t n)
{
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128 prod = _mm256_cvtpd_ps(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm_storeu_ps(y + i, _mm_add_ps(_mm_loadu_ps(y + i), prod));
    }
    for (; i < n; ++i) {
        y[i] += static_cast<float>(alpha * x[i]);
    }
}

void adamw_f32(float *w, float *m, float *v, float const *g, std::size_t n, AdamWStep const &s)
{
    float const decay = 1.0F - s.lr * s.weight_decay;
    float const one_minus_b1 = 1.0F - s.beta1;
    float const one_minus_b2 = 1.0F - s.beta2;
    __m256 const b1 = _mm256_set1_ps(s.beta1);
    __m256 const b2 = _mm256_set1_ps(s.beta2);
    __m256 const c1 = _mm256_set1_ps(one_minus_b1);
    __m256 const c2 = _mm256_set1_ps(one_minus_b2);
    __m256 const bc1 = _mm256_set1_ps(s.bias_correction1);
    __m256 const bc2 = _mm256_set1_ps(s.bias_correction2);
    __m256 const eps = _mm256_set1_ps(s.eps);
    __m256 const lr = _mm256_set1_ps(s.lr);
    __m256 const dec = _mm256_set1_ps(decay);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 grad = _mm256_loadu_ps(g + i);
        __m256 mi = _mm256_add_ps(_mm256_mul_ps(b1, _mm256_loadu_ps(m + i)), _mm256_mul_ps(c1, grad));
        __m256 vi = _mm256_add_ps(_mm256_mul_ps(b2, _mm256_loadu_ps(v + i)),
                                  _mm256_mul_ps(c2, _mm256_mul_ps(grad, grad)));
        _mm256_storeu_ps(m + i, mi);
        _mm256_storeu_ps(v + i, vi);
        __m256 m_hat = _mm256_div_ps(mi, bc1);
        __m256 v_hat = _mm256_div_ps(vi, bc2);
        __m256 update = _mm256_div_ps(m_hat, _mm256_add_ps(_mm256_sqrt_ps(v_hat), eps));
        __m256 wi = _mm256_sub_ps(_mm256_mul_ps(_mm256_loadu_ps(w + i), dec), _mm256_mul_ps(lr, update));
        _mm256_storeu_ps(w + i, wi);
    }
    for (; i < n; ++i) {
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

} // namespace park::simd::avx2
