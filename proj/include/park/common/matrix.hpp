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
#include <vector>

#include "park/common/error.hpp"

namespace park {

/// Dense row-major matrix. Rows are exposed as spans.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : m_rows(rows), m_cols(cols), m_data(rows * cols, fill)
    {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : m_rows(rows), m_cols(cols), m_data(std::move(data))
    {
        expects(m_data.size() == rows * cols, "matrix data size does not match shape");
    }

    [[nodiscard]] std::size_t rows() const noexcept { return m_rows; }
    [[nodiscard]] std::size_t cols() const noexcept { return m_cols; }
    [[nodiscard]] bool empty() const noexcept { return m_data.empty(); }

    [[nodiscard]] std::span<T> row(std::size_t i) noexcept
    {
        return {m_data.data() + i * m_cols, m_cols};
    }
    [[nodiscard]] std::span<T const> row(std::size_t i) const noexcept
    {
        return {m_data.data() + i * m_cols, m_cols};
    }

    [[nodiscard]] std::span<T> data() noexcept { return m_data; }
    [[nodiscard]] std::span<T const> data() const noexcept { return m_data; }

    friend bool operator==(Matrix const &, Matrix const &) = default;

  private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_data;
};

} // namespace park
