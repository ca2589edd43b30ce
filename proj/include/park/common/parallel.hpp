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

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace park {

/// Splits [0, n) into `threads` contiguous chunks and runs fn(begin, end, worker) on each.
/// With threads <= 1 everything runs inline on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn)
{
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n, 0U);
        return;
    }
    auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, begin, end, w] {
                try {
                    if (begin < end) {
                        fn(begin, end, w);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace park
