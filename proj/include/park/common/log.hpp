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

#include <iostream>
#include <sstream>
#include <string>

namespace park::log {

void set_quiet(bool quiet) noexcept;
[[nodiscard]] bool quiet() noexcept;

/// Progress line on stderr, suppressed under --quiet.
template <typename... Args>
void info(Args const &...args)
{
    if (quiet()) {
        return;
    }
    std::ostringstream line;
    (line << ... << args);
    std::cerr << line.str() << '\n';
}

/// Warnings are always printed.
template <typename... Args>
void warn(Args const &...args)
{
    std::ostringstream line;
    line << "warning: ";
    (line << ... << args);
    std::cerr << line.str() << '\n';
}

} // namespace park::log
