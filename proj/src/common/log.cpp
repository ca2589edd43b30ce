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

#include "park/common/log.hpp"

#include <atomic>

namespace park::log {

namespace {
std::atomic<bool> g_quiet{false};
}

void set_quiet(bool quiet) noexcept { g_quiet.store(quiet); }
bool quiet() noexcept { return g_quiet.load(); }

} // namespace park::log
