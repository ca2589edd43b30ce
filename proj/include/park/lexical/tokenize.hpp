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

#include <string>
#include <string_view>
#include <vector>

namespace park::lexical {

/// Lowercases ASCII and splits on every non-alphanumeric byte; empty pieces are dropped.
[[nodiscard]] std::vector<std::string> tokenize(std::string_view text);

/// Index-time analysis: tokenize, then stem each token. No stopword removal.
[[nodiscard]] std::vector<std::string> analyze(std::string_view text);

} // namespace park::lexical
