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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace park::corpus {

/// The shipped stopword list (120 entries).
[[nodiscard]] std::span<std::string_view const> stopwords() noexcept;
[[nodiscard]] bool is_stopword(std::string_view token) noexcept;

/// Rule-based inflectional stemmer: plural -s/-es/-ies, -ing and -ed with consonant
/// undoubling and e-restoration. Rules are applied until none fires, so stem is idempotent.
[[nodiscard]] std::string stem(std::string_view word);

/// Query text from a title: lowercase, tokenize, drop stopwords, stem, drop stems that are
/// stopwords. Tokens are joined by single spaces; the result may be empty.
[[nodiscard]] std::string make_query(std::string_view title);

} // namespace park::corpus
