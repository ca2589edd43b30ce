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

#include "park/corpus/text.hpp"

#include <algorithm>
#include <array>

#include "park/lexical/tokenize.hpp"

namespace park::corpus {

namespace {

// Sorted for binary search.
constexpr std::array<std::string_view, 120> kStopwords{
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are",
    "as", "at", "be", "because", "been", "before", "being", "below", "between", "both", "but",
    "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "few", "for",
    "from", "further", "had", "has", "have", "having", "he", "her", "here", "him", "his", "how",
    "i", "if", "in", "into", "is", "it", "its", "itself", "just", "me", "more", "most", "my",
    "myself", "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or", "other",
    "our", "ours", "out", "over", "own", "same", "she", "should", "so", "some", "such", "than",
    "that", "the", "their", "them", "themselves", "then", "there", "these", "they", "this",
    "those", "through", "to", "too", "under", "until", "up", "very", "was", "we", "were",
    "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with", "would",
    "you", "your", "yours", "yourself",
};

bool ends_with(std::string_view s, std::string_view suffix) noexcept
{
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) noexcept
{
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view s) noexcept
{
    return std::any_of(s.begin(), s.end(), [](char c) { return is_vowel(c) || c == 'y'; });
}

bool is_consonant(char c) noexcept
{
    return c >= 'a' && c <= 'z' && !is_vowel(c);
}

// Stem endings that regain a silent e once -ing/-ed is removed (pars-ing -> parse).
constexpr std::array<std::string_view, 13> kRestoreE{
    "at", "bl", "iz", "iv", "rs", "ut", "od", "ac", "ov", "ag", "rg", "dg", "nc",
};

std::string restore(std::string_view s)
{
    auto n = s.size();
    if (n >= 2 && s[n - 1] == s[n - 2] && is_consonant(s[n - 1]) && s[n - 1] != 'l' && s[n - 1] != 's'
        && s[n - 1] != 'z') {
        return std::string(s.substr(0, n - 1));
    }
    bool restore_e = std::any_of(kRestoreE.begin(), kRestoreE.end(),
                                 [&](std::string_view e) { return ends_with(s, e); });
    if (s == "us") {
        return "use";
    }
    bool short_cvc = n == 3 && is_consonant(s[0]) && is_vowel(s[1]) && is_consonant(s[2]) && s[2] != 'w'
                     && s[2] != 'x' && s[2] != 'y';
    if (restore_e || short_cvc) {
        return std::string(s) + "e";
    }
    return std::string(s);
}

// One rule application; returns the input unchanged when no rule fires.
std::string stem_step(std::string_view w)
{
    auto n = w.size();
    if (n > 4 && ends_with(w, "ies")) {
        return std::string(w.substr(0, n - 3)) + "y";
    }
    if (ends_with(w, "sses")) {
        return std::string(w.substr(0, n - 2));
    }
    if (n > 4 && (ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "xes") || ends_with(w, "zes"))) {
        return std::string(w.substr(0, n - 2));
    }
    if (n > 3 && ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is")) {
        return std::string(w.substr(0, n - 1));
    }
    if (ends_with(w, "ing")) {
        auto base = w.substr(0, n - 3);
        if (base.size() >= 2 && has_vowel(base)) {
            return restore(base);
        }
        return std::string(w);
    }
    if (n > 4 && ends_with(w, "ied")) {
        return std::string(w.substr(0, n - 3)) + "y";
    }
    if (ends_with(w, "ed") && !ends_with(w, "eed")) {
        auto base = w.substr(0, n - 2);
        if (base.size() >= 2 && has_vowel(base)) {
            return restore(base);
        }
    }
    return std::string(w);
}

} // namespace

std::span<std::string_view const> stopwords() noexcept { return kStopwords; }

bool is_stopword(std::string_view token) noexcept
{
    return std::binary_search(kStopwords.begin(), kStopwords.end(), token);
}

std::string stem(std::string_view word)
{
    std::string current(word);
    while (true) {
        auto next = stem_step(current);
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
}

std::string make_query(std::string_view title)
{
    std::string out;
    for (auto const &token : lexical::tokenize(title)) {
        if (is_stopword(token)) {
            continue;
        }
        auto s = stem(token);
        if (s.empty() || is_stopword(s)) {
            continue;
        }
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += s;
    }
    return out;
}

} // namespace park::corpus
