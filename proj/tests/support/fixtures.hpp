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

#include <filesystem>
#include <random>
#include <string>

#include "park/corpus/synth.hpp"

namespace park::test {

/// A few hundred documents; generates in milliseconds.
inline corpus::SynthConfig small_synth(std::size_t docs = 1000)
{
    corpus::SynthConfig c;
    c.n_docs = docs;
    c.n_authors = docs / 2;
    c.n_venues = 10;
    c.n_affiliations = 20;
    c.n_topics = 5;
    c.subtopics_per_topic = 4;
    c.vocab_size = 2000;
    c.year_min = 2010;
    c.year_max = 2019;
    return c;
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    explicit TempDir(std::string const &name)
    {
        std::random_device rd;
        m_path = std::filesystem::temp_directory_path() / ("park_" + name + "_" + std::to_string(rd()));
        std::filesystem::remove_all(m_path);
        std::filesystem::create_directories(m_path);
    }
    TempDir(TempDir const &) = delete;
    TempDir &operator=(TempDir const &) = delete;
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(m_path, ec);
    }
    [[nodiscard]] std::filesystem::path const &path() const noexcept { return m_path; }

  private:
    std::filesystem::path m_path;
};

} // namespace park::test
