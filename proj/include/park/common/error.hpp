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
#include <stdexcept>
#include <string>

namespace park {

/// Base for every recoverable error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration or usage (maps to CLI exit code 1).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// A required upstream artifact is absent or stale (exit code 2).
class MissingArtifact : public Error {
  public:
    using Error::Error;
};

/// Input data could not be loaded or is inconsistent (exit code 3).
class DataError : public Error {
  public:
    using Error::Error;
};

class ParseError : public DataError {
  public:
    ParseError(std::string const &what, std::size_t line)
        : DataError(what + " (line " + std::to_string(line) + ")"), m_line(line)
    {}

    [[nodiscard]] std::size_t line() const noexcept { return m_line; }

  private:
    std::size_t m_line;
};

/// A caller broke a documented precondition. Not meant to be recovered from.
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline void expects(bool condition, char const *message)
{
    if (!condition) {
        throw ContractViolation(message);
    }
}

} // namespace park
