/*
 * Copyright 2026 The fhtskew Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FHTSKEW_ERROR_HPP
#define FHTSKEW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fhtskew {

/// Argument outside an operation's mathematical domain (bad size, shift, grid...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input too small or flat for the requested operation to be meaningful.
class DegenerateInputError : public DomainError {
 public:
  explicit DegenerateInputError(const std::string& what) : DomainError(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// File readable but in an encoding we do not handle.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fhtskew

#endif  // FHTSKEW_ERROR_HPP
