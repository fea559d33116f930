// Copyright 2026 The iimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IIMG_ERRORS_HPP_
#define IIMG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iimg {

// Malformed input bytes (PGM headers, dump files). Carries the offset of the
// offending byte; what() already names it.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Well-formed input that violates a domain bound: out-of-range rectangles,
// queries into trimmed margins, oversized images.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iimg

#endif  // IIMG_ERRORS_HPP_
