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

#ifndef IIMG_PNM_HPP_
#define IIMG_PNM_HPP_

#include <iosfwd>
#include <string>

#include "iimg/binarize.hpp"
#include "iimg/grid.hpp"

namespace iimg {

/// Reads an 8-bit greyscale image in PGM form, plain (P2) or raw (P5).
/// Comments and the usual whitespace rules apply; only maxval 255 is
/// accepted. Malformed input raises ParseError with the byte offset of the
/// problem; out-of-range dimensions raise DomainError.
Grid8 read_pgm(std::istream& in);
Grid8 read_pgm_file(const std::string& path);

/// Raw (P5) greyscale output.
void write_pgm(std::ostream& out, const Grid8& image);
void write_pgm_file(const std::string& path, const Grid8& image);

/// Binary images: P4 bitmap (1 = black = foreground) or P5 with foreground
/// rendered as 0 and background as 255.
void write_pbm(std::ostream& out, const BinaryGrid& image);
void write_pbm_file(const std::string& path, const BinaryGrid& image);
void write_pgm(std::ostream& out, const BinaryGrid& image);
void write_pgm_file(const std::string& path, const BinaryGrid& image);

}  // namespace iimg

#endif  // IIMG_PNM_HPP_
