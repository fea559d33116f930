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
//
// Binary dump formats. Both are little-endian throughout.
//
//   IIMG: "IIMG", version byte 0x01, width and height as 32-bit words, one
//   word-length byte, then row-major values packed in ceil(word_bits/8)
//   bytes each. Holds a full integral image or a word-length-reduced one.
//
//   IICP: "IICP", trimmed width and height as 32-bit words, the plus-pattern
//   values in tile order (tiles left to right, top to bottom; within a tile
//   top, left, center, right, bottom) packed in ceil(word/8) bytes for the
//   trimmed size's full word, then the retained input image bytes row-major.

#ifndef IIMG_IIMG_IO_HPP_
#define IIMG_IIMG_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "iimg/compress.hpp"
#include "iimg/grid.hpp"

namespace iimg {

struct IimgFile {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  int word_bits = 0;
  Grid64 values;
};

/// Every value must fit in `word_bits`; reduce (mask) values first when
/// writing a word-length-reduced image.
void write_iimg(std::ostream& out, const Grid64& values, int word_bits);
void write_iimg_file(const std::string& path, const Grid64& values, int word_bits);

IimgFile read_iimg(std::istream& in);
IimgFile read_iimg_file(const std::string& path);

void write_iicp(std::ostream& out, const CompressedIntegral& compressed);
void write_iicp_file(const std::string& path, const CompressedIntegral& compressed);

CompressedIntegral read_iicp(std::istream& in);
CompressedIntegral read_iicp_file(const std::string& path);

enum class DumpKind { kIimg, kIicp };

/// Identifies a dump by its magic; nullopt when the file cannot be read or
/// starts with neither magic.
std::optional<DumpKind> detect_dump_file(const std::string& path);

}  // namespace iimg

#endif  // IIMG_IIMG_IO_HPP_
