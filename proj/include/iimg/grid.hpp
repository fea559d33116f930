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

#ifndef IIMG_GRID_HPP_
#define IIMG_GRID_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "iimg/errors.hpp"

namespace iimg {

/// Dense row-major pixel/value grid. (row, col) indexing, row 0 at the top.
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Grid8 = Grid<std::uint8_t>;    // 8-bit input images
using Grid32 = Grid<std::uint32_t>;  // squared pixels and other intermediates
using Grid64 = Grid<std::uint64_t>;  // exact integral values

inline constexpr int kPixelBits = 8;
inline constexpr std::uint64_t kMaxPixel = 255;

// Values stay exact in 64-bit arithmetic with a wide margin at this cap.
inline constexpr Eigen::Index kMaxDim = Eigen::Index{1} << 15;

/// Smallest word length whose unsigned range [0, 2^bits - 1] covers max_value.
inline int bits_for(std::uint64_t max_value) {
  int bits = 1;
  while (bits < 64 && ((std::uint64_t{1} << bits) - 1) < max_value) ++bits;
  return bits;
}

/// Word length of an integral value for a width x height 8-bit image.
inline int bits_for_integral(Eigen::Index width, Eigen::Index height) {
  return bits_for(kMaxPixel * static_cast<std::uint64_t>(width) *
                  static_cast<std::uint64_t>(height));
}

/// Word length of a cumulative row sum (one image row).
inline int bits_for_row_sum(Eigen::Index width) {
  return bits_for(kMaxPixel * static_cast<std::uint64_t>(width));
}

/// Word length of a cumulative column sum (one image column).
inline int bits_for_column_sum(Eigen::Index height) {
  return bits_for(kMaxPixel * static_cast<std::uint64_t>(height));
}

template <typename Derived>
void require_valid_dims(const Eigen::ArrayBase<Derived>& grid) {
  if (grid.rows() < 1 || grid.cols() < 1) throw DomainError("image must be at least 1x1");
  if (grid.rows() > kMaxDim || grid.cols() > kMaxDim)
    throw DomainError("image exceeds the supported maximum of 32768x32768");
}

}  // namespace iimg

#endif  // IIMG_GRID_HPP_
