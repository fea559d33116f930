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
// Lossy-free storage scheme over 3x3 tiles: only the plus-shaped subset of
// each tile (top edge, middle row, bottom edge centers) is kept, five of nine
// values. The four corner values are recovered on demand from their stored
// neighbours and the matching input pixels, so queries stay exact.

#ifndef IIMG_COMPRESS_HPP_
#define IIMG_COMPRESS_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "iimg/box_filter.hpp"
#include "iimg/grid.hpp"

namespace iimg {

/// Rectangle sum answered from compressed storage, with the number of corner
/// lookups that had to be reconstructed rather than read directly.
struct QueryResult {
  std::uint64_t sum = 0;
  int reconstructed_corners = 0;
};

class CompressedIntegral {
 public:
  static constexpr Eigen::Index kTile = 3;

  /// Builds compressed storage from a full integral image and its source.
  /// Dimensions are trimmed down to multiples of 3; images smaller than 3x3
  /// cannot be tiled and are rejected.
  static CompressedIntegral build(const Grid64& integral, const Grid8& image);

  /// Reassembles storage from its serialized parts. `values` must hold five
  /// entries per tile in row-major tile order (top, left, center, right,
  /// bottom within each tile).
  CompressedIntegral(Eigen::Index rows, Eigen::Index cols, std::vector<std::uint64_t> values,
                     Grid8 source);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  std::size_t stored_count() const { return values_.size(); }

  /// True for the five plus positions of a tile, false for its corners.
  static bool is_stored(Eigen::Index row, Eigen::Index col);

  /// One integral value; corners are rebuilt from stored neighbours. Sets
  /// `reconstructed` when the value was not read directly.
  std::uint64_t cell(Eigen::Index row, Eigen::Index col, bool* reconstructed = nullptr) const;

  /// Four-corner rectangle sum. Corner lookups outside the grid contribute
  /// nothing and are not counted as reconstructions.
  QueryResult box_filter(const Rect& rect) const;

  const std::vector<std::uint64_t>& stored_values() const { return values_; }
  const Grid8& source() const { return source_; }

 private:
  std::uint64_t stored_at(Eigen::Index row, Eigen::Index col) const;

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<std::uint64_t> values_;
  Grid8 source_;
};

CompressedIntegral compress_plus_pattern(const Grid64& integral, const Grid8& image);

}  // namespace iimg

#endif  // IIMG_COMPRESS_HPP_
