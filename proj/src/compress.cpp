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

#include "iimg/compress.hpp"

#include "iimg/errors.hpp"

namespace iimg {

namespace {

constexpr Eigen::Index kT = CompressedIntegral::kTile;

// Position of a plus cell inside the per-tile value group, or -1 for corners.
int plus_offset(Eigen::Index row_in_tile, Eigen::Index col_in_tile) {
  if (row_in_tile == 0) return col_in_tile == 1 ? 0 : -1;
  if (row_in_tile == 1) return static_cast<int>(col_in_tile) + 1;
  return col_in_tile == 1 ? 4 : -1;
}

}  // namespace

CompressedIntegral CompressedIntegral::build(const Grid64& integral, const Grid8& image) {
  if (integral.rows() != image.rows() || integral.cols() != image.cols())
    throw DomainError("integral image and source image sizes differ");
  const Eigen::Index rows = integral.rows() - integral.rows() % kT;
  const Eigen::Index cols = integral.cols() - integral.cols() % kT;
  if (rows < kT || cols < kT)
    throw DomainError("image too small to tile: need at least 3x3 pixels");
  std::vector<std::uint64_t> values;
  values.reserve(static_cast<std::size_t>(rows / kT * cols / kT * 5));
  for (Eigen::Index tr = 0; tr < rows; tr += kT)
    for (Eigen::Index tc = 0; tc < cols; tc += kT) {
      values.push_back(integral(tr, tc + 1));
      values.push_back(integral(tr + 1, tc));
      values.push_back(integral(tr + 1, tc + 1));
      values.push_back(integral(tr + 1, tc + 2));
      values.push_back(integral(tr + 2, tc + 1));
    }
  return CompressedIntegral(rows, cols, std::move(values),
                            image.topLeftCorner(rows, cols).eval());
}

CompressedIntegral::CompressedIntegral(Eigen::Index rows, Eigen::Index cols,
                                       std::vector<std::uint64_t> values, Grid8 source)
    : rows_(rows), cols_(cols), values_(std::move(values)), source_(std::move(source)) {
  if (rows_ < kT || cols_ < kT || rows_ % kT != 0 || cols_ % kT != 0)
    throw DomainError("compressed sizes must be positive multiples of 3");
  if (source_.rows() != rows_ || source_.cols() != cols_)
    throw DomainError("packed source image size does not match the compressed size");
  const std::size_t expected = static_cast<std::size_t>(rows_ / kT * cols_ / kT * 5);
  if (values_.size() != expected)
    throw DomainError("compressed value count does not match the tile count");
}

bool CompressedIntegral::is_stored(Eigen::Index row, Eigen::Index col) {
  return plus_offset(row % kT, col % kT) >= 0;
}

std::uint64_t CompressedIntegral::stored_at(Eigen::Index row, Eigen::Index col) const {
  const std::size_t tile = static_cast<std::size_t>((row / kT) * (cols_ / kT) + col / kT);
  return values_[tile * 5 + static_cast<std::size_t>(plus_offset(row % kT, col % kT))];
}

std::uint64_t CompressedIntegral::cell(Eigen::Index row, Eigen::Index col,
                                       bool* reconstructed) const {
  if (row < 0 || col < 0 || row >= rows_ || col >= cols_)
    throw DomainError("cell lies outside the compressed image");
  if (reconstructed) *reconstructed = false;
  if (is_stored(row, col)) return stored_at(row, col);
  if (reconstructed) *reconstructed = true;
  const bool top_edge = row % kT == 0;
  const bool left_edge = col % kT == 0;
  // Each corner equals a two-neighbour sum minus the shared diagonal value,
  // corrected by the input pixel that separates them; additions come first so
  // unsigned arithmetic never dips below zero.
  if (top_edge && left_edge) {
    const std::uint64_t pix = source_(row + 1, col + 1);
    return stored_at(row, col + 1) + stored_at(row + 1, col) + pix - stored_at(row + 1, col + 1);
  }
  if (top_edge) {
    const std::uint64_t pix = source_(row + 1, col);
    return stored_at(row, col - 1) + stored_at(row + 1, col) - stored_at(row + 1, col - 1) - pix;
  }
  if (left_edge) {
    const std::uint64_t pix = source_(row, col + 1);
    return stored_at(row - 1, col) + stored_at(row, col + 1) - stored_at(row - 1, col + 1) - pix;
  }
  const std::uint64_t pix = source_(row, col);
  return stored_at(row, col - 1) + stored_at(row - 1, col) + pix - stored_at(row - 1, col - 1);
}

QueryResult CompressedIntegral::box_filter(const Rect& rect) const {
  require_rect_within(rect, rows_, cols_);
  QueryResult result;
  const auto lookup = [this, &result](Eigen::Index row, Eigen::Index col) -> std::uint64_t {
    if (row < 0 || col < 0) return 0;
    bool rebuilt = false;
    const std::uint64_t v = cell(row, col, &rebuilt);
    if (rebuilt) ++result.reconstructed_corners;
    return v;
  };
  const std::uint64_t d = lookup(rect.bottom, rect.right);
  const std::uint64_t a = lookup(rect.top - 1, rect.left - 1);
  const std::uint64_t b = lookup(rect.top - 1, rect.right);
  const std::uint64_t c = lookup(rect.bottom, rect.left - 1);
  result.sum = d + a - b - c;
  return result;
}

CompressedIntegral compress_plus_pattern(const Grid64& integral, const Grid8& image) {
  return CompressedIntegral::build(integral, image);
}

}  // namespace iimg
