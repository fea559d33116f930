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

#ifndef IIMG_BOX_FILTER_HPP_
#define IIMG_BOX_FILTER_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "iimg/errors.hpp"
#include "iimg/grid.hpp"

namespace iimg {

/// Inclusive rectangle in 0-based pixel coordinates.
struct Rect {
  Eigen::Index top = 0;
  Eigen::Index left = 0;
  Eigen::Index bottom = 0;
  Eigen::Index right = 0;

  Eigen::Index width() const { return right - left + 1; }
  Eigen::Index height() const { return bottom - top + 1; }
  std::uint64_t area() const {
    return static_cast<std::uint64_t>(width()) * static_cast<std::uint64_t>(height());
  }
};

inline void require_rect_within(const Rect& r, Eigen::Index rows, Eigen::Index cols) {
  if (r.top < 0 || r.left < 0 || r.top > r.bottom || r.left > r.right || r.bottom >= rows ||
      r.right >= cols)
    throw DomainError("rectangle does not fit inside the image");
}

/// Rectangle sum from four integral-image corner lookups. Corners that fall
/// outside the grid (row or column -1) contribute nothing and cost no
/// operation; `add_sub_ops`, when set, receives the number of additions and
/// subtractions actually performed (0, 1, or 3).
inline std::uint64_t box_filter_sum(const Grid64& ii, const Rect& rect,
                                    int* add_sub_ops = nullptr) {
  require_rect_within(rect, ii.rows(), ii.cols());
  const Eigen::Index ta = rect.top - 1;
  const Eigen::Index la = rect.left - 1;
  std::uint64_t sum = ii(rect.bottom, rect.right);
  int ops = 0;
  if (ta >= 0) {
    sum -= ii(ta, rect.right);
    ++ops;
  }
  if (la >= 0) {
    sum -= ii(rect.bottom, la);
    ++ops;
  }
  if (ta >= 0 && la >= 0) {
    sum += ii(ta, la);
    ++ops;
  }
  if (add_sub_ops) *add_sub_ops = ops;
  return sum;
}

}  // namespace iimg

#endif  // IIMG_BOX_FILTER_HPP_
