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

#include "iimg/binarize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iimg/box_filter.hpp"
#include "iimg/strategies.hpp"

namespace iimg {

void validate(const BinarizeParams& params) {
  if (params.window < 3 || params.window % 2 == 0)
    throw std::invalid_argument("window must be an odd side length of at least 3");
  if (!(params.k > 0.0) || params.k > 1.0)
    throw std::invalid_argument("sensitivity k must be in (0, 1]");
  if (!(params.r > 0.0)) throw std::invalid_argument("normalizer R must be positive");
}

bool sauvola_foreground(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t area,
                        std::uint8_t pixel, const BinarizeParams& params) {
  const unsigned __int128 numerator =
      static_cast<unsigned __int128>(area) * sum_sq -
      static_cast<unsigned __int128>(sum) * static_cast<unsigned __int128>(sum);
  const double darea = static_cast<double>(area);
  const double mean = static_cast<double>(sum) / darea;
  const double variance = static_cast<double>(numerator) / (darea * darea);
  const double stddev = std::sqrt(variance);
  const double threshold = mean * (1.0 + params.k * (stddev / params.r - 1.0));
  return static_cast<double>(pixel) <= threshold;
}

namespace {

Rect clamped_window(Eigen::Index row, Eigen::Index col, Eigen::Index rows, Eigen::Index cols,
                    int window) {
  const Eigen::Index half = window / 2;
  Rect r;
  r.top = std::max<Eigen::Index>(0, row - half);
  r.left = std::max<Eigen::Index>(0, col - half);
  r.bottom = std::min(rows - 1, row + half);
  r.right = std::min(cols - 1, col + half);
  return r;
}

}  // namespace

BinaryGrid binarize(const Grid8& image, const BinarizeParams& params, Strategy strategy,
                    int rows_per_group) {
  validate(params);
  require_valid_dims(image);
  const Eigen::Index h = image.rows();
  const Eigen::Index w = image.cols();
  const Grid64 sums = compute_integral(image, strategy, rows_per_group);
  const Grid<std::uint32_t> squares = image.cast<std::uint32_t>().square();
  const Grid64 square_sums = compute_integral(squares, strategy, rows_per_group);
  // The squared-image integral must stay within its own word bound.
  const std::uint64_t square_cap =
      (std::uint64_t{1} << bits_for(static_cast<std::uint64_t>(kMaxPixel) * kMaxPixel *
                                    static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(h))) -
      1;
  if (square_sums(h - 1, w - 1) > square_cap)
    throw DomainError("squared-image integral exceeded its word bound");

  BinaryGrid out(h, w);
  for (Eigen::Index r = 0; r < h; ++r)
    for (Eigen::Index c = 0; c < w; ++c) {
      const Rect win = clamped_window(r, c, h, w, params.window);
      const std::uint64_t sum = box_filter_sum(sums, win);
      const std::uint64_t sum_sq = box_filter_sum(square_sums, win);
      out(r, c) = sauvola_foreground(sum, sum_sq, win.area(), image(r, c), params);
    }
  return out;
}

BinaryGrid binarize_naive(const Grid8& image, const BinarizeParams& params) {
  validate(params);
  require_valid_dims(image);
  const Eigen::Index h = image.rows();
  const Eigen::Index w = image.cols();
  BinaryGrid out(h, w);
  for (Eigen::Index r = 0; r < h; ++r)
    for (Eigen::Index c = 0; c < w; ++c) {
      const Rect win = clamped_window(r, c, h, w, params.window);
      std::uint64_t sum = 0;
      std::uint64_t sum_sq = 0;
      for (Eigen::Index wr = win.top; wr <= win.bottom; ++wr)
        for (Eigen::Index wc = win.left; wc <= win.right; ++wc) {
          const std::uint64_t v = image(wr, wc);
          sum += v;
          sum_sq += v * v;
        }
      out(r, c) = sauvola_foreground(sum, sum_sq, win.area(), image(r, c), params);
    }
  return out;
}

}  // namespace iimg
