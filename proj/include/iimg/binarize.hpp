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
// Adaptive document binarization. Each pixel is thresholded against the mean
// and standard deviation of its local window; the window sums come either
// from integral images of the image and its square (two box filters per
// pixel) or from direct summation, with identical output.

#ifndef IIMG_BINARIZE_HPP_
#define IIMG_BINARIZE_HPP_

#include <cstdint>

#include "iimg/grid.hpp"
#include "iimg/integral.hpp"

namespace iimg {

using BinaryGrid = Grid<bool>;  // true = foreground (black)

struct BinarizeParams {
  int window = 15;  // odd side length of the local square window
  double k = 0.5;   // sensitivity, in (0, 1]
  double r = 128.0;  // dynamic-range normalizer for the standard deviation
};

/// Throws std::invalid_argument for an even or undersized window, k outside
/// (0, 1], or a non-positive normalizer.
void validate(const BinarizeParams& params);

/// Shared thresholding rule: foreground iff pixel <= m * (1 + k * (s/R - 1))
/// with m and s the window mean and standard deviation. The variance
/// numerator area*sum_sq - sum^2 is formed in 128-bit integers first, so both
/// window-sum paths feed identical values through identical float math.
bool sauvola_foreground(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t area,
                        std::uint8_t pixel, const BinarizeParams& params);

/// Integral-image path. Windows are clamped to the image bounds and divided
/// by their true area. Output does not depend on the strategy choice.
BinaryGrid binarize(const Grid8& image, const BinarizeParams& params = {},
                    Strategy strategy = Strategy::kSerial, int rows_per_group = 2);

/// Direct per-window summation; the equivalence oracle for `binarize`.
BinaryGrid binarize_naive(const Grid8& image, const BinarizeParams& params = {});

}  // namespace iimg

#endif  // IIMG_BINARIZE_HPP_
