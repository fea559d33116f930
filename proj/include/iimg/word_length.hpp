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
// Word-length reduction for stored integral values. Values kept modulo 2^L
// still answer box-filter queries exactly through unsigned wrap-around, as
// long as the true rectangle sum itself fits in L bits; capping the filter
// footprint therefore caps the word length far below the full-image worst
// case.

#ifndef IIMG_WORD_LENGTH_HPP_
#define IIMG_WORD_LENGTH_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "iimg/box_filter.hpp"
#include "iimg/grid.hpp"

namespace iimg {

/// Word length holding the largest value the whole image can produce.
int word_length_full(int bits_per_pixel, Eigen::Index width, Eigen::Index height);

/// Word length holding the largest sum of one max_width x max_height filter
/// window; exact for every query within that footprint.
int word_length_exact(int bits_per_pixel, Eigen::Index max_width, Eigen::Index max_height);

/// Tighter variant: sized for a window that is 96% maximum-valued pixels and
/// 4% mid-range pixels, the worst case considered realistic rather than the
/// absolute one. Queries can overflow in principle; see the shadow option.
int word_length_variant(int bits_per_pixel, Eigen::Index max_width, Eigen::Index max_height);

/// Integral image stored at a reduced word length. `values` holds each cell
/// modulo 2^word_bits; `shadow`, when kept, holds the unreduced values purely
/// so overflow of the variant sizing can be detected during queries.
struct ReducedIntegral {
  int word_bits = 0;
  Eigen::Index max_filter_width = 0;
  Eigen::Index max_filter_height = 0;
  Grid64 values;
  std::optional<Grid64> shadow;

  std::uint64_t mask() const {
    return word_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word_bits) - 1;
  }
};

ReducedIntegral reduce_word_length(const Grid64& integral, int word_bits,
                                   Eigen::Index max_filter_width, Eigen::Index max_filter_height,
                                   bool keep_overflow_shadow = false);

/// Box filter over reduced storage. All arithmetic wraps modulo 2^word_bits;
/// the result is the exact rectangle sum whenever that sum fits the word.
/// Rectangles larger than the configured filter footprint are rejected, and a
/// retained shadow turns silent overflow into an error.
std::uint64_t box_filter_modular(const ReducedIntegral& reduced, const Rect& rect);

enum class StorageMethod { kFull, kExact, kVariant, kMethod1, kMethod2Exact, kMethod2Variant };

const char* storage_method_name(StorageMethod method);
std::optional<StorageMethod> parse_storage_method(std::string_view name);

/// Storage footprint of one integral image under one method. Methods with a
/// plus-pattern component count five of nine cells over dimensions trimmed to
/// multiples of 3, against a baseline of full-width words over that same
/// region; the retained 8-bit input is not counted, since the input image is
/// resident regardless of how the integral is stored.
struct MemoryReport {
  StorageMethod method = StorageMethod::kFull;
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  Eigen::Index stored_width = 0;
  Eigen::Index stored_height = 0;
  int word_bits = 0;
  std::uint64_t stored_cells = 0;
  std::uint64_t bits = 0;
  std::uint64_t bytes = 0;
  std::uint64_t full_bits = 0;
  double reduction_pct = 0.0;        // vs full-width words over the stored region
  double increase_vs_input_pct = 0.0;  // vs the 8-bit input image
};

MemoryReport memory_report(Eigen::Index width, Eigen::Index height, int bits_per_pixel,
                           StorageMethod method, std::optional<Eigen::Index> max_filter_width = {},
                           std::optional<Eigen::Index> max_filter_height = {});

}  // namespace iimg

#endif  // IIMG_WORD_LENGTH_HPP_
