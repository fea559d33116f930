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

#include "iimg/word_length.hpp"

#include <stdexcept>
#include <string>

#include "iimg/errors.hpp"

namespace iimg {

namespace {

std::uint64_t checked_max_pixel(int bits_per_pixel) {
  if (bits_per_pixel < 1 || bits_per_pixel > 16)
    throw std::invalid_argument("bits per pixel must be in [1, 16]");
  return (std::uint64_t{1} << bits_per_pixel) - 1;
}

void require_extent(Eigen::Index width, Eigen::Index height, const char* what) {
  if (width < 1 || height < 1)
    throw DomainError(std::string(what) + " needs positive width and height");
  if (width > kMaxDim || height > kMaxDim)
    throw DomainError(std::string(what) + " exceeds the supported maximum of 32768x32768");
}

}  // namespace

int word_length_full(int bits_per_pixel, Eigen::Index width, Eigen::Index height) {
  const std::uint64_t max_pixel = checked_max_pixel(bits_per_pixel);
  require_extent(width, height, "image");
  return bits_for(max_pixel * static_cast<std::uint64_t>(width) *
                  static_cast<std::uint64_t>(height));
}

int word_length_exact(int bits_per_pixel, Eigen::Index max_width, Eigen::Index max_height) {
  const std::uint64_t max_pixel = checked_max_pixel(bits_per_pixel);
  require_extent(max_width, max_height, "filter footprint");
  return bits_for(max_pixel * static_cast<std::uint64_t>(max_width) *
                  static_cast<std::uint64_t>(max_height));
}

int word_length_variant(int bits_per_pixel, Eigen::Index max_width, Eigen::Index max_height) {
  const std::uint64_t max_pixel = checked_max_pixel(bits_per_pixel);
  require_extent(max_width, max_height, "filter footprint");
  const std::uint64_t half_range = (std::uint64_t{1} << (bits_per_pixel - 1)) - 1;
  const std::uint64_t area =
      static_cast<std::uint64_t>(max_width) * static_cast<std::uint64_t>(max_height);
  // 96 parts saturated pixels, 4 parts mid-range pixels, evaluated in exact
  // integer arithmetic with a ceiling division.
  const std::uint64_t numerator = max_pixel * area * 96 + half_range * area * 4;
  return bits_for((numerator + 99) / 100);
}

ReducedIntegral reduce_word_length(const Grid64& integral, int word_bits,
                                   Eigen::Index max_filter_width, Eigen::Index max_filter_height,
                                   bool keep_overflow_shadow) {
  require_valid_dims(integral);
  if (word_bits < 1 || word_bits > 64)
    throw std::invalid_argument("word length must be in [1, 64]");
  require_extent(max_filter_width, max_filter_height, "filter footprint");
  ReducedIntegral r;
  r.word_bits = word_bits;
  r.max_filter_width = max_filter_width;
  r.max_filter_height = max_filter_height;
  const std::uint64_t mask = r.mask();
  r.values = integral.unaryExpr([mask](std::uint64_t v) { return v & mask; });
  if (keep_overflow_shadow) r.shadow = integral;
  return r;
}

std::uint64_t box_filter_modular(const ReducedIntegral& reduced, const Rect& rect) {
  require_rect_within(rect, reduced.values.rows(), reduced.values.cols());
  if (rect.width() > reduced.max_filter_width || rect.height() > reduced.max_filter_height)
    throw DomainError("rectangle exceeds the configured maximum filter footprint");
  const auto corner = [&reduced](Eigen::Index r, Eigen::Index c) -> std::uint64_t {
    return r < 0 || c < 0 ? 0 : reduced.values(r, c);
  };
  const std::uint64_t mask = reduced.mask();
  const std::uint64_t sum = (corner(rect.bottom, rect.right) + corner(rect.top - 1, rect.left - 1) -
                             corner(rect.top - 1, rect.right) - corner(rect.bottom, rect.left - 1)) &
                            mask;
  if (reduced.shadow) {
    if (box_filter_sum(*reduced.shadow, rect) > mask)
      throw DomainError("rectangle sum overflowed the reduced word length");
  }
  return sum;
}

const char* storage_method_name(StorageMethod method) {
  switch (method) {
    case StorageMethod::kFull:
      return "full";
    case StorageMethod::kExact:
      return "exact";
    case StorageMethod::kVariant:
      return "variant";
    case StorageMethod::kMethod1:
      return "method1";
    case StorageMethod::kMethod2Exact:
      return "method2_exact";
    case StorageMethod::kMethod2Variant:
      return "method2_variant";
  }
  return "unknown";
}

std::optional<StorageMethod> parse_storage_method(std::string_view name) {
  std::string canon(name);
  for (char& ch : canon)
    if (ch == '-') ch = '_';
  if (canon == "full") return StorageMethod::kFull;
  if (canon == "exact") return StorageMethod::kExact;
  if (canon == "variant") return StorageMethod::kVariant;
  if (canon == "method1") return StorageMethod::kMethod1;
  if (canon == "method2_exact") return StorageMethod::kMethod2Exact;
  if (canon == "method2_variant") return StorageMethod::kMethod2Variant;
  return std::nullopt;
}

MemoryReport memory_report(Eigen::Index width, Eigen::Index height, int bits_per_pixel,
                           StorageMethod method, std::optional<Eigen::Index> max_filter_width,
                           std::optional<Eigen::Index> max_filter_height) {
  require_extent(width, height, "image");
  const bool plus = method == StorageMethod::kMethod1 || method == StorageMethod::kMethod2Exact ||
                    method == StorageMethod::kMethod2Variant;
  const bool capped = method == StorageMethod::kExact || method == StorageMethod::kVariant ||
                      method == StorageMethod::kMethod2Exact ||
                      method == StorageMethod::kMethod2Variant;
  if (capped && (!max_filter_width || !max_filter_height))
    throw std::invalid_argument("this storage method needs a maximum filter width and height");

  MemoryReport r;
  r.method = method;
  r.width = width;
  r.height = height;
  r.stored_width = plus ? width - width % 3 : width;
  r.stored_height = plus ? height - height % 3 : height;
  if (r.stored_width < 3 && plus)
    throw DomainError("image too small to tile: need at least 3x3 pixels");
  if (r.stored_height < 3 && plus)
    throw DomainError("image too small to tile: need at least 3x3 pixels");

  const int full_word = word_length_full(bits_per_pixel, width, height);
  switch (method) {
    case StorageMethod::kFull:
    case StorageMethod::kMethod1:
      r.word_bits = full_word;
      break;
    case StorageMethod::kExact:
    case StorageMethod::kMethod2Exact:
      r.word_bits = word_length_exact(bits_per_pixel, *max_filter_width, *max_filter_height);
      break;
    case StorageMethod::kVariant:
    case StorageMethod::kMethod2Variant:
      r.word_bits = word_length_variant(bits_per_pixel, *max_filter_width, *max_filter_height);
      break;
  }

  const std::uint64_t region_cells = static_cast<std::uint64_t>(r.stored_width) *
                                     static_cast<std::uint64_t>(r.stored_height);
  r.stored_cells = plus ? region_cells / 9 * 5 : region_cells;
  r.bits = r.stored_cells * static_cast<std::uint64_t>(r.word_bits);
  r.bytes = (r.bits + 7) / 8;
  r.full_bits = region_cells * static_cast<std::uint64_t>(full_word);
  r.reduction_pct = 100.0 * (1.0 - static_cast<double>(r.bits) / static_cast<double>(r.full_bits));
  const double input_bits = static_cast<double>(bits_per_pixel) * static_cast<double>(width) *
                            static_cast<double>(height);
  r.increase_vs_input_pct = 100.0 * (static_cast<double>(r.bits) - input_bits) / input_bits;
  return r;
}

}  // namespace iimg
