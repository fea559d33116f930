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

#include "iimg/hw_model.hpp"

#include <stdexcept>

#include "iimg/errors.hpp"

namespace iimg {

namespace {

void require_size(Eigen::Index width, Eigen::Index height) {
  if (width < 1 || height < 1) throw DomainError("frame size needs positive width and height");
  if (width > kMaxDim || height > kMaxDim)
    throw DomainError("frame size exceeds the supported maximum of 32768x32768");
}

std::uint64_t max_pixel_for_depth(int bits_per_pixel) {
  if (bits_per_pixel < 1 || bits_per_pixel > 16)
    throw std::invalid_argument("bits per pixel must be in [1, 16]");
  return (std::uint64_t{1} << bits_per_pixel) - 1;
}

}  // namespace

BitWidthReport internal_memory_report(Eigen::Index width, Eigen::Index height,
                                      int bits_per_pixel) {
  require_size(width, height);
  const std::uint64_t max_pixel = max_pixel_for_depth(bits_per_pixel);
  const std::uint64_t w = static_cast<std::uint64_t>(width);
  const std::uint64_t h = static_cast<std::uint64_t>(height);
  BitWidthReport r;
  r.width = width;
  r.height = height;
  r.pixel_bits = bits_per_pixel;
  r.depth = width;
  r.value_bits = bits_for(max_pixel * w * h);
  r.row_sum_bits = bits_for(max_pixel * w);
  r.column_sum_bits = bits_for(max_pixel * h);
  r.standard_bits = static_cast<std::uint64_t>(r.value_bits) * w;
  r.diff_bits = static_cast<std::uint64_t>(r.column_sum_bits) * w +
                static_cast<std::uint64_t>(r.value_bits);
  r.reduction_pct =
      100.0 * (1.0 - static_cast<double>(r.diff_bits) / static_cast<double>(r.standard_bits));
  r.width_only_reduction_pct =
      100.0 * static_cast<double>(r.value_bits - r.column_sum_bits) / r.value_bits;
  return r;
}

std::optional<double> reference_reduction_pct(Eigen::Index width, Eigen::Index height) {
  struct Entry {
    Eigen::Index w, h;
    double pct;
  };
  static constexpr Entry kEntries[] = {
      {360, 240, 32.0},   {720, 576, 33.3},   {800, 640, 33.3},  {1280, 720, 32.1},
      {1920, 1080, 34.4}, {2048, 1536, 36.6}, {2048, 2048, 36.6},
  };
  for (const Entry& e : kEntries)
    if (e.w == width && e.h == height) return e.pct;
  return std::nullopt;
}

std::uint64_t naive_additions(Eigen::Index width, Eigen::Index height) {
  require_size(width, height);
  const std::uint64_t cells = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
  return cells * cells / 4;
}

std::uint64_t serial_additions(Eigen::Index width, Eigen::Index height) {
  require_size(width, height);
  return 2 * static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
}

std::uint64_t parallel_additions(Eigen::Index width, Eigen::Index height) {
  require_size(width, height);
  const std::uint64_t w = static_cast<std::uint64_t>(width);
  const std::uint64_t h = static_cast<std::uint64_t>(height);
  return 5 * w * (h / 2) + 2 * w * (h % 2);
}

std::uint64_t diff_row_additions(Eigen::Index width, Eigen::Index height) {
  require_size(width, height);
  const std::uint64_t w = static_cast<std::uint64_t>(width);
  const std::uint64_t h = static_cast<std::uint64_t>(height);
  return 7 * w * (h / 2) + 4 * w * (h % 2);
}

std::uint64_t serial_cycles(Eigen::Index width, Eigen::Index height) {
  require_size(width, height);
  return static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
}

std::uint64_t pair_cycles(Eigen::Index width, Eigen::Index height) {
  require_size(width, height);
  const std::uint64_t w = static_cast<std::uint64_t>(width);
  const std::uint64_t h = static_cast<std::uint64_t>(height);
  return (h / 2 + h % 2) * w;
}

std::uint64_t group_cycles(Eigen::Index width, Eigen::Index height, int rows_per_group) {
  require_size(width, height);
  if (rows_per_group < 2 || rows_per_group % 2 != 0)
    throw std::invalid_argument("row group size must be a positive multiple of 2");
  const std::uint64_t w = static_cast<std::uint64_t>(width);
  const std::uint64_t h = static_cast<std::uint64_t>(height);
  const std::uint64_t n = static_cast<std::uint64_t>(rows_per_group);
  // Full groups, then one trailing even group, then one serial row.
  std::uint64_t passes = h / n;
  if (h % n >= 2) ++passes;
  if (h % 2 == 1) ++passes;
  return passes * w;
}

std::vector<CostTableRow> strategy_cost_table(
    const std::vector<std::pair<Eigen::Index, Eigen::Index>>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("cost table needs at least one frame size");
  std::vector<CostTableRow> rows;
  rows.reserve(sizes.size());
  for (const auto& [w, h] : sizes) {
    const BitWidthReport b = internal_memory_report(w, h);
    CostTableRow row;
    row.width = w;
    row.height = h;
    row.value_bits = b.value_bits;
    row.row_sum_bits = b.row_sum_bits;
    row.column_sum_bits = b.column_sum_bits;
    row.standard_bits = b.standard_bits;
    row.diff_bits = b.diff_bits;
    row.reduction_pct = b.reduction_pct;
    row.naive_adds = naive_additions(w, h);
    row.serial_adds = serial_additions(w, h);
    row.parallel_adds = parallel_additions(w, h);
    row.serial_cycles = serial_cycles(w, h);
    row.two_row_cycles = pair_cycles(w, h);
    row.four_row_cycles = group_cycles(w, h, 4);
    row.diff_row_cycles = pair_cycles(w, h);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace iimg
