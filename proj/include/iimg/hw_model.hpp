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
// Closed-form cost and storage model for the streaming integral-image
// engines: register bit widths, internal memory footprints, and addition and
// cycle counts. Every formula here has a matching instrumented engine whose
// observed counts it must reproduce.

#ifndef IIMG_HW_MODEL_HPP_
#define IIMG_HW_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "iimg/grid.hpp"

namespace iimg {

/// Register widths and previous-row storage for one frame size. The standard
/// design keeps a full row of integral values; the difference design keeps a
/// row of adjacent-column differences plus one full-width accumulator.
struct BitWidthReport {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  int pixel_bits = 8;       // input bits per pixel
  int value_bits = 0;       // widest integral value
  int row_sum_bits = 0;     // running sum along one row
  int column_sum_bits = 0;  // running sum down one column; also one difference
  Eigen::Index depth = 0;   // words in the previous-row buffer, one per column
  std::uint64_t standard_bits = 0;  // value_bits per column
  std::uint64_t diff_bits = 0;      // column_sum_bits per column + one value register
  double reduction_pct = 0.0;             // storage saved by the difference design
  double width_only_reduction_pct = 0.0;  // per-register width saving alone
};

BitWidthReport internal_memory_report(Eigen::Index width, Eigen::Index height,
                                      int bits_per_pixel = kPixelBits);

/// Reduction percentages previously reported for common frame sizes. Reports
/// flag disagreement with the computed value instead of overriding it.
std::optional<double> reference_reduction_pct(Eigen::Index width, Eigen::Index height);

// Addition counts for a full frame. The naive model re-sums every rectangle
// from scratch; its count is the average rectangle area (width x height / 4)
// times the number of output cells.
std::uint64_t naive_additions(Eigen::Index width, Eigen::Index height);
std::uint64_t serial_additions(Eigen::Index width, Eigen::Index height);
// Identical for every even row-group size: five additions per column step
// cover a pair of rows, plus a two-addition serial pass for an odd last row.
std::uint64_t parallel_additions(Eigen::Index width, Eigen::Index height);
std::uint64_t diff_row_additions(Eigen::Index width, Eigen::Index height);

// Lockstep cycle counts: one column step per cycle per active group.
std::uint64_t serial_cycles(Eigen::Index width, Eigen::Index height);
std::uint64_t pair_cycles(Eigen::Index width, Eigen::Index height);
std::uint64_t group_cycles(Eigen::Index width, Eigen::Index height, int rows_per_group);

/// One line of the strategy comparison table.
struct CostTableRow {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  int value_bits = 0;
  int row_sum_bits = 0;
  int column_sum_bits = 0;
  std::uint64_t standard_bits = 0;
  std::uint64_t diff_bits = 0;
  double reduction_pct = 0.0;
  std::uint64_t naive_adds = 0;
  std::uint64_t serial_adds = 0;
  std::uint64_t parallel_adds = 0;
  std::uint64_t serial_cycles = 0;
  std::uint64_t two_row_cycles = 0;
  std::uint64_t four_row_cycles = 0;
  std::uint64_t diff_row_cycles = 0;
};

std::vector<CostTableRow> strategy_cost_table(
    const std::vector<std::pair<Eigen::Index, Eigen::Index>>& sizes);

}  // namespace iimg

#endif  // IIMG_HW_MODEL_HPP_
