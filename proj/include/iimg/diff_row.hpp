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
// Memory-efficient streaming engine. Instead of buffering a full row of wide
// integral values, it keeps one adjacent-column difference per column (each a
// cumulative column sum, so it fits the narrow column-sum width) plus a single
// full-width register, and rebuilds the previous row by running accumulation
// while the next pair of rows is processed.

#ifndef IIMG_DIFF_ROW_HPP_
#define IIMG_DIFF_ROW_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "iimg/grid.hpp"
#include "iimg/hw_model.hpp"
#include "iimg/integral.hpp"

namespace iimg {

/// Everything retained between row groups. column_sums[c] is the difference
/// between columns c and c-1 of the last finished row (the cumulative sum of
/// column c down to that row); first_column is that row's leftmost value, the
/// seed held in the full-width accumulator register.
struct DiffRowState {
  std::vector<std::uint64_t> column_sums;
  std::uint64_t first_column = 0;
};

/// Streams integral values two rows at a time through `emit(row, col, value)`
/// without ever materializing a full output row internally. `probe`, when set,
/// observes the retained state after each finished group; `bottom_row` is the
/// last input row covered by it.
template <typename Derived, typename CellFn>
void integral_diff_row_stream(
    const Eigen::ArrayBase<Derived>& in, CellFn&& emit, CostTrace* trace = nullptr,
    const std::function<void(Eigen::Index bottom_row, const DiffRowState&)>& probe = {}) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar> && std::is_unsigned_v<Scalar>,
                "the difference engine streams unsigned integer samples");
  require_valid_dims(in);
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  // Cumulative column sums bound every retained difference.
  const std::uint64_t max_diff =
      static_cast<std::uint64_t>(std::numeric_limits<Scalar>::max()) * static_cast<std::uint64_t>(h);
  AddCounter add;
  std::uint64_t cycles = 0;
  DiffRowState state;
  state.column_sums.assign(static_cast<std::size_t>(w), 0);

  const auto store_diff = [&](Eigen::Index c, std::uint64_t d) {
    if (d > max_diff)
      throw DomainError("adjacent-column difference exceeds the narrow register range");
    state.column_sums[static_cast<std::size_t>(c)] = d;
  };

  Eigen::Index top = 0;
  for (; top + 1 < h; top += 2) {
    std::uint64_t s0 = 0;
    std::uint64_t s1 = 0;
    std::uint64_t recon = 0;        // rebuilt value of row top-1 at the current column
    std::uint64_t prev_bottom = 0;  // row top+1 value one column back
    for (Eigen::Index c = 0; c < w; ++c) {
      s0 = add(static_cast<std::uint64_t>(in(top, c)), s0);
      s1 = add(static_cast<std::uint64_t>(in(top + 1, c)), s1);
      recon = add(recon, state.column_sums[static_cast<std::size_t>(c)]);
      const std::uint64_t v0 = add(recon, s0);
      const std::uint64_t v1 = add(add(recon, s0), s1);
      emit(top, c, v0);
      emit(top + 1, c, v1);
      store_diff(c, add.sub(v1, prev_bottom));
      prev_bottom = v1;
      ++cycles;
    }
    state.first_column = state.column_sums[0];
    if (probe) probe(top + 1, state);
  }
  if (top < h) {
    std::uint64_t s0 = 0;
    std::uint64_t recon = 0;
    std::uint64_t prev_bottom = 0;
    for (Eigen::Index c = 0; c < w; ++c) {
      s0 = add(static_cast<std::uint64_t>(in(top, c)), s0);
      recon = add(recon, state.column_sums[static_cast<std::size_t>(c)]);
      const std::uint64_t v0 = add(recon, s0);
      emit(top, c, v0);
      store_diff(c, add.sub(v0, prev_bottom));
      prev_bottom = v0;
      ++cycles;
    }
    state.first_column = state.column_sums[0];
    if (probe) probe(top, state);
  }
  if (trace) *trace = {Strategy::kDiffRow, 2, add.count(), cycles};
}

/// Convenience wrapper collecting the streamed values into a dense grid.
/// `widths` reports the register and buffer widths the engine ran under.
template <typename Derived>
Grid64 integral_diff_row(const Eigen::ArrayBase<Derived>& in, CostTrace* trace = nullptr,
                         BitWidthReport* widths = nullptr) {
  Grid64 out(in.rows(), in.cols());
  integral_diff_row_stream(
      in, [&out](Eigen::Index r, Eigen::Index c, std::uint64_t v) { out(r, c) = v; }, trace);
  if (widths) *widths = internal_memory_report(in.cols(), in.rows());
  return out;
}

}  // namespace iimg

#endif  // IIMG_DIFF_ROW_HPP_
