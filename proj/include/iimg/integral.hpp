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

#ifndef IIMG_INTEGRAL_HPP_
#define IIMG_INTEGRAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "iimg/grid.hpp"

namespace iimg {

enum class Strategy { kNaive, kSerial, kTwoRow, kFourRow, kNRow, kDiffRow };

/// Operation counts observed while computing one integral image. Additions
/// and cycles come from instrumented counters, not closed-form formulas, so
/// they reflect what the engine actually did (including odd-height fallbacks).
struct CostTrace {
  Strategy strategy = Strategy::kSerial;
  int rows_per_group = 1;  // lane count for the row-parallel engines
  std::uint64_t additions = 0;
  std::uint64_t cycles = 0;
};

/// Two-operand adder with an operation counter. Boundary terms (virtual zero
/// row/column) go through it like any other operand, so per-pixel totals stay
/// uniform across the whole image.
class AddCounter {
 public:
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) {
    ++count_;
    return a + b;
  }
  // Subtraction occupies an adder as well; counted identically.
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    ++count_;
    return a - b;
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/// Reference integral image: every cell holds the sum of all pixels above and
/// to the left of it, inclusive. All other engines must match this bit for bit.
template <typename Derived>
Grid64 integral_naive(const Eigen::ArrayBase<Derived>& in) {
  require_valid_dims(in);
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  Grid64 out(h, w);
  for (Eigen::Index r = 0; r < h; ++r) {
    std::uint64_t run = 0;
    for (Eigen::Index c = 0; c < w; ++c) {
      run += static_cast<std::uint64_t>(in(r, c));
      out(r, c) = run;
    }
  }
  for (Eigen::Index r = 1; r < h; ++r)
    for (Eigen::Index c = 0; c < w; ++c) out(r, c) += out(r - 1, c);
  return out;
}

/// Serial recurrence: a running row sum feeds the value one row up. One value
/// per cycle, two additions per pixel.
template <typename Derived>
Grid64 integral_serial(const Eigen::ArrayBase<Derived>& in, CostTrace* trace = nullptr) {
  require_valid_dims(in);
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  Grid64 out(h, w);
  AddCounter add;
  std::uint64_t cycles = 0;
  for (Eigen::Index r = 0; r < h; ++r) {
    std::uint64_t row_sum = 0;
    for (Eigen::Index c = 0; c < w; ++c) {
      row_sum = add(static_cast<std::uint64_t>(in(r, c)), row_sum);
      const std::uint64_t above = r > 0 ? out(r - 1, c) : 0;
      out(r, c) = add(above, row_sum);
      ++cycles;
    }
  }
  if (trace) *trace = {Strategy::kSerial, 1, add.count(), cycles};
  return out;
}

namespace detail {

// One serial row appended below already-computed output; shared by the
// row-parallel engines for leftover rows.
template <typename Derived>
void serial_row(const Eigen::ArrayBase<Derived>& in, Grid64& out, Eigen::Index row,
                AddCounter& add, std::uint64_t& cycles) {
  std::uint64_t row_sum = 0;
  for (Eigen::Index c = 0; c < in.cols(); ++c) {
    row_sum = add(static_cast<std::uint64_t>(in(row, c)), row_sum);
    const std::uint64_t above = row > 0 ? out(row - 1, c) : 0;
    out(row, c) = add(above, row_sum);
    ++cycles;
  }
}

}  // namespace detail

/// Row-parallel engine over pairs of rows. Both values of a pair are produced
/// in the same lockstep cycle; the second row costs one extra addition per
/// pixel. An odd leftover row falls back to the serial recurrence.
template <typename Derived>
Grid64 integral_two_row(const Eigen::ArrayBase<Derived>& in, CostTrace* trace = nullptr) {
  require_valid_dims(in);
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  Grid64 out(h, w);
  AddCounter add;
  std::uint64_t cycles = 0;
  Eigen::Index top = 0;
  for (; top + 1 < h; top += 2) {
    std::uint64_t s0 = 0;
    std::uint64_t s1 = 0;
    for (Eigen::Index c = 0; c < w; ++c) {
      s0 = add(static_cast<std::uint64_t>(in(top, c)), s0);
      s1 = add(static_cast<std::uint64_t>(in(top + 1, c)), s1);
      const std::uint64_t above = top > 0 ? out(top - 1, c) : 0;
      out(top, c) = add(above, s0);
      out(top + 1, c) = add(add(above, s0), s1);
      ++cycles;
    }
  }
  if (top < h) detail::serial_row(in, out, top, add, cycles);
  if (trace) *trace = {Strategy::kTwoRow, 2, add.count(), cycles};
  return out;
}

/// Row-parallel engine over groups of four rows, staged so the third and
/// fourth rows chain off the second instead of the first. Ten additions per
/// column step, four values per cycle. Leftover rows (1-3) fall back to the
/// pair engine and then the serial recurrence.
template <typename Derived>
Grid64 integral_four_row(const Eigen::ArrayBase<Derived>& in, CostTrace* trace = nullptr) {
  require_valid_dims(in);
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  Grid64 out(h, w);
  AddCounter add;
  std::uint64_t cycles = 0;
  Eigen::Index top = 0;
  for (; top + 3 < h; top += 4) {
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    for (Eigen::Index c = 0; c < w; ++c) {
      s0 = add(static_cast<std::uint64_t>(in(top, c)), s0);
      s1 = add(static_cast<std::uint64_t>(in(top + 1, c)), s1);
      s2 = add(static_cast<std::uint64_t>(in(top + 2, c)), s2);
      s3 = add(static_cast<std::uint64_t>(in(top + 3, c)), s3);
      const std::uint64_t above = top > 0 ? out(top - 1, c) : 0;
      const std::uint64_t v0 = add(above, s0);
      const std::uint64_t v1 = add(add(above, s0), s1);
      const std::uint64_t v2 = add(v1, s2);
      const std::uint64_t v3 = add(add(v1, s2), s3);
      out(top, c) = v0;
      out(top + 1, c) = v1;
      out(top + 2, c) = v2;
      out(top + 3, c) = v3;
      ++cycles;
    }
  }
  if (top + 1 < h) {
    std::uint64_t s0 = 0;
    std::uint64_t s1 = 0;
    for (Eigen::Index c = 0; c < w; ++c) {
      s0 = add(static_cast<std::uint64_t>(in(top, c)), s0);
      s1 = add(static_cast<std::uint64_t>(in(top + 1, c)), s1);
      const std::uint64_t above = top > 0 ? out(top - 1, c) : 0;
      out(top, c) = add(above, s0);
      out(top + 1, c) = add(add(above, s0), s1);
      ++cycles;
    }
    top += 2;
  }
  if (top < h) detail::serial_row(in, out, top, add, cycles);
  if (trace) *trace = {Strategy::kFourRow, 4, add.count(), cycles};
  return out;
}

/// General row-parallel engine for any even group size. Within a column step,
/// even-offset rows chain off the previous odd-offset value with one addition
/// and odd-offset rows take two. Heights that are not a multiple of the group
/// size finish with the largest even group that fits, then serial rows.
template <typename Derived>
Grid64 integral_n_row(const Eigen::ArrayBase<Derived>& in, int rows_per_group,
                      CostTrace* trace = nullptr) {
  if (rows_per_group < 2 || rows_per_group % 2 != 0)
    throw std::invalid_argument("row group size must be a positive multiple of 2");
  require_valid_dims(in);
  const Eigen::Index h = in.rows();
  const Eigen::Index w = in.cols();
  const Eigen::Index n = rows_per_group;
  Grid64 out(h, w);
  AddCounter add;
  std::uint64_t cycles = 0;
  std::vector<std::uint64_t> sums(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> vals(static_cast<std::size_t>(n));
  Eigen::Index top = 0;
  while (top < h) {
    const Eigen::Index remaining = h - top;
    const Eigen::Index group = remaining >= n ? n : remaining - (remaining % 2);
    if (group < 2) {
      detail::serial_row(in, out, top, add, cycles);
      ++top;
      continue;
    }
    std::fill(sums.begin(), sums.begin() + group, 0);
    for (Eigen::Index c = 0; c < w; ++c) {
      for (Eigen::Index j = 0; j < group; ++j)
        sums[j] = add(static_cast<std::uint64_t>(in(top + j, c)), sums[j]);
      const std::uint64_t above = top > 0 ? out(top - 1, c) : 0;
      for (Eigen::Index k = 0; 2 * k < group; ++k) {
        const std::uint64_t prev = k == 0 ? above : vals[2 * k - 1];
        vals[2 * k] = add(prev, sums[2 * k]);
        vals[2 * k + 1] = add(add(prev, sums[2 * k]), sums[2 * k + 1]);
      }
      for (Eigen::Index j = 0; j < group; ++j) out(top + j, c) = vals[j];
      ++cycles;
    }
    top += group;
  }
  if (trace) *trace = {Strategy::kNRow, rows_per_group, add.count(), cycles};
  return out;
}

/// Earliest cycle at which each cell can be produced when every row runs the
/// serial recurrence concurrently: row r trails row r-1 by exactly one column,
/// so cell (r, c) is ready at cycle r + c.
struct WavefrontSchedule {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Grid<std::uint32_t> cycle;

  std::uint64_t makespan() const {
    return static_cast<std::uint64_t>(rows) + static_cast<std::uint64_t>(cols) - 1;
  }
};

inline WavefrontSchedule delayed_row_schedule(Eigen::Index rows, Eigen::Index cols) {
  if (rows < 1 || cols < 1) throw DomainError("schedule needs at least one row and column");
  if (rows > kMaxDim || cols > kMaxDim)
    throw DomainError("schedule exceeds the supported maximum of 32768x32768");
  WavefrontSchedule s;
  s.rows = rows;
  s.cols = cols;
  s.cycle.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      s.cycle(r, c) = static_cast<std::uint32_t>(r + c);
  return s;
}

}  // namespace iimg

#endif  // IIMG_INTEGRAL_HPP_
