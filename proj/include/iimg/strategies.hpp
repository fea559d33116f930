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

#ifndef IIMG_STRATEGIES_HPP_
#define IIMG_STRATEGIES_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "iimg/diff_row.hpp"
#include "iimg/hw_model.hpp"
#include "iimg/integral.hpp"

namespace iimg {

inline const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kNaive:
      return "naive";
    case Strategy::kSerial:
      return "serial";
    case Strategy::kTwoRow:
      return "two-row";
    case Strategy::kFourRow:
      return "four-row";
    case Strategy::kNRow:
      return "n-row";
    case Strategy::kDiffRow:
      return "diff-row";
  }
  return "unknown";
}

inline std::optional<Strategy> parse_strategy(std::string_view name) {
  std::string canon(name);
  for (char& ch : canon)
    if (ch == '_') ch = '-';
  if (canon == "naive") return Strategy::kNaive;
  if (canon == "serial") return Strategy::kSerial;
  if (canon == "two-row") return Strategy::kTwoRow;
  if (canon == "four-row") return Strategy::kFourRow;
  if (canon == "n-row") return Strategy::kNRow;
  if (canon == "diff-row") return Strategy::kDiffRow;
  return std::nullopt;
}

/// Runs the selected engine. The naive strategy has no streaming pipeline, so
/// its trace carries the re-summation addition count and no cycle figure.
template <typename Derived>
Grid64 compute_integral(const Eigen::ArrayBase<Derived>& in, Strategy strategy,
                        int rows_per_group = 2, CostTrace* trace = nullptr) {
  switch (strategy) {
    case Strategy::kNaive: {
      Grid64 out = integral_naive(in);
      if (trace) *trace = {Strategy::kNaive, 1, naive_additions(in.cols(), in.rows()), 0};
      return out;
    }
    case Strategy::kSerial:
      return integral_serial(in, trace);
    case Strategy::kTwoRow:
      return integral_two_row(in, trace);
    case Strategy::kFourRow:
      return integral_four_row(in, trace);
    case Strategy::kNRow:
      return integral_n_row(in, rows_per_group, trace);
    case Strategy::kDiffRow:
      return integral_diff_row(in, trace);
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace iimg

#endif  // IIMG_STRATEGIES_HPP_
