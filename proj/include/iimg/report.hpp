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

#ifndef IIMG_REPORT_HPP_
#define IIMG_REPORT_HPP_

#include <string>
#include <vector>

#include "iimg/hw_model.hpp"
#include "iimg/word_length.hpp"

namespace iimg {

// Fixed column order; percentages carry two decimals.
std::string render_cost_csv(const std::vector<CostTableRow>& rows);
std::string render_memory_csv(const std::vector<MemoryReport>& rows);

/// One line per size whose computed per-register width reduction disagrees
/// with the reference figure on file (beyond rounding). Empty when everything
/// matches or no reference exists.
std::vector<std::string> reference_mismatch_notes(const std::vector<CostTableRow>& rows);

}  // namespace iimg

#endif  // IIMG_REPORT_HPP_
