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

#include "iimg/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace iimg {

namespace {

std::string pct(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

}  // namespace

std::string render_cost_csv(const std::vector<CostTableRow>& rows) {
  std::ostringstream out;
  out << "width,height,K,M,N,standard_bits,diff_bits,reduction_pct,naive_adds,serial_adds,"
         "parallel_adds,serial_cycles,two_row_cycles,four_row_cycles,diff_row_cycles\n";
  for (const CostTableRow& r : rows) {
    out << r.width << ',' << r.height << ',' << r.value_bits << ',' << r.row_sum_bits << ','
        << r.column_sum_bits << ',' << r.standard_bits << ',' << r.diff_bits << ','
        << pct(r.reduction_pct) << ',' << r.naive_adds << ',' << r.serial_adds << ','
        << r.parallel_adds << ',' << r.serial_cycles << ',' << r.two_row_cycles << ','
        << r.four_row_cycles << ',' << r.diff_row_cycles << '\n';
  }
  return out.str();
}

std::string render_memory_csv(const std::vector<MemoryReport>& rows) {
  std::ostringstream out;
  out << "method,width,height,stored_width,stored_height,word_bits,stored_cells,bits,bytes,"
         "full_bits,reduction_pct,increase_vs_input_pct\n";
  for (const MemoryReport& r : rows) {
    out << storage_method_name(r.method) << ',' << r.width << ',' << r.height << ','
        << r.stored_width << ',' << r.stored_height << ',' << r.word_bits << ',' << r.stored_cells
        << ',' << r.bits << ',' << r.bytes << ',' << r.full_bits << ',' << pct(r.reduction_pct)
        << ',' << pct(r.increase_vs_input_pct) << '\n';
  }
  return out.str();
}

std::vector<std::string> reference_mismatch_notes(const std::vector<CostTableRow>& rows) {
  std::vector<std::string> notes;
  for (const CostTableRow& r : rows) {
    const auto reference = reference_reduction_pct(r.width, r.height);
    if (!reference) continue;
    const double computed =
        100.0 * static_cast<double>(r.value_bits - r.column_sum_bits) / r.value_bits;
    // Reference figures carry one decimal; allow that much rounding slack.
    if (std::abs(computed - *reference) <= 0.15) continue;
    std::ostringstream note;
    note << r.width << 'x' << r.height << ": computed per-register reduction " << pct(computed)
         << "% differs from the reference figure " << pct(*reference) << "%";
    notes.push_back(note.str());
  }
  return notes;
}

}  // namespace iimg
