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
// Command-line front end. Exit codes: 0 success, 1 internal failure or
// failed --check, 2 input parse error, 3 domain error (bounds, margins),
// 4 invalid flags.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iimg/binarize.hpp"
#include "iimg/box_filter.hpp"
#include "iimg/compress.hpp"
#include "iimg/errors.hpp"
#include "iimg/iimg_io.hpp"
#include "iimg/pnm.hpp"
#include "iimg/report.hpp"
#include "iimg/strategies.hpp"
#include "iimg/word_length.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string output;
  std::string strategy = "serial";
  int rows_per_group = 2;
  std::string method;
  std::optional<std::int64_t> wmax;
  std::optional<std::int64_t> hmax;
  std::string format = "csv";
  std::string sizes;
  std::string rect;
  std::string out_format = "pbm";
  iimg::BinarizeParams params;
  bool check = false;
};

iimg::Strategy parse_strategy_flag(const std::string& name) {
  const auto strategy = iimg::parse_strategy(name);
  if (!strategy) throw std::invalid_argument("unknown strategy: " + name);
  return *strategy;
}

iimg::StorageMethod parse_method_flag(const std::string& name) {
  const auto method = iimg::parse_storage_method(name);
  if (!method) throw std::invalid_argument("unknown method: " + name);
  return *method;
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> parse_sizes(const std::string& text) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t x = item.find('x');
    if (item.empty() || x == std::string::npos)
      throw std::invalid_argument("sizes must look like 1920x1080,720x576");
    try {
      sizes.emplace_back(static_cast<Eigen::Index>(std::stoll(item.substr(0, x))),
                         static_cast<Eigen::Index>(std::stoll(item.substr(x + 1))));
    } catch (const std::exception&) {
      throw std::invalid_argument("sizes must look like 1920x1080,720x576");
    }
    start = end + 1;
  }
  if (sizes.empty()) throw std::invalid_argument("sizes must name at least one size");
  return sizes;
}

iimg::Rect parse_rect(const std::string& text) {
  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    try {
      parts.push_back(std::stoll(text.substr(start, end - start)));
    } catch (const std::exception&) {
      throw std::invalid_argument("rect must look like top,left,bottom,right");
    }
    start = end + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("rect must look like top,left,bottom,right");
  return iimg::Rect{parts[0], parts[1], parts[2], parts[3]};
}

std::pair<Eigen::Index, Eigen::Index> require_footprint(const Options& opt) {
  if (!opt.wmax || !opt.hmax)
    throw std::invalid_argument("this method needs --wmax and --hmax");
  return {static_cast<Eigen::Index>(*opt.wmax), static_cast<Eigen::Index>(*opt.hmax)};
}

ordered_json trace_json(const iimg::CostTrace& trace) {
  ordered_json j;
  j["strategy"] = iimg::strategy_name(trace.strategy);
  j["rows_per_group"] = trace.rows_per_group;
  j["additions"] = trace.additions;
  // The naive model has no streaming pipeline, hence no cycle figure.
  if (trace.strategy == iimg::Strategy::kNaive)
    j["cycles"] = nullptr;
  else
    j["cycles"] = trace.cycles;
  return j;
}

int cmd_compute(const Options& opt) {
  // Validate every flag before touching the filesystem.
  const iimg::Strategy strategy = parse_strategy_flag(opt.strategy);
  const iimg::StorageMethod method =
      opt.method.empty() ? iimg::StorageMethod::kFull : parse_method_flag(opt.method);
  if (method != iimg::StorageMethod::kFull && method != iimg::StorageMethod::kExact &&
      method != iimg::StorageMethod::kVariant)
    throw std::invalid_argument("compute supports --method full, exact, or variant; "
                                "use the compress command for plus-pattern storage");

  const iimg::Grid8 image = iimg::read_pgm_file(opt.input);
  iimg::CostTrace trace;
  const iimg::Grid64 integral =
      iimg::compute_integral(image, strategy, opt.rows_per_group, &trace);

  int word_bits = iimg::word_length_full(iimg::kPixelBits, image.cols(), image.rows());
  iimg::Grid64 values = integral;
  if (method != iimg::StorageMethod::kFull) {
    const auto [wmax, hmax] = require_footprint(opt);
    word_bits = method == iimg::StorageMethod::kExact
                    ? iimg::word_length_exact(iimg::kPixelBits, wmax, hmax)
                    : iimg::word_length_variant(iimg::kPixelBits, wmax, hmax);
    values = iimg::reduce_word_length(integral, word_bits, wmax, hmax).values;
  }
  iimg::write_iimg_file(opt.output, values, word_bits);

  ordered_json j = trace_json(trace);
  j["width"] = image.cols();
  j["height"] = image.rows();
  j["word_bits"] = word_bits;
  j["output"] = opt.output;
  std::cout << j.dump() << '\n';
  return 0;
}

ordered_json cost_row_json(const iimg::CostTableRow& r) {
  ordered_json j;
  j["width"] = r.width;
  j["height"] = r.height;
  j["K"] = r.value_bits;
  j["M"] = r.row_sum_bits;
  j["N"] = r.column_sum_bits;
  j["standard_bits"] = r.standard_bits;
  j["diff_bits"] = r.diff_bits;
  j["reduction_pct"] = r.reduction_pct;
  j["naive_adds"] = r.naive_adds;
  j["serial_adds"] = r.serial_adds;
  j["parallel_adds"] = r.parallel_adds;
  j["serial_cycles"] = r.serial_cycles;
  j["two_row_cycles"] = r.two_row_cycles;
  j["four_row_cycles"] = r.four_row_cycles;
  j["diff_row_cycles"] = r.diff_row_cycles;
  return j;
}

ordered_json memory_row_json(const iimg::MemoryReport& r) {
  ordered_json j;
  j["method"] = iimg::storage_method_name(r.method);
  j["width"] = r.width;
  j["height"] = r.height;
  j["stored_width"] = r.stored_width;
  j["stored_height"] = r.stored_height;
  j["word_bits"] = r.word_bits;
  j["stored_cells"] = r.stored_cells;
  j["bits"] = r.bits;
  j["bytes"] = r.bytes;
  j["full_bits"] = r.full_bits;
  j["reduction_pct"] = r.reduction_pct;
  j["increase_vs_input_pct"] = r.increase_vs_input_pct;
  return j;
}

int cmd_report(const Options& opt) {
  if (opt.format != "csv" && opt.format != "json")
    throw std::invalid_argument("--format must be csv or json");
  std::vector<std::pair<Eigen::Index, Eigen::Index>> sizes;
  if (!opt.sizes.empty()) {
    sizes = parse_sizes(opt.sizes);
  } else if (!opt.input.empty()) {
    const iimg::Grid8 image = iimg::read_pgm_file(opt.input);
    sizes.emplace_back(image.cols(), image.rows());
  } else {
    throw std::invalid_argument("report needs --sizes or an input image");
  }

  if (opt.method.empty()) {
    const auto rows = iimg::strategy_cost_table(sizes);
    const auto notes = iimg::reference_mismatch_notes(rows);
    if (opt.format == "csv") {
      std::cout << iimg::render_cost_csv(rows);
      for (const std::string& note : notes) std::cerr << "note: " << note << '\n';
    } else {
      ordered_json j;
      j["rows"] = ordered_json::array();
      for (const auto& r : rows) j["rows"].push_back(cost_row_json(r));
      j["notes"] = notes;
      std::cout << j.dump() << '\n';
    }
    return 0;
  }

  std::vector<iimg::StorageMethod> methods;
  if (opt.method == "all") {
    methods = {iimg::StorageMethod::kFull,         iimg::StorageMethod::kExact,
               iimg::StorageMethod::kVariant,      iimg::StorageMethod::kMethod1,
               iimg::StorageMethod::kMethod2Exact, iimg::StorageMethod::kMethod2Variant};
  } else {
    methods = {parse_method_flag(opt.method)};
  }
  std::optional<Eigen::Index> wmax;
  std::optional<Eigen::Index> hmax;
  if (opt.wmax) wmax = static_cast<Eigen::Index>(*opt.wmax);
  if (opt.hmax) hmax = static_cast<Eigen::Index>(*opt.hmax);
  std::vector<iimg::MemoryReport> rows;
  for (const auto& [w, h] : sizes)
    for (const iimg::StorageMethod m : methods)
      rows.push_back(iimg::memory_report(w, h, iimg::kPixelBits, m, wmax, hmax));
  if (opt.format == "csv") {
    std::cout << iimg::render_memory_csv(rows);
  } else {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(memory_row_json(r));
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_query(const Options& opt) {
  if (opt.rect.empty()) throw std::invalid_argument("query needs --rect top,left,bottom,right");
  const iimg::Rect rect = parse_rect(opt.rect);
  const auto kind = iimg::detect_dump_file(opt.input);
  if (!kind) throw iimg::ParseError("not an IIMG or IICP dump: " + opt.input, 0);

  ordered_json j;
  if (*kind == iimg::DumpKind::kIimg) {
    const iimg::IimgFile file = iimg::read_iimg_file(opt.input);
    j["kind"] = "iimg";
    j["width"] = file.width;
    j["height"] = file.height;
    j["word_bits"] = file.word_bits;
    if (file.word_bits >= iimg::bits_for_integral(file.width, file.height)) {
      j["sum"] = iimg::box_filter_sum(file.values, rect);
    } else {
      // Word-length-reduced dump: correctness depends on the filter footprint
      // the dump was sized for, which the format does not carry.
      if (!opt.wmax || !opt.hmax)
        throw std::invalid_argument(
            "this dump is word-length reduced; pass its footprint as --wmax and --hmax");
      iimg::ReducedIntegral reduced;
      reduced.word_bits = file.word_bits;
      reduced.max_filter_width = static_cast<Eigen::Index>(*opt.wmax);
      reduced.max_filter_height = static_cast<Eigen::Index>(*opt.hmax);
      reduced.values = file.values;
      j["sum"] = iimg::box_filter_modular(reduced, rect);
    }
  } else {
    const iimg::CompressedIntegral compressed = iimg::read_iicp_file(opt.input);
    const iimg::QueryResult result = compressed.box_filter(rect);
    j["kind"] = "iicp";
    j["width"] = compressed.cols();
    j["height"] = compressed.rows();
    j["sum"] = result.sum;
    j["reconstructed_corners"] = result.reconstructed_corners;
  }
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_compress(const Options& opt) {
  const iimg::Strategy strategy = parse_strategy_flag(opt.strategy);
  const iimg::Grid8 image = iimg::read_pgm_file(opt.input);
  const iimg::Grid64 integral = iimg::compute_integral(image, strategy, opt.rows_per_group);
  const iimg::CompressedIntegral compressed = iimg::compress_plus_pattern(integral, image);
  iimg::write_iicp_file(opt.output, compressed);
  const iimg::MemoryReport report = iimg::memory_report(
      image.cols(), image.rows(), iimg::kPixelBits, iimg::StorageMethod::kMethod1);

  ordered_json j;
  j["width"] = compressed.cols();
  j["height"] = compressed.rows();
  j["stored_values"] = compressed.stored_count();
  j["reduction_pct"] = report.reduction_pct;
  j["output"] = opt.output;
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_binarize(const Options& opt) {
  iimg::validate(opt.params);
  const iimg::Strategy strategy = parse_strategy_flag(opt.strategy);
  if (opt.out_format != "pbm" && opt.out_format != "pgm")
    throw std::invalid_argument("--out-format must be pbm or pgm");
  const iimg::Grid8 image = iimg::read_pgm_file(opt.input);
  const iimg::BinaryGrid binary = iimg::binarize(image, opt.params, strategy, opt.rows_per_group);
  if (opt.check) {
    const iimg::BinaryGrid reference = iimg::binarize_naive(image, opt.params);
    if ((binary != reference).any()) {
      std::cerr << "check failed: window-sum paths disagree\n";
      return 1;
    }
    std::cout << "OK: outputs identical\n";
  }
  if (opt.out_format == "pbm")
    iimg::write_pbm_file(opt.output, binary);
  else
    iimg::write_pgm_file(opt.output, binary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Streaming integral-image engines, storage schemes, and adaptive binarization"};
  app.fallthrough(true);
  app.require_subcommand(1);

  app.add_option("--strategy", opt.strategy,
                 "integral strategy: naive, serial, two-row, four-row, n-row, diff-row")
      ->capture_default_str();
  app.add_option("--n", opt.rows_per_group, "rows per group for the n-row strategy (even)")
      ->capture_default_str();
  app.add_option("--method", opt.method,
                 "storage method: full, exact, variant, method1, method2-exact, method2-variant");
  app.add_option("--wmax", opt.wmax, "maximum box-filter width for capped word lengths");
  app.add_option("--hmax", opt.hmax, "maximum box-filter height for capped word lengths");
  app.add_option("--format", opt.format, "report format: csv or json")->capture_default_str();

  CLI::App* compute = app.add_subcommand("compute", "compute an integral image, write an IIMG dump");
  compute->add_option("input", opt.input, "input PGM")->required();
  compute->add_option("output", opt.output, "output IIMG path")->required();

  CLI::App* report = app.add_subcommand("report", "emit cost and storage tables");
  report->add_option("--sizes", opt.sizes, "comma-separated frame sizes, e.g. 1920x1080,720x576");
  report->add_option("input", opt.input, "input PGM whose size is reported");

  CLI::App* query = app.add_subcommand("query", "box-filter sum from an IIMG or IICP dump");
  query->add_option("input", opt.input, "IIMG or IICP dump")->required();
  query->add_option("--rect", opt.rect, "inclusive rectangle: top,left,bottom,right")->required();

  CLI::App* compress = app.add_subcommand("compress", "store the plus-pattern subset, write an IICP dump");
  compress->add_option("input", opt.input, "input PGM")->required();
  compress->add_option("output", opt.output, "output IICP path")->required();

  CLI::App* binarize = app.add_subcommand("binarize", "adaptive document binarization");
  binarize->add_option("input", opt.input, "input PGM")->required();
  binarize->add_option("output", opt.output, "output path")->required();
  binarize->add_option("--window", opt.params.window, "odd window side length")
      ->capture_default_str();
  binarize->add_option("--k", opt.params.k, "sensitivity in (0, 1]")->capture_default_str();
  binarize->add_option("--r", opt.params.r, "dynamic-range normalizer")->capture_default_str();
  binarize->add_option("--out-format", opt.out_format, "pbm or pgm")->capture_default_str();
  binarize->add_flag("--check", opt.check, "also run the direct-summation path and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt);
    if (report->parsed()) return cmd_report(opt);
    if (query->parsed()) return cmd_query(opt);
    if (compress->parsed()) return cmd_compress(opt);
    if (binarize->parsed()) return cmd_binarize(opt);
    return 4;
  } catch (const iimg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const iimg::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
