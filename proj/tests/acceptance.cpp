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
// Acceptance gate. Runs the end-to-end checks the library must satisfy and
// prints one PASS or FAIL line per check. Exits nonzero if any check fails.
// Every tolerance is pinned as a named constant next to the check it governs.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iimg/binarize.hpp"
#include "iimg/box_filter.hpp"
#include "iimg/compress.hpp"
#include "iimg/hw_model.hpp"
#include "iimg/integral.hpp"
#include "iimg/report.hpp"
#include "iimg/strategies.hpp"
#include "iimg/word_length.hpp"
#include "testutil.hpp"

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::string dims(Eigen::Index w, Eigen::Index h) {
  return std::to_string(w) + "x" + std::to_string(h);
}

// ---------------------------------------------------------------------------
// 1. Every streaming engine reproduces the re-summation definition exactly.
//
// The cell-by-cell re-summation runs in quartic time, so it anchors the
// separable two-pass reference on small images; the two-pass reference then
// stands in for it at full size.
constexpr double kEquivalenceBudgetSeconds = 60.0;

Outcome check_engine_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<Eigen::Index> dim(1, 512);

  std::vector<iimg::Grid8> images;
  images.reserve(535);
  // Small frames first so the quartic anchor covers a meaningful batch.
  std::uniform_int_distribution<Eigen::Index> small(1, 24);
  for (int i = 0; i < 30; ++i) images.push_back(testutil::random_image(rng, small(rng), small(rng)));
  for (int i = 0; i < 500; ++i) images.push_back(testutil::random_image(rng, dim(rng), dim(rng)));
  images.push_back(iimg::Grid8::Zero(512, 512));
  images.push_back(iimg::Grid8::Constant(512, 512, 255));
  images.push_back(testutil::random_image(rng, 1, 509));
  images.push_back(testutil::random_image(rng, 509, 1));
  images.push_back(testutil::random_image(rng, 1, 1));

  long anchored = 0;
  long compared = 0;
  for (const iimg::Grid8& img : images) {
    const iimg::Grid64 reference = iimg::integral_naive(img);
    if (img.rows() <= 24 && img.cols() <= 24) {
      ++anchored;
      if (!(reference == testutil::oracle_integral(img)).all())
        result.fail("two-pass reference diverged from re-summation on " +
                    dims(img.cols(), img.rows()));
    }
    const auto compare = [&](const iimg::Grid64& got, const char* name) {
      ++compared;
      if (!(got == reference).all())
        result.fail(std::string(name) + " diverged on " + dims(img.cols(), img.rows()));
    };
    compare(iimg::integral_serial(img), "serial");
    compare(iimg::integral_two_row(img), "two-row");
    compare(iimg::integral_four_row(img), "four-row");
    for (int n : {2, 4, 6, 8}) {
      iimg::CostTrace trace;
      compare(iimg::integral_n_row(img, n, &trace),
              ("n-row n=" + std::to_string(n)).c_str());
    }
    compare(iimg::integral_diff_row(img), "diff-row");
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= kEquivalenceBudgetSeconds)
    result.fail("suite took " + std::to_string(seconds) + " s, budget " +
                std::to_string(kEquivalenceBudgetSeconds) + " s");
  std::ostringstream d;
  d << images.size() << " images, " << compared << " engine runs bit-identical, " << anchored
    << " anchored to the quartic re-summation, " << std::fixed << std::setprecision(1) << seconds
    << " s";
  result.detail = result.ok ? d.str() : result.detail;
  return result;
}

// ---------------------------------------------------------------------------
// 2. Instrumented addition counts match the closed forms: 2wh for the serial
// engine and 2wh + wh/2 for the row-parallel engines, on heights divisible
// by 4. The naive count is checked as a formula only; running it would take
// around 1.9e9 additions for a single 360x240 frame.

Outcome check_addition_counts() {
  Outcome result;
  std::mt19937 rng(411);
  std::uniform_int_distribution<Eigen::Index> wdist(1, 300);
  std::uniform_int_distribution<Eigen::Index> hdist(1, 64);

  std::vector<std::pair<Eigen::Index, Eigen::Index>> sizes = {{360, 240}};
  while (sizes.size() < 24) sizes.emplace_back(wdist(rng), 4 * hdist(rng));

  for (const auto& [w, h] : sizes) {
    const std::uint64_t wh = static_cast<std::uint64_t>(w) * h;
    const iimg::Grid8 img = testutil::random_image(rng, h, w);
    iimg::CostTrace serial, two, four;
    iimg::integral_serial(img, &serial);
    iimg::integral_two_row(img, &two);
    iimg::integral_four_row(img, &four);
    if (serial.additions != 2 * wh)
      result.fail("serial count off at " + dims(w, h));
    if (two.additions != 2 * wh + wh / 2 || four.additions != 2 * wh + wh / 2)
      result.fail("parallel count off at " + dims(w, h));
    if (serial.additions != iimg::serial_additions(w, h) ||
        two.additions != iimg::parallel_additions(w, h))
      result.fail("closed form disagrees with instrumented count at " + dims(w, h));
  }
  if (iimg::naive_additions(360, 240) != 1866240000ull)
    result.fail("naive re-summation formula does not give 1,866,240,000 at 360x240");
  if (result.ok)
    result.detail = std::to_string(sizes.size()) +
                    " sizes instrumented, naive formula at 360x240 = 1866240000";
  return result;
}

// ---------------------------------------------------------------------------
// 3. Lockstep cycle counts: wh serial, wh/2 two-row, wh/4 four-row, wh/2
// diff-row, exact on heights divisible by 4.

Outcome check_cycle_counts() {
  Outcome result;
  std::mt19937 rng(431);
  std::uniform_int_distribution<Eigen::Index> wdist(1, 240);
  std::uniform_int_distribution<Eigen::Index> hdist(1, 50);

  std::vector<std::pair<Eigen::Index, Eigen::Index>> sizes = {{360, 240}};
  while (sizes.size() < 10) sizes.emplace_back(wdist(rng), 4 * hdist(rng));

  for (const auto& [w, h] : sizes) {
    const std::uint64_t wh = static_cast<std::uint64_t>(w) * h;
    const iimg::Grid8 img = testutil::random_image(rng, h, w);
    iimg::CostTrace serial, two, four, diff;
    iimg::integral_serial(img, &serial);
    iimg::integral_two_row(img, &two);
    iimg::integral_four_row(img, &four);
    iimg::integral_diff_row(img, &diff);
    if (serial.cycles != wh || two.cycles != wh / 2 || four.cycles != wh / 4 ||
        diff.cycles != wh / 2)
      result.fail("cycle count off at " + dims(w, h));
  }
  if (iimg::serial_cycles(1920, 1080) != 2073600ull ||
      iimg::pair_cycles(1920, 1080) != 1036800ull ||
      iimg::group_cycles(1920, 1080, 4) != 518400ull)
    result.fail("closed-form cycles off at 1920x1080");
  if (result.ok)
    result.detail = std::to_string(sizes.size()) +
                    " sizes instrumented; 1920x1080 closed forms 2073600/1036800/518400";
  return result;
}

// ---------------------------------------------------------------------------
// 4. Per-register width reduction 100*(K-N)/K matches the published figures
// for five frame sizes within half a percentage point. Two further published
// rows disagree with their own formula; those must surface as explanatory
// notes carrying the computed value, not be silently patched.
constexpr double kWidthReductionTolerancePct = 0.5;

Outcome check_width_reduction() {
  Outcome result;
  const struct {
    Eigen::Index w, h;
    double expected;
  } agreeing[] = {
      {720, 576, 33.3}, {800, 640, 33.3}, {1920, 1080, 34.4},
      {2048, 1536, 36.6}, {2048, 2048, 36.6},
  };
  for (const auto& row : agreeing) {
    const iimg::BitWidthReport r = iimg::internal_memory_report(row.w, row.h);
    if (std::abs(r.width_only_reduction_pct - row.expected) > kWidthReductionTolerancePct) {
      std::ostringstream why;
      why << dims(row.w, row.h) << " computed " << r.width_only_reduction_pct << ", expected "
          << row.expected << " +- " << kWidthReductionTolerancePct;
      result.fail(why.str());
    }
  }

  const auto rows = iimg::strategy_cost_table({{360, 240}, {1280, 720}});
  const auto notes = iimg::reference_mismatch_notes(rows);
  if (notes.size() != 2)
    result.fail("expected explanatory notes for 360x240 and 1280x720, got " +
                std::to_string(notes.size()));
  for (const char* fragment : {"360x240: computed per-register reduction 36.00%",
                               "1280x720: computed per-register reduction 35.71%"}) {
    bool found = false;
    for (const std::string& note : notes) found = found || note.find(fragment) == 0;
    if (!found) result.fail(std::string("missing note: ") + fragment);
  }
  if (result.ok)
    result.detail = "5 sizes within 0.5 pp; 2 divergent published rows flagged with "
                    "computed values 36.00% and 35.71%";
  return result;
}

// ---------------------------------------------------------------------------
// 5. Plus-pattern storage keeps exactly 5 of every 9 cells of the trimmed
// region: ratio exactly 5/9 on 50 randomized sizes, and a 9x9 frame stores
// exactly 45 values.

Outcome check_plus_ratio() {
  Outcome result;
  std::mt19937 rng(521);
  std::uniform_int_distribution<Eigen::Index> dim(3, 100);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Index rows = dim(rng);
    const Eigen::Index cols = dim(rng);
    const iimg::Grid8 img = testutil::random_image(rng, rows, cols);
    const iimg::CompressedIntegral c =
        iimg::compress_plus_pattern(iimg::integral_naive(img), img);
    const std::uint64_t trimmed = static_cast<std::uint64_t>(c.rows()) * c.cols();
    if (c.stored_count() * 9 != trimmed * 5)
      result.fail("stored/trimmed ratio not 5/9 at " + dims(cols, rows));
  }
  const iimg::Grid8 nine = testutil::random_image(rng, 9, 9);
  const auto c9 = iimg::compress_plus_pattern(iimg::integral_naive(nine), nine);
  if (c9.stored_count() != 45)
    result.fail("9x9 stores " + std::to_string(c9.stored_count()) + " values, not 45");
  if (result.ok) result.detail = "50 randomized sizes at exactly 5/9; 9x9 stores 45 values";
  return result;
}

// ---------------------------------------------------------------------------
// 6. Plus-pattern reconstruction is lossless: every trimmed coordinate equals
// the full integral image, and 10,000 randomized rectangle queries equal the
// four-corner box filter. Exact.

Outcome check_plus_exactness() {
  Outcome result;
  std::mt19937 rng(541);
  struct Frame {
    iimg::Grid8 img;
    iimg::Grid64 integral;
    iimg::CompressedIntegral compressed;
  };
  std::vector<Frame> frames;
  for (const auto& [rows, cols] :
       std::vector<std::pair<Eigen::Index, Eigen::Index>>{{9, 9}, {27, 33}, {30, 30}, {48, 12}}) {
    iimg::Grid8 img = testutil::random_image(rng, rows, cols);
    iimg::Grid64 integral = iimg::integral_naive(img);
    iimg::CompressedIntegral compressed = iimg::compress_plus_pattern(integral, img);
    frames.push_back({std::move(img), std::move(integral), std::move(compressed)});
  }

  long cells = 0;
  for (const Frame& f : frames)
    for (Eigen::Index r = 0; r < f.compressed.rows(); ++r)
      for (Eigen::Index c = 0; c < f.compressed.cols(); ++c) {
        ++cells;
        if (f.compressed.cell(r, c) != f.integral(r, c)) {
          result.fail("cell mismatch at (" + std::to_string(r) + "," + std::to_string(c) +
                      ") in " + dims(f.compressed.cols(), f.compressed.rows()));
          r = f.compressed.rows();  // one report per frame is enough
          break;
        }
      }

  long queries = 0;
  for (int i = 0; i < 10000; ++i) {
    const Frame& f = frames[i % frames.size()];
    std::uniform_int_distribution<Eigen::Index> rdist(0, f.compressed.rows() - 1);
    std::uniform_int_distribution<Eigen::Index> cdist(0, f.compressed.cols() - 1);
    Eigen::Index r0 = rdist(rng), r1 = rdist(rng);
    Eigen::Index c0 = cdist(rng), c1 = cdist(rng);
    const iimg::Rect rect{std::min(r0, r1), std::min(c0, c1), std::max(r0, r1), std::max(c0, c1)};
    ++queries;
    if (f.compressed.box_filter(rect).sum != iimg::box_filter_sum(f.integral, rect)) {
      result.fail("rect query diverged in " + dims(f.compressed.cols(), f.compressed.rows()));
      break;
    }
  }
  if (result.ok)
    result.detail = std::to_string(cells) + " reconstructed cells and " +
                    std::to_string(queries) + " rect queries all exact";
  return result;
}

// ---------------------------------------------------------------------------
// 7. Word-length sizing: full-range words of 25 bits at 360x240 and 29 bits
// at 1920x1080; a 65x129 filter bound gives 22 bits exactly and 21 bits with
// the 4% half-range variant; capped plus-pattern storage on 1920x1080 cuts
// total memory by at least half.
constexpr double kMinCombinedReductionPct = 50.0;

Outcome check_word_lengths() {
  Outcome result;
  if (iimg::word_length_full(iimg::kPixelBits, 360, 240) != 25)
    result.fail("full word at 360x240 is not 25 bits");
  if (iimg::word_length_full(iimg::kPixelBits, 1920, 1080) != 29)
    result.fail("full word at 1920x1080 is not 29 bits");
  if (iimg::word_length_exact(iimg::kPixelBits, 65, 129) != 22)
    result.fail("exact word for a 65x129 bound is not 22 bits");
  if (iimg::word_length_variant(iimg::kPixelBits, 65, 129) != 21)
    result.fail("variant word for a 65x129 bound is not 21 bits");
  const iimg::MemoryReport combined = iimg::memory_report(
      1920, 1080, iimg::kPixelBits, iimg::StorageMethod::kMethod2Exact, 65, 129);
  if (combined.reduction_pct < kMinCombinedReductionPct)
    result.fail("combined storage reduction " + std::to_string(combined.reduction_pct) +
                "% is below 50%");
  if (result.ok) {
    std::ostringstream d;
    d << "words 25/29/22/21 bits; combined 1920x1080 reduction " << std::fixed
      << std::setprecision(2) << combined.reduction_pct << "%";
    result.detail = d.str();
  }
  return result;
}

// ---------------------------------------------------------------------------
// 8. Wrap-around storage stays exact: with words sized for a filter bound,
// every in-bound rectangle sum is recovered exactly despite truncation,
// 1,000 trials per bound including saturated all-255 frames.

Outcome check_modular_exactness() {
  Outcome result;
  std::mt19937 rng(571);
  long trials = 0;
  for (const auto& [wmax, hmax] :
       std::vector<std::pair<Eigen::Index, Eigen::Index>>{{8, 8}, {16, 16}, {65, 129}}) {
    const Eigen::Index rows = hmax + 20;
    const Eigen::Index cols = wmax + 15;
    const int word = iimg::word_length_exact(iimg::kPixelBits, wmax, hmax);
    const iimg::Grid8 images[2] = {testutil::random_image(rng, rows, cols),
                                   iimg::Grid8::Constant(rows, cols, 255)};
    for (const iimg::Grid8& img : images) {
      const iimg::Grid64 full = iimg::integral_naive(img);
      const iimg::ReducedIntegral reduced = iimg::reduce_word_length(full, word, wmax, hmax);
      std::uniform_int_distribution<Eigen::Index> wdist(1, wmax);
      std::uniform_int_distribution<Eigen::Index> hdist(1, hmax);
      for (int i = 0; i < 500; ++i) {
        // The first trial pins the worst case: a full-bound rect.
        const Eigen::Index rw = i == 0 ? wmax : wdist(rng);
        const Eigen::Index rh = i == 0 ? hmax : hdist(rng);
        std::uniform_int_distribution<Eigen::Index> top(0, rows - rh);
        std::uniform_int_distribution<Eigen::Index> left(0, cols - rw);
        const Eigen::Index t = top(rng), l = left(rng);
        const iimg::Rect rect{t, l, t + rh - 1, l + rw - 1};
        ++trials;
        if (iimg::box_filter_modular(reduced, rect) != iimg::box_filter_sum(full, rect)) {
          result.fail("wrapped sum diverged for bound " + dims(wmax, hmax));
          i = 500;
        }
      }
    }
  }
  if (result.ok)
    result.detail = std::to_string(trials) + " in-bound rect sums exact across 3 word sizes";
  return result;
}

// ---------------------------------------------------------------------------
// 9. Window-sum binarization equals the direct per-pixel implementation
// bit-for-bit, on random frames and on a synthetic document, regardless of
// the integral strategy used underneath.

iimg::Grid8 synthetic_document() {
  iimg::Grid8 img = iimg::Grid8::Constant(64, 64, 220);
  for (Eigen::Index c = 10; c <= 54; ++c) img(20, c) = 30;
  for (Eigen::Index r = 12; r <= 40; ++r) img(r, 14) = 25;
  for (Eigen::Index r = 30; r <= 44; ++r) img(r, r + 5) = 40;
  return img;
}

Outcome check_binarization() {
  Outcome result;
  std::mt19937 rng(601);
  const iimg::BinarizeParams params;
  const std::vector<std::pair<iimg::Strategy, int>> strategies = {
      {iimg::Strategy::kSerial, 2}, {iimg::Strategy::kTwoRow, 2},
      {iimg::Strategy::kFourRow, 2}, {iimg::Strategy::kNRow, 6},
      {iimg::Strategy::kDiffRow, 2}};

  long frames = 0;
  for (int i = 0; i < 200; ++i) {
    const iimg::Grid8 img = testutil::random_image(rng, 64, 64);
    const iimg::BinaryGrid reference = iimg::binarize_naive(img, params);
    const auto& [strategy, n] = strategies[i % strategies.size()];
    ++frames;
    if ((iimg::binarize(img, params, strategy, n) != reference).any()) {
      result.fail("window-sum path diverged on random frame " + std::to_string(i));
      break;
    }
  }

  const iimg::Grid8 doc = synthetic_document();
  const iimg::BinaryGrid doc_reference = iimg::binarize_naive(doc, params);
  if (!doc_reference.any()) result.fail("synthetic document produced no foreground");
  for (const auto& [strategy, n] : strategies)
    if ((iimg::binarize(doc, params, strategy, n) != doc_reference).any())
      result.fail("strategy changed the document output");
  if (result.ok)
    result.detail = std::to_string(frames) +
                    " random frames and a synthetic document identical across 5 strategies";
  return result;
}

// ---------------------------------------------------------------------------
// 10. Physical-hardware measurements (FPGA resource usage, wall-clock
// latencies, GPU comparisons) cannot be reproduced here. The arithmetic and
// cycle models validated by checks 2 and 3 are the stand-in.

Outcome check_out_of_scope() {
  Outcome result;
  result.detail = "hardware resource counts and timings are out of scope; "
                  "covered by the exact count models of checks 2-4";
  return result;
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* title;
    std::function<Outcome()> run;
  } checks[] = {
      {1, "streaming engines match the re-summation oracle", check_engine_equivalence},
      {2, "instrumented addition counts match the closed forms", check_addition_counts},
      {3, "lockstep cycle counts match the closed forms", check_cycle_counts},
      {4, "per-register width reduction matches published figures", check_width_reduction},
      {5, "plus-pattern stores exactly 5 of 9 cells", check_plus_ratio},
      {6, "plus-pattern reconstruction and queries are lossless", check_plus_exactness},
      {7, "word-length sizing hits the derived anchors", check_word_lengths},
      {8, "wrap-around storage keeps in-bound sums exact", check_modular_exactness},
      {9, "binarization is independent of the summation path", check_binarization},
      {10, "hardware-only measurements are out of scope", check_out_of_scope},
  };

  bool all_ok = true;
  for (const auto& check : checks) {
    Outcome outcome;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("unexpected exception: ") + e.what());
    }
    all_ok = all_ok && outcome.ok;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " " << std::setw(2) << check.id << "  "
              << check.title << " (" << outcome.detail << ")\n";
  }
  return all_ok ? 0 : 1;
}
