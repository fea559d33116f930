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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iimg/compress.hpp"
#include "iimg/integral.hpp"
#include "testutil.hpp"

using iimg::CompressedIntegral;
using iimg::Grid64;
using iimg::Grid8;
using iimg::Rect;

namespace {

CompressedIntegral build_from(const Grid8& img) {
  return iimg::compress_plus_pattern(iimg::integral_naive(img), img);
}

}  // namespace

TEST_CASE("worked 3x3 example: stored plus values and rebuilt corners") {
  const Grid8 img = testutil::worked_example_3x3();
  const CompressedIntegral z = build_from(img);
  CHECK(z.rows() == 3);
  CHECK(z.cols() == 3);
  CHECK(z.stored_count() == 5);
  CHECK(z.stored_values() == std::vector<std::uint64_t>{3, 5, 12, 21, 27});

  bool rebuilt = false;
  CHECK(z.cell(1, 1, &rebuilt) == 12);
  CHECK(!rebuilt);
  CHECK(z.cell(0, 0, &rebuilt) == 1);
  CHECK(rebuilt);
  CHECK(z.cell(0, 2) == 6);
  CHECK(z.cell(2, 0) == 12);
  CHECK(z.cell(2, 2) == 45);

  const auto center = z.box_filter({1, 1, 2, 2});
  CHECK(center.sum == 28);
  CHECK(center.reconstructed_corners == 4);

  const auto full = z.box_filter({0, 0, 2, 2});
  CHECK(full.sum == 45);
  CHECK(full.reconstructed_corners == 1);  // only the bottom-right lookup is a corner
}

TEST_CASE("a 9x9 image stores exactly 45 values") {
  std::mt19937 rng(41);
  const Grid8 img = testutil::random_image(rng, 9, 9);
  CHECK(build_from(img).stored_count() == 45);
}

TEST_CASE("stored ratio is exactly five ninths of the trimmed cells") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<Eigen::Index> dim(3, 40);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Index h = dim(rng);
    const Eigen::Index w = dim(rng);
    const Grid8 img = testutil::random_image(rng, h, w);
    const CompressedIntegral z = build_from(img);
    CHECK(z.rows() == h - h % 3);
    CHECK(z.cols() == w - w % 3);
    CHECK(z.stored_count() * 9 == static_cast<std::size_t>(z.rows() * z.cols()) * 5);
  }
}

TEST_CASE("every cell, stored or rebuilt, equals the reference integral") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<Eigen::Index> dim(3, 30);
  for (int i = 0; i < 25; ++i) {
    const Grid8 img = testutil::random_image(rng, dim(rng), dim(rng));
    const Grid64 want = iimg::integral_naive(img);
    const CompressedIntegral z = build_from(img);
    int rebuilt_cells = 0;
    for (Eigen::Index r = 0; r < z.rows(); ++r)
      for (Eigen::Index c = 0; c < z.cols(); ++c) {
        bool rebuilt = false;
        REQUIRE(z.cell(r, c, &rebuilt) == want(r, c));
        REQUIRE(rebuilt == !CompressedIntegral::is_stored(r, c));
        rebuilt_cells += rebuilt;
      }
    CHECK(rebuilt_cells * 5 == static_cast<int>(z.stored_count()) * 4);  // 4 corners per tile
  }
}

TEST_CASE("rectangle queries match the plain box filter") {
  std::mt19937 rng(53);
  const Grid8 img = testutil::random_image(rng, 27, 33);
  const Grid64 ii = iimg::integral_naive(img);
  const CompressedIntegral z = build_from(img);
  std::uniform_int_distribution<Eigen::Index> row(0, 26);
  std::uniform_int_distribution<Eigen::Index> col(0, 32);
  for (int i = 0; i < 2000; ++i) {
    Eigen::Index r0 = row(rng), r1 = row(rng);
    Eigen::Index c0 = col(rng), c1 = col(rng);
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    const Rect rect{r0, c0, r1, c1};
    const auto got = z.box_filter(rect);
    REQUIRE(got.sum == iimg::box_filter_sum(ii, rect));
    REQUIRE(got.sum == testutil::oracle_rect_sum(img, rect));
    REQUIRE(got.reconstructed_corners >= 0);
    REQUIRE(got.reconstructed_corners <= 4);
  }
}

TEST_CASE("trimming drops the ragged margin entirely") {
  std::mt19937 rng(59);
  const Grid8 img = testutil::random_image(rng, 10, 11);
  const CompressedIntegral z = build_from(img);
  CHECK(z.rows() == 9);
  CHECK(z.cols() == 9);
  CHECK(z.source().rows() == 9);
  CHECK(z.source().cols() == 9);
  CHECK_THROWS_AS(z.cell(9, 0), iimg::DomainError);
  CHECK_THROWS_AS(z.box_filter({0, 0, 8, 9}), iimg::DomainError);
}

TEST_CASE("build guards") {
  std::mt19937 rng(61);
  const Grid8 small = testutil::random_image(rng, 2, 8);
  CHECK_THROWS_AS(build_from(small), iimg::DomainError);
  const Grid8 img = testutil::random_image(rng, 6, 6);
  const Grid64 wrong = Grid64::Zero(6, 7);
  CHECK_THROWS_AS(iimg::compress_plus_pattern(wrong, img), iimg::DomainError);
}

TEST_CASE("reassembly validates its parts") {
  std::mt19937 rng(67);
  const Grid8 img = testutil::random_image(rng, 6, 6);
  const CompressedIntegral z = build_from(img);
  auto values = z.stored_values();
  CHECK_NOTHROW(CompressedIntegral(6, 6, values, z.source()));
  values.pop_back();
  CHECK_THROWS_AS(CompressedIntegral(6, 6, values, z.source()), iimg::DomainError);
  CHECK_THROWS_AS(CompressedIntegral(5, 6, z.stored_values(), z.source()), iimg::DomainError);
  CHECK_THROWS_AS(CompressedIntegral(6, 6, z.stored_values(), Grid8::Zero(6, 5)),
                  iimg::DomainError);
}

TEST_CASE("plus pattern keeps five positions per tile") {
  int stored = 0;
  for (Eigen::Index r = 0; r < 3; ++r)
    for (Eigen::Index c = 0; c < 3; ++c) stored += CompressedIntegral::is_stored(r, c);
  CHECK(stored == 5);
  CHECK(CompressedIntegral::is_stored(0, 1));
  CHECK(CompressedIntegral::is_stored(1, 0));
  CHECK(CompressedIntegral::is_stored(1, 1));
  CHECK(CompressedIntegral::is_stored(1, 2));
  CHECK(CompressedIntegral::is_stored(2, 1));
  CHECK(!CompressedIntegral::is_stored(0, 0));
  CHECK(!CompressedIntegral::is_stored(3, 3));
  CHECK(CompressedIntegral::is_stored(4, 5));
}