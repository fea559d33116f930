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

#include "iimg/pnm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "iimg/errors.hpp"

namespace iimg {

namespace {

// Cursor over a fully buffered file so every error can carry a byte offset.
struct Cursor {
  const std::string& data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  char peek() const { return data[pos]; }

  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        return;
      }
    }
  }

  std::uint64_t read_number(const char* what) {
    skip_space_and_comments();
    if (eof()) throw ParseError(std::string("missing ") + what, pos);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected a number for ") + what, pos);
    std::uint64_t value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > 10'000'000) throw ParseError(std::string(what) + " is out of range", pos);
      ++pos;
    }
    return value;
  }
};

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check_dims(std::uint64_t width, std::uint64_t height) {
  if (width == 0 || height == 0) throw DomainError("image needs positive width and height");
  if (width > static_cast<std::uint64_t>(kMaxDim) || height > static_cast<std::uint64_t>(kMaxDim))
    throw DomainError("image exceeds the supported maximum of 32768x32768");
}

}  // namespace

Grid8 read_pgm(std::istream& in) {
  const std::string data = slurp(in);
  Cursor cur{data};
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5'))
    throw ParseError("not a PGM file: expected P2 or P5", 0);
  const bool raw = data[1] == '5';
  cur.pos = 2;
  const std::uint64_t width = cur.read_number("width");
  const std::uint64_t height = cur.read_number("height");
  check_dims(width, height);
  const std::size_t maxval_at = (cur.skip_space_and_comments(), cur.pos);
  const std::uint64_t maxval = cur.read_number("maxval");
  if (maxval != 255) throw ParseError("only maxval 255 is supported", maxval_at);

  Grid8 img(static_cast<Eigen::Index>(height), static_cast<Eigen::Index>(width));
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (raw) {
    if (cur.eof()) throw ParseError("missing whitespace after maxval", cur.pos);
    if (!std::isspace(static_cast<unsigned char>(cur.peek())))
      throw ParseError("expected a single whitespace byte after maxval", cur.pos);
    ++cur.pos;
    if (data.size() - cur.pos < count)
      throw ParseError("raw pixel data ends early", data.size());
    for (std::size_t i = 0; i < count; ++i)
      img.data()[i] = static_cast<std::uint8_t>(data[cur.pos + i]);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space_and_comments();
      const std::size_t at = cur.pos;
      const std::uint64_t value = cur.read_number("pixel");
      if (value > maxval) throw ParseError("pixel value exceeds maxval", at);
      img.data()[i] = static_cast<std::uint8_t>(value);
    }
  }
  return img;
}

Grid8 read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path, 0);
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const Grid8& image) {
  require_valid_dims(image);
  out << "P5\n" << image.cols() << ' ' << image.rows() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.data()),
            static_cast<std::streamsize>(image.size()));
}

void write_pgm_file(const std::string& path, const Grid8& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  write_pgm(out, image);
}

void write_pbm(std::ostream& out, const BinaryGrid& image) {
  require_valid_dims(image);
  out << "P4\n" << image.cols() << ' ' << image.rows() << '\n';
  const Eigen::Index row_bytes = (image.cols() + 7) / 8;
  std::string row(static_cast<std::size_t>(row_bytes), '\0');
  for (Eigen::Index r = 0; r < image.rows(); ++r) {
    std::fill(row.begin(), row.end(), '\0');
    for (Eigen::Index c = 0; c < image.cols(); ++c)
      if (image(r, c)) row[static_cast<std::size_t>(c / 8)] |= static_cast<char>(0x80 >> (c % 8));
    out.write(row.data(), row_bytes);
  }
}

void write_pbm_file(const std::string& path, const BinaryGrid& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  write_pbm(out, image);
}

void write_pgm(std::ostream& out, const BinaryGrid& image) {
  require_valid_dims(image);
  const Grid8 grey = image.unaryExpr([](bool fg) { return fg ? std::uint8_t{0} : std::uint8_t{255}; });
  write_pgm(out, grey);
}

void write_pgm_file(const std::string& path, const BinaryGrid& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  write_pgm(out, image);
}

}  // namespace iimg
