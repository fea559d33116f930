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

#include "iimg/iimg_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "iimg/errors.hpp"

namespace iimg {

namespace {

constexpr char kIimgMagic[4] = {'I', 'I', 'M', 'G'};
constexpr char kIicpMagic[4] = {'I', 'I', 'C', 'P'};
constexpr std::uint8_t kIimgVersion = 1;

int value_bytes(int word_bits) { return (word_bits + 7) / 8; }

std::uint64_t word_mask(int word_bits) {
  return word_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word_bits) - 1;
}

void put_u32le(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> bytes = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes.data(), bytes.size());
}

void put_value(std::ostream& out, std::uint64_t v, int nbytes) {
  std::array<char, 8> bytes;
  for (int i = 0; i < nbytes; ++i) bytes[static_cast<std::size_t>(i)] = static_cast<char>(v >> (8 * i));
  out.write(bytes.data(), nbytes);
}

struct Reader {
  const std::string& data;
  std::size_t pos = 0;

  void need(std::size_t n, const char* what) const {
    if (data.size() - pos < n) throw ParseError(std::string("truncated ") + what, data.size());
  }
  std::uint8_t u8(const char* what) {
    need(1, what);
    return static_cast<std::uint8_t>(data[pos++]);
  }
  std::uint32_t u32le(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data[pos + static_cast<std::size_t>(i)]))
           << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t value(int nbytes, const char* what) {
    need(static_cast<std::size_t>(nbytes), what);
    std::uint64_t v = 0;
    for (int i = 0; i < nbytes; ++i)
      v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data[pos + static_cast<std::size_t>(i)]))
           << (8 * i);
    pos += static_cast<std::size_t>(nbytes);
    return v;
  }
};

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check_dump_dims(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) throw DomainError("dump needs positive width and height");
  if (width > static_cast<std::uint32_t>(kMaxDim) || height > static_cast<std::uint32_t>(kMaxDim))
    throw DomainError("dump exceeds the supported maximum of 32768x32768");
}

}  // namespace

void write_iimg(std::ostream& out, const Grid64& values, int word_bits) {
  require_valid_dims(values);
  if (word_bits < 1 || word_bits > 64)
    throw std::invalid_argument("word length must be in [1, 64]");
  const std::uint64_t mask = word_mask(word_bits);
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if ((values.data()[i] & ~mask) != 0)
      throw DomainError("value does not fit the declared word length");
  out.write(kIimgMagic, 4);
  out.put(static_cast<char>(kIimgVersion));
  put_u32le(out, static_cast<std::uint32_t>(values.cols()));
  put_u32le(out, static_cast<std::uint32_t>(values.rows()));
  out.put(static_cast<char>(word_bits));
  const int nbytes = value_bytes(word_bits);
  for (Eigen::Index i = 0; i < values.size(); ++i) put_value(out, values.data()[i], nbytes);
}

void write_iimg_file(const std::string& path, const Grid64& values, int word_bits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  write_iimg(out, values, word_bits);
}

IimgFile read_iimg(std::istream& in) {
  const std::string data = slurp(in);
  Reader r{data};
  r.need(4, "magic");
  if (data.compare(0, 4, kIimgMagic, 4) != 0)
    throw ParseError("not an IIMG dump: bad magic", 0);
  r.pos = 4;
  const std::size_t version_at = r.pos;
  if (r.u8("version") != kIimgVersion)
    throw ParseError("unsupported IIMG version", version_at);
  const std::uint32_t width = r.u32le("width");
  const std::uint32_t height = r.u32le("height");
  check_dump_dims(width, height);
  const std::size_t word_at = r.pos;
  const int word_bits = r.u8("word length");
  if (word_bits < 1 || word_bits > 64)
    throw ParseError("word length must be in [1, 64]", word_at);

  IimgFile file;
  file.width = static_cast<Eigen::Index>(width);
  file.height = static_cast<Eigen::Index>(height);
  file.word_bits = word_bits;
  file.values.resize(file.height, file.width);
  const int nbytes = value_bytes(word_bits);
  const std::uint64_t mask = word_mask(word_bits);
  for (Eigen::Index i = 0; i < file.values.size(); ++i) {
    const std::size_t at = r.pos;
    const std::uint64_t v = r.value(nbytes, "values");
    if ((v & ~mask) != 0)
      throw ParseError("stored value exceeds the declared word length", at);
    file.values.data()[i] = v;
  }
  return file;
}

IimgFile read_iimg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path, 0);
  return read_iimg(in);
}

void write_iicp(std::ostream& out, const CompressedIntegral& compressed) {
  out.write(kIicpMagic, 4);
  put_u32le(out, static_cast<std::uint32_t>(compressed.cols()));
  put_u32le(out, static_cast<std::uint32_t>(compressed.rows()));
  const int nbytes = value_bytes(bits_for_integral(compressed.cols(), compressed.rows()));
  for (std::uint64_t v : compressed.stored_values()) put_value(out, v, nbytes);
  const Grid8& src = compressed.source();
  out.write(reinterpret_cast<const char*>(src.data()), static_cast<std::streamsize>(src.size()));
}

void write_iicp_file(const std::string& path, const CompressedIntegral& compressed) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  write_iicp(out, compressed);
}

CompressedIntegral read_iicp(std::istream& in) {
  const std::string data = slurp(in);
  Reader r{data};
  r.need(4, "magic");
  if (data.compare(0, 4, kIicpMagic, 4) != 0)
    throw ParseError("not an IICP dump: bad magic", 0);
  r.pos = 4;
  const std::size_t dims_at = r.pos;
  const std::uint32_t width = r.u32le("width");
  const std::uint32_t height = r.u32le("height");
  check_dump_dims(width, height);
  if (width % 3 != 0 || height % 3 != 0)
    throw ParseError("IICP sizes must be multiples of 3", dims_at);
  const Eigen::Index w = static_cast<Eigen::Index>(width);
  const Eigen::Index h = static_cast<Eigen::Index>(height);

  const int nbytes = value_bytes(bits_for_integral(w, h));
  const std::uint64_t cap = static_cast<std::uint64_t>(kMaxPixel) * width * height;
  std::vector<std::uint64_t> values;
  values.resize(static_cast<std::size_t>(w / 3 * h / 3 * 5));
  for (std::uint64_t& v : values) {
    const std::size_t at = r.pos;
    v = r.value(nbytes, "values");
    if (v > cap) throw ParseError("stored value exceeds the representable range", at);
  }
  Grid8 source(h, w);
  r.need(static_cast<std::size_t>(source.size()), "source image");
  for (Eigen::Index i = 0; i < source.size(); ++i)
    source.data()[i] = static_cast<std::uint8_t>(data[r.pos + static_cast<std::size_t>(i)]);
  return CompressedIntegral(h, w, std::move(values), std::move(source));
}

CompressedIntegral read_iicp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path, 0);
  return read_iicp(in);
}

std::optional<DumpKind> detect_dump_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() != 4) return std::nullopt;
  if (std::equal(magic, magic + 4, kIimgMagic)) return DumpKind::kIimg;
  if (std::equal(magic, magic + 4, kIicpMagic)) return DumpKind::kIicp;
  return std::nullopt;
}

}  // namespace iimg
