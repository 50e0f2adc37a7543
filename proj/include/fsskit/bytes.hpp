// Copyright 2026 The fsskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FSSKIT_BYTES_HPP_
#define FSSKIT_BYTES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fsskit {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(const std::string& hex);

Bytes sha256(ByteView data);
Bytes hmac_sha256(ByteView key, ByteView data);

// Deterministic byte stream: block i is SHA-256(seed || i) with the block
// counter encoded as 8 big-endian bytes. Seed may be any length.
class CounterExpander {
 public:
  explicit CounterExpander(ByteView seed);
  void fill(uint8_t* out, size_t n);
  Bytes next(size_t n);

 private:
  Bytes seed_;
  uint64_t counter_ = 0;
  Bytes block_;
  size_t pos_ = 0;
};

// Append-only binary encoder with fixed-width integer helpers.
class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u16le(uint16_t v);
  void u32le(uint32_t v);
  void u32be(uint32_t v);
  void u64be(uint64_t v);
  // Big-endian, exactly `width` bytes; throws if v does not fit.
  void uint_be(uint64_t v, size_t width);
  void raw(ByteView data) { out_.insert(out_.end(), data.begin(), data.end()); }
  void magic(const char tag[4]);

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

// Bounds-checked reader over a byte view; throws SerializationError on
// overrun or magic mismatch.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}
  uint8_t u8();
  uint16_t u16le();
  uint32_t u32le();
  uint32_t u32be();
  uint64_t u64be();
  uint64_t uint_be(size_t width);
  Bytes raw(size_t n);
  void expect_magic(const char tag[4]);
  bool done() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  ByteView data_;
  size_t pos_ = 0;
};

}  // namespace fsskit

#endif  // FSSKIT_BYTES_HPP_
