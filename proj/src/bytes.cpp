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

#include "fsskit/bytes.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <cstring>

#include "fsskit/errors.hpp"

namespace fsskit {

std::string to_hex(ByteView data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0f]);
  }
  return out;
}

static int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Bytes from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0)
    throw SerializationError("hex string has odd length");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0)
      throw SerializationError("invalid hex digit in \"" + hex + "\"");
    out.push_back(static_cast<uint8_t>(hi << 4 | lo));
  }
  return out;
}

Bytes sha256(ByteView data) {
  Bytes out(SHA256_DIGEST_LENGTH);
  SHA256(data.data(), data.size(), out.data());
  return out;
}

Bytes hmac_sha256(ByteView key, ByteView data) {
  Bytes out(SHA256_DIGEST_LENGTH);
  unsigned int len = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(),
       data.size(), out.data(), &len);
  out.resize(len);
  return out;
}

CounterExpander::CounterExpander(ByteView seed)
    : seed_(seed.begin(), seed.end()) {}

void CounterExpander::fill(uint8_t* out, size_t n) {
  while (n > 0) {
    if (pos_ == block_.size()) {
      Bytes input = seed_;
      for (int i = 7; i >= 0; --i)
        input.push_back(static_cast<uint8_t>(counter_ >> (8 * i)));
      block_ = sha256(input);
      pos_ = 0;
      ++counter_;
    }
    size_t take = std::min(n, block_.size() - pos_);
    std::memcpy(out, block_.data() + pos_, take);
    pos_ += take;
    out += take;
    n -= take;
  }
}

Bytes CounterExpander::next(size_t n) {
  Bytes out(n);
  fill(out.data(), n);
  return out;
}

void ByteWriter::u16le(uint16_t v) {
  u8(static_cast<uint8_t>(v));
  u8(static_cast<uint8_t>(v >> 8));
}

void ByteWriter::u32le(uint32_t v) {
  for (int i = 0; i < 4; ++i) u8(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::u32be(uint32_t v) {
  for (int i = 3; i >= 0; --i) u8(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64be(uint64_t v) {
  for (int i = 7; i >= 0; --i) u8(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::uint_be(uint64_t v, size_t width) {
  if (width < 8 && (v >> (8 * width)) != 0)
    throw SerializationError("value does not fit in requested width");
  for (size_t i = width; i-- > 0;) u8(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::magic(const char tag[4]) {
  for (int i = 0; i < 4; ++i) u8(static_cast<uint8_t>(tag[i]));
}

uint8_t ByteReader::u8() {
  if (pos_ >= data_.size()) throw SerializationError("read past end of input");
  return data_[pos_++];
}

uint16_t ByteReader::u16le() {
  uint16_t lo = u8(), hi = u8();
  return static_cast<uint16_t>(lo | hi << 8);
}

uint32_t ByteReader::u32le() {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(u8()) << (8 * i);
  return v;
}

uint32_t ByteReader::u32be() {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = v << 8 | u8();
  return v;
}

uint64_t ByteReader::u64be() {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | u8();
  return v;
}

uint64_t ByteReader::uint_be(size_t width) {
  uint64_t v = 0;
  for (size_t i = 0; i < width; ++i) v = v << 8 | u8();
  return v;
}

Bytes ByteReader::raw(size_t n) {
  if (pos_ + n > data_.size())
    throw SerializationError("read past end of input");
  Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

void ByteReader::expect_magic(const char tag[4]) {
  for (int i = 0; i < 4; ++i) {
    if (u8() != static_cast<uint8_t>(tag[i]))
      throw SerializationError(std::string("bad magic, expected ") +
                               std::string(tag, 4));
  }
}

}  // namespace fsskit
