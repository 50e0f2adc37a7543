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

#include "fsskit/group.hpp"

#include <algorithm>
#include <bit>

#include "fsskit/errors.hpp"
#include "fsskit/khprf.hpp"

namespace fsskit {

AbelianGroup AbelianGroup::xor_group(unsigned bits) {
  if (bits == 0 || bits > 62)
    throw GroupTooSmall("xor group width must be in [1, 62]");
  return AbelianGroup(Kind::Xor, uint64_t{1} << bits, bits);
}

AbelianGroup AbelianGroup::zq_group(uint64_t q) {
  if (q < 2) throw GroupTooSmall("Z_q group needs q >= 2");
  return AbelianGroup(Kind::Zq, q, 0);
}

GroupElement AbelianGroup::op(GroupElement a, GroupElement b) const {
  if (a >= size_ || b >= size_) throw Error("group element out of range");
  if (kind_ == Kind::Xor) return a ^ b;
  uint64_t s = a + b;
  return s >= size_ ? s - size_ : s;
}

GroupElement AbelianGroup::inv(GroupElement a) const {
  if (a >= size_) throw Error("group element out of range");
  if (kind_ == Kind::Xor) return a;
  return a == 0 ? 0 : size_ - a;
}

size_t AbelianGroup::encoded_width() const {
  unsigned bits = std::bit_width(size_ - 1);
  if (bits == 0) bits = 1;
  return (bits + 7) / 8;
}

GroupElement AbelianGroup::sample_uniform(RandomSource& rng) const {
  size_t width = encoded_width();
  uint8_t buf[8];
  for (;;) {
    rng.fill(buf, width);
    uint64_t v = 0;
    for (size_t i = 0; i < width; ++i) v = v << 8 | buf[i];
    if (v < size_) return v;
  }
}

GroupElement AbelianGroup::sample_uniform_excluding(
    RandomSource& rng, std::initializer_list<GroupElement> excluded) const {
  if (excluded.size() >= size_)
    throw GroupTooSmall("exclusion set covers the whole group");
  for (;;) {
    GroupElement v = sample_uniform(rng);
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end())
      return v;
  }
}

void AbelianGroup::encode(ByteWriter& w, GroupElement e) const {
  if (e >= size_) throw SerializationError("group element out of range");
  w.uint_be(e, encoded_width());
}

GroupElement AbelianGroup::decode(ByteReader& r) const {
  uint64_t v = r.uint_be(encoded_width());
  if (v >= size_) throw SerializationError("group element out of range");
  return v;
}

GroupElement AbelianGroup::prf(ByteView key, GroupElement x) const {
  ByteWriter w;
  w.uint_be(x, 8);
  Bytes input = w.take();
  // Rejection over the expanded PRF stream keeps the output exactly
  // uniform on [0, size) for a uniform-looking stream.
  size_t width = encoded_width();
  uint32_t attempt = 0;
  for (;;) {
    Bytes salted = input;
    for (int i = 3; i >= 0; --i)
      salted.push_back(static_cast<uint8_t>(attempt >> (8 * i)));
    Bytes out = std_prf(key, salted, width);
    uint64_t v = 0;
    for (uint8_t b : out) v = v << 8 | b;
    if (v < size_) return v;
    ++attempt;
  }
}

GroupElement AbelianGroup::prp(ByteView key, GroupElement x) const {
  return std_prp(key, x, size_);
}

GroupElement AbelianGroup::prp_inv(ByteView key, GroupElement y) const {
  return std_prp_inv(key, y, size_);
}

void AbelianGroup::encode_descriptor(ByteWriter& w) const {
  w.u8(kind_ == Kind::Xor ? 0 : 1);
  w.u64be(kind_ == Kind::Xor ? bits_ : size_);
}

AbelianGroup AbelianGroup::decode_descriptor(ByteReader& r) {
  uint8_t kind = r.u8();
  uint64_t param = r.u64be();
  if (kind == 0) return xor_group(static_cast<unsigned>(param));
  if (kind == 1) return zq_group(param);
  throw SerializationError("unknown group kind");
}

}  // namespace fsskit
