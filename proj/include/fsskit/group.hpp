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

#ifndef FSSKIT_GROUP_HPP_
#define FSSKIT_GROUP_HPP_

#include <initializer_list>

#include "fsskit/bytes.hpp"
#include "fsskit/rng.hpp"

namespace fsskit {

using GroupElement = uint64_t;

// Finite abelian group, either ({0,1}^m, xor) or (Z_q, +). Elements are
// integers in [0, size).
class AbelianGroup {
 public:
  enum class Kind { Xor, Zq };

  static AbelianGroup xor_group(unsigned bits);
  static AbelianGroup zq_group(uint64_t q);

  Kind kind() const { return kind_; }
  uint64_t size() const { return size_; }
  unsigned xor_bits() const { return bits_; }

  GroupElement identity() const { return 0; }
  GroupElement op(GroupElement a, GroupElement b) const;
  GroupElement inv(GroupElement a) const;

  GroupElement sample_uniform(RandomSource& rng) const;
  // Exact uniformity on the restricted set, by rejection.
  GroupElement sample_uniform_excluding(RandomSource& rng,
                                        std::initializer_list<GroupElement>
                                            excluded) const;

  // Fixed-width big-endian canonical encoding.
  size_t encoded_width() const;
  void encode(ByteWriter& w, GroupElement e) const;
  GroupElement decode(ByteReader& r) const;

  // PRF into the group: deterministic, output uniform-looking in [0, size).
  GroupElement prf(ByteView key, GroupElement x) const;
  // PRP on the group via the Feistel/cycle-walking permutation.
  GroupElement prp(ByteView key, GroupElement x) const;
  GroupElement prp_inv(ByteView key, GroupElement y) const;

  bool operator==(const AbelianGroup&) const = default;

  // Serialized descriptor: kind byte + 8-byte size parameter.
  void encode_descriptor(ByteWriter& w) const;
  static AbelianGroup decode_descriptor(ByteReader& r);

 private:
  AbelianGroup(Kind kind, uint64_t size, unsigned bits)
      : kind_(kind), size_(size), bits_(bits) {}

  Kind kind_;
  uint64_t size_;
  unsigned bits_;  // Xor only
};

}  // namespace fsskit

#endif  // FSSKIT_GROUP_HPP_
