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
//
// t-out-of-n Shamir sharing of field elements and vectors. Shares are
// evaluations at the nonzero points 1..n; the secret sits at 0.

#ifndef FSSKIT_SHAMIR_HPP_
#define FSSKIT_SHAMIR_HPP_

#include <vector>

#include "fsskit/field.hpp"

namespace fsskit {

struct ShamirShare {
  uint32_t index;  // party index in [1, n]
  FieldElement value;
};

struct ShamirVectorShare {
  uint32_t index;
  FieldVector value;
};

// Shares are evaluations of a uniformly random polynomial of degree <= t-1
// with constant term equal to the secret.
std::vector<ShamirShare> shamir_share(const FieldElement& secret, uint32_t t,
                                      uint32_t n, RandomSource& rng);

// Coordinate-wise sharing with independent polynomials per coordinate.
std::vector<ShamirVectorShare> shamir_share_vector(const FieldVector& secret,
                                                   uint32_t t, uint32_t n,
                                                   RandomSource& rng);

// Interpolates at 0 from the t lowest-index shares; any further shares are
// verified against the interpolated polynomial and InconsistentShares is
// raised if they disagree.
FieldElement shamir_reconstruct(std::vector<ShamirShare> shares, uint32_t t);
FieldVector shamir_reconstruct_vector(std::vector<ShamirVectorShare> shares,
                                      uint32_t t);

// Wire format: 16-bit little-endian index, then the canonical encoding.
void shamir_share_encode(ByteWriter& w, const ShamirShare& s);
ShamirShare shamir_share_decode(ByteReader& r, const FieldParams& params);

}  // namespace fsskit

#endif  // FSSKIT_SHAMIR_HPP_
