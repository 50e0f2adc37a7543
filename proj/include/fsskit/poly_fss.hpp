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
// t-out-of-k threshold function secret sharing of polynomials of degree
// <= n over F_q. Each coefficient is Shamir-shared independently; a key is
// the stack of one party's coefficient shares (high degree first) and an
// evaluation share is the dot product with (x^n, ..., x, 1).

#ifndef FSSKIT_POLY_FSS_HPP_
#define FSSKIT_POLY_FSS_HPP_

#include <vector>

#include "fsskit/shamir.hpp"

namespace fsskit {

struct PolyFssParams {
  FieldParams field;
  uint32_t degree_bound;  // n: polynomial degree bound
  uint32_t t;             // threshold
  uint32_t k;             // party count

  void validate() const;
};

struct PolyFssKey {
  uint32_t party;  // in [1, k]
  std::vector<FieldElement> coords;  // <q_n(i), ..., q_0(i)>, length n+1
};

struct PolyEvalShare {
  uint32_t party;
  FieldElement value;
};

std::vector<PolyFssKey> poly_fss_gen(const FieldPolynomial& p,
                                     const PolyFssParams& params,
                                     RandomSource& rng);

PolyEvalShare poly_fss_eval(const PolyFssParams& params, const PolyFssKey& key,
                            const FieldElement& x_hat);

// Interpolates Q(y) at 0 from the t lowest-index shares; extras verified.
FieldElement poly_fss_rec(const PolyFssParams& params,
                          std::vector<PolyEvalShare> shares);

// (n+1) log2 q. Serialized keys round each coefficient up to whole bytes.
double poly_fss_key_size_bits(const PolyFssParams& params);

// Key file, magic "PFS1".
Bytes poly_fss_key_encode(const PolyFssParams& params, const PolyFssKey& key);
std::pair<PolyFssParams, PolyFssKey> poly_fss_key_decode(ByteView data);

Bytes poly_fss_share_encode(const PolyFssParams& params,
                            const PolyEvalShare& s);
std::pair<PolyFssParams, PolyEvalShare> poly_fss_share_decode(ByteView data);

}  // namespace fsskit

#endif  // FSSKIT_POLY_FSS_HPP_
