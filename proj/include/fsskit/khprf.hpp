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
// Key-homomorphic PRF abstraction with split output F = (F1, F2), keyed by
// vectors over F_q, plus the ordinary PRF/PRP primitives used by the share
// refresh step.
//
// SECURITY CAVEAT: the shipped instantiation, LinearKhPrf, is exactly
// key-homomorphic but is NOT a secure PRF -- its output is linear in the
// key given the public per-input matrix. It serves as a functionality and
// correctness oracle behind the KhPrf interface; plug a real construction
// into that interface for anything beyond testing.

#ifndef FSSKIT_KHPRF_HPP_
#define FSSKIT_KHPRF_HPP_

#include <memory>
#include <vector>

#include "fsskit/field.hpp"

namespace fsskit {

struct KhPrfParams {
  FieldParams field;
  uint32_t key_dim;   // d; keys live in F_q^d
  uint32_t out_dim;   // m = 2l + lambda + 1
  Bytes master_seed;  // public, 32 bytes; fixed per scheme instance

  bool operator==(const KhPrfParams&) const = default;
};

struct KhKey {
  FieldVector vec;

  bool operator==(const KhKey&) const = default;
};

struct KhOutput {
  FieldVector part1;   // first m-1 coordinates (the F1 component)
  FieldElement part2;  // last coordinate (the F2 component)
};

KhKey kh_key_add(const KhKey& a, const KhKey& b);
KhKey kh_key_scale(const FieldElement& c, const KhKey& k);

class KhPrf {
 public:
  virtual ~KhPrf() = default;
  virtual KhOutput eval(const KhPrfParams& params, const KhKey& key,
                        ByteView r) const = 0;
};

// Reference instantiation: derive a matrix M_r in F^{m x d} from
// (master_seed || r) by a deterministic byte expander with rejection
// sampling, column-major; the output is M_r * key.
class LinearKhPrf : public KhPrf {
 public:
  KhOutput eval(const KhPrfParams& params, const KhKey& key,
                ByteView r) const override;

  // Exposed for tests that need the matrix itself.
  static std::vector<FieldVector> derive_matrix_rows(const KhPrfParams& params,
                                                     ByteView r);
};

KhOutput kh_eval(const KhPrfParams& params, const KhKey& key, ByteView r);

// w keys, uniform conditioned on F-linear independence; rejection sampling
// with an incremental Gaussian-elimination rank check.
std::vector<KhKey> sample_independent_keys(const KhPrfParams& params,
                                           uint32_t count, RandomSource& rng);

// Rank over F_q of the spanned subspace; used by key sampling and by the
// test-side rank oracle.
size_t field_matrix_rank(const std::vector<FieldVector>& rows);

// Ordinary keyed PRF: HMAC-SHA256 expanded/truncated to out_len bytes.
Bytes std_prf(ByteView key, ByteView input, size_t out_len);

// Bijection on [0, domain): 4-round balanced Feistel over the covering
// power-of-two width with cycle-walking back into the domain.
uint64_t std_prp(ByteView key, uint64_t x, uint64_t domain);
uint64_t std_prp_inv(ByteView key, uint64_t y, uint64_t domain);

}  // namespace fsskit

#endif  // FSSKIT_KHPRF_HPP_
