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
// n-out-of-n computational multi-evaluation distributed point function for
// point functions {0,1}^l -> F_q.
//
// Bit-string convention: input strings are ASCII "0"/"1" of length l, bit j
// counted from the most significant (leftmost) position.

#ifndef FSSKIT_DPF_NN_HPP_
#define FSSKIT_DPF_NN_HPP_

#include <string>
#include <vector>

#include "fsskit/khprf.hpp"

namespace fsskit {

struct DpfNnParams {
  uint32_t l;       // domain bit length
  uint32_t lambda;  // vector padding width
  uint32_t n;       // party count
  FieldParams field;
  KhPrfParams prf;
  // Lifts the default d >= 2ln + lambda requirement down to the hard
  // minimum d >= 2ln + 1.
  bool allow_small_key_dim = false;

  // Throws ParamViolation if any constraint fails.
  void validate() const;
  uint32_t vec_dim() const { return 2 * l + lambda; }
};

// Returns the default PRF key dimension 2ln + lambda. With F_q^d keys every
// nonzero key has additive order q, so the element-order margin condition
// becomes q^{2ln} / q^d < 1 - 1/lambda, i.e. d >= 2ln + lambda.
uint32_t dpf_default_key_dim(uint32_t l, uint32_t n, uint32_t lambda);

// Per-party key: f_i = (v_{i,0..2l-1}, theta, alpha_{i,0..2l-1},
// k_{i,0..2l-1}, k). theta and k are common to all n keys of one Gen run.
struct DpfNnKey {
  uint32_t party;  // in [1, n]
  std::vector<FieldVector> v_list;       // 2l vectors, dim 2l+lambda
  FieldVector theta;                     // dim 2l+lambda
  std::vector<FieldElement> alpha_list;  // 2l elements
  std::vector<KhKey> key_list;           // 2l keys
  KhKey k_sum;
};

struct DpfEvalShare {
  uint32_t party;
  FieldVector s0;   // dim 2l+lambda
  FieldElement s1;
  Bytes r;
  FieldVector theta;
  KhKey k_sum;
};

// Gen's pre-split secrets, exposed for the construction-identity tests.
struct DpfNnGenTrace {
  std::vector<FieldVector> v;           // v_0..v_{2l-1}
  std::vector<FieldElement> alpha;      // alpha_0..alpha_{2l-1}
  std::vector<std::vector<KhKey>> key;  // key[i-1][j] = k_{i,j}
};

std::vector<DpfNnKey> dpf_nn_gen(const DpfNnParams& params,
                                 const std::string& a,
                                 const FieldElement& alpha, RandomSource& rng,
                                 DpfNnGenTrace* trace = nullptr);

DpfEvalShare dpf_nn_eval(const DpfNnParams& params, const DpfNnKey& key,
                         const std::string& x, ByteView r,
                         const KhPrf& prf = LinearKhPrf());

// Requires exactly n shares with identical (r, theta, k) and distinct party
// indices; outputs alpha when the sum identity holds, else 0.
FieldElement dpf_nn_rec(const DpfNnParams& params,
                        const std::vector<DpfEvalShare>& shares,
                        const KhPrf& prf = LinearKhPrf());

// Size formulas. Note that the per-party key size does not mention n for
// fixed |K|, but the linear-independence requirement forces d >= 2ln+1, so
// log|K| = d log q itself grows with n in this instantiation.
double dpf_nn_key_size_bits(const DpfNnParams& params);
double dpf_nn_share_size_bits(const DpfNnParams& params, size_t r_len_bytes);

// Binary key format, magic "DPF1".
Bytes dpf_nn_key_encode(const DpfNnParams& params, const DpfNnKey& key);
std::pair<DpfNnParams, DpfNnKey> dpf_nn_key_decode(ByteView data);

// Eval-share format, magic "DPS1"; self-contained (carries the params).
Bytes dpf_nn_share_encode(const DpfNnParams& params, const DpfEvalShare& s);
std::pair<DpfNnParams, DpfEvalShare> dpf_nn_share_decode(ByteView data);

// Selected slot index 2j + x_j for bit j of x.
size_t dpf_slot(const std::string& x, size_t j);

}  // namespace fsskit

#endif  // FSSKIT_DPF_NN_HPP_
