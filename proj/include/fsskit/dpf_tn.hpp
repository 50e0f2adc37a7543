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
// t-out-of-n computational multi-evaluation threshold DPF: Shamir sharing
// layered over the n-out-of-n structure. Keys are Shamir-shared
// coordinate-wise over F_q^d with evaluation points 1..n, which gives
// exactly the F-linear-combination structure the threshold argument needs.

#ifndef FSSKIT_DPF_TN_HPP_
#define FSSKIT_DPF_TN_HPP_

#include <string>
#include <vector>

#include "fsskit/dpf_nn.hpp"
#include "fsskit/shamir.hpp"

namespace fsskit {

struct DpfTnParams {
  uint32_t l;
  uint32_t lambda;
  uint32_t n;
  uint32_t t;
  FieldParams field;
  KhPrfParams prf;
  bool allow_small_key_dim = false;

  void validate() const;
  uint32_t vec_dim() const { return 2 * l + lambda; }
};

struct DpfTnKey {
  uint32_t party;  // i in [1, n]
  std::vector<FieldVector> v_list;       // Shamir shares of v_j at point i
  FieldVector theta;
  std::vector<FieldElement> alpha_list;  // Shamir shares of alpha_j
  std::vector<KhKey> key_list;           // the original keys k_{i,j}
  // k^(i): Shamir share, at point i, of every key k_{i',j'}; exactly 2ln
  // entries in lexicographic (i', j') order.
  std::vector<KhKey> key_share_table;
  KhKey k_sum;
};

struct DpfTnEvalShare {
  uint32_t party;
  FieldVector s0;
  FieldElement s1;
  Bytes r;
  FieldVector theta;
  KhKey k_sum;
};

struct DpfTnGenTrace {
  std::vector<FieldVector> v;
  std::vector<FieldElement> alpha;
  std::vector<std::vector<KhKey>> key;  // key[i-1][j] = k_{i,j}
};

std::vector<DpfTnKey> dpf_tn_gen(const DpfTnParams& params,
                                 const std::string& a,
                                 const FieldElement& alpha, RandomSource& rng,
                                 DpfTnGenTrace* trace = nullptr);

DpfTnEvalShare dpf_tn_eval(const DpfTnParams& params, const DpfTnKey& key,
                           const std::string& x, ByteView r,
                           const KhPrf& prf = LinearKhPrf());

// Interpolates the coordinate polynomials from the t lowest-index shares.
// Extra shares are ignored unless verify_extras is set, in which case they
// are checked against the interpolated polynomials.
FieldElement dpf_tn_rec(const DpfTnParams& params,
                        const std::vector<DpfTnEvalShare>& shares,
                        const KhPrf& prf = LinearKhPrf(),
                        bool verify_extras = false);

double dpf_tn_key_size_bits(const DpfTnParams& params);
double dpf_tn_share_size_bits(const DpfTnParams& params, size_t r_len_bytes);

// Binary key format, magic "DPFT"; parallel to DPF1 with t and the k^(i)
// table appended.
Bytes dpf_tn_key_encode(const DpfTnParams& params, const DpfTnKey& key);
std::pair<DpfTnParams, DpfTnKey> dpf_tn_key_decode(ByteView data);

Bytes dpf_tn_share_encode(const DpfTnParams& params, const DpfTnEvalShare& s);
std::pair<DpfTnParams, DpfTnEvalShare> dpf_tn_share_decode(ByteView data);

}  // namespace fsskit

#endif  // FSSKIT_DPF_TN_HPP_
