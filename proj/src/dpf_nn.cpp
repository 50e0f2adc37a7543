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

#include "fsskit/dpf_nn.hpp"

#include <set>

namespace fsskit {

uint32_t dpf_default_key_dim(uint32_t l, uint32_t n, uint32_t lambda) {
  return 2 * l * n + lambda;
}

void DpfNnParams::validate() const {
  if (l < 1 || n < 2 || lambda < 1)
    throw ParamViolation("need l >= 1, n >= 2, lambda >= 1");
  if (prf.field != field)
    throw ParamViolation("PRF field differs from scheme field");
  if (prf.out_dim != 2 * l + lambda + 1)
    throw ParamViolation("PRF output dimension must be 2l+lambda+1");
  if (prf.key_dim < 2 * l * n + 1)
    throw ParamViolation("PRF key dimension must be at least 2ln+1");
  if (!allow_small_key_dim && prf.key_dim < 2 * l * n + lambda)
    throw ParamViolation(
        "PRF key dimension below the default margin 2ln+lambda "
        "(set allow_small_key_dim to override)");
}

size_t dpf_slot(const std::string& x, size_t j) {
  char c = x[j];
  if (c != '0' && c != '1') throw LengthMismatch("bit strings must be 0/1");
  return 2 * j + (c - '0');
}

static void check_bits(const std::string& x, uint32_t l) {
  if (x.size() != l)
    throw LengthMismatch("bit string length " + std::to_string(x.size()) +
                         " != l = " + std::to_string(l));
  for (char c : x)
    if (c != '0' && c != '1')
      throw LengthMismatch("bit strings must be 0/1");
}

std::vector<DpfNnKey> dpf_nn_gen(const DpfNnParams& params,
                                 const std::string& a,
                                 const FieldElement& alpha, RandomSource& rng,
                                 DpfNnGenTrace* trace) {
  params.validate();
  check_bits(a, params.l);
  if (alpha.modulus() != params.field.q)
    throw MismatchedField("alpha is not in the scheme field");
  const uint32_t l = params.l, n = params.n;
  const size_t dim = params.vec_dim();

  // Step 1: 2l random vectors.
  std::vector<FieldVector> v;
  for (uint32_t j = 0; j < 2 * l; ++j)
    v.push_back(FieldVector::random(dim, params.field, rng));

  // Step 2: additive splits v_j = sum_i v_{i,j}.
  std::vector<std::vector<FieldVector>> v_split(n);
  for (uint32_t j = 0; j < 2 * l; ++j) {
    FieldVector acc = FieldVector::zero(dim, params.field);
    for (uint32_t i = 0; i + 1 < n; ++i) {
      FieldVector piece = FieldVector::random(dim, params.field, rng);
      acc = acc + piece;
      v_split[i].push_back(std::move(piece));
    }
    v_split[n - 1].push_back(v[j] - acc);
  }

  // Step 3: theta = sum over the slots selected by a.
  FieldVector theta = FieldVector::zero(dim, params.field);
  for (uint32_t j = 0; j < l; ++j) theta = theta + v[dpf_slot(a, j)];

  // Step 4: alpha_j random subject to sum over selected slots = alpha.
  std::vector<FieldElement> alphas(2 * l, FieldElement(0, params.field));
  for (uint32_t j = 0; j < 2 * l; ++j)
    alphas[j] = sample_uniform(params.field, rng);
  {
    FieldElement sum(0, params.field);
    for (uint32_t j = 0; j < l; ++j) sum = sum + alphas[dpf_slot(a, j)];
    // Correct the last selected slot so the constraint holds.
    size_t last = dpf_slot(a, l - 1);
    alphas[last] = alphas[last] + alpha - sum;
  }

  // Step 5: additive splits alpha_j = sum_i alpha_{i,j}.
  std::vector<std::vector<FieldElement>> alpha_split(n);
  for (uint32_t j = 0; j < 2 * l; ++j) {
    FieldElement acc(0, params.field);
    for (uint32_t i = 0; i + 1 < n; ++i) {
      FieldElement piece = sample_uniform(params.field, rng);
      acc = acc + piece;
      alpha_split[i].push_back(piece);
    }
    alpha_split[n - 1].push_back(alphas[j] - acc);
  }

  // Step 6: 2ln linearly independent keys, k_{i,j} in row-major (i, j).
  std::vector<KhKey> flat = sample_independent_keys(params.prf, 2 * l * n, rng);
  std::vector<std::vector<KhKey>> keys(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < 2 * l; ++j)
      keys[i].push_back(flat[i * 2 * l + j]);

  // Step 7: k = sum over selected slots across all parties.
  KhKey k_sum{FieldVector::zero(params.prf.key_dim, params.field)};
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < l; ++j)
      k_sum = kh_key_add(k_sum, keys[i][dpf_slot(a, j)]);

  if (trace) {
    trace->v = v;
    trace->alpha = alphas;
    trace->key = keys;
  }

  std::vector<DpfNnKey> out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i)
    out.push_back({i + 1, std::move(v_split[i]), theta,
                   std::move(alpha_split[i]), std::move(keys[i]), k_sum});
  return out;
}

DpfEvalShare dpf_nn_eval(const DpfNnParams& params, const DpfNnKey& key,
                         const std::string& x, ByteView r, const KhPrf& prf) {
  params.validate();
  check_bits(x, params.l);
  FieldVector s0 = FieldVector::zero(params.vec_dim(), params.field);
  FieldElement s1(0, params.field);
  for (uint32_t j = 0; j < params.l; ++j) {
    size_t slot = dpf_slot(x, j);
    KhOutput f = prf.eval(params.prf, key.key_list[slot], r);
    s0 = s0 + key.v_list[slot] + f.part1;
    s1 = s1 + key.alpha_list[slot] + f.part2;
  }
  return {key.party, std::move(s0), s1, Bytes(r.begin(), r.end()), key.theta,
          key.k_sum};
}

FieldElement dpf_nn_rec(const DpfNnParams& params,
                        const std::vector<DpfEvalShare>& shares,
                        const KhPrf& prf) {
  params.validate();
  if (shares.size() != params.n)
    throw ShareSetInvalid("need exactly n = " + std::to_string(params.n) +
                          " shares, got " + std::to_string(shares.size()));
  std::set<uint32_t> indices;
  for (const DpfEvalShare& s : shares) {
    if (!indices.insert(s.party).second)
      throw ShareSetInvalid("duplicate party index");
    // Fail closed on malformed transcripts rather than trusting share 1.
    if (s.r != shares[0].r || s.theta != shares[0].theta ||
        s.k_sum != shares[0].k_sum)
      throw ShareSetInvalid("shares disagree on (r, theta, k)");
  }
  FieldVector sum0 = FieldVector::zero(params.vec_dim(), params.field);
  FieldElement sum1(0, params.field);
  for (const DpfEvalShare& s : shares) {
    sum0 = sum0 + s.s0;
    sum1 = sum1 + s.s1;
  }
  KhOutput f = prf.eval(params.prf, shares[0].k_sum, shares[0].r);
  if (sum0 == shares[0].theta + f.part1) return sum1 - f.part2;
  return FieldElement(0, params.field);
}

double dpf_nn_key_size_bits(const DpfNnParams& params) {
  const double l = params.l, lam = params.lambda;
  const double log_f = params.field.bits();
  const double log_k = params.prf.key_dim * log_f;
  return (4 * l * l + 2 * lam * l + 4 * l + lam) * log_f +
         (2 * l + 1) * log_k;
}

double dpf_nn_share_size_bits(const DpfNnParams& params, size_t r_len_bytes) {
  const double l = params.l, lam = params.lambda;
  const double log_f = params.field.bits();
  const double log_k = params.prf.key_dim * log_f;
  return (4 * l + 2 * lam + 1) * log_f + log_k + 8.0 * r_len_bytes;
}

namespace {

void params_encode(ByteWriter& w, const DpfNnParams& p) {
  w.u32le(p.l);
  w.u32le(p.lambda);
  w.u32le(p.n);
  w.u64be(p.field.q);
  w.u32le(p.prf.key_dim);
  w.u8(p.allow_small_key_dim ? 1 : 0);
  w.u32le(static_cast<uint32_t>(p.prf.master_seed.size()));
  w.raw(p.prf.master_seed);
}

DpfNnParams params_decode(ByteReader& r) {
  uint32_t l = r.u32le();
  uint32_t lambda = r.u32le();
  uint32_t n = r.u32le();
  FieldParams field(r.u64be());
  uint32_t d = r.u32le();
  bool small = r.u8() != 0;
  uint32_t seed_len = r.u32le();
  Bytes seed = r.raw(seed_len);
  KhPrfParams prf{field, d, 2 * l + lambda + 1, std::move(seed)};
  DpfNnParams p{l, lambda, n, field, std::move(prf), small};
  p.validate();
  return p;
}

}  // namespace

Bytes dpf_nn_key_encode(const DpfNnParams& params, const DpfNnKey& key) {
  ByteWriter w;
  w.magic("DPF1");
  params_encode(w, params);
  w.u32le(key.party);
  // Components follow the Gen output order.
  for (const FieldVector& v : key.v_list) fv_encode(w, v);
  fv_encode(w, key.theta);
  for (const FieldElement& a : key.alpha_list) fe_encode(w, a);
  for (const KhKey& k : key.key_list) fv_encode(w, k.vec);
  fv_encode(w, key.k_sum.vec);
  return w.take();
}

std::pair<DpfNnParams, DpfNnKey> dpf_nn_key_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("DPF1");
  DpfNnParams params = params_decode(r);
  DpfNnKey key;
  key.party = r.u32le();
  for (uint32_t j = 0; j < 2 * params.l; ++j)
    key.v_list.push_back(fv_decode(r, params.field));
  key.theta = fv_decode(r, params.field);
  for (uint32_t j = 0; j < 2 * params.l; ++j)
    key.alpha_list.push_back(fe_decode(r, params.field));
  for (uint32_t j = 0; j < 2 * params.l; ++j)
    key.key_list.push_back({fv_decode(r, params.field)});
  key.k_sum = {fv_decode(r, params.field)};
  if (!r.done()) throw SerializationError("trailing bytes in DPF1 key");
  return {std::move(params), std::move(key)};
}

Bytes dpf_nn_share_encode(const DpfNnParams& params, const DpfEvalShare& s) {
  ByteWriter w;
  w.magic("DPS1");
  params_encode(w, params);
  w.u32le(s.party);
  fv_encode(w, s.s0);
  fe_encode(w, s.s1);
  w.u32le(static_cast<uint32_t>(s.r.size()));
  w.raw(s.r);
  fv_encode(w, s.theta);
  fv_encode(w, s.k_sum.vec);
  return w.take();
}

std::pair<DpfNnParams, DpfEvalShare> dpf_nn_share_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("DPS1");
  DpfNnParams params = params_decode(r);
  uint32_t party = r.u32le();
  FieldVector s0 = fv_decode(r, params.field);
  FieldElement s1 = fe_decode(r, params.field);
  uint32_t rlen = r.u32le();
  Bytes rr = r.raw(rlen);
  FieldVector theta = fv_decode(r, params.field);
  KhKey k{fv_decode(r, params.field)};
  if (!r.done()) throw SerializationError("trailing bytes in DPS1 share");
  return {std::move(params),
          {party, std::move(s0), s1, std::move(rr), std::move(theta),
           std::move(k)}};
}

}  // namespace fsskit
