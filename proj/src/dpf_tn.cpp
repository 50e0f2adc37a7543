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

#include "fsskit/dpf_tn.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fsskit {

void DpfTnParams::validate() const {
  if (l < 1 || lambda < 1) throw ParamViolation("need l >= 1, lambda >= 1");
  if (t < 2 || t > n) throw ParamViolation("need 2 <= t <= n");
  if (field.q < static_cast<uint64_t>(n) + 1)
    throw ParamViolation("field modulus must be at least n+1");
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

static void check_bits(const std::string& x, uint32_t l) {
  if (x.size() != l)
    throw LengthMismatch("bit string length " + std::to_string(x.size()) +
                         " != l = " + std::to_string(l));
  for (char c : x)
    if (c != '0' && c != '1') throw LengthMismatch("bit strings must be 0/1");
}

std::vector<DpfTnKey> dpf_tn_gen(const DpfTnParams& params,
                                 const std::string& a,
                                 const FieldElement& alpha, RandomSource& rng,
                                 DpfTnGenTrace* trace) {
  params.validate();
  check_bits(a, params.l);
  if (alpha.modulus() != params.field.q)
    throw MismatchedField("alpha is not in the scheme field");
  const uint32_t l = params.l, n = params.n, t = params.t;
  const size_t dim = params.vec_dim();

  // Steps 1-2: random vectors, shared with degree-(t-1) Shamir.
  std::vector<FieldVector> v;
  std::vector<std::vector<FieldVector>> v_shares(n);
  for (uint32_t j = 0; j < 2 * l; ++j) {
    v.push_back(FieldVector::random(dim, params.field, rng));
    auto shares = shamir_share_vector(v[j], t, n, rng);
    for (uint32_t i = 0; i < n; ++i)
      v_shares[i].push_back(std::move(shares[i].value));
  }

  // Step 3.
  FieldVector theta = FieldVector::zero(dim, params.field);
  for (uint32_t j = 0; j < l; ++j) theta = theta + v[dpf_slot(a, j)];

  // Step 4.
  std::vector<FieldElement> alphas;
  for (uint32_t j = 0; j < 2 * l; ++j)
    alphas.push_back(sample_uniform(params.field, rng));
  {
    FieldElement sum(0, params.field);
    for (uint32_t j = 0; j < l; ++j) sum = sum + alphas[dpf_slot(a, j)];
    size_t last = dpf_slot(a, l - 1);
    alphas[last] = alphas[last] + alpha - sum;
  }

  // Step 5: Shamir shares of each alpha_j.
  std::vector<std::vector<FieldElement>> alpha_shares(n);
  for (uint32_t j = 0; j < 2 * l; ++j) {
    auto shares = shamir_share(alphas[j], t, n, rng);
    for (uint32_t i = 0; i < n; ++i)
      alpha_shares[i].push_back(shares[i].value);
  }

  // Step 6: 2ln linearly independent keys.
  std::vector<KhKey> flat = sample_independent_keys(params.prf, 2 * l * n, rng);
  std::vector<std::vector<KhKey>> keys(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < 2 * l; ++j)
      keys[i].push_back(flat[i * 2 * l + j]);

  // Step 7: Shamir-share every key coordinate-wise; table entry (i', j')
  // at evaluation point i goes into party i's k^(i).
  std::vector<std::vector<KhKey>> tables(n);
  for (uint32_t ip = 0; ip < n; ++ip) {
    for (uint32_t jp = 0; jp < 2 * l; ++jp) {
      auto shares = shamir_share_vector(keys[ip][jp].vec, t, n, rng);
      for (uint32_t i = 0; i < n; ++i)
        tables[i].push_back({std::move(shares[i].value)});
    }
  }

  // Step 8.
  KhKey k_sum{FieldVector::zero(params.prf.key_dim, params.field)};
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < l; ++j)
      k_sum = kh_key_add(k_sum, keys[i][dpf_slot(a, j)]);

  if (trace) {
    trace->v = v;
    trace->alpha = alphas;
    trace->key = keys;
  }

  std::vector<DpfTnKey> out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i)
    out.push_back({i + 1, std::move(v_shares[i]), theta,
                   std::move(alpha_shares[i]), std::move(keys[i]),
                   std::move(tables[i]), k_sum});
  return out;
}

DpfTnEvalShare dpf_tn_eval(const DpfTnParams& params, const DpfTnKey& key,
                           const std::string& x, ByteView r,
                           const KhPrf& prf) {
  params.validate();
  check_bits(x, params.l);
  if (key.key_share_table.size() != 2 * params.l * params.n)
    throw ParamViolation("key share table has wrong size");
  FieldVector s0 = FieldVector::zero(params.vec_dim(), params.field);
  FieldElement s1(0, params.field);
  for (uint32_t j = 0; j < params.l; ++j) {
    size_t slot = dpf_slot(x, j);
    s0 = s0 + key.v_list[slot];
    s1 = s1 + key.alpha_list[slot];
    for (uint32_t lp = 0; lp < params.n; ++lp) {
      // Table entry k_{l', slot, i} in lexicographic (i', j') order.
      const KhKey& entry = key.key_share_table[lp * 2 * params.l + slot];
      KhOutput f = prf.eval(params.prf, entry, r);
      s0 = s0 + f.part1;
      s1 = s1 + f.part2;
    }
  }
  return {key.party, std::move(s0), s1, Bytes(r.begin(), r.end()), key.theta,
          key.k_sum};
}

FieldElement dpf_tn_rec(const DpfTnParams& params,
                        const std::vector<DpfTnEvalShare>& shares,
                        const KhPrf& prf, bool verify_extras) {
  params.validate();
  if (shares.size() < params.t)
    throw NotEnoughShares("have " + std::to_string(shares.size()) +
                          " shares, need t = " + std::to_string(params.t));
  std::vector<const DpfTnEvalShare*> ordered;
  for (const DpfTnEvalShare& s : shares) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return a->party < b->party; });
  std::set<uint32_t> indices;
  for (auto* s : ordered) {
    if (s->party < 1 || s->party > params.n)
      throw ShareSetInvalid("party index out of range");
    if (!indices.insert(s->party).second)
      throw ShareSetInvalid("duplicate party index");
    if (s->r != ordered[0]->r || s->theta != ordered[0]->theta ||
        s->k_sum != ordered[0]->k_sum)
      throw ShareSetInvalid("shares disagree on (r, theta, k)");
  }

  const uint32_t t = params.t;
  const size_t dim = params.vec_dim();
  std::vector<FieldElement> points;
  for (uint32_t i = 0; i < t; ++i)
    points.push_back(FieldElement(ordered[i]->party, params.field));
  std::vector<FieldElement> coeffs =
      lagrange_coeffs_at(points, FieldElement(0, params.field));

  FieldVector s0_at_zero = FieldVector::zero(dim, params.field);
  FieldElement s1_at_zero(0, params.field);
  for (uint32_t i = 0; i < t; ++i) {
    s0_at_zero = s0_at_zero + coeffs[i] * ordered[i]->s0;
    s1_at_zero = s1_at_zero + coeffs[i] * ordered[i]->s1;
  }

  if (verify_extras && ordered.size() > t) {
    // Rebuild the coordinate polynomials from the t lowest indices and
    // check the remaining shares against them.
    for (size_t h = 0; h <= dim; ++h) {
      std::vector<std::pair<FieldElement, FieldElement>> pts;
      for (uint32_t i = 0; i < t; ++i) {
        FieldElement y = h < dim ? ordered[i]->s0[h] : ordered[i]->s1;
        pts.emplace_back(points[i], y);
      }
      FieldPolynomial p = interpolate(pts, t);
      for (size_t i = t; i < ordered.size(); ++i) {
        FieldElement y = h < dim ? ordered[i]->s0[h] : ordered[i]->s1;
        if (poly_eval(p, FieldElement(ordered[i]->party, params.field)) != y)
          throw InconsistentShares("extra share off the share polynomial");
      }
    }
  }

  KhOutput f = prf.eval(params.prf, ordered[0]->k_sum, ordered[0]->r);
  if (s0_at_zero == ordered[0]->theta + f.part1) return s1_at_zero - f.part2;
  return FieldElement(0, params.field);
}

double dpf_tn_key_size_bits(const DpfTnParams& params) {
  const double l = params.l, lam = params.lambda;
  const double log_f = params.field.bits();
  const double log_k = params.prf.key_dim * log_f;
  return std::log2(static_cast<double>(params.n)) +
         (4 * l * l + 2 * lam * l + 4 * l + lam) * log_f +
         (2 * l * params.n + 2 * l + 1) * log_k;
}

double dpf_tn_share_size_bits(const DpfTnParams& params, size_t r_len_bytes) {
  const double l = params.l, lam = params.lambda;
  const double log_f = params.field.bits();
  const double log_k = params.prf.key_dim * log_f;
  return std::log2(static_cast<double>(params.n)) +
         (4 * l + 2 * lam + 1) * log_f + log_k + 8.0 * r_len_bytes;
}

namespace {

void params_encode(ByteWriter& w, const DpfTnParams& p) {
  w.u32le(p.l);
  w.u32le(p.lambda);
  w.u32le(p.n);
  w.u32le(p.t);
  w.u64be(p.field.q);
  w.u32le(p.prf.key_dim);
  w.u8(p.allow_small_key_dim ? 1 : 0);
  w.u32le(static_cast<uint32_t>(p.prf.master_seed.size()));
  w.raw(p.prf.master_seed);
}

DpfTnParams params_decode(ByteReader& r) {
  uint32_t l = r.u32le();
  uint32_t lambda = r.u32le();
  uint32_t n = r.u32le();
  uint32_t t = r.u32le();
  FieldParams field(r.u64be());
  uint32_t d = r.u32le();
  bool small = r.u8() != 0;
  uint32_t seed_len = r.u32le();
  Bytes seed = r.raw(seed_len);
  KhPrfParams prf{field, d, 2 * l + lambda + 1, std::move(seed)};
  DpfTnParams p{l, lambda, n, t, field, std::move(prf), small};
  p.validate();
  return p;
}

}  // namespace

Bytes dpf_tn_key_encode(const DpfTnParams& params, const DpfTnKey& key) {
  ByteWriter w;
  w.magic("DPFT");
  params_encode(w, params);
  w.u32le(key.party);
  for (const FieldVector& v : key.v_list) fv_encode(w, v);
  fv_encode(w, key.theta);
  for (const FieldElement& a : key.alpha_list) fe_encode(w, a);
  for (const KhKey& k : key.key_list) fv_encode(w, k.vec);
  for (const KhKey& k : key.key_share_table) fv_encode(w, k.vec);
  fv_encode(w, key.k_sum.vec);
  return w.take();
}

std::pair<DpfTnParams, DpfTnKey> dpf_tn_key_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("DPFT");
  DpfTnParams params = params_decode(r);
  DpfTnKey key;
  key.party = r.u32le();
  for (uint32_t j = 0; j < 2 * params.l; ++j)
    key.v_list.push_back(fv_decode(r, params.field));
  key.theta = fv_decode(r, params.field);
  for (uint32_t j = 0; j < 2 * params.l; ++j)
    key.alpha_list.push_back(fe_decode(r, params.field));
  for (uint32_t j = 0; j < 2 * params.l; ++j)
    key.key_list.push_back({fv_decode(r, params.field)});
  for (uint32_t e = 0; e < 2 * params.l * params.n; ++e)
    key.key_share_table.push_back({fv_decode(r, params.field)});
  key.k_sum = {fv_decode(r, params.field)};
  if (!r.done()) throw SerializationError("trailing bytes in DPFT key");
  return {std::move(params), std::move(key)};
}

Bytes dpf_tn_share_encode(const DpfTnParams& params, const DpfTnEvalShare& s) {
  ByteWriter w;
  w.magic("DPST");
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

std::pair<DpfTnParams, DpfTnEvalShare> dpf_tn_share_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("DPST");
  DpfTnParams params = params_decode(r);
  uint32_t party = r.u32le();
  FieldVector s0 = fv_decode(r, params.field);
  FieldElement s1 = fe_decode(r, params.field);
  uint32_t rlen = r.u32le();
  Bytes rr = r.raw(rlen);
  FieldVector theta = fv_decode(r, params.field);
  KhKey k{fv_decode(r, params.field)};
  if (!r.done()) throw SerializationError("trailing bytes in DPST share");
  return {std::move(params),
          {party, std::move(s0), s1, std::move(rr), std::move(theta),
           std::move(k)}};
}

}  // namespace fsskit
