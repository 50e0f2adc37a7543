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

#include "fsskit/poly_fss.hpp"

namespace fsskit {

void PolyFssParams::validate() const {
  if (t < 1 || t > k) throw ParamViolation("need 1 <= t <= k");
  if (field.q < static_cast<uint64_t>(k) + 1)
    throw ParamViolation("field modulus must be at least k+1");
}

std::vector<PolyFssKey> poly_fss_gen(const FieldPolynomial& p,
                                     const PolyFssParams& params,
                                     RandomSource& rng) {
  params.validate();
  if (p.length() > params.degree_bound + 1)
    throw DegreeTooHigh("polynomial degree exceeds the bound");
  const uint32_t n = params.degree_bound;

  // Pad to exactly n+1 coefficients; missing high coefficients are zero.
  std::vector<FieldElement> coeffs(p.coeffs());
  while (coeffs.size() < n + 1)
    coeffs.push_back(FieldElement(0, params.field));

  std::vector<PolyFssKey> keys(params.k);
  for (uint32_t i = 0; i < params.k; ++i) keys[i].party = i + 1;
  // Keys store high-degree coefficients first.
  for (size_t j = n + 1; j-- > 0;) {
    auto shares = shamir_share(coeffs[j], params.t, params.k, rng);
    for (uint32_t i = 0; i < params.k; ++i)
      keys[i].coords.push_back(shares[i].value);
  }
  return keys;
}

PolyEvalShare poly_fss_eval(const PolyFssParams& params, const PolyFssKey& key,
                            const FieldElement& x_hat) {
  params.validate();
  if (key.coords.size() != params.degree_bound + 1)
    throw ParamViolation("key length differs from n+1");
  if (x_hat.modulus() != params.field.q)
    throw MismatchedField("evaluation point outside the scheme field");
  // Dot product with <x^n, ..., x, 1> via Horner on the high-first coords.
  FieldElement acc(0, params.field);
  for (const FieldElement& c : key.coords) acc = acc * x_hat + c;
  return {key.party, acc};
}

FieldElement poly_fss_rec(const PolyFssParams& params,
                          std::vector<PolyEvalShare> shares) {
  params.validate();
  std::vector<ShamirShare> as_shamir;
  as_shamir.reserve(shares.size());
  for (const PolyEvalShare& s : shares) as_shamir.push_back({s.party, s.value});
  return shamir_reconstruct(std::move(as_shamir), params.t);
}

double poly_fss_key_size_bits(const PolyFssParams& params) {
  return (params.degree_bound + 1) * params.field.bits();
}

static void params_encode(ByteWriter& w, const PolyFssParams& p) {
  w.u64be(p.field.q);
  w.u32le(p.degree_bound);
  w.u32le(p.t);
  w.u32le(p.k);
}

static PolyFssParams params_decode(ByteReader& r) {
  FieldParams field(r.u64be());
  uint32_t n = r.u32le();
  uint32_t t = r.u32le();
  uint32_t k = r.u32le();
  PolyFssParams p{field, n, t, k};
  p.validate();
  return p;
}

Bytes poly_fss_key_encode(const PolyFssParams& params, const PolyFssKey& key) {
  ByteWriter w;
  w.magic("PFS1");
  params_encode(w, params);
  w.u32le(key.party);
  for (const FieldElement& c : key.coords) fe_encode(w, c);
  return w.take();
}

std::pair<PolyFssParams, PolyFssKey> poly_fss_key_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("PFS1");
  PolyFssParams params = params_decode(r);
  PolyFssKey key;
  key.party = r.u32le();
  for (uint32_t j = 0; j < params.degree_bound + 1; ++j)
    key.coords.push_back(fe_decode(r, params.field));
  if (!r.done()) throw SerializationError("trailing bytes in PFS1 key");
  return {params, std::move(key)};
}

Bytes poly_fss_share_encode(const PolyFssParams& params,
                            const PolyEvalShare& s) {
  ByteWriter w;
  w.magic("PFSS");
  params_encode(w, params);
  w.u32le(s.party);
  fe_encode(w, s.value);
  return w.take();
}

std::pair<PolyFssParams, PolyEvalShare> poly_fss_share_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("PFSS");
  PolyFssParams params = params_decode(r);
  uint32_t party = r.u32le();
  FieldElement value = fe_decode(r, params.field);
  if (!r.done()) throw SerializationError("trailing bytes in PFSS share");
  return {params, {party, value}};
}

}  // namespace fsskit
