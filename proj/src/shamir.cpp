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

#include "fsskit/shamir.hpp"

#include <algorithm>

namespace fsskit {

namespace {

void check_params(uint64_t q, uint32_t t, uint32_t n) {
  if (t < 1 || t > n)
    throw ThresholdOutOfRange("need 1 <= t <= n, got t=" + std::to_string(t) +
                              " n=" + std::to_string(n));
  if (q < static_cast<uint64_t>(n) + 1)
    throw FieldTooSmall("field modulus must be at least n+1");
}

}  // namespace

std::vector<ShamirShare> shamir_share(const FieldElement& secret, uint32_t t,
                                      uint32_t n, RandomSource& rng) {
  const FieldParams params = secret.params();
  check_params(params.q, t, n);
  std::vector<FieldElement> coeffs{secret};
  for (uint32_t i = 1; i < t; ++i) coeffs.push_back(sample_uniform(params, rng));
  FieldPolynomial p(std::move(coeffs));
  std::vector<ShamirShare> shares;
  shares.reserve(n);
  for (uint32_t i = 1; i <= n; ++i)
    shares.push_back({i, poly_eval(p, FieldElement(i, params))});
  return shares;
}

std::vector<ShamirVectorShare> shamir_share_vector(const FieldVector& secret,
                                                   uint32_t t, uint32_t n,
                                                   RandomSource& rng) {
  std::vector<std::vector<FieldElement>> per_party(n);
  for (size_t h = 0; h < secret.dim(); ++h) {
    auto coord_shares = shamir_share(secret[h], t, n, rng);
    for (uint32_t i = 0; i < n; ++i)
      per_party[i].push_back(coord_shares[i].value);
  }
  std::vector<ShamirVectorShare> shares;
  shares.reserve(n);
  for (uint32_t i = 0; i < n; ++i)
    shares.push_back({i + 1, FieldVector(std::move(per_party[i]))});
  return shares;
}

namespace {

template <typename Share>
void sort_and_check(std::vector<Share>& shares, uint32_t t) {
  if (shares.size() < t)
    throw NotEnoughShares("have " + std::to_string(shares.size()) +
                          " shares, need " + std::to_string(t));
  std::sort(shares.begin(), shares.end(),
            [](const Share& a, const Share& b) { return a.index < b.index; });
  for (size_t i = 1; i < shares.size(); ++i)
    if (shares[i].index == shares[i - 1].index)
      throw InconsistentShares("duplicate share index " +
                               std::to_string(shares[i].index));
  for (const Share& s : shares)
    if (s.index == 0) throw InconsistentShares("share index 0 is reserved");
}

}  // namespace

FieldElement shamir_reconstruct(std::vector<ShamirShare> shares, uint32_t t) {
  sort_and_check(shares, t);
  const FieldParams params = shares[0].value.params();
  std::vector<std::pair<FieldElement, FieldElement>> points;
  points.reserve(shares.size());
  for (const ShamirShare& s : shares)
    points.emplace_back(FieldElement(s.index, params), s.value);
  // interpolate() verifies any shares beyond the t lowest indices.
  FieldPolynomial p = [&] {
    try {
      return interpolate(points, t);
    } catch (const InconsistentPoints& e) {
      throw InconsistentShares(e.what());
    }
  }();
  return poly_eval(p, FieldElement(0, params));
}

FieldVector shamir_reconstruct_vector(std::vector<ShamirVectorShare> shares,
                                      uint32_t t) {
  sort_and_check(shares, t);
  const size_t dim = shares[0].value.dim();
  for (const ShamirVectorShare& s : shares)
    if (s.value.dim() != dim)
      throw InconsistentShares("vector shares of unequal dimension");
  std::vector<FieldElement> secret;
  secret.reserve(dim);
  for (size_t h = 0; h < dim; ++h) {
    std::vector<ShamirShare> coord;
    coord.reserve(shares.size());
    for (const ShamirVectorShare& s : shares)
      coord.push_back({s.index, s.value[h]});
    secret.push_back(shamir_reconstruct(std::move(coord), t));
  }
  return FieldVector(std::move(secret));
}

void shamir_share_encode(ByteWriter& w, const ShamirShare& s) {
  w.u16le(static_cast<uint16_t>(s.index));
  fe_encode(w, s.value);
}

ShamirShare shamir_share_decode(ByteReader& r, const FieldParams& params) {
  uint16_t index = r.u16le();
  return {index, fe_decode(r, params)};
}

}  // namespace fsskit
