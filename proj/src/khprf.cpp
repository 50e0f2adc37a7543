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

#include "fsskit/khprf.hpp"

#include <bit>

namespace fsskit {

KhKey kh_key_add(const KhKey& a, const KhKey& b) { return {a.vec + b.vec}; }

KhKey kh_key_scale(const FieldElement& c, const KhKey& k) {
  return {c * k.vec};
}

namespace {

// Rejection-samples field elements from a deterministic stream.
class FieldElementStream {
 public:
  FieldElementStream(const FieldParams& params, ByteView seed)
      : params_(params), expander_(seed) {}

  FieldElement next() {
    size_t width = params_.encoded_width();
    uint8_t buf[8];
    for (;;) {
      expander_.fill(buf, width);
      uint64_t v = 0;
      for (size_t i = 0; i < width; ++i) v = v << 8 | buf[i];
      if (v < params_.q) return FieldElement(v, params_);
    }
  }

 private:
  FieldParams params_;
  CounterExpander expander_;
};

}  // namespace

std::vector<FieldVector> LinearKhPrf::derive_matrix_rows(
    const KhPrfParams& params, ByteView r) {
  Bytes seed = params.master_seed;
  seed.insert(seed.end(), r.begin(), r.end());
  FieldElementStream stream(params.field, seed);
  const uint32_t m = params.out_dim, d = params.key_dim;
  // Column-major derivation order.
  std::vector<std::vector<FieldElement>> cols(d);
  for (uint32_t c = 0; c < d; ++c)
    for (uint32_t h = 0; h < m; ++h) cols[c].push_back(stream.next());
  std::vector<FieldVector> out;
  out.reserve(m);
  for (uint32_t h = 0; h < m; ++h) {
    std::vector<FieldElement> row;
    row.reserve(d);
    for (uint32_t c = 0; c < d; ++c) row.push_back(cols[c][h]);
    out.push_back(FieldVector(std::move(row)));
  }
  return out;
}

KhOutput LinearKhPrf::eval(const KhPrfParams& params, const KhKey& key,
                           ByteView r) const {
  if (key.vec.dim() != params.key_dim)
    throw DimensionMismatch("key dimension " + std::to_string(key.vec.dim()) +
                            " != d = " + std::to_string(params.key_dim));
  auto rows = derive_matrix_rows(params, r);
  std::vector<FieldElement> out;
  out.reserve(params.out_dim);
  for (const FieldVector& row : rows) {
    FieldElement acc(0, params.field);
    for (size_t c = 0; c < row.dim(); ++c) acc = acc + row[c] * key.vec[c];
    out.push_back(acc);
  }
  FieldElement part2 = out.back();
  out.pop_back();
  return {FieldVector(std::move(out)), part2};
}

KhOutput kh_eval(const KhPrfParams& params, const KhKey& key, ByteView r) {
  return LinearKhPrf().eval(params, key, r);
}

size_t field_matrix_rank(const std::vector<FieldVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<FieldElement>> m;
  for (const auto& r : rows) m.push_back(r.coords());
  const size_t ncols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    FieldElement inv = fe_inv(m[rank][col]);
    for (size_t c = col; c < ncols; ++c) m[rank][c] = inv * m[rank][c];
    for (size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == rank || m[r2][col].is_zero()) continue;
      FieldElement f = m[r2][col];
      for (size_t c = col; c < ncols; ++c)
        m[r2][c] = m[r2][c] - f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<KhKey> sample_independent_keys(const KhPrfParams& params,
                                           uint32_t count, RandomSource& rng) {
  if (count > params.key_dim)
    throw TooManyKeys("cannot pick " + std::to_string(count) +
                      " independent keys in dimension " +
                      std::to_string(params.key_dim));
  std::vector<KhKey> keys;
  std::vector<FieldVector> chosen;
  while (keys.size() < count) {
    FieldVector candidate =
        FieldVector::random(params.key_dim, params.field, rng);
    chosen.push_back(candidate);
    if (field_matrix_rank(chosen) == chosen.size()) {
      keys.push_back({std::move(candidate)});
    } else {
      chosen.pop_back();  // dependent, resample
    }
  }
  return keys;
}

Bytes std_prf(ByteView key, ByteView input, size_t out_len) {
  Bytes out;
  out.reserve(out_len);
  uint32_t counter = 0;
  while (out.size() < out_len) {
    Bytes block_input(input.begin(), input.end());
    for (int i = 3; i >= 0; --i)
      block_input.push_back(static_cast<uint8_t>(counter >> (8 * i)));
    Bytes block = hmac_sha256(key, block_input);
    size_t take = std::min(block.size(), out_len - out.size());
    out.insert(out.end(), block.begin(), block.begin() + take);
    ++counter;
  }
  return out;
}

namespace {

// Round function: low `half` bits of PRF(key, round || value).
uint64_t feistel_f(ByteView key, uint8_t round, uint64_t value,
                   unsigned half) {
  Bytes input{round};
  for (int i = 7; i >= 0; --i)
    input.push_back(static_cast<uint8_t>(value >> (8 * i)));
  Bytes out = std_prf(key, input, 8);
  uint64_t v = 0;
  for (uint8_t b : out) v = v << 8 | b;
  return half >= 64 ? v : v & ((uint64_t{1} << half) - 1);
}

unsigned half_width(uint64_t domain) {
  unsigned bits = std::bit_width(domain - 1);
  if (bits == 0) bits = 1;
  return (bits + 1) / 2;
}

uint64_t feistel_forward(ByteView key, uint64_t x, unsigned half) {
  uint64_t mask = (uint64_t{1} << half) - 1;
  uint64_t left = x >> half, right = x & mask;
  for (uint8_t round = 0; round < 4; ++round) {
    uint64_t next = left ^ feistel_f(key, round, right, half);
    left = right;
    right = next;
  }
  return left << half | right;
}

uint64_t feistel_backward(ByteView key, uint64_t y, unsigned half) {
  uint64_t mask = (uint64_t{1} << half) - 1;
  uint64_t left = y >> half, right = y & mask;
  for (int round = 3; round >= 0; --round) {
    uint64_t prev = right ^ feistel_f(key, static_cast<uint8_t>(round), left,
                                      half);
    right = left;
    left = prev;
  }
  return left << half | right;
}

}  // namespace

uint64_t std_prp(ByteView key, uint64_t x, uint64_t domain) {
  if (x >= domain) throw Error("PRP input outside domain");
  unsigned half = half_width(domain);
  uint64_t y = x;
  do {
    y = feistel_forward(key, y, half);
  } while (y >= domain);  // cycle-walk back into the domain
  return y;
}

uint64_t std_prp_inv(ByteView key, uint64_t y, uint64_t domain) {
  if (y >= domain) throw Error("PRP input outside domain");
  unsigned half = half_width(domain);
  uint64_t x = y;
  do {
    x = feistel_backward(key, x, half);
  } while (x >= domain);
  return x;
}

}  // namespace fsskit
