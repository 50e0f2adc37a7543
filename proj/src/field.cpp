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

#include "fsskit/field.hpp"

#include <bit>
#include <cmath>

namespace fsskit {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(u128(a) * b % q);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t q) {
  uint64_t result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, q);
    base = mulmod(base, base, q);
    exp >>= 1;
  }
  return result;
}

void check_same_field(uint64_t qa, uint64_t qb) {
  if (qa != qb)
    throw MismatchedField("elements from different fields combined");
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldParams::FieldParams(uint64_t modulus) : q(modulus) {
  if (!is_prime_u64(q))
    throw NotPrime("field modulus " + std::to_string(q) + " is not prime");
}

size_t FieldParams::encoded_width() const {
  unsigned bits = std::bit_width(q - 1);
  if (bits == 0) bits = 1;
  return (bits + 7) / 8;
}

double FieldParams::bits() const { return std::log2(static_cast<double>(q)); }

FieldElement::FieldElement(uint64_t value, const FieldParams& params)
    : value_(value % params.q), q_(params.q) {}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.q_, b.q_);
  FieldElement out = a;
  uint64_t s = a.value_ + b.value_;  // q < 2^63, no overflow
  out.value_ = s >= a.q_ ? s - a.q_ : s;
  return out;
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.q_, b.q_);
  FieldElement out = a;
  out.value_ = a.value_ >= b.value_ ? a.value_ - b.value_
                                    : a.value_ + a.q_ - b.value_;
  return out;
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.q_, b.q_);
  FieldElement out = a;
  out.value_ = mulmod(a.value_, b.value_, a.q_);
  return out;
}

FieldElement fe_neg(const FieldElement& a) {
  FieldElement out = a;
  out.value_ = a.value_ == 0 ? 0 : a.q_ - a.value_;
  return out;
}

FieldElement fe_inv(const FieldElement& a) {
  if (a.value_ == 0) throw DivisionByZero("inverse of zero");
  // Extended Euclid on (value, q).
  int64_t t = 0, new_t = 1;
  uint64_t r = a.q_, new_r = a.value_;
  while (new_r != 0) {
    uint64_t quot = r / new_r;
    int64_t tmp_t = t - static_cast<int64_t>(quot) * new_t;
    t = new_t;
    new_t = tmp_t;
    uint64_t tmp_r = r - quot * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  FieldElement out = a;
  out.value_ = t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(a.q_))
                     : static_cast<uint64_t>(t);
  return out;
}

FieldElement fe_pow(const FieldElement& a, uint64_t e) {
  FieldElement out = a;
  out.value_ = powmod(a.value_, e, a.q_);
  return out;
}

FieldElement sample_uniform(const FieldParams& params, RandomSource& rng) {
  size_t width = params.encoded_width();
  for (;;) {
    uint64_t v = 0;
    uint8_t buf[8];
    rng.fill(buf, width);
    for (size_t i = 0; i < width; ++i) v = v << 8 | buf[i];
    if (v < params.q) return FieldElement(v, params);
  }
}

FieldVector::FieldVector(std::vector<FieldElement> coords)
    : coords_(std::move(coords)) {
  for (size_t i = 1; i < coords_.size(); ++i)
    check_same_field(coords_[0].modulus(), coords_[i].modulus());
}

FieldVector FieldVector::zero(size_t dim, const FieldParams& params) {
  return FieldVector(
      std::vector<FieldElement>(dim, FieldElement(0, params)));
}

FieldVector FieldVector::random(size_t dim, const FieldParams& params,
                                RandomSource& rng) {
  std::vector<FieldElement> coords;
  coords.reserve(dim);
  for (size_t i = 0; i < dim; ++i) coords.push_back(sample_uniform(params, rng));
  return FieldVector(std::move(coords));
}

static void check_same_dim(const FieldVector& a, const FieldVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("vector dimensions differ: " +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

FieldVector operator+(const FieldVector& a, const FieldVector& b) {
  check_same_dim(a, b);
  std::vector<FieldElement> coords;
  coords.reserve(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) coords.push_back(a[i] + b[i]);
  return FieldVector(std::move(coords));
}

FieldVector operator-(const FieldVector& a, const FieldVector& b) {
  check_same_dim(a, b);
  std::vector<FieldElement> coords;
  coords.reserve(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) coords.push_back(a[i] - b[i]);
  return FieldVector(std::move(coords));
}

FieldVector operator*(const FieldElement& c, const FieldVector& v) {
  std::vector<FieldElement> coords;
  coords.reserve(v.dim());
  for (size_t i = 0; i < v.dim(); ++i) coords.push_back(c * v[i]);
  return FieldVector(std::move(coords));
}

FieldPolynomial::FieldPolynomial(std::vector<FieldElement> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    check_same_field(coeffs_[0].modulus(), coeffs_[i].modulus());
}

FieldElement poly_eval(const FieldPolynomial& p, const FieldElement& x) {
  if (p.length() == 0)
    return FieldElement(0, x.params());
  check_same_field(p[0].modulus(), x.modulus());
  FieldElement acc = p[p.length() - 1];
  for (size_t i = p.length() - 1; i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<FieldElement> lagrange_coeffs_at(
    const std::vector<FieldElement>& points, const FieldElement& target) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw DuplicatePoint("interpolation nodes must be distinct");
  std::vector<FieldElement> coeffs;
  coeffs.reserve(points.size());
  for (size_t j = 0; j < points.size(); ++j) {
    FieldElement num(1, target.params());
    FieldElement den(1, target.params());
    for (size_t i = 0; i < points.size(); ++i) {
      if (i == j) continue;
      num = num * (target - points[i]);
      den = den * (points[j] - points[i]);
    }
    coeffs.push_back(num * fe_inv(den));
  }
  return coeffs;
}

FieldPolynomial interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points,
    size_t degree_bound) {
  if (points.size() < degree_bound)
    throw InconsistentPoints("need at least degree_bound points");
  if (degree_bound == 0)
    throw InconsistentPoints("degree_bound must be positive");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicatePoint("interpolation nodes must be distinct");

  const FieldParams params = points[0].first.params();
  const size_t t = degree_bound;
  std::vector<FieldElement> acc(t, FieldElement(0, params));
  for (size_t j = 0; j < t; ++j) {
    // Basis polynomial L_j = prod_{i != j} (X - x_i) / (x_j - x_i).
    std::vector<FieldElement> basis{FieldElement(1, params)};
    FieldElement den(1, params);
    for (size_t i = 0; i < t; ++i) {
      if (i == j) continue;
      std::vector<FieldElement> next(basis.size() + 1, FieldElement(0, params));
      for (size_t c = 0; c < basis.size(); ++c) {
        next[c + 1] = next[c + 1] + basis[c];
        next[c] = next[c] - points[i].first * basis[c];
      }
      basis = std::move(next);
      den = den * (points[j].first - points[i].first);
    }
    FieldElement scale = points[j].second * fe_inv(den);
    for (size_t c = 0; c < basis.size(); ++c)
      acc[c] = acc[c] + scale * basis[c];
  }
  FieldPolynomial result(std::move(acc));
  for (size_t i = t; i < points.size(); ++i) {
    if (poly_eval(result, points[i].first) != points[i].second)
      throw InconsistentPoints("extra point off the interpolated polynomial");
  }
  return result;
}

void fe_encode(ByteWriter& w, const FieldElement& e) {
  w.uint_be(e.value(), FieldParams(e.modulus()).encoded_width());
}

FieldElement fe_decode(ByteReader& r, const FieldParams& params) {
  uint64_t v = r.uint_be(params.encoded_width());
  if (v >= params.q) throw SerializationError("field element out of range");
  return FieldElement(v, params);
}

void fv_encode(ByteWriter& w, const FieldVector& v) {
  w.u32le(static_cast<uint32_t>(v.dim()));
  for (size_t i = 0; i < v.dim(); ++i) fe_encode(w, v[i]);
}

FieldVector fv_decode(ByteReader& r, const FieldParams& params) {
  uint32_t dim = r.u32le();
  std::vector<FieldElement> coords;
  coords.reserve(dim);
  for (uint32_t i = 0; i < dim; ++i) coords.push_back(fe_decode(r, params));
  return FieldVector(std::move(coords));
}

}  // namespace fsskit
