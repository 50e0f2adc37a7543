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
// Prime-field arithmetic, polynomials and Lagrange interpolation.
// Arithmetic is not constant-time; this is a research artifact.

#ifndef FSSKIT_FIELD_HPP_
#define FSSKIT_FIELD_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "fsskit/bytes.hpp"
#include "fsskit/errors.hpp"
#include "fsskit/rng.hpp"

namespace fsskit {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Parameters of the prime field F_q. Construction checks primality.
struct FieldParams {
  uint64_t q;

  explicit FieldParams(uint64_t modulus);

  // Width of the canonical fixed-width big-endian element encoding.
  size_t encoded_width() const;
  double bits() const;  // log2(q)

  bool operator==(const FieldParams&) const = default;
};

class FieldElement {
 public:
  FieldElement(uint64_t value, const FieldParams& params);

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return q_; }
  FieldParams params() const { return FieldParams(q_); }
  bool is_zero() const { return value_ == 0; }

  bool operator==(const FieldElement&) const = default;

 private:
  friend FieldElement fe_add(const FieldElement&, const FieldElement&);
  friend FieldElement fe_sub(const FieldElement&, const FieldElement&);
  friend FieldElement fe_mul(const FieldElement&, const FieldElement&);
  friend FieldElement fe_neg(const FieldElement&);
  friend FieldElement fe_inv(const FieldElement&);
  friend FieldElement fe_pow(const FieldElement&, uint64_t);

  uint64_t value_;
  uint64_t q_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_inv(const FieldElement& a);  // throws DivisionByZero on 0
FieldElement fe_pow(const FieldElement& a, uint64_t e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return fe_add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return fe_sub(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return fe_mul(a, b);
}
inline FieldElement operator-(const FieldElement& a) { return fe_neg(a); }

// Statistically uniform over [0, q) by rejection sampling on the smallest
// byte width covering q. Rejection (rather than wide reduction) keeps the
// exact-distribution secrecy tests unbiased.
FieldElement sample_uniform(const FieldParams& params, RandomSource& rng);

// Ordered tuple of field elements over a single field.
class FieldVector {
 public:
  FieldVector() = default;
  explicit FieldVector(std::vector<FieldElement> coords);
  static FieldVector zero(size_t dim, const FieldParams& params);
  static FieldVector random(size_t dim, const FieldParams& params,
                            RandomSource& rng);

  size_t dim() const { return coords_.size(); }
  const FieldElement& operator[](size_t i) const { return coords_[i]; }
  const std::vector<FieldElement>& coords() const { return coords_; }

  bool operator==(const FieldVector&) const = default;

 private:
  std::vector<FieldElement> coords_;
};

FieldVector operator+(const FieldVector& a, const FieldVector& b);
FieldVector operator-(const FieldVector& a, const FieldVector& b);
FieldVector operator*(const FieldElement& c, const FieldVector& v);

// Coefficient i multiplies X^i. The leading coefficient may be zero, so a
// polynomial of length L has degree <= L-1.
class FieldPolynomial {
 public:
  FieldPolynomial() = default;
  explicit FieldPolynomial(std::vector<FieldElement> coeffs);

  size_t length() const { return coeffs_.size(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const FieldElement& operator[](size_t i) const { return coeffs_[i]; }

  bool operator==(const FieldPolynomial&) const = default;

 private:
  std::vector<FieldElement> coeffs_;
};

// Horner evaluation of p at x.
FieldElement poly_eval(const FieldPolynomial& p, const FieldElement& x);

// Lagrange coefficients c_1..c_t with p(target) = sum c_j p(x_j) for every
// polynomial p of degree <= t-1. The target may coincide with a node.
std::vector<FieldElement> lagrange_coeffs_at(
    const std::vector<FieldElement>& points, const FieldElement& target);

// Unique polynomial of degree <= degree_bound-1 through the first
// degree_bound points; extra points are checked for consistency.
FieldPolynomial interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points,
    size_t degree_bound);

// Canonical encodings. Elements are fixed-width big-endian; vectors are a
// 32-bit little-endian count followed by the elements.
void fe_encode(ByteWriter& w, const FieldElement& e);
FieldElement fe_decode(ByteReader& r, const FieldParams& params);
void fv_encode(ByteWriter& w, const FieldVector& v);
FieldVector fv_decode(ByteReader& r, const FieldParams& params);

}  // namespace fsskit

#endif  // FSSKIT_FIELD_HPP_
