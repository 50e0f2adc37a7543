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

#ifndef FSSKIT_RNG_HPP_
#define FSSKIT_RNG_HPP_

#include "fsskit/bytes.hpp"

namespace fsskit {

// Source of uniform bytes. All randomized operations take one of these
// explicitly; there is no ambient randomness anywhere in the library.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(uint8_t* out, size_t n) = 0;

  Bytes bytes(size_t n) {
    Bytes out(n);
    fill(out.data(), n);
    return out;
  }
};

// Deterministic, replayable stream keyed by a seed (SHA-256 in counter
// mode). Same seed, same byte sequence.
class SeededRng : public RandomSource {
 public:
  explicit SeededRng(ByteView seed) : expander_(seed) {}
  void fill(uint8_t* out, size_t n) override { expander_.fill(out, n); }

 private:
  CounterExpander expander_;
};

}  // namespace fsskit

#endif  // FSSKIT_RNG_HPP_
