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

#include "fsskit/fss.hpp"

#include "fsskit/errors.hpp"

namespace fsskit {

std::vector<FssKey> fss_keygen(const AbelianGroup& group, const std::string& a,
                               const std::string& b, ByteView refresh_key,
                               RandomSource& rng) {
  GroupElement s = group.sample_uniform(rng);
  auto [w1, w2] = fpcds_gen(group, a, b, s, refresh_key, rng);
  return {{1, std::move(w1)}, {2, std::move(w2)}};
}

FpcdsMessage fss_eval_share(const FssKey& key, const std::string& input) {
  if (key.party == 1) return fpcds_party1(input, key.inner);
  if (key.party == 2) return fpcds_party2(input, key.inner);
  throw Error("FSS key has party index outside {1, 2}");
}

FssOutputBit fss_rec(const FpcdsMessage& m1, const FpcdsMessage& m2) {
  return {fpcds_carol(m1, m2).has_value() ? 1 : 0};
}

Bytes fss_key_encode(const FssKey& key) {
  ByteWriter w;
  w.magic("FSSW");
  w.u8(static_cast<uint8_t>(key.party));
  Bytes body = fpcds_share_encode(key.inner, key.party);
  w.u32le(static_cast<uint32_t>(body.size()));
  w.raw(body);
  return w.take();
}

FssKey fss_key_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("FSSW");
  int party = r.u8();
  uint32_t len = r.u32le();
  Bytes body = r.raw(len);
  if (!r.done()) throw SerializationError("trailing bytes in FSSW key");
  auto [share, inner_party] = fpcds_share_decode(body);
  if (inner_party != party)
    throw SerializationError("FSSW wrapper and FPC1 body disagree on party");
  return {party, std::move(share)};
}

}  // namespace fsskit
