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
// Two-party function-private conditional disclosure of secrets for point
// conditions h_{(a,b)} over bit strings, with counter-based share refresh.
// Carol computes op(m1.payload, inv(m2.payload)), which reduces to the XOR
// rule on xor groups and extends the same cancellation to Z_q.

#ifndef FSSKIT_FPCDS_HPP_
#define FSSKIT_FPCDS_HPP_

#include <optional>
#include <string>
#include <utility>

#include "fsskit/group.hpp"

namespace fsskit {

struct FpcdsShare {
  AbelianGroup group;
  std::string point;  // a for P1, b for P2
  GroupElement s;
  GroupElement t;
  GroupElement r;  // r_1 or r_2
  GroupElement u;
  GroupElement v;  // v_1 or v_2
  uint64_t counter = 0;
  Bytes refresh_key;
};

struct FpcdsMessage {
  AbelianGroup group;
  GroupElement tag;      // m_j[0]
  GroupElement payload;  // m_j[1]
};

// u, v1, v2 are uniform conditioned on pairwise distinctness; needs
// |G| >= 3.
std::pair<FpcdsShare, FpcdsShare> fpcds_gen(const AbelianGroup& group,
                                            const std::string& a,
                                            const std::string& b,
                                            GroupElement s,
                                            ByteView refresh_key,
                                            RandomSource& rng);

FpcdsMessage fpcds_party1(const std::string& alpha, const FpcdsShare& w1);
FpcdsMessage fpcds_party2(const std::string& beta, const FpcdsShare& w2);

// nullopt means Carol rejects.
std::optional<GroupElement> fpcds_carol(const FpcdsMessage& m1,
                                        const FpcdsMessage& m2);

// Derives per-run keys from (refresh_key, counter), replaces r_i, t, v_i, u
// and increments the counter. Returns a new share; the input is untouched.
FpcdsShare fpcds_refresh(const FpcdsShare& w, int party_index);

// Share file format, magic "FPC1"; carries the party index so a share file
// is self-describing. Message wire format: tag || payload.
Bytes fpcds_share_encode(const FpcdsShare& w, int party_index);
std::pair<FpcdsShare, int> fpcds_share_decode(ByteView data);

Bytes fpcds_message_encode(const FpcdsMessage& m);
FpcdsMessage fpcds_message_decode(const AbelianGroup& group, ByteView data);

}  // namespace fsskit

#endif  // FSSKIT_FPCDS_HPP_
