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

#include "fsskit/fpcds.hpp"

#include "fsskit/errors.hpp"
#include "fsskit/khprf.hpp"

namespace fsskit {

namespace {

void check_bits(const std::string& x) {
  for (char c : x)
    if (c != '0' && c != '1') throw LengthMismatch("bit strings must be 0/1");
}

constexpr uint8_t kSeparator = 0x7c;

// c as 8-byte big-endian, separator, then single-byte fields separated the
// same way; fixed widths keep (c, i) encodings unambiguous.
Bytes refresh_input(uint64_t counter, std::initializer_list<uint8_t> fields) {
  ByteWriter w;
  w.u64be(counter);
  for (uint8_t f : fields) {
    w.u8(kSeparator);
    w.u8(f);
  }
  return w.take();
}

}  // namespace

std::pair<FpcdsShare, FpcdsShare> fpcds_gen(const AbelianGroup& group,
                                            const std::string& a,
                                            const std::string& b,
                                            GroupElement s,
                                            ByteView refresh_key,
                                            RandomSource& rng) {
  if (group.size() < 3)
    throw GroupTooSmall("need |G| >= 3 for distinct u, v1, v2");
  if (a.size() != b.size())
    throw LengthMismatch("party inputs must have equal bit length");
  check_bits(a);
  check_bits(b);
  if (s >= group.size()) throw Error("secret outside the group");

  GroupElement t = group.sample_uniform(rng);
  GroupElement r1 = group.sample_uniform(rng);
  GroupElement r2 = group.sample_uniform(rng);
  GroupElement u = group.sample_uniform(rng);
  GroupElement v1 = group.sample_uniform_excluding(rng, {u});
  GroupElement v2 = group.sample_uniform_excluding(rng, {u, v1});

  Bytes key(refresh_key.begin(), refresh_key.end());
  FpcdsShare w1{group, a, s, t, r1, u, v1, 0, key};
  FpcdsShare w2{group, b, s, t, r2, u, v2, 0, key};
  return {std::move(w1), std::move(w2)};
}

FpcdsMessage fpcds_party1(const std::string& alpha, const FpcdsShare& w1) {
  if (alpha.size() != w1.point.size())
    throw LengthMismatch("input length differs from the share's point");
  check_bits(alpha);
  if (alpha == w1.point)
    return {w1.group, w1.u, w1.group.op(w1.s, w1.t)};
  return {w1.group, w1.v, w1.r};
}

FpcdsMessage fpcds_party2(const std::string& beta, const FpcdsShare& w2) {
  if (beta.size() != w2.point.size())
    throw LengthMismatch("input length differs from the share's point");
  check_bits(beta);
  if (beta == w2.point) return {w2.group, w2.u, w2.t};
  return {w2.group, w2.v, w2.r};
}

std::optional<GroupElement> fpcds_carol(const FpcdsMessage& m1,
                                        const FpcdsMessage& m2) {
  if (m1.group != m2.group)
    throw Error("messages from different groups");
  if (m1.tag != m2.tag) return std::nullopt;
  return m1.group.op(m1.payload, m1.group.inv(m2.payload));
}

FpcdsShare fpcds_refresh(const FpcdsShare& w, int party_index) {
  if (party_index != 1 && party_index != 2)
    throw Error("party index must be 1 or 2");
  if (w.refresh_key.empty()) throw Error("share carries no refresh key");

  Bytes k1i = std_prf(w.refresh_key,
                      refresh_input(w.counter,
                                    {1, static_cast<uint8_t>(party_index)}),
                      32);
  Bytes k2 = std_prf(w.refresh_key, refresh_input(w.counter, {2}), 32);
  Bytes k3 = std_prf(w.refresh_key, refresh_input(w.counter, {3}), 32);

  FpcdsShare out = w;
  out.r = w.group.prf(k1i, w.r);
  out.t = w.group.prf(k2, w.t);
  out.v = w.group.prp(k3, w.v);
  out.u = w.group.prp(k3, w.u);
  out.counter = w.counter + 1;
  return out;
}

Bytes fpcds_share_encode(const FpcdsShare& w, int party_index) {
  ByteWriter out;
  out.magic("FPC1");
  out.u8(static_cast<uint8_t>(party_index));
  w.group.encode_descriptor(out);
  out.u32le(static_cast<uint32_t>(w.point.size()));
  out.raw(Bytes(w.point.begin(), w.point.end()));
  w.group.encode(out, w.s);
  w.group.encode(out, w.t);
  w.group.encode(out, w.r);
  w.group.encode(out, w.u);
  w.group.encode(out, w.v);
  out.u64be(w.counter);
  out.u32le(static_cast<uint32_t>(w.refresh_key.size()));
  out.raw(w.refresh_key);
  return out.take();
}

std::pair<FpcdsShare, int> fpcds_share_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("FPC1");
  int party = r.u8();
  AbelianGroup group = AbelianGroup::decode_descriptor(r);
  uint32_t point_len = r.u32le();
  Bytes point_bytes = r.raw(point_len);
  std::string point(point_bytes.begin(), point_bytes.end());
  check_bits(point);
  GroupElement s = group.decode(r);
  GroupElement t = group.decode(r);
  GroupElement rr = group.decode(r);
  GroupElement u = group.decode(r);
  GroupElement v = group.decode(r);
  uint64_t counter = r.u64be();
  uint32_t key_len = r.u32le();
  Bytes key = r.raw(key_len);
  if (!r.done()) throw SerializationError("trailing bytes in FPC1 share");
  return {{group, std::move(point), s, t, rr, u, v, counter, std::move(key)},
          party};
}

Bytes fpcds_message_encode(const FpcdsMessage& m) {
  ByteWriter w;
  m.group.encode(w, m.tag);
  m.group.encode(w, m.payload);
  return w.take();
}

FpcdsMessage fpcds_message_decode(const AbelianGroup& group, ByteView data) {
  ByteReader r(data);
  GroupElement tag = group.decode(r);
  GroupElement payload = group.decode(r);
  if (!r.done()) throw SerializationError("trailing bytes in message");
  return {group, tag, payload};
}

}  // namespace fsskit
