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
// FPCDS-to-FSS compiler, instantiated with the two-party point-condition
// scheme: keys are the FPCDS shares, evaluation delegates to the party
// algorithms, and reconstruction simulates Carol. The output bit is 1 iff
// Carol does not reject; by FPCDS perfect correctness non-rejection occurs
// exactly when h(c) = 1 (and the disclosed value is then s).

#ifndef FSSKIT_FSS_HPP_
#define FSSKIT_FSS_HPP_

#include <vector>

#include "fsskit/fpcds.hpp"

namespace fsskit {

struct FssKey {
  int party;  // 1 or 2
  FpcdsShare inner;
};

struct FssOutputBit {
  int value;  // 0 or 1
};

// Samples the secret s uniformly from G and wraps fpcds_gen.
std::vector<FssKey> fss_keygen(const AbelianGroup& group, const std::string& a,
                               const std::string& b, ByteView refresh_key,
                               RandomSource& rng);

FpcdsMessage fss_eval_share(const FssKey& key, const std::string& input);

// Total: messages from mismatched keygen runs yield some bit, never a
// crash.
FssOutputBit fss_rec(const FpcdsMessage& m1, const FpcdsMessage& m2);

// Key file: "FSSW" wrapper carrying the party index around an FPC1 body.
Bytes fss_key_encode(const FssKey& key);
FssKey fss_key_decode(ByteView data);

}  // namespace fsskit

#endif  // FSSKIT_FSS_HPP_
