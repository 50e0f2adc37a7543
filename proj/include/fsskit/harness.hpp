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
// Multi-party simulation and statistical testing: protocol runs over an
// in-memory transport with transcript capture, adversary-view extraction,
// and distinguishability experiments.
//
// Distinguisher classes are fixed and declared: multiset equality over
// canonical view bytes (exact mode), chi-square over hash bins, and the
// best single threshold on a scalar statistic. These are the strongest
// checks available at desk scale; they do not quantify over all
// polynomial-time distinguishers.

#ifndef FSSKIT_HARNESS_HPP_
#define FSSKIT_HARNESS_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsskit/rng.hpp"

namespace fsskit {

struct TranscriptEvent {
  uint32_t seq;
  std::string sender;
  std::string receiver;
  std::string label;
  Bytes payload;
};

// Append-only event log with a total order; replayable given the same
// seeds.
class Transcript {
 public:
  void append(std::string sender, std::string receiver, std::string label,
              Bytes payload);
  const std::vector<TranscriptEvent>& events() const { return events_; }
  Bytes encode() const;

 private:
  std::vector<TranscriptEvent> events_;
};

// Selector syntax: "all", or a comma-separated list of labels; a trailing
// '*' makes an item a prefix match. Items that match no event raise
// SelectorOutOfRange. The view is the canonical serialization of the
// selected events in transcript order.
Bytes extract_view(const Transcript& transcript, const std::string& selector);

// Runs one protocol instance dealer -> parties -> (Carol | Rec), drawing
// all randomness from rng. Scheme ids: "shamir", "poly", "fpcds",
// "fpcds-repeat", "dpf-nn", "dpf-tn". Scheme errors are recorded as an
// "error" event, not thrown.
Transcript run_protocol(const nlohmann::json& config, RandomSource& rng);

struct ExperimentSpec {
  std::string scheme;
  nlohmann::json hyp0;
  nlohmann::json hyp1;
  std::string selector;
  std::string test;  // exact-multiset | chi-square | best-threshold
  uint64_t trials = 1;
  Bytes seed;              // sampling modes only
  double tolerance = -1;   // max advantage to pass; -1 = mode default
  double min_advantage = -1;  // if set, pass requires advantage >= this
  uint64_t exact_bound = 0;   // 0 = default / env override

  static ExperimentSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct ExperimentReport {
  double advantage = 0;   // |p0 - p1| for the declared distinguisher
  double statistic = 0;
  double p_value = -1;    // -1 = not applicable
  uint64_t states = 0;    // enumerated states or trials per hypothesis
  double tolerance = 0;
  bool pass = false;

  nlohmann::json to_json() const;
  std::string table() const;  // human-readable summary
};

// Exact mode enumerates all randomness of both hypotheses and compares
// view multisets (advantage = exact total-variation distance); sampling
// modes estimate the advantage over `trials` runs per hypothesis. Extra
// exact-only scheme ids "dpf-nn-field" and "dpf-nn-keys" enumerate the two
// independent marginals of a single DPF key's view.
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Default exact-mode state bound (2^24), overridable by the environment
// variable FSSKIT_EXACT_BOUND.
uint64_t exact_state_bound();

// Upper regularized incomplete gamma Q(a, x); exposed for the test-side
// statistics oracle.
double regularized_gamma_q(double a, double x);

// Length-prefixed frames for the cross-process transport: 4-byte
// big-endian length, then the payload.
Bytes frame_encode(ByteView payload);
// Reads one frame starting at pos and advances pos past it.
Bytes frame_decode(ByteView data, size_t& pos);

}  // namespace fsskit

#endif  // FSSKIT_HARNESS_HPP_
