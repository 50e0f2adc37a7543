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

#include <doctest.h>

#include <cmath>

#include "fsskit/errors.hpp"
#include "fsskit/harness.hpp"
#include "test_util.hpp"

using namespace fsskit;
using nlohmann::json;
using fsskit::testing::seeded;

TEST_CASE("protocol runs are deterministic per seed") {
  json config{{"scheme", "dpf-nn"}, {"l", 1},     {"lambda", 1},
              {"n", 2},             {"q", 11},    {"a", "1"},
              {"alpha", 4},
              {"evals", json::array({{{"x", "1"}, {"r", "0a0b"}}})}};
  SeededRng r1 = seeded("harness-det");
  SeededRng r2 = seeded("harness-det");
  Transcript t1 = run_protocol(config, r1);
  Transcript t2 = run_protocol(config, r2);
  CHECK(t1.encode() == t2.encode());
  // dealer keys, per-party evals, reconstruction.
  REQUIRE(t1.events().size() == 5);
  CHECK(t1.events()[0].label == "key:1");
  CHECK(t1.events()[4].label == "rec:1");
}

TEST_CASE("fpcds runs end with Carol's output event") {
  json config{{"scheme", "fpcds"},
              {"group", {{"kind", "xor"}, {"param", 4}}},
              {"a", "01"},  {"b", "11"}, {"s", 9},
              {"alpha", "01"}, {"beta", "11"}};
  SeededRng rng = seeded("harness-fpcds");
  Transcript tr = run_protocol(config, rng);
  REQUIRE(tr.events().size() == 5);
  const TranscriptEvent& out = tr.events().back();
  CHECK(out.label == "output");
  REQUIRE(out.payload.size() >= 2);
  CHECK(out.payload[0] == 1);  // accepted
}

TEST_CASE("scheme failures become error events") {
  // Subset below the threshold: reconstruction fails inside the run.
  json config{{"scheme", "dpf-tn"}, {"l", 1},   {"lambda", 1}, {"n", 3},
              {"t", 2},             {"q", 11},  {"a", "0"},    {"alpha", 1},
              {"subset", json::array({1})},
              {"evals", json::array({{{"x", "0"}, {"r", "00"}}})}};
  SeededRng rng = seeded("harness-error");
  Transcript tr = run_protocol(config, rng);
  REQUIRE(!tr.events().empty());
  CHECK(tr.events().back().label == "error");
}

TEST_CASE("view extraction selects by label") {
  json config{{"scheme", "shamir"}, {"q", 11}, {"t", 2}, {"n", 3},
              {"secret", 5}};
  SeededRng rng = seeded("harness-view");
  Transcript tr = run_protocol(config, rng);
  CHECK(extract_view(tr, "all") == tr.encode());

  Bytes one = extract_view(tr, "share:2");
  Bytes all_shares = extract_view(tr, "share:*");
  CHECK(one != all_shares);
  CHECK(extract_view(tr, "share:1,share:2,share:3") == all_shares);
  CHECK_THROWS_AS(extract_view(tr, "nonexistent"), SelectorOutOfRange);
  CHECK_THROWS_AS(extract_view(tr, "share:9"), SelectorOutOfRange);
}

TEST_CASE("one Shamir share has exactly zero advantage") {
  ExperimentSpec spec;
  spec.scheme = "shamir";
  spec.hyp0 = json{{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 0}};
  spec.hyp1 = json{{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 3}};
  spec.selector = "share:1";
  spec.test = "exact-multiset";
  ExperimentReport report = run_experiment(spec);
  CHECK(report.advantage == 0.0);
  CHECK(report.states == 10);
  CHECK(report.pass);
}

TEST_CASE("the reconstruction event separates the hypotheses completely") {
  ExperimentSpec spec;
  spec.scheme = "shamir";
  spec.hyp0 = json{{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 0}};
  spec.hyp1 = json{{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 3}};
  spec.selector = "rec";
  spec.test = "exact-multiset";
  spec.min_advantage = 1.0;
  ExperimentReport report = run_experiment(spec);
  CHECK(report.advantage == 1.0);
  CHECK(report.pass);
}

TEST_CASE("exact mode refuses oversized state spaces") {
  ExperimentSpec spec;
  spec.scheme = "shamir";
  spec.hyp0 = json{{"q", 5}, {"t", 30}, {"n", 30}, {"secret", 0}};
  spec.hyp1 = spec.hyp0;
  spec.selector = "share:1";
  spec.test = "exact-multiset";
  CHECK_THROWS_AS(run_experiment(spec), InfeasibleEnumeration);
  CHECK(exact_state_bound() == (uint64_t{1} << 24));
}

TEST_CASE("chi-square stays within noise on identical hypotheses") {
  ExperimentSpec spec;
  spec.scheme = "shamir";
  spec.hyp0 = json{{"q", 11}, {"t", 2}, {"n", 2}, {"secret", 7}};
  spec.hyp1 = spec.hyp0;
  spec.selector = "share:1";
  spec.test = "chi-square";
  spec.trials = 10000;
  spec.seed = Bytes{1, 2, 3, 4};
  ExperimentReport report = run_experiment(spec);
  CHECK(report.advantage <= 3.0 / std::sqrt(10000.0));
  CHECK(report.p_value >= 0.0);
  CHECK(report.p_value <= 1.0);
  CHECK(report.pass);
}

TEST_CASE("chi-square detects a genuinely different view") {
  // hyp0 concentrates the share view on three values; hyp1 spreads it nearly
  // uniformly over the hash bins, so the binned distance is large no matter
  // where the hashes land.
  ExperimentSpec spec;
  spec.scheme = "shamir";
  spec.hyp0 = json{{"q", 3}, {"t", 2}, {"n", 2}, {"secret", 0}};
  spec.hyp1 = json{{"q", 2147483647}, {"t", 2}, {"n", 2}, {"secret", 0}};
  spec.selector = "share:1";
  spec.test = "chi-square";
  spec.trials = 2000;
  spec.seed = Bytes{9};
  spec.min_advantage = 0.5;
  ExperimentReport report = run_experiment(spec);
  CHECK(report.advantage > 0.5);
  CHECK(report.p_value < 1e-6);
  CHECK(report.pass);
}

TEST_CASE("tag reuse across runs is visible to the threshold test") {
  json base{{"group", {{"kind", "xor"}, {"param", 8}}},
            {"a", "0"}, {"b", "0"}, {"s", 1},
            {"alpha", "1"}, {"beta", "1"}};
  ExperimentSpec spec;
  spec.scheme = "fpcds-repeat";
  spec.hyp0 = base;
  spec.hyp0["world"] = "real";
  spec.hyp1 = base;
  spec.hyp1["world"] = "ideal";
  spec.selector = "tag-collision";
  spec.test = "best-threshold";
  spec.trials = 400;
  spec.seed = Bytes{5, 5};
  spec.min_advantage = 0.8;
  ExperimentReport report = run_experiment(spec);
  CHECK(report.advantage >= 0.8);
  CHECK(report.pass);
}

TEST_CASE("experiment specs round trip through JSON") {
  ExperimentSpec spec;
  spec.scheme = "poly";
  spec.hyp0 = json{{"q", 5}};
  spec.hyp1 = json{{"q", 5}};
  spec.selector = "key:1";
  spec.test = "exact-multiset";
  spec.trials = 7;
  spec.seed = Bytes{0xaa, 0xbb};
  spec.tolerance = 0.5;
  ExperimentSpec back = ExperimentSpec::from_json(spec.to_json());
  CHECK(back.scheme == spec.scheme);
  CHECK(back.selector == spec.selector);
  CHECK(back.test == spec.test);
  CHECK(back.trials == 7);
  CHECK(back.seed == spec.seed);
  CHECK(back.tolerance == 0.5);
}

TEST_CASE("gamma tail matches closed forms") {
  // Q(1, x) = exp(-x); Q(1/2, 1) = erfc(1).
  for (double x : {0.1, 1.0, 2.5, 10.0})
    CHECK(regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)));
  CHECK(regularized_gamma_q(0.5, 1.0) ==
        doctest::Approx(std::erfc(1.0)).epsilon(1e-10));
  CHECK(regularized_gamma_q(2.5, 0.0) == 1.0);
}

TEST_CASE("frames round trip and reject truncation") {
  Bytes p1{1, 2, 3};
  Bytes p2;
  Bytes stream = frame_encode(p1);
  Bytes f2 = frame_encode(p2);
  stream.insert(stream.end(), f2.begin(), f2.end());
  size_t pos = 0;
  CHECK(frame_decode(stream, pos) == p1);
  CHECK(frame_decode(stream, pos) == p2);
  CHECK(pos == stream.size());
  stream.pop_back();  // damages the second frame... nothing left to read
  pos = 0;
  CHECK(frame_decode(stream, pos) == p1);
  CHECK_THROWS_AS(frame_decode(stream, pos), SerializationError);
}
