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
// End-to-end acceptance checks. One line of output per criterion; the exit
// code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsskit/dpf_nn.hpp"
#include "fsskit/dpf_tn.hpp"
#include "fsskit/fss.hpp"
#include "fsskit/harness.hpp"
#include "fsskit/poly_fss.hpp"
#include "test_util.hpp"

using namespace fsskit;
using nlohmann::json;
using fsskit::testing::seeded;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, double limit_s,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  if (limit_s > 0 && secs > limit_s) {
    ok = false;
    if (err.empty()) err = "time limit " + std::to_string(limit_s) + "s exceeded";
  }
  std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << num << " - " << what
            << " (" << secs << "s)";
  if (!ok && !err.empty()) std::cout << " [" << err << "]";
  std::cout << "\n" << std::flush;
  if (!ok) ++g_failures;
}

std::string random_bits(RandomSource& rng, uint32_t l) {
  std::string s;
  for (uint32_t j = 0; j < l; ++j)
    s.push_back((rng.bytes(1)[0] & 1) ? '1' : '0');
  return s;
}

DpfNnParams nn_params(uint32_t l, uint32_t lambda, uint32_t n, uint64_t q) {
  FieldParams field(q);
  KhPrfParams prf{field, dpf_default_key_dim(l, n, lambda), 2 * l + lambda + 1,
                  Bytes(32, 0x41)};
  return {l, lambda, n, field, std::move(prf)};
}

// ---- criterion bodies ------------------------------------------------

bool nn_correctness_grid() {
  SeededRng rng = seeded("acceptance-1");
  for (uint32_t l : {1u, 2u, 4u})
    for (uint32_t n : {2u, 3u})
      for (uint64_t q : {uint64_t{5}, (uint64_t{1} << 31) - 1}) {
        DpfNnParams params = nn_params(l, 2, n, q);
        for (int trial = 0; trial < 200; ++trial) {
          std::string a = random_bits(rng, l);
          FieldElement alpha = sample_uniform(params.field, rng);
          auto keys = dpf_nn_gen(params, a, alpha, rng);
          Bytes r = rng.bytes(8);
          std::vector<DpfEvalShare> shares;
          for (const DpfNnKey& k : keys)
            shares.push_back(dpf_nn_eval(params, k, a, r));
          if (dpf_nn_rec(params, shares) != alpha) return false;
        }
      }
  return true;
}

bool nn_off_point() {
  SeededRng rng = seeded("acceptance-2");
  // Large field: no off-point trial may yield a nonzero output.
  {
    DpfNnParams params = nn_params(2, 2, 2, (uint64_t{1} << 31) - 1);
    const std::string a = "10";
    auto keys = dpf_nn_gen(params, a, FieldElement(777, params.field), rng);
    for (int trial = 0; trial < 10000; ++trial) {
      std::string x = random_bits(rng, 2);
      if (x == a) x[1] = x[1] == '0' ? '1' : '0';
      Bytes r = rng.bytes(8);
      std::vector<DpfEvalShare> shares;
      for (const DpfNnKey& k : keys)
        shares.push_back(dpf_nn_eval(params, k, x, r));
      if (!dpf_nn_rec(params, shares).is_zero()) return false;
    }
  }
  // Tiny field: accidental acceptances are allowed up to three times the
  // 1/q^2 baseline.
  {
    DpfNnParams params = nn_params(2, 2, 2, 5);
    const std::string a = "01";
    auto keys = dpf_nn_gen(params, a, FieldElement(3, params.field), rng);
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      std::string x = random_bits(rng, 2);
      if (x == a) x[0] = x[0] == '0' ? '1' : '0';
      Bytes r = rng.bytes(8);
      std::vector<DpfEvalShare> shares;
      for (const DpfNnKey& k : keys)
        shares.push_back(dpf_nn_eval(params, k, x, r));
      if (!dpf_nn_rec(params, shares).is_zero()) ++bad;
    }
    if (bad > 3 * 10000 / 25) return false;
  }
  return true;
}

bool tn_threshold_grid() {
  SeededRng rng = seeded("acceptance-3");
  for (uint32_t n = 2; n <= 5; ++n)
    for (uint32_t t = 2; t <= n; ++t) {
      FieldParams field(13);
      KhPrfParams prf{field, dpf_default_key_dim(1, n, 1), 4, Bytes(32, 0x42)};
      DpfTnParams params{1, 1, n, t, field, std::move(prf)};
      for (int inst = 0; inst < 50; ++inst) {
        std::string a = random_bits(rng, 1);
        std::string off = a == "0" ? "1" : "0";
        FieldElement alpha = sample_uniform(params.field, rng);
        auto keys = dpf_tn_gen(params, a, alpha, rng);
        Bytes r = rng.bytes(4);
        std::vector<DpfTnEvalShare> at_a, at_off;
        for (const DpfTnKey& k : keys) {
          at_a.push_back(dpf_tn_eval(params, k, a, r));
          at_off.push_back(dpf_tn_eval(params, k, off, r));
        }
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
          uint32_t bits = 0;
          for (uint32_t i = 0; i < n; ++i) bits += mask >> i & 1;
          if (bits != t) continue;
          std::vector<DpfTnEvalShare> sub_a, sub_off;
          for (uint32_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
              sub_a.push_back(at_a[i]);
              sub_off.push_back(at_off[i]);
            }
          if (dpf_tn_rec(params, sub_a) != alpha) return false;
          if (!dpf_tn_rec(params, sub_off).is_zero()) return false;
        }
      }
    }
  return true;
}

bool exact_run(ExperimentSpec spec) {
  ExperimentReport report = run_experiment(spec);
  return report.pass && report.advantage == 0.0 && report.states > 0;
}

bool exact_secrecy() {
  // Shamir: one share under two secrets.
  ExperimentSpec shamir;
  shamir.scheme = "shamir";
  shamir.hyp0 = json{{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 0}};
  shamir.hyp1 = json{{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 3}};
  shamir.selector = "share:1";
  shamir.test = "exact-multiset";
  if (!exact_run(shamir)) return false;

  json group{{"kind", "xor"}, {"param", 2}};  // |G| = 4
  auto cds = [&](json hyp0, json hyp1) {
    ExperimentSpec spec;
    spec.scheme = "fpcds";
    spec.hyp0 = std::move(hyp0);
    spec.hyp1 = std::move(hyp1);
    spec.selector = "m1,m2";
    spec.test = "exact-multiset";
    return exact_run(spec);
  };
  // Secret hiding when neither input matches.
  if (!cds(json{{"group", group}, {"a", "00"}, {"b", "01"}, {"s", 1},
               {"alpha", "10"}, {"beta", "11"}},
           json{{"group", group}, {"a", "00"}, {"b", "01"}, {"s", 3},
                {"alpha", "10"}, {"beta", "11"}}))
    return false;
  // Secret hiding when only one input matches.
  if (!cds(json{{"group", group}, {"a", "00"}, {"b", "01"}, {"s", 1},
               {"alpha", "00"}, {"beta", "11"}},
           json{{"group", group}, {"a", "00"}, {"b", "01"}, {"s", 3},
                {"alpha", "00"}, {"beta", "11"}}))
    return false;
  // Condition hiding: two different points, both runs off-point.
  if (!cds(json{{"group", group}, {"a", "00"}, {"b", "01"}, {"s", 2},
               {"alpha", "11"}, {"beta", "10"}},
           json{{"group", group}, {"a", "10"}, {"b", "11"}, {"s", 2},
                {"alpha", "11"}, {"beta", "10"}}))
    return false;
  return true;
}

bool prf_share_homomorphism() {
  SeededRng rng = seeded("acceptance-5");
  KhPrfParams prf{FieldParams(7), 5, 4, Bytes(32, 0x5a)};
  const uint32_t n = 5;
  for (int trial = 0; trial < 10000; ++trial) {
    KhKey k{FieldVector::random(prf.key_dim, prf.field, rng)};
    uint32_t t = 2 + trial % 3;
    auto shares = shamir_share_vector(k.vec, t, n, rng);
    // t consecutive evaluation points, rotated per trial.
    std::vector<FieldElement> points;
    std::vector<const ShamirVectorShare*> chosen;
    for (uint32_t j = 0; j < t; ++j) {
      uint32_t idx = (trial + j) % n;
      chosen.push_back(&shares[idx]);
      points.push_back(FieldElement(shares[idx].index, prf.field));
    }
    auto coeffs = lagrange_coeffs_at(points, FieldElement(0, prf.field));
    Bytes r = rng.bytes(6);

    KhOutput direct = kh_eval(prf, k, r);
    FieldVector p1 = FieldVector::zero(prf.out_dim - 1, prf.field);
    FieldElement p2(0, prf.field);
    KhKey combined{FieldVector::zero(prf.key_dim, prf.field)};
    for (uint32_t j = 0; j < t; ++j) {
      KhOutput o = kh_eval(prf, KhKey{chosen[j]->value}, r);
      p1 = p1 + coeffs[j] * o.part1;
      p2 = p2 + coeffs[j] * o.part2;
      combined = kh_key_add(combined, kh_key_scale(coeffs[j],
                                                   KhKey{chosen[j]->value}));
    }
    if (p1 != direct.part1 || p2 != direct.part2) return false;
    if (combined.vec != k.vec) return false;
  }
  return true;
}

bool cds_exhaustive() {
  AbelianGroup group = AbelianGroup::xor_group(3);  // |G| = 8
  SeededRng rng = seeded("acceptance-6");
  std::vector<std::string> inputs;
  for (int v = 0; v < 4; ++v)
    inputs.push_back(std::string(1, '0' + (v >> 1 & 1)) +
                     std::string(1, '0' + (v & 1)));
  for (const std::string& a : inputs)
    for (const std::string& b : inputs)
      for (GroupElement s : {GroupElement{0}, GroupElement{5}}) {
        auto [w1, w2] = fpcds_gen(group, a, b, s, {}, rng);
        for (const std::string& alpha : inputs)
          for (const std::string& beta : inputs) {
            auto out = fpcds_carol(fpcds_party1(alpha, w1),
                                   fpcds_party2(beta, w2));
            bool match = alpha == a && beta == b;
            if (match != out.has_value()) return false;
            if (match && *out != s) return false;
          }
      }
  return true;
}

bool refresh_bounds() {
  json base{{"group", {{"kind", "xor"}, {"param", 16}}},
            {"a", "0"}, {"b", "0"}, {"s", 1},
            {"alpha", "1"}, {"beta", "1"}};
  ExperimentSpec spec;
  spec.scheme = "fpcds-repeat";
  spec.selector = "tag-collision";
  spec.test = "best-threshold";
  spec.trials = 10000;
  spec.seed = Bytes{0x07, 0x07};

  spec.hyp0 = base;
  spec.hyp0["world"] = "real";
  spec.hyp1 = base;
  spec.hyp1["world"] = "ideal";
  ExperimentReport no_refresh = run_experiment(spec);
  if (no_refresh.advantage < 0.9) return false;

  spec.hyp0["refresh"] = true;
  ExperimentReport with_refresh = run_experiment(spec);
  return with_refresh.advantage <= 0.05;
}

bool compiler_exhaustive() {
  AbelianGroup group = AbelianGroup::xor_group(3);
  SeededRng rng = seeded("acceptance-8");
  std::vector<std::string> inputs;
  for (int v = 0; v < 4; ++v)
    inputs.push_back(std::string(1, '0' + (v >> 1 & 1)) +
                     std::string(1, '0' + (v & 1)));
  for (const std::string& a : inputs)
    for (const std::string& b : inputs) {
      auto keys = fss_keygen(group, a, b, {}, rng);
      for (const std::string& c : inputs) {
        int expected = (c == a && c == b) ? 1 : 0;
        FssOutputBit bit = fss_rec(fss_eval_share(keys[0], c),
                                   fss_eval_share(keys[1], c));
        if (bit.value != expected) return false;
      }
    }
  return true;
}

bool poly_fss_checks() {
  SeededRng rng = seeded("acceptance-9");
  // Correctness grid with every authorized subset.
  struct Grid {
    uint64_t q;
    uint32_t n, t, k;
  };
  for (Grid g : {Grid{11, 2, 2, 3}, Grid{13, 3, 3, 4}, Grid{5, 1, 2, 4}}) {
    PolyFssParams params{FieldParams(g.q), g.n, g.t, g.k};
    std::vector<FieldElement> coeffs;
    for (uint32_t j = 0; j <= g.n; ++j)
      coeffs.push_back(sample_uniform(params.field, rng));
    FieldPolynomial p{coeffs};
    auto keys = poly_fss_gen(p, params, rng);
    for (uint64_t xv : {uint64_t{0}, uint64_t{2}, g.q - 1}) {
      FieldElement x(xv, params.field);
      std::vector<PolyEvalShare> all;
      for (const PolyFssKey& key : keys)
        all.push_back(poly_fss_eval(params, key, x));
      for (uint32_t mask = 0; mask < (1u << g.k); ++mask) {
        uint32_t bits = 0;
        for (uint32_t i = 0; i < g.k; ++i) bits += mask >> i & 1;
        if (bits != g.t) continue;
        std::vector<PolyEvalShare> subset;
        for (uint32_t i = 0; i < g.k; ++i)
          if (mask >> i & 1) subset.push_back(all[i]);
        if (poly_fss_rec(params, subset) != poly_eval(p, x)) return false;
      }
    }
  }
  // Posterior of one key is exactly independent of the polynomial.
  ExperimentSpec spec;
  spec.scheme = "poly";
  spec.hyp0 = json{{"q", 5}, {"degree_bound", 1}, {"t", 2}, {"k", 2},
                   {"x_hat", 1}, {"coeffs", json::array({0, 0})}};
  spec.hyp1 = json{{"q", 5}, {"degree_bound", 1}, {"t", 2}, {"k", 2},
                   {"x_hat", 1}, {"coeffs", json::array({3, 2})}};
  spec.selector = "key:1";
  spec.test = "exact-multiset";
  if (!exact_run(spec)) return false;
  // Key size: (n+1) log2 q bits, padded per coefficient to whole bytes in
  // the serialized form.
  PolyFssParams params{FieldParams(5), 3, 2, 2};
  double bits = poly_fss_key_size_bits(params);
  if (bits != 4 * params.field.bits()) return false;
  auto keys = poly_fss_gen(
      FieldPolynomial({FieldElement(1, params.field)}), params, rng);
  Bytes blob = poly_fss_key_encode(params, keys[0]);
  size_t header = 4 + 8 + 4 + 4 + 4 + 4;
  size_t coord_bytes = blob.size() - header;
  if (coord_bytes != 4 * params.field.encoded_width()) return false;
  return 8.0 * coord_bytes >= bits;
}

bool size_formulas() {
  SeededRng rng = seeded("acceptance-10");
  // Point 1: n-of-n key, l=1 lambda=1 q=2 n=2 d=5 -> 26 one-bit elements.
  {
    FieldParams field(2);
    KhPrfParams prf{field, 5, 4, Bytes(32, 0)};
    DpfNnParams params{1, 1, 2, field, prf};
    if (dpf_nn_key_size_bits(params) != 26.0) return false;
    auto keys = dpf_nn_gen(params, "1", FieldElement(1, field), rng);
    size_t elements = keys[0].theta.dim() + keys[0].alpha_list.size() +
                      keys[0].k_sum.vec.dim();
    for (const FieldVector& v : keys[0].v_list) elements += v.dim();
    for (const KhKey& k : keys[0].key_list) elements += k.vec.dim();
    if (elements != 26) return false;
    // Point 4: the matching eval-share size with a 4-byte nonce.
    if (dpf_nn_share_size_bits(params, 4) != 44.0) return false;
    DpfEvalShare s = dpf_nn_eval(params, keys[0], "1", rng.bytes(4));
    size_t share_elems =
        s.s0.dim() + 1 + s.theta.dim() + s.k_sum.vec.dim();
    if (share_elems + 8 * s.r.size() != 44) return false;
  }
  // Point 2: l=2 lambda=2 q=5 d=10 -> 84 log2(5) bits over 84 elements.
  {
    FieldParams field(5);
    KhPrfParams prf{field, 10, 7, Bytes(32, 0)};
    DpfNnParams params{2, 2, 2, field, prf};
    double expect = 84.0 * field.bits();
    if (std::abs(dpf_nn_key_size_bits(params) - expect) > 1e-9) return false;
    if (std::abs(expect - 195.0419599705384) > 1e-9) return false;
    auto keys = dpf_nn_gen(params, "01", FieldElement(2, field), rng);
    size_t elements = keys[0].theta.dim() + keys[0].alpha_list.size() +
                      keys[0].k_sum.vec.dim();
    for (const FieldVector& v : keys[0].v_list) elements += v.dim();
    for (const KhKey& k : keys[0].key_list) elements += k.vec.dim();
    if (elements != 84) return false;
  }
  // Point 3: threshold key, l=1 lambda=1 n=2 t=2 q=3 d=5 ->
  // log2(2) + 46 log2(3).
  {
    FieldParams field(3);
    KhPrfParams prf{field, 5, 4, Bytes(32, 0)};
    DpfTnParams params{1, 1, 2, 2, field, prf};
    double expect = 1.0 + 46.0 * field.bits();
    if (std::abs(dpf_tn_key_size_bits(params) - expect) > 1e-9) return false;
    if (std::abs(expect - 73.9082750331732) > 1e-9) return false;
    auto keys = dpf_tn_gen(params, "0", FieldElement(1, field), rng);
    size_t elements = keys[0].theta.dim() + keys[0].alpha_list.size() +
                      keys[0].k_sum.vec.dim();
    for (const FieldVector& v : keys[0].v_list) elements += v.dim();
    for (const KhKey& k : keys[0].key_list) elements += k.vec.dim();
    for (const KhKey& k : keys[0].key_share_table) elements += k.vec.dim();
    if (elements != 46) return false;
  }
  // Point 5: polynomial key, n=4 q=2 -> 5 bits.
  {
    PolyFssParams params{FieldParams(2), 4, 1, 1};
    if (poly_fss_key_size_bits(params) != 5.0) return false;
  }
  return true;
}

bool structural_view_checks() {
  std::cout << "  note: computational key secrecy rests on a pseudorandomness\n"
               "  assumption and has no finite test; in its place this suite\n"
               "  checks the exact share-combination identity (criterion 5),\n"
               "  enumerates both marginals of a single key's view below, and\n"
               "  documents that the linear PRF instantiation is homomorphic\n"
               "  but not pseudorandom.\n";
  auto pair_ok = [](const std::string& scheme, json hyp0, json hyp1) {
    ExperimentSpec spec;
    spec.scheme = scheme;
    spec.hyp0 = std::move(hyp0);
    spec.hyp1 = std::move(hyp1);
    spec.selector = "all";
    spec.test = "exact-multiset";
    return exact_run(spec);
  };
  for (uint32_t party : {1u, 2u}) {
    json f0{{"q", 2}, {"l", 1}, {"lambda", 1}, {"n", 2},
            {"a", "0"}, {"alpha", 1}, {"view_party", party}};
    json f1 = f0;
    f1["a"] = "1";
    if (!pair_ok("dpf-nn-field", f0, f1)) return false;

    json k0{{"q", 2}, {"l", 1}, {"n", 2}, {"d", 5},
            {"a", "0"}, {"view_party", party}};
    json k1 = k0;
    k1["a"] = "1";
    if (!pair_ok("dpf-nn-keys", k0, k1)) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "n-of-n DPF reconstructs alpha across the parameter grid", 30,
            nn_correctness_grid);
  criterion(2, "n-of-n DPF off-point outputs are zero", 0, nn_off_point);
  criterion(3, "t-of-n DPF agrees on every authorized subset", 60,
            tn_threshold_grid);
  criterion(4, "exact view enumeration shows zero advantage", 120,
            exact_secrecy);
  criterion(5, "PRF outputs combine linearly across key shares", 0,
            prf_share_homomorphism);
  criterion(6, "CDS discloses exactly on matching inputs", 0, cds_exhaustive);
  criterion(7, "share refresh removes the tag-reuse distinguisher", 0,
            refresh_bounds);
  criterion(8, "compiled FSS computes the point predicate", 0,
            compiler_exhaustive);
  criterion(9, "polynomial FSS correctness, key posterior and size", 0,
            poly_fss_checks);
  criterion(10, "size formulas match hand-derived points and encodings", 0,
            size_formulas);
  criterion(11, "structural stand-ins for computational key secrecy", 0,
            structural_view_checks);
  return g_failures;
}
