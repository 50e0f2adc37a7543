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

#include "fsskit/harness.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "fsskit/dpf_nn.hpp"
#include "fsskit/dpf_tn.hpp"
#include "fsskit/errors.hpp"
#include "fsskit/fpcds.hpp"
#include "fsskit/poly_fss.hpp"

namespace fsskit {

namespace {

using nlohmann::json;

// Replays a fixed list of values: each fill() consumes one scripted value
// and writes it big-endian. The library samplers issue exactly one fill
// per rejection attempt, so a script of in-range values is a bijection
// between scripts and accepted outcomes; exact enumeration walks scripts.
class ScriptedRng : public RandomSource {
 public:
  explicit ScriptedRng(const std::vector<uint64_t>& draws) : draws_(draws) {}

  void fill(uint8_t* out, size_t n) override {
    if (pos_ >= draws_.size()) throw Error("randomness script exhausted");
    uint64_t v = draws_[pos_++];
    if (n < 8 && v >> (8 * n))
      throw Error("scripted draw does not fit the requested width");
    for (size_t i = 0; i < n; ++i)
      out[i] = static_cast<uint8_t>(v >> (8 * (n - 1 - i)));
  }

 private:
  const std::vector<uint64_t>& draws_;
  size_t pos_ = 0;
};

void put_str(ByteWriter& w, const std::string& s) {
  w.u32le(static_cast<uint32_t>(s.size()));
  w.raw(Bytes(s.begin(), s.end()));
}

void put_bytes(ByteWriter& w, const Bytes& b) {
  w.u32le(static_cast<uint32_t>(b.size()));
  w.raw(b);
}

AbelianGroup group_from_json(const json& g) {
  std::string kind = g.at("kind").get<std::string>();
  uint64_t param = g.at("param").get<uint64_t>();
  if (kind == "xor") return AbelianGroup::xor_group(static_cast<unsigned>(param));
  if (kind == "zq") return AbelianGroup::zq_group(param);
  throw Error("unknown group kind: " + kind);
}

Bytes hex_field(const json& config, const std::string& key,
                const Bytes& fallback) {
  if (!config.contains(key)) return fallback;
  return from_hex(config.at(key).get<std::string>());
}

// ---- protocol runners ------------------------------------------------

void run_shamir(const json& config, RandomSource& rng, Transcript& tr) {
  FieldParams field(config.at("q").get<uint64_t>());
  uint32_t t = config.at("t").get<uint32_t>();
  uint32_t n = config.at("n").get<uint32_t>();
  FieldElement secret(config.at("secret").get<uint64_t>(), field);
  auto shares = shamir_share(secret, t, n, rng);
  for (const ShamirShare& s : shares) {
    ByteWriter w;
    shamir_share_encode(w, s);
    tr.append("dealer", "party" + std::to_string(s.index),
              "share:" + std::to_string(s.index), w.take());
  }
  std::vector<ShamirShare> subset(shares.begin(), shares.begin() + t);
  FieldElement rec = shamir_reconstruct(std::move(subset), t);
  ByteWriter w;
  fe_encode(w, rec);
  tr.append("rec", "env", "rec", w.take());
}

void run_poly(const json& config, RandomSource& rng, Transcript& tr) {
  FieldParams field(config.at("q").get<uint64_t>());
  PolyFssParams params{field, config.at("degree_bound").get<uint32_t>(),
                       config.at("t").get<uint32_t>(),
                       config.at("k").get<uint32_t>()};
  std::vector<FieldElement> coeffs;
  for (uint64_t c : config.at("coeffs").get<std::vector<uint64_t>>())
    coeffs.push_back(FieldElement(c, field));
  FieldPolynomial p(std::move(coeffs));
  auto keys = poly_fss_gen(p, params, rng);
  for (const PolyFssKey& k : keys)
    tr.append("dealer", "party" + std::to_string(k.party),
              "key:" + std::to_string(k.party), poly_fss_key_encode(params, k));
  FieldElement x_hat(config.at("x_hat").get<uint64_t>(), field);
  std::vector<PolyEvalShare> shares;
  for (const PolyFssKey& k : keys) {
    PolyEvalShare s = poly_fss_eval(params, k, x_hat);
    tr.append("party" + std::to_string(k.party), "rec",
              "eval:" + std::to_string(k.party),
              poly_fss_share_encode(params, s));
    shares.push_back(s);
  }
  FieldElement rec = poly_fss_rec(params, std::move(shares));
  ByteWriter w;
  fe_encode(w, rec);
  tr.append("rec", "env", "rec", w.take());
}

void append_carol_output(Transcript& tr, const AbelianGroup& group,
                         const std::optional<GroupElement>& out,
                         const std::string& label) {
  ByteWriter w;
  if (out) {
    w.u8(1);
    group.encode(w, *out);
  } else {
    w.u8(0);
  }
  tr.append("carol", "env", label, w.take());
}

void run_fpcds(const json& config, RandomSource& rng, Transcript& tr) {
  AbelianGroup group = group_from_json(config.at("group"));
  std::string a = config.at("a").get<std::string>();
  std::string b = config.at("b").get<std::string>();
  GroupElement s = config.at("s").get<uint64_t>();
  Bytes refresh_key = hex_field(config, "refresh_key", {});
  auto [w1, w2] = fpcds_gen(group, a, b, s, refresh_key, rng);
  tr.append("dealer", "party1", "share:1", fpcds_share_encode(w1, 1));
  tr.append("dealer", "party2", "share:2", fpcds_share_encode(w2, 2));
  FpcdsMessage m1 = fpcds_party1(config.at("alpha").get<std::string>(), w1);
  FpcdsMessage m2 = fpcds_party2(config.at("beta").get<std::string>(), w2);
  tr.append("party1", "carol", "m1", fpcds_message_encode(m1));
  tr.append("party2", "carol", "m2", fpcds_message_encode(m2));
  append_carol_output(tr, group, fpcds_carol(m1, m2), "output");
}

// Two runs at off-point inputs against the same share pair. world "real"
// reuses the shares (optionally refreshed between runs); world "ideal"
// deals a fresh independent instance for the second run. The
// "tag-collision" event carries the tag-reuse distinguisher's bit.
void run_fpcds_repeat(const json& config, RandomSource& rng, Transcript& tr) {
  AbelianGroup group = group_from_json(config.at("group"));
  std::string a = config.at("a").get<std::string>();
  std::string b = config.at("b").get<std::string>();
  GroupElement s = config.at("s").get<uint64_t>();
  bool refresh = config.value("refresh", false);
  std::string world = config.value("world", "real");
  Bytes refresh_key = hex_field(config, "refresh_key", rng.bytes(32));

  auto [w1, w2] = fpcds_gen(group, a, b, s, refresh_key, rng);
  std::string alpha = config.at("alpha").get<std::string>();
  std::string beta = config.at("beta").get<std::string>();

  FpcdsMessage m1a = fpcds_party1(alpha, w1);
  FpcdsMessage m2a = fpcds_party2(beta, w2);
  tr.append("party1", "carol", "m1:1", fpcds_message_encode(m1a));
  tr.append("party2", "carol", "m2:1", fpcds_message_encode(m2a));

  if (world == "ideal") {
    auto fresh = fpcds_gen(group, a, b, s, refresh_key, rng);
    w1 = std::move(fresh.first);
    w2 = std::move(fresh.second);
  } else if (refresh) {
    w1 = fpcds_refresh(w1, 1);
    w2 = fpcds_refresh(w2, 2);
  }
  FpcdsMessage m1b = fpcds_party1(alpha, w1);
  FpcdsMessage m2b = fpcds_party2(beta, w2);
  tr.append("party1", "carol", "m1:2", fpcds_message_encode(m1b));
  tr.append("party2", "carol", "m2:2", fpcds_message_encode(m2b));

  ByteWriter w;
  w.u8(m1a.tag == m1b.tag ? 1 : 0);
  tr.append("distinguisher", "env", "tag-collision", w.take());
}

DpfNnParams dpf_nn_params_from_json(const json& config) {
  uint32_t l = config.at("l").get<uint32_t>();
  uint32_t lambda = config.at("lambda").get<uint32_t>();
  uint32_t n = config.at("n").get<uint32_t>();
  FieldParams field(config.at("q").get<uint64_t>());
  uint32_t d = config.value("d", dpf_default_key_dim(l, n, lambda));
  Bytes seed = hex_field(config, "master_seed", Bytes(32, 0));
  KhPrfParams prf{field, d, 2 * l + lambda + 1, std::move(seed)};
  return {l, lambda, n, field, std::move(prf),
          config.value("allow_small_key_dim", false)};
}

void run_dpf_nn(const json& config, RandomSource& rng, Transcript& tr) {
  DpfNnParams params = dpf_nn_params_from_json(config);
  FieldElement alpha(config.at("alpha").get<uint64_t>(), params.field);
  auto keys =
      dpf_nn_gen(params, config.at("a").get<std::string>(), alpha, rng);
  for (const DpfNnKey& k : keys)
    tr.append("dealer", "party" + std::to_string(k.party),
              "key:" + std::to_string(k.party), dpf_nn_key_encode(params, k));
  int h = 0;
  for (const json& e : config.value("evals", json::array())) {
    ++h;
    std::string x = e.at("x").get<std::string>();
    Bytes r = from_hex(e.at("r").get<std::string>());
    std::vector<DpfEvalShare> shares;
    for (const DpfNnKey& k : keys) {
      DpfEvalShare s = dpf_nn_eval(params, k, x, r);
      tr.append("party" + std::to_string(k.party), "rec",
                "eval:" + std::to_string(k.party) + ":" + std::to_string(h),
                dpf_nn_share_encode(params, s));
      shares.push_back(std::move(s));
    }
    FieldElement rec = dpf_nn_rec(params, shares);
    ByteWriter w;
    fe_encode(w, rec);
    tr.append("rec", "env", "rec:" + std::to_string(h), w.take());
  }
}

void run_dpf_tn(const json& config, RandomSource& rng, Transcript& tr) {
  DpfNnParams base = dpf_nn_params_from_json(config);
  DpfTnParams params{base.l,     base.lambda,
                     base.n,     config.at("t").get<uint32_t>(),
                     base.field, base.prf,
                     base.allow_small_key_dim};
  FieldElement alpha(config.at("alpha").get<uint64_t>(), params.field);
  auto keys =
      dpf_tn_gen(params, config.at("a").get<std::string>(), alpha, rng);
  for (const DpfTnKey& k : keys)
    tr.append("dealer", "party" + std::to_string(k.party),
              "key:" + std::to_string(k.party), dpf_tn_key_encode(params, k));
  std::vector<uint32_t> subset;
  if (config.contains("subset"))
    subset = config.at("subset").get<std::vector<uint32_t>>();
  else
    for (uint32_t i = 1; i <= params.t; ++i) subset.push_back(i);
  int h = 0;
  for (const json& e : config.value("evals", json::array())) {
    ++h;
    std::string x = e.at("x").get<std::string>();
    Bytes r = from_hex(e.at("r").get<std::string>());
    std::vector<DpfTnEvalShare> shares;
    for (uint32_t i : subset) {
      if (i < 1 || i > params.n) throw ShareSetInvalid("subset index");
      DpfTnEvalShare s = dpf_tn_eval(params, keys[i - 1], x, r);
      tr.append("party" + std::to_string(i), "rec",
                "eval:" + std::to_string(i) + ":" + std::to_string(h),
                dpf_tn_share_encode(params, s));
      shares.push_back(std::move(s));
    }
    FieldElement rec = dpf_tn_rec(params, shares);
    ByteWriter w;
    fe_encode(w, rec);
    tr.append("rec", "env", "rec:" + std::to_string(h), w.take());
  }
}

// ---- exact enumeration -----------------------------------------------

uint64_t checked_pow(uint64_t base, uint64_t exp, uint64_t cap) {
  uint64_t out = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (out > cap / base + 1) return UINT64_MAX;
    out *= base;
    if (out > cap) return UINT64_MAX;
  }
  return out;
}

// Number of randomness states (scripts or raw tuples walked).
uint64_t exact_state_count(const std::string& scheme, const json& config,
                           uint64_t cap) {
  if (scheme == "shamir") {
    uint64_t q = config.at("q").get<uint64_t>();
    uint64_t t = config.at("t").get<uint64_t>();
    return checked_pow(q, t - 1, cap);
  }
  if (scheme == "poly") {
    uint64_t q = config.at("q").get<uint64_t>();
    uint64_t t = config.at("t").get<uint64_t>();
    uint64_t n = config.at("degree_bound").get<uint64_t>();
    return checked_pow(q, (n + 1) * (t - 1), cap);
  }
  if (scheme == "fpcds") {
    uint64_t g = group_from_json(config.at("group")).size();
    uint64_t base = checked_pow(g, 4, cap);
    if (base == UINT64_MAX || base > cap / ((g - 1) * (g - 2)))
      return UINT64_MAX;
    return base * (g - 1) * (g - 2);
  }
  if (scheme == "dpf-nn-field") {
    uint64_t q = config.at("q").get<uint64_t>();
    uint64_t l = config.at("l").get<uint64_t>();
    uint64_t lambda = config.at("lambda").get<uint64_t>();
    uint64_t dim = 2 * l + lambda;
    return checked_pow(q, 2 * (2 * l * dim) + 4 * l, cap);
  }
  if (scheme == "dpf-nn-keys") {
    uint64_t q = config.at("q").get<uint64_t>();
    uint64_t l = config.at("l").get<uint64_t>();
    uint64_t n = config.at("n").get<uint64_t>();
    uint64_t d = config.at("d").get<uint64_t>();
    return checked_pow(q, d * 2 * l * n, cap);
  }
  throw Error("no exact enumeration for scheme: " + scheme);
}

// Walks every script for one hypothesis and hands each to cb.
void enumerate_scripts(const std::string& scheme, const json& config,
                       const std::function<void(std::vector<uint64_t>&)>& cb) {
  std::vector<uint64_t> script;
  if (scheme == "shamir" || scheme == "poly") {
    uint64_t q = config.at("q").get<uint64_t>();
    uint64_t t = config.at("t").get<uint64_t>();
    uint64_t draws = scheme == "shamir"
                         ? t - 1
                         : (config.at("degree_bound").get<uint64_t>() + 1) *
                               (t - 1);
    script.assign(draws, 0);
    std::function<void(size_t)> walk = [&](size_t pos) {
      if (pos == draws) {
        cb(script);
        return;
      }
      for (uint64_t v = 0; v < q; ++v) {
        script[pos] = v;
        walk(pos + 1);
      }
    };
    walk(0);
    return;
  }
  if (scheme == "fpcds") {
    uint64_t g = group_from_json(config.at("group")).size();
    script.assign(6, 0);
    // Draw order inside fpcds_gen: t, r1, r2, u, v1, v2.
    for (uint64_t t = 0; t < g; ++t)
      for (uint64_t r1 = 0; r1 < g; ++r1)
        for (uint64_t r2 = 0; r2 < g; ++r2)
          for (uint64_t u = 0; u < g; ++u)
            for (uint64_t v1 = 0; v1 < g; ++v1) {
              if (v1 == u) continue;
              for (uint64_t v2 = 0; v2 < g; ++v2) {
                if (v2 == u || v2 == v1) continue;
                script = {t, r1, r2, u, v1, v2};
                cb(script);
              }
            }
    return;
  }
  throw Error("no script enumeration for scheme: " + scheme);
}

// Mirrors the field-only part of Gen for n = 2: the joint distribution of
// (v shares, theta, alpha shares) in one party's key. Independent of the
// PRF keys, so it can be enumerated on its own.
void enumerate_dpf_nn_field_views(const json& config,
                                  const std::function<void(const Bytes&)>& cb) {
  FieldParams field(config.at("q").get<uint64_t>());
  const uint64_t q = field.q;
  const uint32_t l = config.at("l").get<uint32_t>();
  const uint32_t lambda = config.at("lambda").get<uint32_t>();
  if (config.at("n").get<uint32_t>() != 2)
    throw InfeasibleEnumeration("field-marginal enumeration supports n = 2");
  const uint32_t p = config.at("view_party").get<uint32_t>();
  if (p < 1 || p > 2) throw SelectorOutOfRange("view_party must be 1 or 2");
  const std::string a = config.at("a").get<std::string>();
  FieldElement alpha(config.at("alpha").get<uint64_t>(), field);
  const size_t dim = 2 * l + lambda;
  const size_t slots = 2 * l;

  // Flat draw layout: v coords, mask coords, raw alphas, alpha masks.
  const size_t nv = slots * dim;
  std::vector<uint64_t> draw(2 * nv + 2 * slots, 0);
  std::function<void(size_t)> walk = [&](size_t pos) {
    if (pos < draw.size()) {
      for (uint64_t x = 0; x < q; ++x) {
        draw[pos] = x;
        walk(pos + 1);
      }
      return;
    }
    auto fe = [&](uint64_t v) { return FieldElement(v, field); };
    std::vector<FieldVector> v, mask;
    for (size_t j = 0; j < slots; ++j) {
      std::vector<FieldElement> vc, mc;
      for (size_t h = 0; h < dim; ++h) {
        vc.push_back(fe(draw[j * dim + h]));
        mc.push_back(fe(draw[nv + j * dim + h]));
      }
      v.push_back(FieldVector(std::move(vc)));
      mask.push_back(FieldVector(std::move(mc)));
    }
    std::vector<FieldElement> alphas, amask;
    for (size_t j = 0; j < slots; ++j) {
      alphas.push_back(fe(draw[2 * nv + j]));
      amask.push_back(fe(draw[2 * nv + slots + j]));
    }
    // Constraint correction on the last selected slot, as in Gen.
    FieldElement sum(0, field);
    for (uint32_t j = 0; j < l; ++j) sum = sum + alphas[dpf_slot(a, j)];
    size_t last = dpf_slot(a, l - 1);
    alphas[last] = alphas[last] + alpha - sum;

    FieldVector theta = FieldVector::zero(dim, field);
    for (uint32_t j = 0; j < l; ++j) theta = theta + v[dpf_slot(a, j)];

    ByteWriter w;
    for (size_t j = 0; j < slots; ++j)
      fv_encode(w, p == 1 ? mask[j] : v[j] - mask[j]);
    fv_encode(w, theta);
    for (size_t j = 0; j < slots; ++j)
      fe_encode(w, p == 1 ? amask[j] : alphas[j] - amask[j]);
    cb(w.take());
  };
  walk(0);
}

// Key marginal of one party's view: its own 2l PRF keys plus the summed
// key k. Walks all raw key tuples and keeps the linearly independent
// ones, which carry equal weight under the rejection sampler.
void enumerate_dpf_nn_keys_views(const json& config,
                                 const std::function<void(const Bytes&)>& cb) {
  FieldParams field(config.at("q").get<uint64_t>());
  const uint64_t q = field.q;
  const uint32_t l = config.at("l").get<uint32_t>();
  const uint32_t n = config.at("n").get<uint32_t>();
  const uint32_t d = config.at("d").get<uint32_t>();
  const uint32_t p = config.at("view_party").get<uint32_t>();
  if (p < 1 || p > n) throw SelectorOutOfRange("view_party out of range");
  const std::string a = config.at("a").get<std::string>();
  const size_t count = 2 * l * n;

  std::vector<FieldVector> keys;
  std::function<void()> emit = [&] {
    if (field_matrix_rank(keys) != count) return;
    ByteWriter w;
    // keys are row-major (i, j); party p owns indices (p-1)*2l .. +2l-1.
    for (uint32_t j = 0; j < 2 * l; ++j)
      fv_encode(w, keys[(p - 1) * 2 * l + j]);
    FieldVector k_sum = FieldVector::zero(d, field);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < l; ++j)
        k_sum = k_sum + keys[i * 2 * l + dpf_slot(a, j)];
    fv_encode(w, k_sum);
    cb(w.take());
  };
  std::function<void(size_t)> walk = [&](size_t idx) {
    if (idx == count) {
      emit();
      return;
    }
    std::vector<uint64_t> coords(d, 0);
    std::function<void(size_t)> coord_walk = [&](size_t h) {
      if (h == d) {
        std::vector<FieldElement> c;
        for (uint64_t x : coords) c.push_back(FieldElement(x, field));
        keys.push_back(FieldVector(std::move(c)));
        walk(idx + 1);
        keys.pop_back();
        return;
      }
      for (uint64_t x = 0; x < q; ++x) {
        coords[h] = x;
        coord_walk(h + 1);
      }
    };
    coord_walk(0);
  };
  walk(0);
}

using Multiset = std::map<Bytes, uint64_t>;

double total_variation(const Multiset& m0, uint64_t n0, const Multiset& m1,
                       uint64_t n1) {
  double tv = 0;
  for (const auto& [view, c0] : m0) {
    auto it = m1.find(view);
    uint64_t c1 = it == m1.end() ? 0 : it->second;
    tv += std::abs(double(c0) / n0 - double(c1) / n1);
  }
  for (const auto& [view, c1] : m1)
    if (!m0.contains(view)) tv += double(c1) / n1;
  return tv / 2;
}

void exact_views(const std::string& scheme, const json& config,
                 const std::string& selector, Multiset& out, uint64_t& total) {
  auto add = [&](const Bytes& view) {
    ++out[view];
    ++total;
  };
  if (scheme == "dpf-nn-field") {
    enumerate_dpf_nn_field_views(config, add);
    return;
  }
  if (scheme == "dpf-nn-keys") {
    enumerate_dpf_nn_keys_views(config, add);
    return;
  }
  json full = config;
  full["scheme"] = scheme;
  enumerate_scripts(scheme, config, [&](std::vector<uint64_t>& script) {
    ScriptedRng rng(script);
    Transcript tr = run_protocol(full, rng);
    add(extract_view(tr, selector));
  });
}

constexpr int kChiSquareBins = 8;

size_t view_bin(const Bytes& view) {
  Bytes digest = sha256(view);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | digest[i];
  return v % kChiSquareBins;
}

}  // namespace

// ---- transcript ------------------------------------------------------

void Transcript::append(std::string sender, std::string receiver,
                        std::string label, Bytes payload) {
  events_.push_back({static_cast<uint32_t>(events_.size()), std::move(sender),
                     std::move(receiver), std::move(label),
                     std::move(payload)});
}

static Bytes encode_events(const char magic[4],
                           const std::vector<const TranscriptEvent*>& events) {
  ByteWriter w;
  w.magic(magic);
  w.u32le(static_cast<uint32_t>(events.size()));
  for (const TranscriptEvent* e : events) {
    w.u32le(e->seq);
    put_str(w, e->sender);
    put_str(w, e->receiver);
    put_str(w, e->label);
    put_bytes(w, e->payload);
  }
  return w.take();
}

Bytes Transcript::encode() const {
  std::vector<const TranscriptEvent*> all;
  for (const TranscriptEvent& e : events_) all.push_back(&e);
  return encode_events("TRNS", all);
}

static std::vector<const TranscriptEvent*> select_events(
    const Transcript& transcript, const std::string& selector) {
  std::vector<const TranscriptEvent*> picked;
  if (selector == "all") {
    for (const TranscriptEvent& e : transcript.events()) picked.push_back(&e);
    return picked;
  }
  std::vector<std::string> items;
  std::stringstream ss(selector);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  if (items.empty()) throw SelectorOutOfRange("empty selector");

  std::vector<bool> selected(transcript.events().size(), false);
  for (const std::string& it : items) {
    bool prefix = !it.empty() && it.back() == '*';
    std::string want = prefix ? it.substr(0, it.size() - 1) : it;
    bool hit = false;
    for (const TranscriptEvent& e : transcript.events()) {
      bool match = prefix ? e.label.starts_with(want) : e.label == want;
      if (match) {
        selected[e.seq] = true;
        hit = true;
      }
    }
    if (!hit)
      throw SelectorOutOfRange("selector item matches no event: " + it);
  }
  for (const TranscriptEvent& e : transcript.events())
    if (selected[e.seq]) picked.push_back(&e);
  return picked;
}

Bytes extract_view(const Transcript& transcript, const std::string& selector) {
  if (selector == "all") return transcript.encode();
  return encode_events("VIEW", select_events(transcript, selector));
}

Transcript run_protocol(const nlohmann::json& config, RandomSource& rng) {
  Transcript tr;
  std::string scheme = config.at("scheme").get<std::string>();
  try {
    if (scheme == "shamir")
      run_shamir(config, rng, tr);
    else if (scheme == "poly")
      run_poly(config, rng, tr);
    else if (scheme == "fpcds")
      run_fpcds(config, rng, tr);
    else if (scheme == "fpcds-repeat")
      run_fpcds_repeat(config, rng, tr);
    else if (scheme == "dpf-nn")
      run_dpf_nn(config, rng, tr);
    else if (scheme == "dpf-tn")
      run_dpf_tn(config, rng, tr);
    else
      throw Error("unknown scheme: " + scheme);
  } catch (const Error& e) {
    std::string what = e.what();
    tr.append("env", "env", "error", Bytes(what.begin(), what.end()));
  }
  return tr;
}

// ---- experiments -----------------------------------------------------

uint64_t exact_state_bound() {
  if (const char* env = std::getenv("FSSKIT_EXACT_BOUND"))
    return std::strtoull(env, nullptr, 10);
  return uint64_t{1} << 24;
}

ExperimentSpec ExperimentSpec::from_json(const json& j) {
  ExperimentSpec spec;
  spec.scheme = j.at("scheme").get<std::string>();
  spec.hyp0 = j.at("hyp0");
  spec.hyp1 = j.at("hyp1");
  spec.selector = j.at("selector").get<std::string>();
  spec.test = j.at("test").get<std::string>();
  spec.trials = j.value("trials", uint64_t{1});
  if (j.contains("seed")) spec.seed = from_hex(j.at("seed").get<std::string>());
  spec.tolerance = j.value("tolerance", -1.0);
  spec.min_advantage = j.value("min_advantage", -1.0);
  spec.exact_bound = j.value("exact_bound", uint64_t{0});
  if (spec.trials < 1) throw ParamViolation("trials must be >= 1");
  return spec;
}

json ExperimentSpec::to_json() const {
  json j{{"scheme", scheme},     {"hyp0", hyp0},
         {"hyp1", hyp1},         {"selector", selector},
         {"test", test},         {"trials", trials},
         {"tolerance", tolerance}, {"min_advantage", min_advantage},
         {"exact_bound", exact_bound}};
  if (!seed.empty()) j["seed"] = to_hex(seed);
  return j;
}

json ExperimentReport::to_json() const {
  return {{"advantage", advantage}, {"statistic", statistic},
          {"p_value", p_value},     {"states", states},
          {"tolerance", tolerance}, {"pass", pass}};
}

std::string ExperimentReport::table() const {
  std::ostringstream os;
  os << "advantage  " << advantage << "\n"
     << "statistic  " << statistic << "\n";
  if (p_value >= 0) os << "p_value    " << p_value << "\n";
  os << "states     " << states << "\n"
     << "tolerance  " << tolerance << "\n"
     << "result     " << (pass ? "pass" : "fail") << "\n";
  return os.str();
}

double regularized_gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw Error("gamma_q domain");
  if (x == 0) return 1.0;
  if (x < a + 1) {
    // Lower series, then complement.
    double term = 1.0 / a, sum = term, ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    return 1.0 - p;
  }
  // Continued fraction (modified Lentz).
  double tiny = 1e-300;
  double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -double(i) * (double(i) - a);
    b += 2;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

static void apply_pass(const ExperimentSpec& spec, double default_tol,
                       ExperimentReport& report) {
  report.tolerance = spec.tolerance >= 0 ? spec.tolerance : default_tol;
  if (spec.min_advantage >= 0)
    report.pass = report.advantage >= spec.min_advantage;
  else
    report.pass = report.advantage <= report.tolerance;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  ExperimentReport report;
  if (spec.test == "exact-multiset") {
    uint64_t bound = spec.exact_bound ? spec.exact_bound : exact_state_bound();
    for (const json* hyp : {&spec.hyp0, &spec.hyp1}) {
      uint64_t count = exact_state_count(spec.scheme, *hyp, bound);
      if (count > bound)
        throw InfeasibleEnumeration(
            "exact enumeration exceeds the state bound " +
            std::to_string(bound));
    }
    Multiset m0, m1;
    uint64_t n0 = 0, n1 = 0;
    exact_views(spec.scheme, spec.hyp0, spec.selector, m0, n0);
    exact_views(spec.scheme, spec.hyp1, spec.selector, m1, n1);
    report.advantage = total_variation(m0, n0, m1, n1);
    report.statistic = report.advantage;
    report.states = n0 + n1;
    apply_pass(spec, 0.0, report);
    return report;
  }

  // Sampling modes: per-trial seeds derived from (seed, hypothesis, index).
  json full0 = spec.hyp0, full1 = spec.hyp1;
  full0["scheme"] = spec.scheme;
  full1["scheme"] = spec.scheme;
  auto run_trial = [&](int hyp, uint64_t trial) {
    ByteWriter w;
    w.raw(spec.seed);
    w.u8(static_cast<uint8_t>(hyp));
    w.u64be(trial);
    Bytes seed = w.take();
    SeededRng rng(seed);
    return run_protocol(hyp == 0 ? full0 : full1, rng);
  };
  auto view_of = [&](int hyp, uint64_t trial) {
    return extract_view(run_trial(hyp, trial), spec.selector);
  };
  // Scalar statistic for best-threshold: the first byte of the selected
  // events' concatenated payloads (256 when empty).
  auto scalar_of = [&](int hyp, uint64_t trial) -> int {
    Transcript tr = run_trial(hyp, trial);
    for (const TranscriptEvent* e : select_events(tr, spec.selector))
      if (!e->payload.empty()) return e->payload[0];
    return 256;
  };
  const uint64_t n = spec.trials;
  const double noise_tol = 3.0 / std::sqrt(double(n));

  if (spec.test == "chi-square") {
    std::vector<uint64_t> c0(kChiSquareBins, 0), c1(kChiSquareBins, 0);
    for (uint64_t i = 0; i < n; ++i) {
      ++c0[view_bin(view_of(0, i))];
      ++c1[view_bin(view_of(1, i))];
    }
    double stat = 0, tv = 0;
    int df = -1;
    for (int b = 0; b < kChiSquareBins; ++b) {
      uint64_t tot = c0[b] + c1[b];
      if (tot == 0) continue;
      double diff = double(c0[b]) - double(c1[b]);
      stat += diff * diff / double(tot);
      ++df;
      tv += std::abs(diff) / double(n);
    }
    report.advantage = tv / 2;
    report.statistic = stat;
    report.p_value = df > 0 ? regularized_gamma_q(df / 2.0, stat / 2.0) : 1.0;
    report.states = n;
    apply_pass(spec, noise_tol, report);
    return report;
  }

  if (spec.test == "best-threshold") {
    std::vector<uint64_t> c0(257, 0), c1(257, 0);
    for (uint64_t i = 0; i < n; ++i) {
      ++c0[scalar_of(0, i)];
      ++c1[scalar_of(1, i)];
    }
    // Best threshold on the cumulative distributions.
    double best = 0, best_at = 0, acc0 = 0, acc1 = 0;
    for (int b = 0; b < 257; ++b) {
      acc0 += double(c0[b]) / n;
      acc1 += double(c1[b]) / n;
      if (std::abs(acc0 - acc1) > best) {
        best = std::abs(acc0 - acc1);
        best_at = b;
      }
    }
    report.advantage = best;
    report.statistic = best_at;
    report.states = n;
    apply_pass(spec, noise_tol, report);
    return report;
  }

  throw Error("unknown experiment test: " + spec.test);
}

Bytes frame_encode(ByteView payload) {
  ByteWriter w;
  w.u32be(static_cast<uint32_t>(payload.size()));
  w.raw(payload);
  return w.take();
}

Bytes frame_decode(ByteView data, size_t& pos) {
  if (data.size() - pos < 4) throw SerializationError("truncated frame");
  uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = len << 8 | data[pos + i];
  pos += 4;
  if (data.size() - pos < len) throw SerializationError("truncated frame");
  Bytes out(data.begin() + pos, data.begin() + pos + len);
  pos += len;
  return out;
}

}  // namespace fsskit
