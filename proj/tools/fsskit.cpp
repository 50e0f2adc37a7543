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
// Command-line entry point. Exit codes: 0 success, 1 scheme/runtime error,
// 2 usage error. Every randomized subcommand requires an explicit 32-byte
// --seed; there is no ambient randomness and no default crypto sizes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fsskit/dpf_nn.hpp"
#include "fsskit/dpf_tn.hpp"
#include "fsskit/fss.hpp"
#include "fsskit/harness.hpp"
#include "fsskit/poly_fss.hpp"

namespace {

using fsskit::ByteReader;
using fsskit::Bytes;
using fsskit::ByteView;
using fsskit::ByteWriter;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fsskit::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, ByteView data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fsskit::Error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

// ---- JSON-hex artifact format ----------------------------------------
//
// {"magic": "...", "fields": [["name", "hex"], ...]} where the fields,
// concatenated in order, are exactly the binary artifact. Decoding
// concatenates and reuses the binary decoders, so both formats always
// produce identical in-memory values.

class SplitReader {
 public:
  explicit SplitReader(ByteView data) : r_(data) {}

  void field(const std::string& name, size_t nbytes) {
    push(name, r_.raw(nbytes));
  }
  uint64_t u32le(const std::string& name) {
    Bytes b = r_.raw(4);
    push(name, b);
    return uint64_t(b[0]) | uint64_t(b[1]) << 8 | uint64_t(b[2]) << 16 |
           uint64_t(b[3]) << 24;
  }
  uint64_t u64be(const std::string& name) {
    Bytes b = r_.raw(8);
    push(name, b);
    uint64_t v = 0;
    for (uint8_t x : b) v = v << 8 | x;
    return v;
  }
  uint8_t u8(const std::string& name) {
    Bytes b = r_.raw(1);
    push(name, b);
    return b[0];
  }
  // A length-prefixed byte string as one field.
  void len_bytes(const std::string& name) {
    Bytes len = r_.raw(4);
    uint32_t n = uint32_t(len[0]) | uint32_t(len[1]) << 8 |
                 uint32_t(len[2]) << 16 | uint32_t(len[3]) << 24;
    Bytes body = r_.raw(n);
    len.insert(len.end(), body.begin(), body.end());
    push(name, len);
  }
  // A counted field-vector as one field.
  void fv(const std::string& name, size_t width) {
    Bytes cnt = r_.raw(4);
    uint32_t n = uint32_t(cnt[0]) | uint32_t(cnt[1]) << 8 |
                 uint32_t(cnt[2]) << 16 | uint32_t(cnt[3]) << 24;
    Bytes body = r_.raw(n * width);
    cnt.insert(cnt.end(), body.begin(), body.end());
    push(name, cnt);
  }
  bool done() const { return r_.done(); }
  json fields() const { return fields_; }

 private:
  void push(const std::string& name, const Bytes& data) {
    fields_.push_back(json::array({name, fsskit::to_hex(data)}));
  }
  ByteReader r_;
  json fields_;
};

size_t field_width(uint64_t q) { return fsskit::FieldParams(q).encoded_width(); }

json split_artifact(ByteView bin) {
  if (bin.size() < 4) throw fsskit::SerializationError("artifact too short");
  std::string magic(bin.begin(), bin.begin() + 4);
  SplitReader s(bin);
  s.field("magic", 4);

  auto dpf_params = [&](bool with_t) {
    uint32_t l = static_cast<uint32_t>(s.u32le("l"));
    s.u32le("lambda");
    uint32_t n = static_cast<uint32_t>(s.u32le("n"));
    if (with_t) s.u32le("t");
    uint64_t q = s.u64be("q");
    s.u32le("key_dim");
    s.u8("allow_small_key_dim");
    s.len_bytes("master_seed");
    return std::tuple{l, n, field_width(q)};
  };
  auto group_field = [&]() {
    // kind byte + u64be parameter, then derive the element width.
    uint8_t kind = s.u8("group_kind");
    uint64_t param = s.u64be("group_param");
    ByteWriter w;
    w.u8(kind);
    w.u64be(param);
    Bytes d = w.take();
    ByteReader r(d);
    return fsskit::AbelianGroup::decode_descriptor(r).encoded_width();
  };

  if (magic == "PFS1" || magic == "PFSS") {
    uint64_t q = s.u64be("q");
    uint64_t n = s.u32le("degree_bound");
    s.u32le("t");
    s.u32le("k");
    s.u32le("party");
    size_t w = field_width(q);
    if (magic == "PFSS") {
      s.field("value", w);
    } else {
      for (uint64_t j = 0; j <= n; ++j)
        s.field("coord:" + std::to_string(j), w);
    }
  } else if (magic == "DPF1" || magic == "DPFT") {
    auto [l, n, w] = dpf_params(magic == "DPFT");
    s.u32le("party");
    for (uint32_t j = 0; j < 2 * l; ++j) s.fv("v:" + std::to_string(j), w);
    s.fv("theta", w);
    for (uint32_t j = 0; j < 2 * l; ++j)
      s.field("alpha:" + std::to_string(j), w);
    for (uint32_t j = 0; j < 2 * l; ++j) s.fv("key:" + std::to_string(j), w);
    if (magic == "DPFT")
      for (uint32_t e = 0; e < 2 * l * n; ++e)
        s.fv("table:" + std::to_string(e), w);
    s.fv("k_sum", w);
  } else if (magic == "DPS1" || magic == "DPST") {
    auto [l, n, w] = dpf_params(magic == "DPST");
    (void)l;
    (void)n;
    s.u32le("party");
    s.fv("s0", w);
    s.field("s1", w);
    s.len_bytes("r");
    s.fv("theta", w);
    s.fv("k_sum", w);
  } else if (magic == "FPC1") {
    s.u8("party");
    size_t w = group_field();
    s.len_bytes("point");
    s.field("s", w);
    s.field("t", w);
    s.field("r", w);
    s.field("u", w);
    s.field("v", w);
    s.u64be("counter");
    s.len_bytes("refresh_key");
  } else if (magic == "FSSW") {
    s.u8("party");
    s.len_bytes("body");
  } else if (magic == "FMSG") {
    size_t w = group_field();
    s.field("tag", w);
    s.field("payload", w);
  } else {
    throw fsskit::SerializationError("unknown artifact magic: " + magic);
  }
  if (!s.done())
    throw fsskit::SerializationError("trailing bytes in " + magic);
  return json{{"magic", magic}, {"fields", s.fields()}};
}

void write_artifact(const std::string& path, ByteView bin,
                    const std::string& format) {
  if (format == "binary") {
    write_file(path, bin);
    return;
  }
  std::string doc = split_artifact(bin).dump(2);
  doc.push_back('\n');
  write_file(path, Bytes(doc.begin(), doc.end()));
}

Bytes read_artifact(const std::string& path) {
  Bytes data = read_file(path);
  size_t i = 0;
  while (i < data.size() && std::isspace(data[i])) ++i;
  if (i < data.size() && data[i] == '{') {
    json doc = json::parse(std::string(data.begin(), data.end()));
    Bytes bin;
    for (const json& f : doc.at("fields")) {
      Bytes part = fsskit::from_hex(f.at(1).get<std::string>());
      bin.insert(bin.end(), part.begin(), part.end());
    }
    return bin;
  }
  return data;
}

// ---- option parsing helpers ------------------------------------------

Bytes parse_seed(const std::string& hex) {
  Bytes seed = fsskit::from_hex(hex);
  if (seed.size() != 32) throw UsageError("--seed must be 32 bytes of hex");
  return seed;
}

fsskit::AbelianGroup parse_group(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("--group must be xor:<bits> or zq:<q>");
  std::string kind = spec.substr(0, colon);
  uint64_t param = std::stoull(spec.substr(colon + 1));
  if (kind == "xor")
    return fsskit::AbelianGroup::xor_group(static_cast<unsigned>(param));
  if (kind == "zq") return fsskit::AbelianGroup::zq_group(param);
  throw UsageError("--group must be xor:<bits> or zq:<q>");
}

std::vector<uint64_t> parse_u64_list(const std::string& csv) {
  std::vector<uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
  return out;
}

std::string ext_for(const std::string& format) {
  return format == "binary" ? ".bin" : ".json";
}

Bytes fmsg_encode(const fsskit::FpcdsMessage& m) {
  ByteWriter w;
  w.magic("FMSG");
  m.group.encode_descriptor(w);
  Bytes body = fsskit::fpcds_message_encode(m);
  w.raw(body);
  return w.take();
}

fsskit::FpcdsMessage fmsg_decode(ByteView data) {
  ByteReader r(data);
  r.expect_magic("FMSG");
  fsskit::AbelianGroup group = fsskit::AbelianGroup::decode_descriptor(r);
  fsskit::GroupElement tag = group.decode(r);
  fsskit::GroupElement payload = group.decode(r);
  if (!r.done()) throw fsskit::SerializationError("trailing bytes in FMSG");
  return {group, tag, payload};
}

// Shared across subcommands; each callback reads what it declared.
struct Opts {
  std::string seed, out, format = "binary";
  uint64_t q = 0, alpha = 0, s = 0, x_int = 0;
  uint32_t l = 0, lambda = 0, n = 0, t = 0, k = 0, d = 0;
  uint32_t degree_bound = 0;
  bool allow_small = false, verify_extras = false, json_report = false;
  std::string a, b, input, x, r_hex, group, coeffs, master_seed, refresh_key;
  std::string key_file, m1, m2, spec_path;
  std::vector<std::string> share_files;
};

void add_format(CLI::App* cmd, Opts& o) {
  cmd->add_option("--format", o.format, "binary | json-hex")
      ->check(CLI::IsMember({"binary", "json-hex"}));
}

fsskit::DpfNnParams dpf_nn_params(const Opts& o) {
  fsskit::FieldParams field(o.q);
  uint32_t d = o.d ? o.d : fsskit::dpf_default_key_dim(o.l, o.n, o.lambda);
  Bytes seed = o.master_seed.empty() ? Bytes(32, 0)
                                     : fsskit::from_hex(o.master_seed);
  fsskit::KhPrfParams prf{field, d, 2 * o.l + o.lambda + 1, std::move(seed)};
  return {o.l, o.lambda, o.n, field, std::move(prf), o.allow_small};
}

int run(int argc, char** argv) {
  CLI::App app{"function secret sharing toolkit"};
  app.require_subcommand(1);
  Opts o;

  // dpf-nn
  CLI::App* dpfnn = app.add_subcommand("dpf-nn", "n-of-n point function DPF");
  dpfnn->require_subcommand(1);
  {
    CLI::App* gen = dpfnn->add_subcommand("gen", "generate keys");
    gen->add_option("--l", o.l)->required();
    gen->add_option("--lambda", o.lambda)->required();
    gen->add_option("--n", o.n)->required();
    gen->add_option("--q", o.q)->required();
    gen->add_option("--d", o.d);
    gen->add_option("--master-seed", o.master_seed);
    gen->add_flag("--allow-small-key-dim", o.allow_small);
    gen->add_option("--a", o.a)->required();
    gen->add_option("--alpha", o.alpha)->required();
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--out", o.out)->required();
    add_format(gen, o);
    gen->callback([&o] {
      fsskit::DpfNnParams params = dpf_nn_params(o);
      fsskit::SeededRng rng(parse_seed(o.seed));
      auto keys = fsskit::dpf_nn_gen(
          params, o.a, fsskit::FieldElement(o.alpha, params.field), rng);
      for (const fsskit::DpfNnKey& k : keys)
        write_artifact(o.out + ".key" + std::to_string(k.party) +
                           ext_for(o.format),
                       fsskit::dpf_nn_key_encode(params, k), o.format);
    });

    CLI::App* eval = dpfnn->add_subcommand("eval", "evaluate one key");
    eval->add_option("--key", o.key_file)->required();
    eval->add_option("--x", o.x)->required();
    eval->add_option("--r", o.r_hex)->required();
    eval->add_option("--out", o.out)->required();
    add_format(eval, o);
    eval->callback([&o] {
      auto [params, key] = fsskit::dpf_nn_key_decode(read_artifact(o.key_file));
      fsskit::DpfEvalShare s =
          fsskit::dpf_nn_eval(params, key, o.x, fsskit::from_hex(o.r_hex));
      write_artifact(o.out, fsskit::dpf_nn_share_encode(params, s), o.format);
    });

    CLI::App* rec = dpfnn->add_subcommand("rec", "reconstruct the output");
    rec->add_option("--share", o.share_files)->required()->expected(-1);
    rec->callback([&o] {
      std::vector<fsskit::DpfEvalShare> shares;
      std::optional<fsskit::DpfNnParams> params;
      for (const std::string& f : o.share_files) {
        auto [p, s] = fsskit::dpf_nn_share_decode(read_artifact(f));
        params = p;
        shares.push_back(std::move(s));
      }
      if (!params) throw fsskit::Error("no shares given");
      std::cout << fsskit::dpf_nn_rec(*params, shares).value() << "\n";
    });
  }

  // dpf-tn
  CLI::App* dpftn = app.add_subcommand("dpf-tn", "t-of-n threshold DPF");
  dpftn->require_subcommand(1);
  {
    CLI::App* gen = dpftn->add_subcommand("gen", "generate keys");
    gen->add_option("--l", o.l)->required();
    gen->add_option("--lambda", o.lambda)->required();
    gen->add_option("--n", o.n)->required();
    gen->add_option("--t", o.t)->required();
    gen->add_option("--q", o.q)->required();
    gen->add_option("--d", o.d);
    gen->add_option("--master-seed", o.master_seed);
    gen->add_flag("--allow-small-key-dim", o.allow_small);
    gen->add_option("--a", o.a)->required();
    gen->add_option("--alpha", o.alpha)->required();
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--out", o.out)->required();
    add_format(gen, o);
    gen->callback([&o] {
      fsskit::DpfNnParams base = dpf_nn_params(o);
      fsskit::DpfTnParams params{base.l,     base.lambda, base.n,
                                 o.t,        base.field,  base.prf,
                                 base.allow_small_key_dim};
      fsskit::SeededRng rng(parse_seed(o.seed));
      auto keys = fsskit::dpf_tn_gen(
          params, o.a, fsskit::FieldElement(o.alpha, params.field), rng);
      for (const fsskit::DpfTnKey& k : keys)
        write_artifact(o.out + ".key" + std::to_string(k.party) +
                           ext_for(o.format),
                       fsskit::dpf_tn_key_encode(params, k), o.format);
    });

    CLI::App* eval = dpftn->add_subcommand("eval", "evaluate one key");
    eval->add_option("--key", o.key_file)->required();
    eval->add_option("--x", o.x)->required();
    eval->add_option("--r", o.r_hex)->required();
    eval->add_option("--out", o.out)->required();
    add_format(eval, o);
    eval->callback([&o] {
      auto [params, key] = fsskit::dpf_tn_key_decode(read_artifact(o.key_file));
      fsskit::DpfTnEvalShare s =
          fsskit::dpf_tn_eval(params, key, o.x, fsskit::from_hex(o.r_hex));
      write_artifact(o.out, fsskit::dpf_tn_share_encode(params, s), o.format);
    });

    CLI::App* rec = dpftn->add_subcommand("rec", "reconstruct the output");
    rec->add_option("--share", o.share_files)->required()->expected(-1);
    rec->add_flag("--verify-extras", o.verify_extras);
    rec->callback([&o] {
      std::vector<fsskit::DpfTnEvalShare> shares;
      std::optional<fsskit::DpfTnParams> params;
      for (const std::string& f : o.share_files) {
        auto [p, s] = fsskit::dpf_tn_share_decode(read_artifact(f));
        params = p;
        shares.push_back(std::move(s));
      }
      if (!params) throw fsskit::Error("no shares given");
      std::cout << fsskit::dpf_tn_rec(*params, shares, fsskit::LinearKhPrf(),
                                      o.verify_extras)
                       .value()
                << "\n";
    });
  }

  // fpcds
  CLI::App* fpcds = app.add_subcommand("fpcds", "function-private CDS");
  fpcds->require_subcommand(1);
  {
    CLI::App* gen = fpcds->add_subcommand("gen", "deal shares");
    gen->add_option("--group", o.group)->required();
    gen->add_option("--a", o.a)->required();
    gen->add_option("--b", o.b)->required();
    gen->add_option("--s", o.s)->required();
    gen->add_option("--refresh-key", o.refresh_key);
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--out", o.out)->required();
    add_format(gen, o);
    gen->callback([&o] {
      fsskit::AbelianGroup group = parse_group(o.group);
      fsskit::SeededRng rng(parse_seed(o.seed));
      Bytes rk = o.refresh_key.empty() ? Bytes{}
                                       : fsskit::from_hex(o.refresh_key);
      auto [w1, w2] = fsskit::fpcds_gen(group, o.a, o.b, o.s, rk, rng);
      write_artifact(o.out + ".share1" + ext_for(o.format),
                     fsskit::fpcds_share_encode(w1, 1), o.format);
      write_artifact(o.out + ".share2" + ext_for(o.format),
                     fsskit::fpcds_share_encode(w2, 2), o.format);
    });

    CLI::App* send = fpcds->add_subcommand("send", "produce a party message");
    send->add_option("--share", o.key_file)->required();
    send->add_option("--input", o.input)->required();
    send->add_option("--out", o.out)->required();
    add_format(send, o);
    send->callback([&o] {
      auto [share, party] = fsskit::fpcds_share_decode(read_artifact(o.key_file));
      fsskit::FpcdsMessage m = party == 1 ? fsskit::fpcds_party1(o.input, share)
                                          : fsskit::fpcds_party2(o.input, share);
      write_artifact(o.out, fmsg_encode(m), o.format);
    });

    CLI::App* carol = fpcds->add_subcommand("carol", "combine two messages");
    carol->add_option("--m1", o.m1)->required();
    carol->add_option("--m2", o.m2)->required();
    carol->callback([&o] {
      auto out = fsskit::fpcds_carol(fmsg_decode(read_artifact(o.m1)),
                                     fmsg_decode(read_artifact(o.m2)));
      if (out)
        std::cout << *out << "\n";
      else
        std::cout << "reject\n";
    });

    CLI::App* refresh = fpcds->add_subcommand("refresh", "refresh a share");
    refresh->add_option("--share", o.key_file)->required();
    refresh->add_option("--out", o.out)->required();
    add_format(refresh, o);
    refresh->callback([&o] {
      auto [share, party] = fsskit::fpcds_share_decode(read_artifact(o.key_file));
      fsskit::FpcdsShare next = fsskit::fpcds_refresh(share, party);
      write_artifact(o.out, fsskit::fpcds_share_encode(next, party), o.format);
    });
  }

  // fss
  CLI::App* fss = app.add_subcommand("fss", "point-condition FSS compiler");
  fss->require_subcommand(1);
  {
    CLI::App* gen = fss->add_subcommand("gen", "generate keys");
    gen->add_option("--group", o.group)->required();
    gen->add_option("--a", o.a)->required();
    gen->add_option("--b", o.b)->required();
    gen->add_option("--refresh-key", o.refresh_key);
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--out", o.out)->required();
    add_format(gen, o);
    gen->callback([&o] {
      fsskit::AbelianGroup group = parse_group(o.group);
      fsskit::SeededRng rng(parse_seed(o.seed));
      Bytes rk = o.refresh_key.empty() ? Bytes{}
                                       : fsskit::from_hex(o.refresh_key);
      auto keys = fsskit::fss_keygen(group, o.a, o.b, rk, rng);
      for (const fsskit::FssKey& k : keys)
        write_artifact(o.out + ".key" + std::to_string(k.party) +
                           ext_for(o.format),
                       fsskit::fss_key_encode(k), o.format);
    });

    CLI::App* eval = fss->add_subcommand("eval", "evaluate one key");
    eval->add_option("--key", o.key_file)->required();
    eval->add_option("--input", o.input)->required();
    eval->add_option("--out", o.out)->required();
    add_format(eval, o);
    eval->callback([&o] {
      fsskit::FssKey key = fsskit::fss_key_decode(read_artifact(o.key_file));
      write_artifact(o.out, fmsg_encode(fsskit::fss_eval_share(key, o.input)),
                     o.format);
    });

    CLI::App* rec = fss->add_subcommand("rec", "combine the two messages");
    rec->add_option("--m1", o.m1)->required();
    rec->add_option("--m2", o.m2)->required();
    rec->callback([&o] {
      fsskit::FssOutputBit bit =
          fsskit::fss_rec(fmsg_decode(read_artifact(o.m1)),
                          fmsg_decode(read_artifact(o.m2)));
      std::cout << bit.value << "\n";
    });
  }

  // poly
  CLI::App* poly = app.add_subcommand("poly", "threshold polynomial FSS");
  poly->require_subcommand(1);
  {
    CLI::App* gen = poly->add_subcommand("gen", "generate keys");
    gen->add_option("--q", o.q)->required();
    gen->add_option("--coeffs", o.coeffs, "low degree first, e.g. 1,3,2")
        ->required();
    gen->add_option("--degree-bound", o.degree_bound,
                    "defaults to len(coeffs)-1");
    gen->add_option("--t", o.t)->required();
    gen->add_option("--k", o.k)->required();
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--out", o.out)->required();
    add_format(gen, o);
    gen->callback([&o] {
      fsskit::FieldParams field(o.q);
      std::vector<fsskit::FieldElement> coeffs;
      for (uint64_t c : parse_u64_list(o.coeffs))
        coeffs.push_back(fsskit::FieldElement(c, field));
      uint32_t bound = o.degree_bound
                           ? o.degree_bound
                           : static_cast<uint32_t>(coeffs.size()) - 1;
      fsskit::PolyFssParams params{field, bound, o.t, o.k};
      fsskit::SeededRng rng(parse_seed(o.seed));
      auto keys = fsskit::poly_fss_gen(fsskit::FieldPolynomial(coeffs), params,
                                       rng);
      for (const fsskit::PolyFssKey& k : keys)
        write_artifact(o.out + ".key" + std::to_string(k.party) +
                           ext_for(o.format),
                       fsskit::poly_fss_key_encode(params, k), o.format);
    });

    CLI::App* eval = poly->add_subcommand("eval", "evaluate one key");
    eval->add_option("--key", o.key_file)->required();
    eval->add_option("--x", o.x_int)->required();
    eval->add_option("--out", o.out)->required();
    add_format(eval, o);
    eval->callback([&o] {
      auto [params, key] =
          fsskit::poly_fss_key_decode(read_artifact(o.key_file));
      fsskit::PolyEvalShare s = fsskit::poly_fss_eval(
          params, key, fsskit::FieldElement(o.x_int, params.field));
      write_artifact(o.out, fsskit::poly_fss_share_encode(params, s), o.format);
    });

    CLI::App* rec = poly->add_subcommand("rec", "reconstruct p(x)");
    rec->add_option("--share", o.share_files)->required()->expected(-1);
    rec->callback([&o] {
      std::vector<fsskit::PolyEvalShare> shares;
      std::optional<fsskit::PolyFssParams> params;
      for (const std::string& f : o.share_files) {
        auto [p, s] = fsskit::poly_fss_share_decode(read_artifact(f));
        params = p;
        shares.push_back(s);
      }
      if (!params) throw fsskit::Error("no shares given");
      std::cout << fsskit::poly_fss_rec(*params, std::move(shares)).value()
                << "\n";
    });
  }

  // experiment
  CLI::App* exp = app.add_subcommand("experiment", "run a distinguishability "
                                                   "experiment");
  exp->add_option("--spec", o.spec_path)->required();
  exp->add_flag("--json", o.json_report, "also print the JSON report");
  exp->callback([&o] {
    Bytes raw = read_file(o.spec_path);
    json doc = json::parse(std::string(raw.begin(), raw.end()));
    fsskit::ExperimentSpec spec = fsskit::ExperimentSpec::from_json(doc);
    fsskit::ExperimentReport report = fsskit::run_experiment(spec);
    std::cout << report.table();
    if (o.json_report) std::cout << report.to_json().dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
