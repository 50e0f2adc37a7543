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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "fsskit/bytes.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kSeed =
    "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";

struct CliResult {
  int status;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "fsskit-cli-test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string(FSSKIT_CLI_PATH) + " " + args + " > " +
                    out_file.string() + " 2> " +
                    (work_dir() / "stderr.txt").string();
  int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

std::string path(const std::string& name) {
  return (work_dir() / name).string();
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("poly gen/eval/rec round trips through files") {
  CliResult gen = run_cli("poly gen --q 11 --coeffs 1,3,2 --t 2 --k 3 --seed " +
                          kSeed + " --out " + path("poly"));
  REQUIRE(gen.status == 0);
  for (int i = 1; i <= 3; ++i) {
    CliResult eval = run_cli("poly eval --key " + path("poly") + ".key" +
                             std::to_string(i) + ".bin --x 2 --out " +
                             path("poly.share" + std::to_string(i)));
    REQUIRE(eval.status == 0);
  }
  // p(2) = 1 + 6 + 8 = 15 = 4 mod 11, from any two shares.
  CliResult rec = run_cli("poly rec --share " + path("poly.share1") + " " +
                          path("poly.share3"));
  REQUIRE(rec.status == 0);
  CHECK(rec.out == "4\n");
}

TEST_CASE("randomized commands require an explicit seed") {
  CliResult r = run_cli("poly gen --q 11 --coeffs 1 --t 1 --k 1 --out " +
                        path("noseed"));
  CHECK(r.status == 2);
  CliResult bad = run_cli("poly gen --q 11 --coeffs 1 --t 1 --k 1 --seed abcd "
                          "--out " + path("shortseed"));
  CHECK(bad.status == 2);
}

TEST_CASE("json-hex artifacts decode identically to binary") {
  REQUIRE(run_cli("poly gen --q 11 --coeffs 1,3,2 --t 2 --k 3 --seed " + kSeed +
                  " --out " + path("pj") + " --format json-hex")
              .status == 0);
  // The concatenated hex fields are exactly the binary encoding.
  nlohmann::json doc = nlohmann::json::parse(slurp(path("pj.key1.json")));
  CHECK(doc.at("magic") == "PFS1");
  std::string joined;
  for (const auto& f : doc.at("fields"))
    joined += f.at(1).get<std::string>();
  std::string bin = slurp(path("poly.key1.bin"));
  CHECK(fsskit::to_hex(fsskit::Bytes(bin.begin(), bin.end())) == joined);

  // And the toolchain consumes either format interchangeably.
  REQUIRE(run_cli("poly eval --key " + path("pj.key1.json") +
                  " --x 2 --out " + path("pj.share1") + " --format json-hex")
              .status == 0);
  REQUIRE(run_cli("poly eval --key " + path("pj.key2.json") +
                  " --x 2 --out " + path("pj.share2"))
              .status == 0);
  CliResult rec =
      run_cli("poly rec --share " + path("pj.share1") + " " + path("pj.share2"));
  REQUIRE(rec.status == 0);
  CHECK(rec.out == "4\n");
}

TEST_CASE("fpcds gen/send/carol discloses only on matching inputs") {
  REQUIRE(run_cli("fpcds gen --group zq:97 --a 01 --b 10 --s 42 --seed " +
                  kSeed + " --out " + path("cds"))
              .status == 0);
  REQUIRE(run_cli("fpcds send --share " + path("cds.share1.bin") +
                  " --input 01 --out " + path("cds.m1"))
              .status == 0);
  REQUIRE(run_cli("fpcds send --share " + path("cds.share2.bin") +
                  " --input 10 --out " + path("cds.m2"))
              .status == 0);
  CliResult hit = run_cli("fpcds carol --m1 " + path("cds.m1") + " --m2 " +
                          path("cds.m2"));
  REQUIRE(hit.status == 0);
  CHECK(hit.out == "42\n");

  REQUIRE(run_cli("fpcds send --share " + path("cds.share2.bin") +
                  " --input 11 --out " + path("cds.m2bad"))
              .status == 0);
  CliResult miss = run_cli("fpcds carol --m1 " + path("cds.m1") + " --m2 " +
                           path("cds.m2bad"));
  REQUIRE(miss.status == 0);
  CHECK(miss.out == "reject\n");
}

TEST_CASE("fpcds refresh keeps the share usable") {
  REQUIRE(run_cli("fpcds gen --group xor:8 --a 1 --b 1 --s 7 --refresh-key "
                  "aabbccdd --seed " + kSeed + " --out " + path("rf"))
              .status == 0);
  REQUIRE(run_cli("fpcds refresh --share " + path("rf.share1.bin") +
                  " --out " + path("rf.share1r"))
              .status == 0);
  REQUIRE(run_cli("fpcds refresh --share " + path("rf.share2.bin") +
                  " --out " + path("rf.share2r"))
              .status == 0);
  REQUIRE(run_cli("fpcds send --share " + path("rf.share1r") +
                  " --input 1 --out " + path("rf.m1"))
              .status == 0);
  REQUIRE(run_cli("fpcds send --share " + path("rf.share2r") +
                  " --input 1 --out " + path("rf.m2"))
              .status == 0);
  CliResult out = run_cli("fpcds carol --m1 " + path("rf.m1") + " --m2 " +
                          path("rf.m2"));
  REQUIRE(out.status == 0);
  CHECK(out.out == "7\n");
}

TEST_CASE("fss eval/rec computes the point predicate bit") {
  REQUIRE(run_cli("fss gen --group xor:4 --a 01 --b 01 --seed " + kSeed +
                  " --out " + path("fss"))
              .status == 0);
  auto bit_for = [&](const std::string& c) {
    REQUIRE(run_cli("fss eval --key " + path("fss.key1.bin") + " --input " + c +
                    " --out " + path("fss.m1"))
                .status == 0);
    REQUIRE(run_cli("fss eval --key " + path("fss.key2.bin") + " --input " + c +
                    " --out " + path("fss.m2"))
                .status == 0);
    CliResult rec = run_cli("fss rec --m1 " + path("fss.m1") + " --m2 " +
                            path("fss.m2"));
    REQUIRE(rec.status == 0);
    return rec.out;
  };
  CHECK(bit_for("01") == "1\n");
  CHECK(bit_for("11") == "0\n");
}

TEST_CASE("dpf-nn gen/eval/rec recovers alpha at the point") {
  REQUIRE(run_cli("dpf-nn gen --l 2 --lambda 2 --n 2 --q 1009 --a 10 "
                  "--alpha 123 --seed " + kSeed + " --out " + path("nn"))
              .status == 0);
  for (int i = 1; i <= 2; ++i)
    REQUIRE(run_cli("dpf-nn eval --key " + path("nn.key" + std::to_string(i)) +
                    ".bin --x 10 --r beef --out " +
                    path("nn.share" + std::to_string(i)))
                .status == 0);
  CliResult rec = run_cli("dpf-nn rec --share " + path("nn.share1") + " " +
                          path("nn.share2"));
  REQUIRE(rec.status == 0);
  CHECK(rec.out == "123\n");

  for (int i = 1; i <= 2; ++i)
    REQUIRE(run_cli("dpf-nn eval --key " + path("nn.key" + std::to_string(i)) +
                    ".bin --x 01 --r beef --out " +
                    path("nn.off" + std::to_string(i)))
                .status == 0);
  CliResult off = run_cli("dpf-nn rec --share " + path("nn.off1") + " " +
                          path("nn.off2"));
  REQUIRE(off.status == 0);
  CHECK(off.out == "0\n");
}

TEST_CASE("dpf-tn rec works from any t shares") {
  REQUIRE(run_cli("dpf-tn gen --l 1 --lambda 1 --n 3 --t 2 --q 101 --a 1 "
                  "--alpha 55 --seed " + kSeed + " --out " + path("tn"))
              .status == 0);
  for (int i = 1; i <= 3; ++i)
    REQUIRE(run_cli("dpf-tn eval --key " + path("tn.key" + std::to_string(i)) +
                    ".bin --x 1 --r 0102 --out " +
                    path("tn.share" + std::to_string(i)))
                .status == 0);
  CliResult rec = run_cli("dpf-tn rec --share " + path("tn.share2") + " " +
                          path("tn.share3"));
  REQUIRE(rec.status == 0);
  CHECK(rec.out == "55\n");
  CliResult all = run_cli("dpf-tn rec --verify-extras --share " +
                          path("tn.share1") + " " + path("tn.share2") + " " +
                          path("tn.share3"));
  REQUIRE(all.status == 0);
  CHECK(all.out == "55\n");
}

TEST_CASE("experiment subcommand reports a pass verdict") {
  nlohmann::json spec{
      {"scheme", "shamir"},
      {"hyp0", {{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 0}}},
      {"hyp1", {{"q", 5}, {"t", 2}, {"n", 3}, {"secret", 3}}},
      {"selector", "share:1"},
      {"test", "exact-multiset"}};
  std::ofstream(path("exp.json")) << spec.dump(2);
  CliResult r = run_cli("experiment --spec " + path("exp.json") + " --json");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("result     pass") != std::string::npos);
  CHECK(r.out.find("\"advantage\": 0.0") != std::string::npos);
}

TEST_CASE("unknown input files produce a runtime error exit") {
  CliResult r = run_cli("poly rec --share " + path("missing.bin"));
  CHECK(r.status == 1);
}
