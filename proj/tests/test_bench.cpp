// Copyright (c) 2026 CryptRISC Simulator Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cryptrisc/bench.hpp"
#include "reference/ref_aes.hpp"
#include "reference/ref_sm4.hpp"

using namespace cryptrisc;

namespace {

std::string hex(const std::vector<std::uint8_t>& v) {
  static const char* d = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : v) {
    s += d[b >> 4];
    s += d[b & 0xF];
  }
  return s;
}

std::vector<std::uint8_t> rand_bytes(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint8_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint8_t>(splitmix64(seed + i) & 0xFF);
  }
  return v;
}

}  // namespace

TEST_CASE("benchmark names") {
  const auto names = benchmark_names();
  REQUIRE(names == std::vector<std::string>{"aes128", "aes192", "aes256",
                                            "sha256", "sha512", "sm3", "sm4"});
}

TEST_CASE("make_benchmark input validation") {
  const std::vector<std::uint8_t> blk(16, 0);
  REQUIRE_THROWS_AS(make_benchmark("aes128", rand_bytes(15, 1), blk),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("aes192", rand_bytes(16, 1), blk),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("aes256", rand_bytes(32, 1),
                                   rand_bytes(15, 2)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("sm4", rand_bytes(8, 1), blk),
                    std::invalid_argument);
  // Hashes take no key and (in this single-block harness) a bounded message.
  REQUIRE_THROWS_AS(make_benchmark("sha256", {0x00}, blk),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("sha256", {}, rand_bytes(56, 3)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("sm3", {}, rand_bytes(56, 3)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("sha512", {}, rand_bytes(112, 3)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_benchmark("blowfish", {}, blk), std::invalid_argument);
}

TEST_CASE("default benchmarks reproduce published vectors") {
  const std::map<std::string, std::string> want = {
      {"aes128", "69c4e0d86a7b0430d8cdb78070b4c55a"},
      {"aes192", "dda97ca4864cdfe06eaf70a0ec0d7191"},
      {"aes256", "8ea2b7ca516745bfeafc49904b496089"},
      {"sha256",
       "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"},
      {"sha512",
       "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
       "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f"},
      {"sm3",
       "66c7f0f462eeedd9d1f2d46bdc10e4e24167c4875cf2f7a2297da02b8f4ba8e0"},
      {"sm4", "681edf34d206965e86b3e94f536e4246"},
  };
  for (const auto& [name, expect] : want) {
    const BenchCase bc = default_benchmark(name);
    REQUIRE(hex(bc.expected) == expect);
    // run_benchmark revalidates both variants against the expected output
    // inside the simulator and throws on any byte mismatch.
    const BenchResult r = run_benchmark(bc);
    REQUIRE(hex(r.output) == expect);
    REQUIRE(r.baseline_cycles > r.accel_cycles);
  }
}

TEST_CASE("default benchmark cycle counts are stable") {
  // The programs are straight-line and the model is deterministic, so these
  // are exact pins; any drift is a real change to codegen or cycle costs.
  const std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> want = {
      {"aes128", {917, 94}},   {"aes192", {1093, 110}}, {"aes256", {1269, 126}},
      {"sha256", {4544, 1404}}, {"sha512", {6064, 1776}}, {"sm3", {5424, 1928}},
      {"sm4", {820, 302}},
  };
  double min_speedup = 1e9;
  std::string min_name;
  for (const auto& [name, cycles] : want) {
    const BenchResult r = run_benchmark(default_benchmark(name));
    CAPTURE(name);
    REQUIRE(r.baseline_cycles == cycles.first);
    REQUIRE(r.accel_cycles == cycles.second);
    REQUIRE(r.speedup == Catch::Approx(static_cast<double>(cycles.first) /
                                       static_cast<double>(cycles.second)));
    REQUIRE(r.speedup > 1.0);
    if (r.speedup < min_speedup) {
      min_speedup = r.speedup;
      min_name = name;
    }
  }
  REQUIRE(min_name == "sm4");
}

TEST_CASE("masking neither changes outputs nor costs cycles") {
  MaskPolicy policy;
  policy.shares_gf2 = 2;
  policy.shares_gf2n = 3;
  policy.shares_z2n = 2;
  for (const std::string name : {"aes128", "sm4", "sha256", "sm3"}) {
    const BenchCase bc = default_benchmark(name);
    const BenchResult plain = run_benchmark(bc);
    const BenchResult masked = run_benchmark(bc, true, policy, 77);
    CAPTURE(name);
    REQUIRE(masked.output == plain.output);
    REQUIRE(masked.baseline_cycles == plain.baseline_cycles);
    REQUIRE(masked.accel_cycles == plain.accel_cycles);
  }
}

TEST_CASE("benchmarks accept arbitrary keys and messages") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const auto key = rand_bytes(16, 5000 + 10 * s);
    const auto pt = rand_bytes(16, 5001 + 10 * s);

    const BenchCase aes = make_benchmark("aes128", key, pt);
    std::uint8_t want[16];
    oracle::aes_encrypt_block(key.data(), 16, pt.data(), want);
    REQUIRE(aes.expected == std::vector<std::uint8_t>(want, want + 16));
    REQUIRE(run_benchmark(aes).output == aes.expected);

    const BenchCase sm4c = make_benchmark("sm4", key, pt);
    oracle::sm4_encrypt_block(key.data(), pt.data(), want);
    REQUIRE(sm4c.expected == std::vector<std::uint8_t>(want, want + 16));
    REQUIRE(run_benchmark(sm4c).output == sm4c.expected);
  }

  // Padding boundaries: empty message and the largest single-block messages.
  REQUIRE_NOTHROW(run_benchmark(make_benchmark("sha256", {}, {})));
  REQUIRE_NOTHROW(run_benchmark(make_benchmark("sm3", {}, {})));
  REQUIRE_NOTHROW(run_benchmark(make_benchmark("sha512", {}, {})));
  REQUIRE_NOTHROW(
      run_benchmark(make_benchmark("sha256", {}, rand_bytes(55, 900))));
  REQUIRE_NOTHROW(run_benchmark(make_benchmark("sm3", {}, rand_bytes(55, 901))));
  REQUIRE_NOTHROW(
      run_benchmark(make_benchmark("sha512", {}, rand_bytes(111, 902))));

  // Cycle counts are input independent: the accelerated AES-128 path costs
  // the same for random material as for the standard vector.
  const BenchResult ref = run_benchmark(default_benchmark("aes128"));
  const BenchResult rnd = run_benchmark(
      make_benchmark("aes128", rand_bytes(16, 42), rand_bytes(16, 43)));
  REQUIRE(ref.accel_cycles == rnd.accel_cycles);
  REQUIRE(ref.baseline_cycles == rnd.baseline_cycles);
}
