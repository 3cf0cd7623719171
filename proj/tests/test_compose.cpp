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

#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "cryptrisc/compose.hpp"
#include "reference/ref_aes.hpp"
#include "reference/ref_sha2.hpp"
#include "reference/ref_sm3.hpp"
#include "reference/ref_sm4.hpp"

namespace {

std::string hex(const std::uint8_t* p, std::size_t n) {
  static const char* d = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(d[p[i] >> 4]);
    s.push_back(d[p[i] & 0xF]);
  }
  return s;
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng());
  return v;
}

}  // namespace

TEST_CASE("AES known answers across key sizes") {
  std::uint8_t key[32], pt[16], ct[16];
  for (int i = 0; i < 32; ++i) key[i] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < 16; ++i) pt[i] = static_cast<std::uint8_t>(i * 0x11);
  aes_encrypt_block(cryptrisc::aes_key_schedule(key, 16), pt, ct);
  REQUIRE(hex(ct, 16) == "69c4e0d86a7b0430d8cdb78070b4c55a");
  aes_encrypt_block(cryptrisc::aes_key_schedule(key, 24), pt, ct);
  REQUIRE(hex(ct, 16) == "dda97ca4864cdfe06eaf70a0ec0d7191");
  aes_encrypt_block(cryptrisc::aes_key_schedule(key, 32), pt, ct);
  REQUIRE(hex(ct, 16) == "8ea2b7ca516745bfeafc49904b496089");
}

TEST_CASE("AES schedule shape and bad key sizes") {
  std::uint8_t key[32] = {};
  REQUIRE(cryptrisc::aes_key_schedule(key, 16).rk.size() == 22);
  REQUIRE(cryptrisc::aes_key_schedule(key, 16).rounds == 10);
  REQUIRE(cryptrisc::aes_key_schedule(key, 24).rk.size() == 26);
  REQUIRE(cryptrisc::aes_key_schedule(key, 24).rounds == 12);
  REQUIRE(cryptrisc::aes_key_schedule(key, 32).rk.size() == 30);
  REQUIRE(cryptrisc::aes_key_schedule(key, 32).rounds == 14);
  REQUIRE_THROWS_AS(cryptrisc::aes_key_schedule(key, 20), std::invalid_argument);
  REQUIRE_THROWS_AS(cryptrisc::aes_key_schedule(key, 0), std::invalid_argument);
}

TEST_CASE("AES agrees with the byte-matrix reference on random inputs") {
  std::mt19937_64 rng(0xC0FFEE);
  for (std::size_t klen : {16u, 24u, 32u}) {
    for (int i = 0; i < 40; ++i) {
      const auto key = random_bytes(rng, klen);
      const auto pt = random_bytes(rng, 16);
      std::uint8_t got[16], want[16], back[16];
      const auto sched = cryptrisc::aes_key_schedule(key.data(), klen);
      aes_encrypt_block(sched, pt.data(), got);
      oracle::aes_encrypt_block(key.data(), static_cast<int>(klen), pt.data(),
                                want);
      REQUIRE(std::memcmp(got, want, 16) == 0);
      aes_decrypt_block(sched, got, back);
      REQUIRE(std::memcmp(back, pt.data(), 16) == 0);
    }
  }
}

TEST_CASE("SHA-256 known answers and multi-block messages") {
  std::uint8_t d[32];
  cryptrisc::sha256(nullptr, 0, d);
  REQUIRE(hex(d, 32) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  const std::uint8_t abc[3] = {'a', 'b', 'c'};
  cryptrisc::sha256(abc, 3, d);
  REQUIRE(hex(d, 32) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // two-block boundary message from the standard
  const std::string m2 = "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq";
  cryptrisc::sha256(reinterpret_cast<const std::uint8_t*>(m2.data()), m2.size(), d);
  REQUIRE(hex(d, 32) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("SHA-512 known answers") {
  std::uint8_t d[64];
  const std::uint8_t abc[3] = {'a', 'b', 'c'};
  cryptrisc::sha512(abc, 3, d);
  REQUIRE(hex(d, 64) ==
          "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
          "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f");
  cryptrisc::sha512(nullptr, 0, d);
  REQUIRE(hex(d, 64) ==
          "cf83e1357eefb8bdf1542850d66d8007d620e4050b5715dc83f4a921d36ce9ce"
          "47d0d13c5d85f2b0ff8318d2877eec2f63b931bd47417a81a538327af927da3e");
}

TEST_CASE("SM3 known answers") {
  std::uint8_t d[32];
  const std::uint8_t abc[3] = {'a', 'b', 'c'};
  cryptrisc::sm3(abc, 3, d);
  REQUIRE(hex(d, 32) ==
          "66c7f0f462eeedd9d1f2d46bdc10e4e24167c4875cf2f7a2297da02b8f4ba8e0");
  // 64-byte message "abcd" x16 from the standard's second example
  std::vector<std::uint8_t> m;
  for (int i = 0; i < 16; ++i) {
    for (char ch : {'a', 'b', 'c', 'd'}) m.push_back(static_cast<std::uint8_t>(ch));
  }
  cryptrisc::sm3(m.data(), m.size(), d);
  REQUIRE(hex(d, 32) ==
          "debe9ff92275b8a138604889c18e5a4d6fdb70e5387e5765293dcba39c0c5732");
}

TEST_CASE("hash functions agree with the references on random lengths") {
  std::mt19937_64 rng(0xFACE);
  for (int i = 0; i < 40; ++i) {
    const std::size_t len = static_cast<std::size_t>(rng() % 300);
    const auto msg = random_bytes(rng, len);
    std::uint8_t got32[32], got64[64];

    cryptrisc::sha256(msg.data(), len, got32);
    REQUIRE(std::memcmp(got32, oracle::sha256(msg.data(), len).data(), 32) == 0);
    cryptrisc::sha512(msg.data(), len, got64);
    REQUIRE(std::memcmp(got64, oracle::sha512(msg.data(), len).data(), 64) == 0);
    cryptrisc::sm3(msg.data(), len, got32);
    REQUIRE(std::memcmp(got32, oracle::sm3(msg.data(), len).data(), 32) == 0);
  }
}

TEST_CASE("SM4 known answer and self-inverse") {
  const std::uint8_t k[16] = {0x01, 0x23, 0x45, 0x67, 0x89, 0xab, 0xcd, 0xef,
                              0xfe, 0xdc, 0xba, 0x98, 0x76, 0x54, 0x32, 0x10};
  std::uint8_t ct[16], back[16];
  const auto rk = cryptrisc::sm4_key_schedule(k);
  cryptrisc::sm4_encrypt_block(rk, k, ct);
  REQUIRE(hex(ct, 16) == "681edf34d206965e86b3e94f536e4246");
  cryptrisc::sm4_crypt_block(rk, true, ct, back);
  REQUIRE(std::memcmp(back, k, 16) == 0);
}

TEST_CASE("SM4 agrees with the reference on random inputs") {
  std::mt19937_64 rng(0xBEEF);
  for (int i = 0; i < 50; ++i) {
    const auto key = random_bytes(rng, 16);
    const auto pt = random_bytes(rng, 16);
    std::uint8_t got[16], want[16], back[16];
    const auto rk = cryptrisc::sm4_key_schedule(key.data());
    cryptrisc::sm4_encrypt_block(rk, pt.data(), got);
    oracle::sm4_encrypt_block(key.data(), pt.data(), want);
    REQUIRE(std::memcmp(got, want, 16) == 0);
    cryptrisc::sm4_crypt_block(rk, true, got, back);
    REQUIRE(std::memcmp(back, pt.data(), 16) == 0);
  }
}

TEST_CASE("round constant tables match the references") {
  for (int i = 0; i < 64; ++i) REQUIRE(cryptrisc::kSha256K[i] == oracle::detail::kSha256K[i]);
  for (int i = 0; i < 80; ++i) REQUIRE(cryptrisc::kSha512K[i] == oracle::detail::kSha512K[i]);
  for (int i = 0; i < 4; ++i) REQUIRE(cryptrisc::kSm4Fk[i] == oracle::detail::kSm4Fk[i]);
  for (int i = 0; i < 32; ++i) REQUIRE(cryptrisc::kSm4Ck[i] == oracle::detail::sm4_ck(i));
}
