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

#pragma once

// Reference SM3 hash (GB/T 32905-2016) for the test suite.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

namespace detail {

inline std::uint32_t rotl32(std::uint32_t x, unsigned n) {
  n %= 32;
  return n == 0 ? x : ((x << n) | (x >> (32 - n)));
}

inline std::uint32_t sm3_p0(std::uint32_t x) {
  return x ^ rotl32(x, 9) ^ rotl32(x, 17);
}
inline std::uint32_t sm3_p1(std::uint32_t x) {
  return x ^ rotl32(x, 15) ^ rotl32(x, 23);
}
inline std::uint32_t sm3_ff(int j, std::uint32_t x, std::uint32_t y,
                            std::uint32_t z) {
  return j < 16 ? (x ^ y ^ z) : ((x & y) | (x & z) | (y & z));
}
inline std::uint32_t sm3_gg(int j, std::uint32_t x, std::uint32_t y,
                            std::uint32_t z) {
  return j < 16 ? (x ^ y ^ z) : ((x & y) | (~x & z));
}

}  // namespace detail

inline std::array<std::uint8_t, 32> sm3(const std::uint8_t* msg,
                                        std::size_t len) {
  using namespace detail;
  std::uint32_t v[8] = {0x7380166f, 0x4914b2b9, 0x172442d7, 0xda8a0600,
                        0xa96f30bc, 0x163138aa, 0xe38dee4d, 0xb0fb0e4e};
  std::vector<std::uint8_t> padded(msg, msg + len);
  padded.push_back(0x80);
  while (padded.size() % 64 != 56) padded.push_back(0);
  std::uint64_t bitlen = static_cast<std::uint64_t>(len) * 8;
  for (int i = 7; i >= 0; --i) padded.push_back((bitlen >> (8 * i)) & 0xff);

  for (std::size_t off = 0; off < padded.size(); off += 64) {
    std::uint32_t w[68];
    std::uint32_t wp[64];
    for (int j = 0; j < 16; ++j) {
      w[j] = (std::uint32_t(padded[off + 4 * j]) << 24) |
             (std::uint32_t(padded[off + 4 * j + 1]) << 16) |
             (std::uint32_t(padded[off + 4 * j + 2]) << 8) |
             std::uint32_t(padded[off + 4 * j + 3]);
    }
    for (int j = 16; j < 68; ++j) {
      w[j] = sm3_p1(w[j - 16] ^ w[j - 9] ^ rotl32(w[j - 3], 15)) ^
             rotl32(w[j - 13], 7) ^ w[j - 6];
    }
    for (int j = 0; j < 64; ++j) wp[j] = w[j] ^ w[j + 4];

    std::uint32_t a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5],
                  g = v[6], h = v[7];
    for (int j = 0; j < 64; ++j) {
      std::uint32_t tj = j < 16 ? 0x79cc4519u : 0x7a879d8au;
      std::uint32_t ss1 = rotl32(rotl32(a, 12) + e + rotl32(tj, j), 7);
      std::uint32_t ss2 = ss1 ^ rotl32(a, 12);
      std::uint32_t tt1 = sm3_ff(j, a, b, c) + d + ss2 + wp[j];
      std::uint32_t tt2 = sm3_gg(j, e, f, g) + h + ss1 + w[j];
      d = c;
      c = rotl32(b, 9);
      b = a;
      a = tt1;
      h = g;
      g = rotl32(f, 19);
      f = e;
      e = sm3_p0(tt2);
    }
    v[0] ^= a; v[1] ^= b; v[2] ^= c; v[3] ^= d;
    v[4] ^= e; v[5] ^= f; v[6] ^= g; v[7] ^= h;
  }
  std::array<std::uint8_t, 32> out{};
  for (int i = 0; i < 8; ++i) {
    for (int b = 0; b < 4; ++b) {
      out[4 * i + b] = (v[i] >> (24 - 8 * b)) & 0xff;
    }
  }
  return out;
}

}  // namespace oracle
