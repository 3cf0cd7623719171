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

// Reference GF(2^8) arithmetic used only by the test suite. Written as
// schoolbook carry-less multiplication followed by explicit polynomial long
// division, so it shares no structure with the library's implementation.

#include <cstdint>
#include <stdexcept>

namespace oracle {

// Product of two GF(2)[x] polynomials of degree < 8 (no reduction).
inline std::uint32_t clmul8(std::uint8_t a, std::uint8_t b) {
  std::uint32_t acc = 0;
  for (int i = 0; i < 8; ++i) {
    if ((a >> i) & 1) {
      acc ^= static_cast<std::uint32_t>(b) << i;
    }
  }
  return acc;
}

// Remainder of p modulo the AES polynomial x^8+x^4+x^3+x+1 (0x11B), by long
// division from the top bit down.
inline std::uint8_t reduce_aes(std::uint32_t p) {
  for (int bit = 31; bit >= 8; --bit) {
    if ((p >> bit) & 1u) {
      p ^= 0x11Bu << (bit - 8);
    }
  }
  return static_cast<std::uint8_t>(p);
}

inline std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  return reduce_aes(clmul8(a, b));
}

// Multiplicative inverse by exhaustive search; 0 has none.
inline std::uint8_t gf_inv(std::uint8_t a) {
  if (a == 0) {
    throw std::domain_error("gf_inv: 0 has no inverse");
  }
  for (unsigned c = 1; c < 256; ++c) {
    if (gf_mul(a, static_cast<std::uint8_t>(c)) == 1) {
      return static_cast<std::uint8_t>(c);
    }
  }
  throw std::logic_error("gf_inv: no inverse found (unreachable)");
}

// Forward/inverse MixColumns on one 4-byte column, as the circulant matrix
// product over GF(2^8).
inline void mix_column(const std::uint8_t in[4], std::uint8_t out[4]) {
  static const std::uint8_t m[4][4] = {
      {2, 3, 1, 1}, {1, 2, 3, 1}, {1, 1, 2, 3}, {3, 1, 1, 2}};
  for (int r = 0; r < 4; ++r) {
    std::uint8_t acc = 0;
    for (int c = 0; c < 4; ++c) {
      acc ^= gf_mul(m[r][c], in[c]);
    }
    out[r] = acc;
  }
}

inline void inv_mix_column(const std::uint8_t in[4], std::uint8_t out[4]) {
  static const std::uint8_t m[4][4] = {{0x0E, 0x0B, 0x0D, 0x09},
                                       {0x09, 0x0E, 0x0B, 0x0D},
                                       {0x0D, 0x09, 0x0E, 0x0B},
                                       {0x0B, 0x0D, 0x09, 0x0E}};
  for (int r = 0; r < 4; ++r) {
    std::uint8_t acc = 0;
    for (int c = 0; c < 4; ++c) {
      acc ^= gf_mul(m[r][c], in[c]);
    }
    out[r] = acc;
  }
}

}  // namespace oracle
