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

// Finite-field and modular-ring arithmetic underlying the masking engine:
// GF(2^8) with the AES reduction polynomial, and the rings Z/2^32, Z/2^64.
// GF(2) values are plain machine words; XOR/AND/rotate on Word64 are the
// field operations and need no dedicated type.

#include <array>
#include <cstdint>
#include <stdexcept>

namespace cryptrisc {

using Word64 = std::uint64_t;

// x^8 + x^4 + x^3 + x + 1
inline constexpr unsigned kGfPoly = 0x11B;

struct FieldElement8 {
  std::uint8_t value = 0;
};

struct RingElement {
  Word64 value = 0;
  unsigned width = 64;  // 32 or 64
};

// Double-and-reduce product in GF(2^8).
constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t acc = 0;
  std::uint8_t x = a;
  for (int i = 0; i < 8; ++i) {
    if ((b >> i) & 1u) acc ^= x;
    std::uint8_t const carry = x & 0x80u;
    x = static_cast<std::uint8_t>(x << 1);
    if (carry) x ^= static_cast<std::uint8_t>(kGfPoly & 0xFFu);
  }
  return acc;
}

namespace detail {

// a^254 = a^-1 for a != 0 (Fermat in GF(2^8)*).
constexpr std::uint8_t gf_pow254(std::uint8_t a) {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  for (unsigned e = 254; e != 0; e >>= 1) {
    if (e & 1u) result = gf_mul(result, base);
    base = gf_mul(base, base);
  }
  return result;
}

inline constexpr auto kGfInvTable = [] {
  std::array<std::uint8_t, 256> t{};
  for (unsigned i = 1; i < 256; ++i) {
    t[i] = gf_pow254(static_cast<std::uint8_t>(i));
  }
  return t;
}();

}  // namespace detail

inline std::uint8_t gf_inv(std::uint8_t a) {
  if (a == 0) throw std::domain_error("gf_inv: zero has no inverse");
  return detail::kGfInvTable[a];
}

inline FieldElement8 gf_mul(FieldElement8 a, FieldElement8 b) {
  return {gf_mul(a.value, b.value)};
}
inline FieldElement8 gf_inv(FieldElement8 a) { return {gf_inv(a.value)}; }

namespace detail {

constexpr Word64 ring_mask(unsigned width) {
  return width == 64 ? ~Word64{0} : ((Word64{1} << width) - 1);
}

inline void check_ring(const RingElement& a, const RingElement& b) {
  if (a.width != b.width) {
    throw std::invalid_argument("ring op: width mismatch");
  }
  if (a.width != 32 && a.width != 64) {
    throw std::invalid_argument("ring op: width must be 32 or 64");
  }
}

}  // namespace detail

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
  detail::check_ring(a, b);
  return {(a.value + b.value) & detail::ring_mask(a.width), a.width};
}

inline RingElement ring_sub(const RingElement& a, const RingElement& b) {
  detail::check_ring(a, b);
  return {(a.value - b.value) & detail::ring_mask(a.width), a.width};
}

}  // namespace cryptrisc
