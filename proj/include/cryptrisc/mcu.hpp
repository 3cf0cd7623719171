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

// Masking Control Unit: applies the mask scheme selected by the decode-stage
// field tag to the operands and result of a crypto instruction. The masked
// forms are what the power model observes on the operand/result buses; the
// architectural result written back is always the recombined raw value, so
// masking never changes program behaviour or timing.
//
// Mask randomness comes from a degree-64 Fibonacci LFSR
// (x^64 + x^63 + x^61 + x^60 + 1, a maximal-length polynomial), stepped 64
// times per drawn word. Seeds are diffused through one splitmix64 round so
// that small integer seeds do not produce the degenerate low-weight start-up
// sequence of a bare LFSR.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cryptrisc/fdl.hpp"
#include "cryptrisc/fields.hpp"
#include "cryptrisc/isa.hpp"

namespace cryptrisc {

// ---------------------------------------------------------------------------
// Pseudo-random generator
// ---------------------------------------------------------------------------

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct PrngState {
  std::uint64_t state = 1;
};

inline PrngState prng_seeded(std::uint64_t seed) {
  std::uint64_t s = splitmix64(seed);
  if (s == 0) s = 0x9E3779B97F4A7C15ull;  // LFSR must not start at zero
  return PrngState{s};
}

// One LFSR step: output is the bit shifted out at position 63, feedback is
// the XOR of taps 63, 62, 60, 59 entering at bit 0.
inline unsigned lfsr_step(PrngState& g) {
  const std::uint64_t s = g.state;
  const unsigned out = static_cast<unsigned>(s >> 63);
  const std::uint64_t fb =
      ((s >> 63) ^ (s >> 62) ^ (s >> 60) ^ (s >> 59)) & 1ull;
  g.state = (s << 1) | fb;
  return out;
}

// 64 consecutive output bits assembled MSB-first. With decimation by 64
// (gcd(64, 2^64-1) = 1) the word sequence retains the maximal period.
inline std::uint64_t prng_next(PrngState& g) {
  std::uint64_t w = 0;
  for (unsigned i = 0; i < 64; ++i) w = (w << 1) | lfsr_step(g);
  return w;
}

// ---------------------------------------------------------------------------
// Masked operands
// ---------------------------------------------------------------------------

// One share: `value` is the masked word as seen on a bus; `b` the additive
// (XOR / modular) mask; `a` the per-lane multiplier for affine mode (unused
// otherwise).
struct Share {
  Word64 value = 0;
  Word64 a = 0;
  Word64 b = 0;
};

inline constexpr unsigned kMaxShares = 3;

struct MaskedOperand {
  MaskMode mode = MaskMode::kNone;
  unsigned width = 64;
  unsigned count = 0;
  std::array<Share, kMaxShares> shares{};
};

namespace detail {

inline Word64 lane8_nonzero(PrngState& g) {
  Word64 out = 0;
  for (unsigned i = 0; i < 8; ++i) {
    std::uint8_t v;
    do {
      v = static_cast<std::uint8_t>(prng_next(g));
    } while (v == 0);
    out |= static_cast<Word64>(v) << (8 * i);
  }
  return out;
}

inline Word64 lane_add(Word64 x, Word64 y, unsigned width) {
  if (width == 64) return x + y;
  const Word64 lo = (x + y) & 0xFFFFFFFFull;
  const Word64 hi = ((x >> 32) + (y >> 32)) & 0xFFFFFFFFull;
  return lo | (hi << 32);
}

inline Word64 lane_sub(Word64 x, Word64 y, unsigned width) {
  if (width == 64) return x - y;
  const Word64 lo = (x - y) & 0xFFFFFFFFull;
  const Word64 hi = ((x >> 32) - (y >> 32)) & 0xFFFFFFFFull;
  return lo | (hi << 32);
}

inline Word64 affine_apply(Word64 a, Word64 x, Word64 b) {
  Word64 out = 0;
  for (unsigned i = 0; i < 8; ++i) {
    const std::uint8_t ai = static_cast<std::uint8_t>(a >> (8 * i));
    const std::uint8_t xi = static_cast<std::uint8_t>(x >> (8 * i));
    const std::uint8_t bi = static_cast<std::uint8_t>(b >> (8 * i));
    out |= static_cast<Word64>(static_cast<std::uint8_t>(gf_mul(ai, xi) ^ bi))
           << (8 * i);
  }
  return out;
}

inline Word64 affine_invert(Word64 a, Word64 y, Word64 b) {
  Word64 out = 0;
  for (unsigned i = 0; i < 8; ++i) {
    const std::uint8_t ai = static_cast<std::uint8_t>(a >> (8 * i));
    const std::uint8_t yi = static_cast<std::uint8_t>(y >> (8 * i));
    const std::uint8_t bi = static_cast<std::uint8_t>(b >> (8 * i));
    out |= static_cast<Word64>(gf_mul(gf_inv(ai), static_cast<std::uint8_t>(yi ^ bi)))
           << (8 * i);
  }
  return out;
}

inline void check_mode_width(MaskMode mode, unsigned width) {
  switch (mode) {
    case MaskMode::kBoolean:
      if (width != 64) throw std::domain_error("boolean masking uses width 64");
      return;
    case MaskMode::kAffine:
      if (width != 8) throw std::domain_error("affine masking uses 8-bit lanes");
      return;
    case MaskMode::kArithmetic:
      if (width != 32 && width != 64) {
        throw std::domain_error("arithmetic masking uses width 32 or 64");
      }
      return;
    case MaskMode::kNone:
      throw std::domain_error("cannot mask with mode none");
  }
}

}  // namespace detail

inline Share mask_share(Word64 x, MaskMode mode, unsigned width, PrngState& g) {
  Share s;
  switch (mode) {
    case MaskMode::kBoolean:
      s.b = prng_next(g);
      s.value = x ^ s.b;
      break;
    case MaskMode::kArithmetic:
      s.b = prng_next(g);
      s.value = detail::lane_add(x, s.b, width);
      break;
    case MaskMode::kAffine:
      s.a = detail::lane8_nonzero(g);
      s.b = prng_next(g);
      s.value = detail::affine_apply(s.a, x, s.b);
      break;
    case MaskMode::kNone:
      throw std::domain_error("cannot mask with mode none");
  }
  return s;
}

inline Word64 unmask_share(const Share& s, MaskMode mode, unsigned width) {
  switch (mode) {
    case MaskMode::kBoolean:
      return s.value ^ s.b;
    case MaskMode::kArithmetic:
      return detail::lane_sub(s.value, s.b, width);
    case MaskMode::kAffine:
      return detail::affine_invert(s.a, s.value, s.b);
    case MaskMode::kNone:
      throw std::domain_error("cannot unmask mode none");
  }
  return 0;
}

// Splits x into `count` raw summands (XOR split for boolean/affine, lane-wise
// modular split for arithmetic), then masks each summand independently with
// fresh randomness.
inline MaskedOperand mask_operand(Word64 x, MaskMode mode, unsigned width,
                                  unsigned count, PrngState& g) {
  detail::check_mode_width(mode, width);
  if (count < 1 || count > kMaxShares) {
    throw std::invalid_argument("share count must be 1..3");
  }
  MaskedOperand op;
  op.mode = mode;
  op.width = mode == MaskMode::kAffine ? 8 : width;
  op.count = count;
  const unsigned lane_width = mode == MaskMode::kArithmetic ? width : 64;
  std::array<Word64, kMaxShares> raw{};
  Word64 acc = 0;
  for (unsigned i = 0; i + 1 < count; ++i) {
    raw[i] = prng_next(g);
    acc = mode == MaskMode::kArithmetic ? detail::lane_add(acc, raw[i], lane_width)
                                        : (acc ^ raw[i]);
  }
  raw[count - 1] = mode == MaskMode::kArithmetic
                       ? detail::lane_sub(x, acc, lane_width)
                       : (x ^ acc);
  for (unsigned i = 0; i < count; ++i) {
    op.shares[i] = mask_share(raw[i], mode, width, g);
  }
  return op;
}

inline Word64 unmask_operand(const MaskedOperand& op) {
  const unsigned lane_width = op.mode == MaskMode::kArithmetic ? op.width : 64;
  Word64 acc = 0;
  for (unsigned i = 0; i < op.count; ++i) {
    const Word64 raw = unmask_share(op.shares[i], op.mode, op.width);
    acc = op.mode == MaskMode::kArithmetic ? detail::lane_add(acc, raw, lane_width)
                                           : (acc ^ raw);
  }
  return acc;
}

// The value the power model observes: the fold of the masked share values,
// combined with the mode's group operation but never unmasked.
inline Word64 bus_value(const MaskedOperand& op) {
  const unsigned lane_width = op.mode == MaskMode::kArithmetic ? op.width : 64;
  Word64 acc = 0;
  for (unsigned i = 0; i < op.count; ++i) {
    acc = op.mode == MaskMode::kArithmetic
              ? detail::lane_add(acc, op.shares[i].value, lane_width)
              : (acc ^ op.shares[i].value);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Masked execution
// ---------------------------------------------------------------------------

struct McuResult {
  Word64 raw = 0;      // architectural writeback value
  Word64 bus_rs1 = 0;  // operand bus values as observed by the power model
  Word64 bus_rs2 = 0;
  Word64 bus_rd = 0;   // result bus value
};

// Runs one crypto instruction through the mask pipeline: operands are masked
// on entry (this is what the operand buses carry), the functional unit
// internally recombines and computes the raw result, and the result is
// re-masked with fresh randomness before it appears on the writeback bus.
// Zero added latency by construction.
inline McuResult masked_execute(Opcode op, Word64 rs1, Word64 rs2,
                                std::optional<std::uint64_t> imm,
                                const MaskPolicy& policy, PrngState& g) {
  const FieldTag tag = field_tag(op);
  const MaskMode mode = mask_mode_for(tag);
  McuResult r;
  if (mode == MaskMode::kNone) {
    r.raw = exec_crypto(op, rs1, rs2, imm);
    r.bus_rs1 = rs1;
    r.bus_rs2 = rs2;
    r.bus_rd = r.raw;
    return r;
  }
  const unsigned width = masking_domain_width(op);
  const unsigned count = policy.shares_for(tag);
  const MaskedOperand m1 = mask_operand(rs1, mode, width, count, g);
  const MaskedOperand m2 = mask_operand(rs2, mode, width, count, g);
  r.bus_rs1 = bus_value(m1);
  r.bus_rs2 = bus_value(m2);
  r.raw = exec_crypto(op, unmask_operand(m1), unmask_operand(m2), imm);
  const MaskedOperand mr = mask_operand(r.raw, mode, width, count, g);
  r.bus_rd = bus_value(mr);
  return r;
}

}  // namespace cryptrisc
