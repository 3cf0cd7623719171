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

// Benchmark programs: seven one-block primitives (AES-128/192/256 encrypt,
// SHA-256, SHA-512, SM3, SM4 encrypt), each in two implementations run on the
// same machine model.
//
//  * baseline    — the instruction trace a rolled-loop portable-C build would
//    execute: emulated rotates (shift+shift+or), round constants and lookup
//    tables loaded from memory, message schedules kept in RAM, T-table AES
//    and SM4 (the standard table-driven software forms). Loop control is not
//    charged, which errs in the baseline's favour.
//  * accelerated — hand-scheduled straight-line code using the crypto
//    instructions plus rotate/byte-reverse support, with message schedules
//    held in a register ring and constants materialised as immediates.
//
// Both variants of a benchmark read the same input layout and must produce
// byte-identical output at kOutAddr; the harness checks this against the
// host-side composition before reporting cycle counts.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cryptrisc/compose.hpp"
#include "cryptrisc/pipeline.hpp"

namespace cryptrisc {

inline constexpr std::uint64_t kKeyAddr = 0x1000;    // raw key bytes
inline constexpr std::uint64_t kInAddr = 0x1100;     // block / padded message
inline constexpr std::uint64_t kOutAddr = 0x1200;    // ciphertext / digest
inline constexpr std::uint64_t kTableAddr = 0x4000;  // tables, 0x400 stride
inline constexpr std::uint64_t kSboxAddr = 0x5000;   // byte S-box table
inline constexpr std::uint64_t kSchedAddr = 0x8000;  // expanded key schedule
inline constexpr std::uint64_t kWorkAddr = 0x8200;   // message schedule array
inline constexpr std::uint64_t kWork2Addr = 0x8400;  // secondary work array

struct MemSegment {
  std::uint64_t addr = 0;
  std::vector<std::uint8_t> bytes;
};

struct BenchProgram {
  std::vector<Instruction> code;
  std::vector<MemSegment> memory;
};

struct BenchCase {
  std::string name;
  BenchProgram baseline;
  BenchProgram accelerated;
  std::size_t out_len = 0;
  std::vector<std::uint8_t> expected;
};

namespace bench_detail {

using Code = std::vector<Instruction>;

// --- emulated-rotate emitters (baseline flavour) ---------------------------
// Right-rotate rs by n into rd via shifts; bits >= width of rd are garbage
// and must not reach a later shift-based extraction without clean32/clean64.
// Safe for rd == rs; tmp must differ from both.

inline void ror32e(Code& c, unsigned rd, unsigned rs, unsigned n, unsigned tmp) {
  c.push_back(prog::ri(Opcode::kSrli, tmp, rs, n));
  c.push_back(prog::ri(Opcode::kSlli, rd, rs, 32 - n));
  c.push_back(prog::rr(Opcode::kOr, rd, rd, tmp));
}

inline void ror64e(Code& c, unsigned rd, unsigned rs, unsigned n, unsigned tmp) {
  c.push_back(prog::ri(Opcode::kSrli, tmp, rs, n));
  c.push_back(prog::ri(Opcode::kSlli, rd, rs, 64 - n));
  c.push_back(prog::rr(Opcode::kOr, rd, rd, tmp));
}

inline void clean32(Code& c, unsigned r) {
  c.push_back(prog::ri(Opcode::kAndi, r, r, 0xFFFFFFFFull));
}

// sig-style mix: ror(rs,r1) ^ ror(rs,r2) ^ (rs >> shr). rd, t1, t2, rs all
// distinct except rd may alias nothing here.
inline void sig32e(Code& c, unsigned rd, unsigned rs, unsigned r1, unsigned r2,
                   unsigned shr, unsigned t1, unsigned t2) {
  ror32e(c, t1, rs, r1, t2);
  ror32e(c, rd, rs, r2, t2);
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
  c.push_back(prog::ri(Opcode::kSrli, t1, rs, shr));
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
}

inline void sig64e(Code& c, unsigned rd, unsigned rs, unsigned r1, unsigned r2,
                   unsigned shr, unsigned t1, unsigned t2) {
  ror64e(c, t1, rs, r1, t2);
  ror64e(c, rd, rs, r2, t2);
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
  c.push_back(prog::ri(Opcode::kSrli, t1, rs, shr));
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
}

// sum-style mix: ror(rs,r1) ^ ror(rs,r2) ^ ror(rs,r3).
inline void sum32e(Code& c, unsigned rd, unsigned rs, unsigned r1, unsigned r2,
                   unsigned r3, unsigned t1, unsigned t2) {
  ror32e(c, t1, rs, r1, t2);
  ror32e(c, rd, rs, r2, t2);
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
  ror32e(c, t1, rs, r3, t2);
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
}

inline void sum64e(Code& c, unsigned rd, unsigned rs, unsigned r1, unsigned r2,
                   unsigned r3, unsigned t1, unsigned t2) {
  ror64e(c, t1, rs, r1, t2);
  ror64e(c, rd, rs, r2, t2);
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
  ror64e(c, t1, rs, r3, t2);
  c.push_back(prog::rr(Opcode::kXor, rd, rd, t1));
}

// --- big-endian byte access (baseline flavour) -----------------------------

inline void load_be32e(Code& c, unsigned rd, std::uint64_t addr, unsigned tmp) {
  c.push_back(prog::ri(Opcode::kLbu, rd, 0, addr));
  c.push_back(prog::ri(Opcode::kSlli, rd, rd, 24));
  c.push_back(prog::ri(Opcode::kLbu, tmp, 0, addr + 1));
  c.push_back(prog::ri(Opcode::kSlli, tmp, tmp, 16));
  c.push_back(prog::rr(Opcode::kOr, rd, rd, tmp));
  c.push_back(prog::ri(Opcode::kLbu, tmp, 0, addr + 2));
  c.push_back(prog::ri(Opcode::kSlli, tmp, tmp, 8));
  c.push_back(prog::rr(Opcode::kOr, rd, rd, tmp));
  c.push_back(prog::ri(Opcode::kLbu, tmp, 0, addr + 3));
  c.push_back(prog::rr(Opcode::kOr, rd, rd, tmp));
}

inline void load_be64e(Code& c, unsigned rd, std::uint64_t addr, unsigned tmp) {
  c.push_back(prog::ri(Opcode::kLbu, rd, 0, addr));
  c.push_back(prog::ri(Opcode::kSlli, rd, rd, 56));
  for (unsigned i = 1; i < 8; ++i) {
    c.push_back(prog::ri(Opcode::kLbu, tmp, 0, addr + i));
    if (i != 7) c.push_back(prog::ri(Opcode::kSlli, tmp, tmp, 56 - 8 * i));
    c.push_back(prog::rr(Opcode::kOr, rd, rd, tmp));
  }
}

// rs must be clean in its low 32 bits.
inline void store_be32e(Code& c, unsigned rs, std::uint64_t addr, unsigned tmp) {
  for (unsigned i = 0; i < 3; ++i) {
    c.push_back(prog::ri(Opcode::kSrli, tmp, rs, 24 - 8 * i));
    c.push_back(prog::store(Opcode::kSb, 0, tmp, addr + i));
  }
  c.push_back(prog::store(Opcode::kSb, 0, rs, addr + 3));
}

inline void store_be64e(Code& c, unsigned rs, std::uint64_t addr, unsigned tmp) {
  for (unsigned i = 0; i < 7; ++i) {
    c.push_back(prog::ri(Opcode::kSrli, tmp, rs, 56 - 8 * i));
    c.push_back(prog::store(Opcode::kSb, 0, tmp, addr + i));
  }
  c.push_back(prog::store(Opcode::kSb, 0, rs, addr + 7));
}

// Scaled table index: tmp = (word >> (8*bs)) & 0xFF, premultiplied by 4.
inline void word_index(Code& c, unsigned tmp, unsigned word, unsigned bs) {
  if (bs == 0) {
    c.push_back(prog::ri(Opcode::kSlli, tmp, word, 2));
  } else {
    c.push_back(prog::ri(Opcode::kSrli, tmp, word, 8 * bs - 2));
  }
  c.push_back(prog::ri(Opcode::kAndi, tmp, tmp, 0x3FC));
}

// --- accelerated-side message intake: 16 big-endian 32-bit words -----------
// Two words per 64-bit load; odd ring registers keep the neighbouring word in
// their upper half, which every 32-bit consumer ignores.
inline void load_msg_words32(Code& c, std::uint64_t addr) {
  for (unsigned i = 0; i < 8; ++i) {
    const unsigned even = 16 + 2 * i;
    const unsigned odd = 16 + 2 * i + 1;
    c.push_back(prog::ri(Opcode::kLd, 11, 0, addr + 8 * i));
    c.push_back(prog::rr(Opcode::kRev8, odd, 11, 0));
    c.push_back(prog::ri(Opcode::kSrli, even, odd, 32));
  }
}

// Pack two clean 32-bit words into one big-endian dword store.
inline void store_digest_pair(Code& c, unsigned hi_word, unsigned lo_word,
                              std::uint64_t addr) {
  c.push_back(prog::ri(Opcode::kSlli, 11, hi_word, 32));
  c.push_back(prog::rr(Opcode::kOr, 11, 11, lo_word));
  c.push_back(prog::rr(Opcode::kRev8, 11, 11, 0));
  c.push_back(prog::store(Opcode::kSd, 0, 11, addr));
}

// --- little-endian memory image helpers ------------------------------------

inline void put_w32(std::vector<std::uint8_t>& v, std::uint32_t x) {
  for (unsigned i = 0; i < 4; ++i) v.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

inline void put_d64(std::vector<std::uint8_t>& v, std::uint64_t x) {
  for (unsigned i = 0; i < 8; ++i) v.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

// --- role rotation for the eight hash working variables --------------------
// Working registers x3..x10; at round t, variable k (0=a .. 7=h) lives in
// role_reg(t, k). Writing the new 'a' into the register holding the old 'h'
// makes the per-round renames free in unrolled code.
inline unsigned role_reg(unsigned t, unsigned k) {
  return 3 + ((k + 8 - (t % 8)) % 8);
}

inline unsigned ring_reg(unsigned i) { return 16 + (i % 16); }

// --- lookup-table images ----------------------------------------------------

// AES encryption T-tables in the little-endian column convention used by the
// register half-state: T_k corresponds to byte lane k after ShiftRows.
inline std::vector<std::uint8_t> aes_te_table(unsigned k) {
  std::vector<std::uint8_t> out;
  out.reserve(1024);
  for (unsigned x = 0; x < 256; ++x) {
    const std::uint8_t s = kAesSbox[x];
    const std::uint8_t s2 = gf_mul(2, s);
    const std::uint8_t s3 = gf_mul(3, s);
    std::uint8_t b[4];
    switch (k) {
      case 0: b[0] = s2; b[1] = s; b[2] = s; b[3] = s3; break;
      case 1: b[0] = s3; b[1] = s2; b[2] = s; b[3] = s; break;
      case 2: b[0] = s; b[1] = s3; b[2] = s2; b[3] = s; break;
      default: b[0] = s; b[1] = s; b[2] = s3; b[3] = s2; break;
    }
    for (unsigned i = 0; i < 4; ++i) out.push_back(b[i]);
  }
  return out;
}

// SM4 byte-slice tables; slice bs of the round function is exactly the
// ssm4.ed datapath with a zero accumulator.
inline std::vector<std::uint8_t> sm4_t_table(unsigned bs) {
  std::vector<std::uint8_t> out;
  out.reserve(1024);
  for (unsigned x = 0; x < 256; ++x) {
    const Word64 w = exec_crypto(Opcode::kSsm4Ed, 0,
                                 static_cast<Word64>(x) << (8 * bs), bs);
    put_w32(out, static_cast<std::uint32_t>(w));
  }
  return out;
}

inline std::vector<std::uint8_t> byte_table(const std::array<std::uint8_t, 256>& t) {
  return std::vector<std::uint8_t>(t.begin(), t.end());
}

// SM3 round constant, rotated for round j.
inline std::uint32_t sm3_tj(unsigned j) {
  const std::uint32_t t = j < 16 ? 0x79cc4519u : 0x7a879d8au;
  return detail::rotl32(t, j % 32);
}

// --- one-block padding ------------------------------------------------------

inline std::vector<std::uint8_t> pad_block64(const std::vector<std::uint8_t>& msg) {
  if (msg.size() > 55) {
    throw std::invalid_argument("message too long for a single 64-byte block");
  }
  std::vector<std::uint8_t> block(msg);
  block.push_back(0x80);
  block.resize(56, 0);
  const std::uint64_t bits = msg.size() * 8;
  for (int i = 7; i >= 0; --i) block.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  return block;
}

inline std::vector<std::uint8_t> pad_block128(const std::vector<std::uint8_t>& msg) {
  if (msg.size() > 111) {
    throw std::invalid_argument("message too long for a single 128-byte block");
  }
  std::vector<std::uint8_t> block(msg);
  block.push_back(0x80);
  block.resize(120, 0);
  const std::uint64_t bits = msg.size() * 8;
  for (int i = 7; i >= 0; --i) block.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  return block;
}

// ---------------------------------------------------------------------------
// AES
// ---------------------------------------------------------------------------

inline Code aes_accel_code(unsigned rounds) {
  using namespace prog;
  Code c;
  c.push_back(ri(Opcode::kLd, 3, 0, kInAddr));
  c.push_back(ri(Opcode::kLd, 4, 0, kInAddr + 8));
  c.push_back(ri(Opcode::kLd, 5, 0, kSchedAddr));
  c.push_back(ri(Opcode::kLd, 6, 0, kSchedAddr + 8));
  c.push_back(rr(Opcode::kXor, 3, 3, 5));
  c.push_back(rr(Opcode::kXor, 4, 4, 6));
  for (unsigned r = 1; r <= rounds; ++r) {
    const Opcode op = r < rounds ? Opcode::kSaes64Encsm : Opcode::kSaes64Encs;
    c.push_back(ri(Opcode::kLd, 5, 0, kSchedAddr + 16 * r));
    c.push_back(ri(Opcode::kLd, 6, 0, kSchedAddr + 16 * r + 8));
    c.push_back(crypto(op, 7, 3, 4));
    c.push_back(crypto(op, 8, 4, 3));
    c.push_back(rr(Opcode::kXor, 3, 7, 5));
    c.push_back(rr(Opcode::kXor, 4, 8, 6));
  }
  c.push_back(store(Opcode::kSd, 0, 3, kOutAddr));
  c.push_back(store(Opcode::kSd, 0, 4, kOutAddr + 8));
  return c;
}

inline Code aes_baseline_code(unsigned rounds) {
  using namespace prog;
  Code c;
  c.push_back(li(28, kTableAddr));
  c.push_back(li(29, kTableAddr + 0x400));
  c.push_back(li(30, kTableAddr + 0x800));
  c.push_back(li(31, kTableAddr + 0xC00));
  c.push_back(li(27, kSboxAddr));
  // state columns x10..x13, round key in x18/x19 scratch
  for (unsigned j = 0; j < 4; ++j) {
    c.push_back(ri(Opcode::kLwu, 10 + j, 0, kInAddr + 4 * j));
    c.push_back(ri(Opcode::kLwu, 18, 0, kSchedAddr + 4 * j));
    c.push_back(rr(Opcode::kXor, 10 + j, 10 + j, 18));
  }
  bool in_low = true;  // columns alternate between x10..x13 and x14..x17
  for (unsigned r = 1; r < rounds; ++r) {
    const unsigned in0 = in_low ? 10 : 14;
    const unsigned out0 = in_low ? 14 : 10;
    for (unsigned j = 0; j < 4; ++j) {
      const unsigned w = out0 + j;
      for (unsigned k = 0; k < 4; ++k) {
        const unsigned col = in0 + ((j + k) % 4);
        word_index(c, 18, col, k);
        if (k == 0) {
          c.push_back(rr(Opcode::kLwuIdx, w, 28, 18));
        } else {
          c.push_back(rr(Opcode::kLwuIdx, 19, 28 + k, 18));
          c.push_back(rr(Opcode::kXor, w, w, 19));
        }
      }
      c.push_back(ri(Opcode::kLwu, 18, 0, kSchedAddr + 16 * r + 4 * j));
      c.push_back(rr(Opcode::kXor, w, w, 18));
    }
    in_low = !in_low;
  }
  // final round: plain S-box, byte-assembled
  const unsigned in0 = in_low ? 10 : 14;
  const unsigned out0 = in_low ? 14 : 10;
  for (unsigned j = 0; j < 4; ++j) {
    const unsigned w = out0 + j;
    for (unsigned k = 0; k < 4; ++k) {
      const unsigned col = in0 + ((j + k) % 4);
      if (k == 0) {
        c.push_back(ri(Opcode::kAndi, 18, col, 0xFF));
        c.push_back(rr(Opcode::kLbuIdx, w, 27, 18));
      } else {
        c.push_back(ri(Opcode::kSrli, 18, col, 8 * k));
        if (k != 3) c.push_back(ri(Opcode::kAndi, 18, 18, 0xFF));
        c.push_back(rr(Opcode::kLbuIdx, 19, 27, 18));
        c.push_back(ri(Opcode::kSlli, 19, 19, 8 * k));
        c.push_back(rr(Opcode::kOr, w, w, 19));
      }
    }
    c.push_back(ri(Opcode::kLwu, 18, 0, kSchedAddr + 16 * rounds + 4 * j));
    c.push_back(rr(Opcode::kXor, w, w, 18));
    c.push_back(store(Opcode::kSw, 0, w, kOutAddr + 4 * j));
  }
  return c;
}

// ---------------------------------------------------------------------------
// SM4
// ---------------------------------------------------------------------------

inline Code sm4_accel_code() {
  using namespace prog;
  Code c;
  c.push_back(ri(Opcode::kLd, 10, 0, kInAddr));
  c.push_back(ri(Opcode::kSrli, 11, 10, 32));
  c.push_back(ri(Opcode::kLd, 12, 0, kInAddr + 8));
  c.push_back(ri(Opcode::kSrli, 13, 12, 32));
  for (unsigned i = 0; i < 32; ++i) {
    const unsigned x0 = 10 + (i % 4);
    const unsigned x1 = 10 + ((i + 1) % 4);
    const unsigned x2 = 10 + ((i + 2) % 4);
    const unsigned x3 = 10 + ((i + 3) % 4);
    c.push_back(ri(Opcode::kLwu, 15, 0, kSchedAddr + 4 * i));
    c.push_back(rr(Opcode::kXor, 14, x1, x2));
    c.push_back(rr(Opcode::kXor, 14, 14, x3));
    c.push_back(rr(Opcode::kXor, 14, 14, 15));
    for (unsigned bs = 0; bs < 4; ++bs) {
      c.push_back(crypto(Opcode::kSsm4Ed, x0, x0, 14, bs));
    }
  }
  // x32..x35 live in x10..x13; emit in reverse order
  for (unsigned j = 0; j < 4; ++j) {
    c.push_back(store(Opcode::kSw, 0, 13 - j, kOutAddr + 4 * j));
  }
  return c;
}

inline Code sm4_baseline_code() {
  using namespace prog;
  Code c;
  c.push_back(li(28, kTableAddr));
  c.push_back(li(29, kTableAddr + 0x400));
  c.push_back(li(30, kTableAddr + 0x800));
  c.push_back(li(31, kTableAddr + 0xC00));
  for (unsigned j = 0; j < 4; ++j) {
    c.push_back(ri(Opcode::kLwu, 10 + j, 0, kInAddr + 4 * j));
  }
  for (unsigned i = 0; i < 32; ++i) {
    const unsigned x0 = 10 + (i % 4);
    const unsigned x1 = 10 + ((i + 1) % 4);
    const unsigned x2 = 10 + ((i + 2) % 4);
    const unsigned x3 = 10 + ((i + 3) % 4);
    c.push_back(rr(Opcode::kXor, 14, x1, x2));
    c.push_back(rr(Opcode::kXor, 14, 14, x3));
    c.push_back(ri(Opcode::kLwu, 15, 0, kSchedAddr + 4 * i));
    c.push_back(rr(Opcode::kXor, 14, 14, 15));
    for (unsigned bs = 0; bs < 4; ++bs) {
      word_index(c, 15, 14, bs);
      c.push_back(rr(Opcode::kLwuIdx, 16, 28 + bs, 15));
      c.push_back(rr(Opcode::kXor, x0, x0, 16));
    }
  }
  for (unsigned j = 0; j < 4; ++j) {
    c.push_back(store(Opcode::kSw, 0, 13 - j, kOutAddr + 4 * j));
  }
  return c;
}

// ---------------------------------------------------------------------------
// SHA-256
// ---------------------------------------------------------------------------

inline Code sha256_accel_code() {
  using namespace prog;
  Code c;
  for (unsigned i = 0; i < 8; ++i) c.push_back(li(3 + i, kSha256Iv[i]));
  load_msg_words32(c, kInAddr);
  for (unsigned t = 0; t < 64; ++t) {
    const unsigned a = role_reg(t, 0), b = role_reg(t, 1), d = role_reg(t, 3);
    const unsigned e = role_reg(t, 4), f = role_reg(t, 5), g = role_reg(t, 6);
    const unsigned h = role_reg(t, 7), cc = role_reg(t, 2);
    c.push_back(rr(Opcode::kSsha256Sum1, 11, e, 0));
    c.push_back(rr(Opcode::kAdd32, 11, 11, h));
    c.push_back(rr(Opcode::kXor, 12, f, g));
    c.push_back(rr(Opcode::kAnd, 12, 12, e));
    c.push_back(rr(Opcode::kXor, 12, 12, g));
    c.push_back(rr(Opcode::kAdd32, 11, 11, 12));
    c.push_back(li(12, kSha256K[t]));
    c.push_back(rr(Opcode::kAdd32, 11, 11, 12));
    c.push_back(rr(Opcode::kAdd32, 11, 11, ring_reg(t)));
    c.push_back(rr(Opcode::kSsha256Sum0, 13, a, 0));
    c.push_back(rr(Opcode::kXor, 14, a, b));
    c.push_back(rr(Opcode::kXor, 15, b, cc));
    c.push_back(rr(Opcode::kAnd, 14, 14, 15));
    c.push_back(rr(Opcode::kXor, 14, 14, b));
    c.push_back(rr(Opcode::kAdd32, 13, 13, 14));
    c.push_back(rr(Opcode::kAdd32, d, d, 11));  // e' = d + t1
    c.push_back(rr(Opcode::kAdd32, h, 11, 13));  // a' = t1 + t2
    if (t < 48) {
      c.push_back(rr(Opcode::kSsha256Sig1, 11, ring_reg(t + 14), 0));
      c.push_back(rr(Opcode::kAdd32, 11, 11, ring_reg(t + 9)));
      c.push_back(rr(Opcode::kSsha256Sig0, 12, ring_reg(t + 1), 0));
      c.push_back(rr(Opcode::kAdd32, 11, 11, 12));
      c.push_back(rr(Opcode::kAdd32, ring_reg(t), 11, ring_reg(t)));
    }
  }
  for (unsigned i = 0; i < 8; ++i) {
    c.push_back(li(11, kSha256Iv[i]));
    c.push_back(rr(Opcode::kAdd32, 3 + i, 3 + i, 11));
  }
  for (unsigned i = 0; i < 4; ++i) {
    store_digest_pair(c, 3 + 2 * i, 3 + 2 * i + 1, kOutAddr + 8 * i);
  }
  return c;
}

inline Code sha256_baseline_code() {
  using namespace prog;
  Code c;
  for (unsigned i = 0; i < 16; ++i) {
    load_be32e(c, 11, kInAddr + 4 * i, 12);
    c.push_back(store(Opcode::kSw, 0, 11, kWorkAddr + 4 * i));
  }
  for (unsigned i = 0; i < 8; ++i) c.push_back(li(3 + i, kSha256Iv[i]));
  for (unsigned t = 16; t < 64; ++t) {
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 2)));
    sig32e(c, 12, 11, 17, 19, 10, 13, 14);
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 7)));
    c.push_back(rr(Opcode::kAdd32, 12, 12, 11));
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 15)));
    sig32e(c, 13, 11, 7, 18, 3, 14, 15);
    c.push_back(rr(Opcode::kAdd32, 12, 12, 13));
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 16)));
    c.push_back(rr(Opcode::kAdd32, 12, 12, 11));
    c.push_back(store(Opcode::kSw, 0, 12, kWorkAddr + 4 * t));
  }
  for (unsigned t = 0; t < 64; ++t) {
    const unsigned a = role_reg(t, 0), b = role_reg(t, 1), d = role_reg(t, 3);
    const unsigned e = role_reg(t, 4), f = role_reg(t, 5), g = role_reg(t, 6);
    const unsigned h = role_reg(t, 7), cc = role_reg(t, 2);
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * t));
    sum32e(c, 12, e, 6, 11, 25, 13, 14);
    c.push_back(rr(Opcode::kAdd32, 12, 12, h));
    c.push_back(rr(Opcode::kAnd, 13, e, f));
    c.push_back(ri(Opcode::kXori, 14, e, 0xFFFFFFFFFFFFFFFFull));
    c.push_back(rr(Opcode::kAnd, 14, 14, g));
    c.push_back(rr(Opcode::kXor, 13, 13, 14));
    c.push_back(rr(Opcode::kAdd32, 12, 12, 13));
    c.push_back(ri(Opcode::kLwu, 13, 0, kTableAddr + 4 * t));
    c.push_back(rr(Opcode::kAdd32, 12, 12, 13));
    c.push_back(rr(Opcode::kAdd32, 12, 12, 11));  // t1
    sum32e(c, 13, a, 2, 13, 22, 14, 15);
    c.push_back(rr(Opcode::kAnd, 14, a, b));
    c.push_back(rr(Opcode::kAnd, 15, a, cc));
    c.push_back(rr(Opcode::kOr, 14, 14, 15));
    c.push_back(rr(Opcode::kAnd, 15, b, cc));
    c.push_back(rr(Opcode::kOr, 14, 14, 15));
    c.push_back(rr(Opcode::kAdd32, 13, 13, 14));  // t2
    c.push_back(rr(Opcode::kAdd32, d, d, 12));
    c.push_back(rr(Opcode::kAdd32, h, 12, 13));
  }
  for (unsigned i = 0; i < 8; ++i) {
    c.push_back(li(11, kSha256Iv[i]));
    c.push_back(rr(Opcode::kAdd32, 3 + i, 3 + i, 11));
    store_be32e(c, 3 + i, kOutAddr + 4 * i, 12);
  }
  return c;
}

// ---------------------------------------------------------------------------
// SHA-512
// ---------------------------------------------------------------------------

inline Code sha512_accel_code() {
  using namespace prog;
  Code c;
  for (unsigned i = 0; i < 8; ++i) c.push_back(li(3 + i, kSha512Iv[i]));
  for (unsigned i = 0; i < 16; ++i) {
    c.push_back(ri(Opcode::kLd, 11, 0, kInAddr + 8 * i));
    c.push_back(rr(Opcode::kRev8, ring_reg(i), 11, 0));
  }
  for (unsigned t = 0; t < 80; ++t) {
    const unsigned a = role_reg(t, 0), b = role_reg(t, 1), d = role_reg(t, 3);
    const unsigned e = role_reg(t, 4), f = role_reg(t, 5), g = role_reg(t, 6);
    const unsigned h = role_reg(t, 7), cc = role_reg(t, 2);
    c.push_back(rr(Opcode::kSsha512Sum1, 11, e, 0));
    c.push_back(rr(Opcode::kAdd, 11, 11, h));
    c.push_back(rr(Opcode::kXor, 12, f, g));
    c.push_back(rr(Opcode::kAnd, 12, 12, e));
    c.push_back(rr(Opcode::kXor, 12, 12, g));
    c.push_back(rr(Opcode::kAdd, 11, 11, 12));
    c.push_back(li(12, kSha512K[t]));
    c.push_back(rr(Opcode::kAdd, 11, 11, 12));
    c.push_back(rr(Opcode::kAdd, 11, 11, ring_reg(t)));
    c.push_back(rr(Opcode::kSsha512Sum0, 13, a, 0));
    c.push_back(rr(Opcode::kXor, 14, a, b));
    c.push_back(rr(Opcode::kXor, 15, b, cc));
    c.push_back(rr(Opcode::kAnd, 14, 14, 15));
    c.push_back(rr(Opcode::kXor, 14, 14, b));
    c.push_back(rr(Opcode::kAdd, 13, 13, 14));
    c.push_back(rr(Opcode::kAdd, d, d, 11));
    c.push_back(rr(Opcode::kAdd, h, 11, 13));
    if (t < 64) {
      c.push_back(rr(Opcode::kSsha512Sig1, 11, ring_reg(t + 14), 0));
      c.push_back(rr(Opcode::kAdd, 11, 11, ring_reg(t + 9)));
      c.push_back(rr(Opcode::kSsha512Sig0, 12, ring_reg(t + 1), 0));
      c.push_back(rr(Opcode::kAdd, 11, 11, 12));
      c.push_back(rr(Opcode::kAdd, ring_reg(t), 11, ring_reg(t)));
    }
  }
  for (unsigned i = 0; i < 8; ++i) {
    c.push_back(li(11, kSha512Iv[i]));
    c.push_back(rr(Opcode::kAdd, 3 + i, 3 + i, 11));
    c.push_back(rr(Opcode::kRev8, 11, 3 + i, 0));
    c.push_back(store(Opcode::kSd, 0, 11, kOutAddr + 8 * i));
  }
  return c;
}

inline Code sha512_baseline_code() {
  using namespace prog;
  Code c;
  for (unsigned i = 0; i < 16; ++i) {
    load_be64e(c, 11, kInAddr + 8 * i, 12);
    c.push_back(store(Opcode::kSd, 0, 11, kWorkAddr + 8 * i));
  }
  for (unsigned i = 0; i < 8; ++i) c.push_back(li(3 + i, kSha512Iv[i]));
  for (unsigned t = 16; t < 80; ++t) {
    c.push_back(ri(Opcode::kLd, 11, 0, kWorkAddr + 8 * (t - 2)));
    sig64e(c, 12, 11, 19, 61, 6, 13, 14);
    c.push_back(ri(Opcode::kLd, 11, 0, kWorkAddr + 8 * (t - 7)));
    c.push_back(rr(Opcode::kAdd, 12, 12, 11));
    c.push_back(ri(Opcode::kLd, 11, 0, kWorkAddr + 8 * (t - 15)));
    sig64e(c, 13, 11, 1, 8, 7, 14, 15);
    c.push_back(rr(Opcode::kAdd, 12, 12, 13));
    c.push_back(ri(Opcode::kLd, 11, 0, kWorkAddr + 8 * (t - 16)));
    c.push_back(rr(Opcode::kAdd, 12, 12, 11));
    c.push_back(store(Opcode::kSd, 0, 12, kWorkAddr + 8 * t));
  }
  for (unsigned t = 0; t < 80; ++t) {
    const unsigned a = role_reg(t, 0), b = role_reg(t, 1), d = role_reg(t, 3);
    const unsigned e = role_reg(t, 4), f = role_reg(t, 5), g = role_reg(t, 6);
    const unsigned h = role_reg(t, 7), cc = role_reg(t, 2);
    c.push_back(ri(Opcode::kLd, 11, 0, kWorkAddr + 8 * t));
    sum64e(c, 12, e, 14, 18, 41, 13, 14);
    c.push_back(rr(Opcode::kAdd, 12, 12, h));
    c.push_back(rr(Opcode::kAnd, 13, e, f));
    c.push_back(ri(Opcode::kXori, 14, e, 0xFFFFFFFFFFFFFFFFull));
    c.push_back(rr(Opcode::kAnd, 14, 14, g));
    c.push_back(rr(Opcode::kXor, 13, 13, 14));
    c.push_back(rr(Opcode::kAdd, 12, 12, 13));
    c.push_back(ri(Opcode::kLd, 13, 0, kTableAddr + 8 * t));
    c.push_back(rr(Opcode::kAdd, 12, 12, 13));
    c.push_back(rr(Opcode::kAdd, 12, 12, 11));
    sum64e(c, 13, a, 28, 34, 39, 14, 15);
    c.push_back(rr(Opcode::kAnd, 14, a, b));
    c.push_back(rr(Opcode::kAnd, 15, a, cc));
    c.push_back(rr(Opcode::kOr, 14, 14, 15));
    c.push_back(rr(Opcode::kAnd, 15, b, cc));
    c.push_back(rr(Opcode::kOr, 14, 14, 15));
    c.push_back(rr(Opcode::kAdd, 13, 13, 14));
    c.push_back(rr(Opcode::kAdd, d, d, 12));
    c.push_back(rr(Opcode::kAdd, h, 12, 13));
  }
  for (unsigned i = 0; i < 8; ++i) {
    c.push_back(li(11, kSha512Iv[i]));
    c.push_back(rr(Opcode::kAdd, 3 + i, 3 + i, 11));
    store_be64e(c, 3 + i, kOutAddr + 8 * i, 12);
  }
  return c;
}

// ---------------------------------------------------------------------------
// SM3
// ---------------------------------------------------------------------------

inline Code sm3_accel_code() {
  using namespace prog;
  Code c;
  for (unsigned i = 0; i < 8; ++i) c.push_back(li(3 + i, kSm3Iv[i]));
  load_msg_words32(c, kInAddr);
  for (unsigned j = 0; j < 64; ++j) {
    const unsigned a = role_reg(j, 0), b = role_reg(j, 1), d = role_reg(j, 3);
    const unsigned e = role_reg(j, 4), f = role_reg(j, 5), g = role_reg(j, 6);
    const unsigned h = role_reg(j, 7), cc = role_reg(j, 2);
    c.push_back(ri(Opcode::kRotr32, 13, a, 20));  // rol12(a)
    c.push_back(rr(Opcode::kAdd32, 11, 13, e));
    c.push_back(li(12, sm3_tj(j)));
    c.push_back(rr(Opcode::kAdd32, 11, 11, 12));
    c.push_back(ri(Opcode::kRotr32, 11, 11, 25));  // ss1
    c.push_back(rr(Opcode::kXor, 12, 11, 13));     // ss2
    if (j < 16) {
      c.push_back(rr(Opcode::kXor, 14, a, b));
      c.push_back(rr(Opcode::kXor, 14, 14, cc));
      c.push_back(rr(Opcode::kXor, 15, e, f));
      c.push_back(rr(Opcode::kXor, 15, 15, g));
    } else {
      c.push_back(rr(Opcode::kXor, 14, a, b));
      c.push_back(rr(Opcode::kXor, 15, b, cc));
      c.push_back(rr(Opcode::kAnd, 14, 14, 15));
      c.push_back(rr(Opcode::kXor, 14, 14, b));
      c.push_back(rr(Opcode::kXor, 15, f, g));
      c.push_back(rr(Opcode::kAnd, 15, 15, e));
      c.push_back(rr(Opcode::kXor, 15, 15, g));
    }
    c.push_back(rr(Opcode::kAdd32, 14, 14, d));
    c.push_back(rr(Opcode::kAdd32, 14, 14, 12));
    c.push_back(rr(Opcode::kXor, 13, ring_reg(j), ring_reg(j + 4)));
    c.push_back(rr(Opcode::kAdd32, 14, 14, 13));  // tt1
    c.push_back(rr(Opcode::kAdd32, 15, 15, h));
    c.push_back(rr(Opcode::kAdd32, 15, 15, 11));
    c.push_back(rr(Opcode::kAdd32, 15, 15, ring_reg(j)));  // tt2
    c.push_back(ri(Opcode::kRotr32, b, b, 23));  // b -> rol9(b)
    c.push_back(ri(Opcode::kRotr32, f, f, 13));  // f -> rol19(f)
    c.push_back(rr(Opcode::kOr, h, 14, 0));      // a' = tt1
    c.push_back(crypto(Opcode::kSsm3P0, d, 15, 0));  // e' = P0(tt2)
    if (j < 52) {
      c.push_back(ri(Opcode::kRotr32, 11, ring_reg(j + 13), 17));
      c.push_back(rr(Opcode::kXor, 11, 11, ring_reg(j + 7)));
      c.push_back(rr(Opcode::kXor, 11, 11, ring_reg(j)));
      c.push_back(crypto(Opcode::kSsm3P1, 11, 11, 0));
      c.push_back(ri(Opcode::kRotr32, 12, ring_reg(j + 3), 25));
      c.push_back(rr(Opcode::kXor, 11, 11, 12));
      c.push_back(rr(Opcode::kXor, ring_reg(j), 11, ring_reg(j + 10)));
    }
  }
  for (unsigned i = 0; i < 8; ++i) {
    c.push_back(li(11, kSm3Iv[i]));
    c.push_back(rr(Opcode::kXor, 3 + i, 3 + i, 11));
  }
  for (unsigned i = 0; i < 4; ++i) {
    store_digest_pair(c, 3 + 2 * i, 3 + 2 * i + 1, kOutAddr + 8 * i);
  }
  return c;
}

inline Code sm3_baseline_code() {
  using namespace prog;
  Code c;
  for (unsigned i = 0; i < 16; ++i) {
    load_be32e(c, 11, kInAddr + 4 * i, 12);
    c.push_back(store(Opcode::kSw, 0, 11, kWorkAddr + 4 * i));
  }
  for (unsigned i = 0; i < 8; ++i) c.push_back(li(3 + i, kSm3Iv[i]));
  // full message schedule W[16..67]
  for (unsigned t = 16; t < 68; ++t) {
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 3)));
    ror32e(c, 12, 11, 17, 13);  // rol15
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 9)));
    c.push_back(rr(Opcode::kXor, 12, 12, 11));
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * (t - 16)));
    c.push_back(rr(Opcode::kXor, 12, 12, 11));
    clean32(c, 12);
    ror32e(c, 13, 12, 17, 14);  // rol15(x)
    ror32e(c, 11, 12, 9, 14);   // rol23(x)
    c.push_back(rr(Opcode::kXor, 11, 11, 13));
    c.push_back(rr(Opcode::kXor, 11, 11, 12));  // P1
    c.push_back(ri(Opcode::kLwu, 12, 0, kWorkAddr + 4 * (t - 13)));
    ror32e(c, 13, 12, 25, 14);  // rol7
    c.push_back(rr(Opcode::kXor, 11, 11, 13));
    c.push_back(ri(Opcode::kLwu, 12, 0, kWorkAddr + 4 * (t - 6)));
    c.push_back(rr(Opcode::kXor, 11, 11, 12));
    c.push_back(store(Opcode::kSw, 0, 11, kWorkAddr + 4 * t));
  }
  // W'[0..63]
  for (unsigned j = 0; j < 64; ++j) {
    c.push_back(ri(Opcode::kLwu, 11, 0, kWorkAddr + 4 * j));
    c.push_back(ri(Opcode::kLwu, 12, 0, kWorkAddr + 4 * (j + 4)));
    c.push_back(rr(Opcode::kXor, 11, 11, 12));
    c.push_back(store(Opcode::kSw, 0, 11, kWork2Addr + 4 * j));
  }
  for (unsigned j = 0; j < 64; ++j) {
    const unsigned a = role_reg(j, 0), b = role_reg(j, 1), d = role_reg(j, 3);
    const unsigned e = role_reg(j, 4), f = role_reg(j, 5), g = role_reg(j, 6);
    const unsigned h = role_reg(j, 7), cc = role_reg(j, 2);
    ror32e(c, 16, a, 20, 13);  // rol12(a), reused for ss2
    c.push_back(rr(Opcode::kAdd32, 11, 16, e));
    c.push_back(li(12, j < 16 ? 0x79cc4519u : 0x7a879d8au));
    if (j % 32 != 0) {
      ror32e(c, 13, 12, 32 - (j % 32), 14);
    } else {
      c.push_back(rr(Opcode::kOr, 13, 12, 0));
    }
    c.push_back(rr(Opcode::kAdd32, 11, 11, 13));
    ror32e(c, 11, 11, 25, 13);  // ss1 (high bits dirty)
    c.push_back(rr(Opcode::kXor, 12, 11, 16));  // ss2
    if (j < 16) {
      c.push_back(rr(Opcode::kXor, 14, a, b));
      c.push_back(rr(Opcode::kXor, 14, 14, cc));
      c.push_back(rr(Opcode::kXor, 15, e, f));
      c.push_back(rr(Opcode::kXor, 15, 15, g));
    } else {
      c.push_back(rr(Opcode::kAnd, 14, a, b));
      c.push_back(rr(Opcode::kAnd, 15, a, cc));
      c.push_back(rr(Opcode::kOr, 14, 14, 15));
      c.push_back(rr(Opcode::kAnd, 15, b, cc));
      c.push_back(rr(Opcode::kOr, 14, 14, 15));
      c.push_back(rr(Opcode::kAnd, 15, e, f));
      c.push_back(ri(Opcode::kXori, 13, e, 0xFFFFFFFFFFFFFFFFull));
      c.push_back(rr(Opcode::kAnd, 13, 13, g));
      c.push_back(rr(Opcode::kOr, 15, 15, 13));
    }
    c.push_back(rr(Opcode::kAdd32, 14, 14, d));
    c.push_back(rr(Opcode::kAdd32, 14, 14, 12));
    c.push_back(ri(Opcode::kLwu, 13, 0, kWork2Addr + 4 * j));
    c.push_back(rr(Opcode::kAdd32, 14, 14, 13));  // tt1
    c.push_back(rr(Opcode::kAdd32, 15, 15, h));
    c.push_back(rr(Opcode::kAdd32, 15, 15, 11));
    c.push_back(ri(Opcode::kLwu, 13, 0, kWorkAddr + 4 * j));
    c.push_back(rr(Opcode::kAdd32, 15, 15, 13));  // tt2
    ror32e(c, b, b, 23, 13);
    ror32e(c, f, f, 13, 13);
    c.push_back(rr(Opcode::kOr, h, 14, 0));  // a' = tt1
    ror32e(c, 13, 15, 23, 11);  // rol9(tt2)
    ror32e(c, 12, 15, 15, 11);  // rol17(tt2)
    c.push_back(rr(Opcode::kXor, 13, 13, 12));
    c.push_back(rr(Opcode::kXor, d, 13, 15));  // e' = P0(tt2)
    clean32(c, d);  // rotated next round
  }
  for (unsigned i = 0; i < 8; ++i) {
    c.push_back(li(11, kSm3Iv[i]));
    c.push_back(rr(Opcode::kXor, 3 + i, 3 + i, 11));
    clean32(c, 3 + i);
    store_be32e(c, 3 + i, kOutAddr + 4 * i, 12);
  }
  return c;
}

}  // namespace bench_detail

// ---------------------------------------------------------------------------
// Benchmark assembly
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {
      "aes128", "aes192", "aes256", "sha256", "sha512", "sm3", "sm4"};
  return names;
}

// Builds the two program variants plus memory images for one benchmark.
// Hash benchmarks take an arbitrary message that must fit one block
// (<= 55 bytes for SHA-256/SM3, <= 111 for SHA-512) and an empty key;
// cipher benchmarks take a key of the right size and a 16-byte block.
inline BenchCase make_benchmark(const std::string& name,
                                const std::vector<std::uint8_t>& key,
                                const std::vector<std::uint8_t>& input) {
  namespace bd = bench_detail;
  BenchCase bc;
  bc.name = name;

  const auto require_key = [&](std::size_t n) {
    if (key.size() != n) {
      throw std::invalid_argument(name + ": key must be " + std::to_string(n) +
                                  " bytes");
    }
  };
  const auto keyless = [&] {
    if (!key.empty()) throw std::invalid_argument(name + " takes no key");
  };

  if (name == "aes128" || name == "aes192" || name == "aes256") {
    const std::size_t klen = name == "aes128" ? 16 : name == "aes192" ? 24 : 32;
    require_key(klen);
    if (input.size() != 16) throw std::invalid_argument(name + ": block is 16 bytes");
    const AesSchedule s = aes_key_schedule(key.data(), klen);
    std::vector<std::uint8_t> sched_bytes;
    for (Word64 d : s.rk) bd::put_d64(sched_bytes, d);
    bc.expected.resize(16);
    aes_encrypt_block(s, input.data(), bc.expected.data());
    bc.out_len = 16;

    bc.accelerated.code = bd::aes_accel_code(s.rounds);
    bc.accelerated.memory = {{kKeyAddr, key}, {kInAddr, input},
                             {kSchedAddr, sched_bytes}};
    bc.baseline.code = bd::aes_baseline_code(s.rounds);
    bc.baseline.memory = {{kKeyAddr, key},
                          {kInAddr, input},
                          {kSchedAddr, sched_bytes},
                          {kTableAddr, bd::aes_te_table(0)},
                          {kTableAddr + 0x400, bd::aes_te_table(1)},
                          {kTableAddr + 0x800, bd::aes_te_table(2)},
                          {kTableAddr + 0xC00, bd::aes_te_table(3)},
                          {kSboxAddr, bd::byte_table(kAesSbox)}};
  } else if (name == "sm4") {
    require_key(16);
    if (input.size() != 16) throw std::invalid_argument("sm4: block is 16 bytes");
    const auto rk = sm4_key_schedule(key.data());
    std::vector<std::uint8_t> sched_bytes;
    for (std::uint32_t w : rk) bd::put_w32(sched_bytes, w);
    bc.expected.resize(16);
    sm4_encrypt_block(rk, input.data(), bc.expected.data());
    bc.out_len = 16;

    bc.accelerated.code = bd::sm4_accel_code();
    bc.accelerated.memory = {{kKeyAddr, key}, {kInAddr, input},
                             {kSchedAddr, sched_bytes}};
    bc.baseline.code = bd::sm4_baseline_code();
    bc.baseline.memory = {{kKeyAddr, key},
                          {kInAddr, input},
                          {kSchedAddr, sched_bytes},
                          {kTableAddr, bd::sm4_t_table(0)},
                          {kTableAddr + 0x400, bd::sm4_t_table(1)},
                          {kTableAddr + 0x800, bd::sm4_t_table(2)},
                          {kTableAddr + 0xC00, bd::sm4_t_table(3)}};
  } else if (name == "sha256" || name == "sm3") {
    keyless();
    const std::vector<std::uint8_t> block = bd::pad_block64(input);
    bc.out_len = 32;
    bc.expected.resize(32);
    if (name == "sha256") {
      sha256(input.data(), input.size(), bc.expected.data());
      bc.accelerated.code = bd::sha256_accel_code();
      bc.baseline.code = bd::sha256_baseline_code();
      std::vector<std::uint8_t> ktab;
      for (std::uint32_t k : kSha256K) bd::put_w32(ktab, k);
      bc.baseline.memory = {{kInAddr, block}, {kTableAddr, ktab}};
    } else {
      sm3(input.data(), input.size(), bc.expected.data());
      bc.accelerated.code = bd::sm3_accel_code();
      bc.baseline.code = bd::sm3_baseline_code();
      bc.baseline.memory = {{kInAddr, block}};
    }
    bc.accelerated.memory = {{kInAddr, block}};
  } else if (name == "sha512") {
    keyless();
    const std::vector<std::uint8_t> block = bd::pad_block128(input);
    bc.out_len = 64;
    bc.expected.resize(64);
    sha512(input.data(), input.size(), bc.expected.data());
    bc.accelerated.code = bd::sha512_accel_code();
    bc.accelerated.memory = {{kInAddr, block}};
    bc.baseline.code = bd::sha512_baseline_code();
    std::vector<std::uint8_t> ktab;
    for (std::uint64_t k : kSha512K) bd::put_d64(ktab, k);
    bc.baseline.memory = {{kInAddr, block}, {kTableAddr, ktab}};
  } else {
    throw std::invalid_argument("unknown benchmark: " + name);
  }
  return bc;
}

// Default material: standard-vector keys/blocks for the ciphers, "abc" for
// the hashes.
inline BenchCase default_benchmark(const std::string& name) {
  const std::vector<std::uint8_t> abc = {'a', 'b', 'c'};
  if (name == "sha256" || name == "sha512" || name == "sm3") {
    return make_benchmark(name, {}, abc);
  }
  if (name == "sm4") {
    const std::vector<std::uint8_t> k = {0x01, 0x23, 0x45, 0x67, 0x89, 0xab,
                                         0xcd, 0xef, 0xfe, 0xdc, 0xba, 0x98,
                                         0x76, 0x54, 0x32, 0x10};
    return make_benchmark(name, k, k);
  }
  std::vector<std::uint8_t> key;
  const std::size_t klen = name == "aes128" ? 16 : name == "aes192" ? 24 : 32;
  for (std::size_t i = 0; i < klen; ++i) key.push_back(static_cast<std::uint8_t>(i));
  std::vector<std::uint8_t> pt;
  for (unsigned i = 0; i < 16; ++i) pt.push_back(static_cast<std::uint8_t>(i * 0x11));
  return make_benchmark(name, key, pt);
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

struct BenchResult {
  std::string name;
  std::uint64_t baseline_cycles = 0;
  std::uint64_t accel_cycles = 0;
  double speedup = 0.0;
  std::vector<std::uint8_t> output;
};

namespace bench_detail {

inline std::uint64_t run_variant(const BenchProgram& p, std::size_t out_len,
                                 const std::vector<std::uint8_t>& expected,
                                 bool masked, const MaskPolicy& policy,
                                 std::uint64_t seed) {
  MachineState m;
  m.masking_enabled = masked;
  m.policy = policy;
  m.prng = prng_seeded(seed);
  for (const MemSegment& seg : p.memory) {
    for (std::size_t i = 0; i < seg.bytes.size(); ++i) {
      m.store_byte(seg.addr + i, seg.bytes[i]);
    }
  }
  const RunResult r = run(m, p.code);
  std::vector<std::uint8_t> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = r.state.load_byte(kOutAddr + i);
  if (out != expected) {
    throw std::runtime_error("benchmark produced wrong output");
  }
  return r.state.cycle_count;
}

}  // namespace bench_detail

inline BenchResult run_benchmark(const BenchCase& bc, bool masked = false,
                                 const MaskPolicy& policy = {},
                                 std::uint64_t seed = 0) {
  BenchResult res;
  res.name = bc.name;
  res.output = bc.expected;
  res.baseline_cycles = bench_detail::run_variant(bc.baseline, bc.out_len,
                                                  bc.expected, masked, policy, seed);
  res.accel_cycles = bench_detail::run_variant(bc.accelerated, bc.out_len,
                                               bc.expected, masked, policy, seed);
  res.speedup = static_cast<double>(res.baseline_cycles) /
                static_cast<double>(res.accel_cycles);
  return res;
}

}  // namespace cryptrisc
