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

// Instruction set of the simulated machine: a small RV64-flavoured base ISA
// (decoded records only, no binary encodings) plus the 19 scalar cryptography
// instructions. Crypto semantics follow the ratified RISC-V scalar crypto
// behaviour bit for bit, with one deliberate deviation: 32-bit results
// (SHA-256 / SM3 / SM4 ops) are zero-extended into the 64-bit register
// instead of sign-extended. All compositions here keep values zero-extended,
// so the choice is internally consistent.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cryptrisc/fields.hpp"

namespace cryptrisc {

enum class Opcode {
  // --- base ISA ---
  kLi,    // rd = imm
  kXor, kAnd, kOr, kAdd, kSub,
  kAdd32,        // rd = zext32(rs1 + rs2)
  kXori, kAndi, kOri, kAddi,
  kSlli, kSrli,
  kRotr32,       // rd = zext32(ror32(low32(rs1), imm)); accelerated profile
  kRotr64,       // rd = ror64(rs1, imm);                accelerated profile
  kRev8,         // rd = byte-reverse(rs1);              accelerated profile
  kLbu, kLwu, kLd,       // addr = rs1 + imm
  kLbuIdx, kLwuIdx,      // addr = rs1 + rs2 (models compiler-folded indexing)
  kSb, kSw, kSd,         // addr = rs1 + imm, value = rs2
  kBeq, kBne,            // taken -> pc = imm (instruction index)
  // --- scalar crypto ---
  kSaes64Encs, kSaes64Encsm, kSaes64Ds, kSaes64Dsm, kSaes64Im,
  kSaes64Ks1, kSaes64Ks2,
  kSsm4Ed, kSsm4Ks,
  kSsm3P0, kSsm3P1,
  kSsha256Sig0, kSsha256Sig1, kSsha256Sum0, kSsha256Sum1,
  kSsha512Sig0, kSsha512Sig1, kSsha512Sum0, kSsha512Sum1,
};

constexpr bool is_crypto_op(Opcode op) {
  return op >= Opcode::kSaes64Encs && op <= Opcode::kSsha512Sum1;
}

inline constexpr std::array<Opcode, 19> kCryptoOpcodes = {
    Opcode::kSaes64Encs,  Opcode::kSaes64Encsm, Opcode::kSaes64Ds,
    Opcode::kSaes64Dsm,   Opcode::kSaes64Im,    Opcode::kSaes64Ks1,
    Opcode::kSaes64Ks2,   Opcode::kSsm4Ed,      Opcode::kSsm4Ks,
    Opcode::kSsm3P0,      Opcode::kSsm3P1,      Opcode::kSsha256Sig0,
    Opcode::kSsha256Sig1, Opcode::kSsha256Sum0, Opcode::kSsha256Sum1,
    Opcode::kSsha512Sig0, Opcode::kSsha512Sig1, Opcode::kSsha512Sum0,
    Opcode::kSsha512Sum1};

// Mnemonics use the original naming; the ratified aliases are
// aes64es/esm/ds/dsm/im/ks1i/ks2, sm4ed/ks, sm3p0/p1, sha256sig*/sum*,
// sha512sig*/sum*.
inline std::string_view mnemonic(Opcode op) {
  switch (op) {
    case Opcode::kLi: return "li";
    case Opcode::kXor: return "xor";
    case Opcode::kAnd: return "and";
    case Opcode::kOr: return "or";
    case Opcode::kAdd: return "add";
    case Opcode::kSub: return "sub";
    case Opcode::kAdd32: return "add32";
    case Opcode::kXori: return "xori";
    case Opcode::kAndi: return "andi";
    case Opcode::kOri: return "ori";
    case Opcode::kAddi: return "addi";
    case Opcode::kSlli: return "slli";
    case Opcode::kSrli: return "srli";
    case Opcode::kRotr32: return "rotr32";
    case Opcode::kRotr64: return "rotr64";
    case Opcode::kRev8: return "rev8";
    case Opcode::kLbu: return "lbu";
    case Opcode::kLwu: return "lwu";
    case Opcode::kLd: return "ld";
    case Opcode::kLbuIdx: return "lbu.idx";
    case Opcode::kLwuIdx: return "lwu.idx";
    case Opcode::kSb: return "sb";
    case Opcode::kSw: return "sw";
    case Opcode::kSd: return "sd";
    case Opcode::kBeq: return "beq";
    case Opcode::kBne: return "bne";
    case Opcode::kSaes64Encs: return "saes64.encs";
    case Opcode::kSaes64Encsm: return "saes64.encsm";
    case Opcode::kSaes64Ds: return "saes64.ds";
    case Opcode::kSaes64Dsm: return "saes64.dsm";
    case Opcode::kSaes64Im: return "saes64.im";
    case Opcode::kSaes64Ks1: return "saes64.ks1";
    case Opcode::kSaes64Ks2: return "saes64.ks2";
    case Opcode::kSsm4Ed: return "ssm4.ed";
    case Opcode::kSsm4Ks: return "ssm4.ks";
    case Opcode::kSsm3P0: return "ssm3.p0";
    case Opcode::kSsm3P1: return "ssm3.p1";
    case Opcode::kSsha256Sig0: return "ssha256.sig0";
    case Opcode::kSsha256Sig1: return "ssha256.sig1";
    case Opcode::kSsha256Sum0: return "ssha256.sum0";
    case Opcode::kSsha256Sum1: return "ssha256.sum1";
    case Opcode::kSsha512Sig0: return "ssha512.sig0";
    case Opcode::kSsha512Sig1: return "ssha512.sig1";
    case Opcode::kSsha512Sum0: return "ssha512.sum0";
    case Opcode::kSsha512Sum1: return "ssha512.sum1";
  }
  return "?";
}

inline std::optional<Opcode> parse_crypto_mnemonic(std::string_view name) {
  for (Opcode op : kCryptoOpcodes) {
    if (mnemonic(op) == name) return op;
  }
  return std::nullopt;
}

// Decoded instruction record. `imm` carries the round-constant index for
// saes64.ks1, the byte select for ssm4.*, and immediates/offsets/branch
// targets for base ops.
struct Instruction {
  Opcode op;
  std::uint8_t rd = 0;
  std::uint8_t rs1 = 0;
  std::uint8_t rs2 = 0;
  std::optional<std::uint64_t> imm;
};

inline constexpr auto kAesSbox = std::to_array<std::uint8_t>({
    0x63, 0x7C, 0x77, 0x7B, 0xF2, 0x6B, 0x6F, 0xC5, 0x30, 0x01, 0x67, 0x2B,
    0xFE, 0xD7, 0xAB, 0x76, 0xCA, 0x82, 0xC9, 0x7D, 0xFA, 0x59, 0x47, 0xF0,
    0xAD, 0xD4, 0xA2, 0xAF, 0x9C, 0xA4, 0x72, 0xC0, 0xB7, 0xFD, 0x93, 0x26,
    0x36, 0x3F, 0xF7, 0xCC, 0x34, 0xA5, 0xE5, 0xF1, 0x71, 0xD8, 0x31, 0x15,
    0x04, 0xC7, 0x23, 0xC3, 0x18, 0x96, 0x05, 0x9A, 0x07, 0x12, 0x80, 0xE2,
    0xEB, 0x27, 0xB2, 0x75, 0x09, 0x83, 0x2C, 0x1A, 0x1B, 0x6E, 0x5A, 0xA0,
    0x52, 0x3B, 0xD6, 0xB3, 0x29, 0xE3, 0x2F, 0x84, 0x53, 0xD1, 0x00, 0xED,
    0x20, 0xFC, 0xB1, 0x5B, 0x6A, 0xCB, 0xBE, 0x39, 0x4A, 0x4C, 0x58, 0xCF,
    0xD0, 0xEF, 0xAA, 0xFB, 0x43, 0x4D, 0x33, 0x85, 0x45, 0xF9, 0x02, 0x7F,
    0x50, 0x3C, 0x9F, 0xA8, 0x51, 0xA3, 0x40, 0x8F, 0x92, 0x9D, 0x38, 0xF5,
    0xBC, 0xB6, 0xDA, 0x21, 0x10, 0xFF, 0xF3, 0xD2, 0xCD, 0x0C, 0x13, 0xEC,
    0x5F, 0x97, 0x44, 0x17, 0xC4, 0xA7, 0x7E, 0x3D, 0x64, 0x5D, 0x19, 0x73,
    0x60, 0x81, 0x4F, 0xDC, 0x22, 0x2A, 0x90, 0x88, 0x46, 0xEE, 0xB8, 0x14,
    0xDE, 0x5E, 0x0B, 0xDB, 0xE0, 0x32, 0x3A, 0x0A, 0x49, 0x06, 0x24, 0x5C,
    0xC2, 0xD3, 0xAC, 0x62, 0x91, 0x95, 0xE4, 0x79, 0xE7, 0xC8, 0x37, 0x6D,
    0x8D, 0xD5, 0x4E, 0xA9, 0x6C, 0x56, 0xF4, 0xEA, 0x65, 0x7A, 0xAE, 0x08,
    0xBA, 0x78, 0x25, 0x2E, 0x1C, 0xA6, 0xB4, 0xC6, 0xE8, 0xDD, 0x74, 0x1F,
    0x4B, 0xBD, 0x8B, 0x8A, 0x70, 0x3E, 0xB5, 0x66, 0x48, 0x03, 0xF6, 0x0E,
    0x61, 0x35, 0x57, 0xB9, 0x86, 0xC1, 0x1D, 0x9E, 0xE1, 0xF8, 0x98, 0x11,
    0x69, 0xD9, 0x8E, 0x94, 0x9B, 0x1E, 0x87, 0xE9, 0xCE, 0x55, 0x28, 0xDF,
    0x8C, 0xA1, 0x89, 0x0D, 0xBF, 0xE6, 0x42, 0x68, 0x41, 0x99, 0x2D, 0x0F,
    0xB0, 0x54, 0xBB, 0x16,
});

inline constexpr auto kAesInvSbox = std::to_array<std::uint8_t>({
    0x52, 0x09, 0x6A, 0xD5, 0x30, 0x36, 0xA5, 0x38, 0xBF, 0x40, 0xA3, 0x9E,
    0x81, 0xF3, 0xD7, 0xFB, 0x7C, 0xE3, 0x39, 0x82, 0x9B, 0x2F, 0xFF, 0x87,
    0x34, 0x8E, 0x43, 0x44, 0xC4, 0xDE, 0xE9, 0xCB, 0x54, 0x7B, 0x94, 0x32,
    0xA6, 0xC2, 0x23, 0x3D, 0xEE, 0x4C, 0x95, 0x0B, 0x42, 0xFA, 0xC3, 0x4E,
    0x08, 0x2E, 0xA1, 0x66, 0x28, 0xD9, 0x24, 0xB2, 0x76, 0x5B, 0xA2, 0x49,
    0x6D, 0x8B, 0xD1, 0x25, 0x72, 0xF8, 0xF6, 0x64, 0x86, 0x68, 0x98, 0x16,
    0xD4, 0xA4, 0x5C, 0xCC, 0x5D, 0x65, 0xB6, 0x92, 0x6C, 0x70, 0x48, 0x50,
    0xFD, 0xED, 0xB9, 0xDA, 0x5E, 0x15, 0x46, 0x57, 0xA7, 0x8D, 0x9D, 0x84,
    0x90, 0xD8, 0xAB, 0x00, 0x8C, 0xBC, 0xD3, 0x0A, 0xF7, 0xE4, 0x58, 0x05,
    0xB8, 0xB3, 0x45, 0x06, 0xD0, 0x2C, 0x1E, 0x8F, 0xCA, 0x3F, 0x0F, 0x02,
    0xC1, 0xAF, 0xBD, 0x03, 0x01, 0x13, 0x8A, 0x6B, 0x3A, 0x91, 0x11, 0x41,
    0x4F, 0x67, 0xDC, 0xEA, 0x97, 0xF2, 0xCF, 0xCE, 0xF0, 0xB4, 0xE6, 0x73,
    0x96, 0xAC, 0x74, 0x22, 0xE7, 0xAD, 0x35, 0x85, 0xE2, 0xF9, 0x37, 0xE8,
    0x1C, 0x75, 0xDF, 0x6E, 0x47, 0xF1, 0x1A, 0x71, 0x1D, 0x29, 0xC5, 0x89,
    0x6F, 0xB7, 0x62, 0x0E, 0xAA, 0x18, 0xBE, 0x1B, 0xFC, 0x56, 0x3E, 0x4B,
    0xC6, 0xD2, 0x79, 0x20, 0x9A, 0xDB, 0xC0, 0xFE, 0x78, 0xCD, 0x5A, 0xF4,
    0x1F, 0xDD, 0xA8, 0x33, 0x88, 0x07, 0xC7, 0x31, 0xB1, 0x12, 0x10, 0x59,
    0x27, 0x80, 0xEC, 0x5F, 0x60, 0x51, 0x7F, 0xA9, 0x19, 0xB5, 0x4A, 0x0D,
    0x2D, 0xE5, 0x7A, 0x9F, 0x93, 0xC9, 0x9C, 0xEF, 0xA0, 0xE0, 0x3B, 0x4D,
    0xAE, 0x2A, 0xF5, 0xB0, 0xC8, 0xEB, 0xBB, 0x3C, 0x83, 0x53, 0x99, 0x61,
    0x17, 0x2B, 0x04, 0x7E, 0xBA, 0x77, 0xD6, 0x26, 0xE1, 0x69, 0x14, 0x63,
    0x55, 0x21, 0x0C, 0x7D,
});

inline constexpr auto kSm4Sbox = std::to_array<std::uint8_t>({
    0xD6, 0x90, 0xE9, 0xFE, 0xCC, 0xE1, 0x3D, 0xB7, 0x16, 0xB6, 0x14, 0xC2,
    0x28, 0xFB, 0x2C, 0x05, 0x2B, 0x67, 0x9A, 0x76, 0x2A, 0xBE, 0x04, 0xC3,
    0xAA, 0x44, 0x13, 0x26, 0x49, 0x86, 0x06, 0x99, 0x9C, 0x42, 0x50, 0xF4,
    0x91, 0xEF, 0x98, 0x7A, 0x33, 0x54, 0x0B, 0x43, 0xED, 0xCF, 0xAC, 0x62,
    0xE4, 0xB3, 0x1C, 0xA9, 0xC9, 0x08, 0xE8, 0x95, 0x80, 0xDF, 0x94, 0xFA,
    0x75, 0x8F, 0x3F, 0xA6, 0x47, 0x07, 0xA7, 0xFC, 0xF3, 0x73, 0x17, 0xBA,
    0x83, 0x59, 0x3C, 0x19, 0xE6, 0x85, 0x4F, 0xA8, 0x68, 0x6B, 0x81, 0xB2,
    0x71, 0x64, 0xDA, 0x8B, 0xF8, 0xEB, 0x0F, 0x4B, 0x70, 0x56, 0x9D, 0x35,
    0x1E, 0x24, 0x0E, 0x5E, 0x63, 0x58, 0xD1, 0xA2, 0x25, 0x22, 0x7C, 0x3B,
    0x01, 0x21, 0x78, 0x87, 0xD4, 0x00, 0x46, 0x57, 0x9F, 0xD3, 0x27, 0x52,
    0x4C, 0x36, 0x02, 0xE7, 0xA0, 0xC4, 0xC8, 0x9E, 0xEA, 0xBF, 0x8A, 0xD2,
    0x40, 0xC7, 0x38, 0xB5, 0xA3, 0xF7, 0xF2, 0xCE, 0xF9, 0x61, 0x15, 0xA1,
    0xE0, 0xAE, 0x5D, 0xA4, 0x9B, 0x34, 0x1A, 0x55, 0xAD, 0x93, 0x32, 0x30,
    0xF5, 0x8C, 0xB1, 0xE3, 0x1D, 0xF6, 0xE2, 0x2E, 0x82, 0x66, 0xCA, 0x60,
    0xC0, 0x29, 0x23, 0xAB, 0x0D, 0x53, 0x4E, 0x6F, 0xD5, 0xDB, 0x37, 0x45,
    0xDE, 0xFD, 0x8E, 0x2F, 0x03, 0xFF, 0x6A, 0x72, 0x6D, 0x6C, 0x5B, 0x51,
    0x8D, 0x1B, 0xAF, 0x92, 0xBB, 0xDD, 0xBC, 0x7F, 0x11, 0xD9, 0x5C, 0x41,
    0x1F, 0x10, 0x5A, 0xD8, 0x0A, 0xC1, 0x31, 0x88, 0xA5, 0xCD, 0x7B, 0xBD,
    0x2D, 0x74, 0xD0, 0x12, 0xB8, 0xE5, 0xB4, 0xB0, 0x89, 0x69, 0x97, 0x4A,
    0x0C, 0x96, 0x77, 0x7E, 0x65, 0xB9, 0xF1, 0x09, 0xC5, 0x6E, 0xC6, 0x84,
    0x18, 0xF0, 0x7D, 0xEC, 0x3A, 0xDC, 0x4D, 0x20, 0x79, 0xEE, 0x5F, 0x3E,
    0xD7, 0xCB, 0x39, 0x48,
});
namespace detail {

constexpr std::uint32_t rotr32(std::uint32_t x, unsigned n) {
  n &= 31u;
  return n == 0 ? x : (x >> n) | (x << (32u - n));
}

constexpr std::uint32_t rotl32(std::uint32_t x, unsigned n) {
  return rotr32(x, 32u - (n & 31u));
}

constexpr std::uint64_t rotr64(std::uint64_t x, unsigned n) {
  n &= 63u;
  return n == 0 ? x : (x >> n) | (x << (64u - n));
}

constexpr std::uint8_t get_byte(Word64 x, unsigned i) {
  return static_cast<std::uint8_t>(x >> (8 * i));
}

// Forward AES MixColumns applied to one 32-bit column held little-endian
// (byte 0 of the word = row 0 of the column).
inline std::uint32_t aes_mixcolumn(std::uint32_t col) {
  std::uint8_t b0 = static_cast<std::uint8_t>(col);
  std::uint8_t b1 = static_cast<std::uint8_t>(col >> 8);
  std::uint8_t b2 = static_cast<std::uint8_t>(col >> 16);
  std::uint8_t b3 = static_cast<std::uint8_t>(col >> 24);
  std::uint8_t r0 = gf_mul(2, b0) ^ gf_mul(3, b1) ^ b2 ^ b3;
  std::uint8_t r1 = static_cast<std::uint8_t>(b0 ^ gf_mul(2, b1) ^ gf_mul(3, b2) ^ b3);
  std::uint8_t r2 = static_cast<std::uint8_t>(b0 ^ b1 ^ gf_mul(2, b2) ^ gf_mul(3, b3));
  std::uint8_t r3 = static_cast<std::uint8_t>(gf_mul(3, b0) ^ b1 ^ b2 ^ gf_mul(2, b3));
  return static_cast<std::uint32_t>(r0) | (static_cast<std::uint32_t>(r1) << 8) |
         (static_cast<std::uint32_t>(r2) << 16) | (static_cast<std::uint32_t>(r3) << 24);
}

inline std::uint32_t aes_inv_mixcolumn(std::uint32_t col) {
  std::uint8_t b0 = static_cast<std::uint8_t>(col);
  std::uint8_t b1 = static_cast<std::uint8_t>(col >> 8);
  std::uint8_t b2 = static_cast<std::uint8_t>(col >> 16);
  std::uint8_t b3 = static_cast<std::uint8_t>(col >> 24);
  std::uint8_t r0 = gf_mul(0xE, b0) ^ gf_mul(0xB, b1) ^ gf_mul(0xD, b2) ^ gf_mul(0x9, b3);
  std::uint8_t r1 = gf_mul(0x9, b0) ^ gf_mul(0xE, b1) ^ gf_mul(0xB, b2) ^ gf_mul(0xD, b3);
  std::uint8_t r2 = gf_mul(0xD, b0) ^ gf_mul(0x9, b1) ^ gf_mul(0xE, b2) ^ gf_mul(0xB, b3);
  std::uint8_t r3 = gf_mul(0xB, b0) ^ gf_mul(0xD, b1) ^ gf_mul(0x9, b2) ^ gf_mul(0xE, b3);
  return static_cast<std::uint32_t>(r0) | (static_cast<std::uint32_t>(r1) << 8) |
         (static_cast<std::uint32_t>(r2) << 16) | (static_cast<std::uint32_t>(r3) << 24);
}

// The 64-bit AES instructions view {rs2:rs1} as the 128-bit column state and
// gather the bytes that ShiftRows would bring into the rs1 half.
inline Word64 aes_shiftrows_fwd(Word64 rs2, Word64 rs1) {
  std::array<std::uint8_t, 8> b = {
      get_byte(rs1, 0), get_byte(rs1, 5), get_byte(rs2, 2), get_byte(rs2, 7),
      get_byte(rs1, 4), get_byte(rs2, 1), get_byte(rs2, 6), get_byte(rs1, 3)};
  Word64 out = 0;
  for (unsigned i = 0; i < 8; ++i) out |= static_cast<Word64>(b[i]) << (8 * i);
  return out;
}

inline Word64 aes_shiftrows_inv(Word64 rs2, Word64 rs1) {
  std::array<std::uint8_t, 8> b = {
      get_byte(rs1, 0), get_byte(rs2, 5), get_byte(rs2, 2), get_byte(rs1, 7),
      get_byte(rs1, 4), get_byte(rs1, 1), get_byte(rs2, 6), get_byte(rs2, 3)};
  Word64 out = 0;
  for (unsigned i = 0; i < 8; ++i) out |= static_cast<Word64>(b[i]) << (8 * i);
  return out;
}

inline Word64 aes_apply_sbox(Word64 x, const std::array<std::uint8_t, 256>& box) {
  Word64 out = 0;
  for (unsigned i = 0; i < 8; ++i) {
    out |= static_cast<Word64>(box[get_byte(x, i)]) << (8 * i);
  }
  return out;
}

inline Word64 aes_mix_both(Word64 x) {
  std::uint32_t lo = aes_mixcolumn(static_cast<std::uint32_t>(x));
  std::uint32_t hi = aes_mixcolumn(static_cast<std::uint32_t>(x >> 32));
  return static_cast<Word64>(lo) | (static_cast<Word64>(hi) << 32);
}

inline Word64 aes_inv_mix_both(Word64 x) {
  std::uint32_t lo = aes_inv_mixcolumn(static_cast<std::uint32_t>(x));
  std::uint32_t hi = aes_inv_mixcolumn(static_cast<std::uint32_t>(x >> 32));
  return static_cast<Word64>(lo) | (static_cast<Word64>(hi) << 32);
}

inline std::uint32_t aes_subword_fwd(std::uint32_t x) {
  return static_cast<std::uint32_t>(kAesSbox[x & 0xFF]) |
         (static_cast<std::uint32_t>(kAesSbox[(x >> 8) & 0xFF]) << 8) |
         (static_cast<std::uint32_t>(kAesSbox[(x >> 16) & 0xFF]) << 16) |
         (static_cast<std::uint32_t>(kAesSbox[(x >> 24) & 0xFF]) << 24);
}

inline constexpr std::array<std::uint8_t, 11> kAesRcon = {
    0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36, 0x00};

}  // namespace detail

// Executes one crypto instruction on raw operand values. `imm` is required
// for saes64.ks1 (round number 0..10) and ssm4.* (byte select 0..3) and must
// be absent semantics-wise for everything else (it is ignored there).
// 32-bit results are zero-extended.
inline Word64 exec_crypto(Opcode op, Word64 rs1, Word64 rs2,
                          std::optional<std::uint64_t> imm = std::nullopt) {
  using namespace detail;
  const auto lo32 = [](Word64 x) { return static_cast<std::uint32_t>(x); };
  const auto hi32 = [](Word64 x) { return static_cast<std::uint32_t>(x >> 32); };
  const auto z32 = [](std::uint32_t x) { return static_cast<Word64>(x); };

  switch (op) {
    case Opcode::kSaes64Encs:
      return aes_apply_sbox(aes_shiftrows_fwd(rs2, rs1), kAesSbox);
    case Opcode::kSaes64Encsm:
      return aes_mix_both(aes_apply_sbox(aes_shiftrows_fwd(rs2, rs1), kAesSbox));
    case Opcode::kSaes64Ds:
      return aes_apply_sbox(aes_shiftrows_inv(rs2, rs1), kAesInvSbox);
    case Opcode::kSaes64Dsm:
      return aes_inv_mix_both(aes_apply_sbox(aes_shiftrows_inv(rs2, rs1), kAesInvSbox));
    case Opcode::kSaes64Im:
      return aes_inv_mix_both(rs1);
    case Opcode::kSaes64Ks1: {
      if (!imm || *imm > 10) {
        throw std::invalid_argument("saes64.ks1: round number must be 0..10");
      }
      const unsigned rnum = static_cast<unsigned>(*imm);
      std::uint32_t tmp = hi32(rs1);
      if (rnum != 10) tmp = rotr32(tmp, 8);
      tmp = aes_subword_fwd(tmp);
      tmp ^= kAesRcon[rnum];
      return static_cast<Word64>(tmp) | (static_cast<Word64>(tmp) << 32);
    }
    case Opcode::kSaes64Ks2: {
      std::uint32_t lo = hi32(rs1) ^ lo32(rs2);
      std::uint32_t hi = hi32(rs1) ^ lo32(rs2) ^ hi32(rs2);
      return static_cast<Word64>(lo) | (static_cast<Word64>(hi) << 32);
    }
    case Opcode::kSsm4Ed: {
      if (!imm || *imm > 3) {
        throw std::invalid_argument("ssm4.ed: byte select must be 0..3");
      }
      const unsigned shamt = static_cast<unsigned>(*imm) * 8;
      std::uint32_t x = kSm4Sbox[(rs2 >> shamt) & 0xFF];
      std::uint32_t y = x ^ (x << 8) ^ (x << 2) ^ (x << 18) ^
                        ((x & 0x3F) << 26) ^ ((x & 0xC0) << 10);
      std::uint32_t z = rotl32(y, shamt);
      return z32(z ^ lo32(rs1));
    }
    case Opcode::kSsm4Ks: {
      if (!imm || *imm > 3) {
        throw std::invalid_argument("ssm4.ks: byte select must be 0..3");
      }
      const unsigned shamt = static_cast<unsigned>(*imm) * 8;
      std::uint32_t x = kSm4Sbox[(rs2 >> shamt) & 0xFF];
      std::uint32_t y = x ^ ((x & 0x07) << 29) ^ ((x & 0xFE) << 7) ^
                        ((x & 0x01) << 23) ^ ((x & 0xF8) << 13);
      std::uint32_t z = rotl32(y, shamt);
      return z32(z ^ lo32(rs1));
    }
    case Opcode::kSsm3P0: {
      std::uint32_t x = lo32(rs1);
      return z32(x ^ rotl32(x, 9) ^ rotl32(x, 17));
    }
    case Opcode::kSsm3P1: {
      std::uint32_t x = lo32(rs1);
      return z32(x ^ rotl32(x, 15) ^ rotl32(x, 23));
    }
    case Opcode::kSsha256Sig0: {
      std::uint32_t x = lo32(rs1);
      return z32(rotr32(x, 7) ^ rotr32(x, 18) ^ (x >> 3));
    }
    case Opcode::kSsha256Sig1: {
      std::uint32_t x = lo32(rs1);
      return z32(rotr32(x, 17) ^ rotr32(x, 19) ^ (x >> 10));
    }
    case Opcode::kSsha256Sum0: {
      std::uint32_t x = lo32(rs1);
      return z32(rotr32(x, 2) ^ rotr32(x, 13) ^ rotr32(x, 22));
    }
    case Opcode::kSsha256Sum1: {
      std::uint32_t x = lo32(rs1);
      return z32(rotr32(x, 6) ^ rotr32(x, 11) ^ rotr32(x, 25));
    }
    case Opcode::kSsha512Sig0:
      return rotr64(rs1, 1) ^ rotr64(rs1, 8) ^ (rs1 >> 7);
    case Opcode::kSsha512Sig1:
      return rotr64(rs1, 19) ^ rotr64(rs1, 61) ^ (rs1 >> 6);
    case Opcode::kSsha512Sum0:
      return rotr64(rs1, 28) ^ rotr64(rs1, 34) ^ rotr64(rs1, 39);
    case Opcode::kSsha512Sum1:
      return rotr64(rs1, 14) ^ rotr64(rs1, 18) ^ rotr64(rs1, 41);
    default:
      throw std::invalid_argument("exec_crypto: not a crypto opcode");
  }
}

}  // namespace cryptrisc
