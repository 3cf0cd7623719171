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

// Host-side compositions of the crypto instructions into full primitives
// (AES-128/192/256, SHA-256, SHA-512, SM3, SM4). These call exec_crypto()
// directly — no pipeline, no masking — and exist so the instruction
// semantics can be validated end to end against external test vectors and
// so campaign/benchmark code has a known-good functional model to diff
// simulated programs against.

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "cryptrisc/isa.hpp"

namespace cryptrisc {

namespace detail {

inline Word64 load_le64(const std::uint8_t* p) {
  Word64 v = 0;
  for (unsigned i = 0; i < 8; ++i) v |= static_cast<Word64>(p[i]) << (8 * i);
  return v;
}

inline void store_le64(std::uint8_t* p, Word64 v) {
  for (unsigned i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

inline std::uint32_t load_be32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

inline void store_be32(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v >> 24);
  p[1] = static_cast<std::uint8_t>(v >> 16);
  p[2] = static_cast<std::uint8_t>(v >> 8);
  p[3] = static_cast<std::uint8_t>(v);
}

inline std::uint64_t load_be64(const std::uint8_t* p) {
  return (static_cast<std::uint64_t>(load_be32(p)) << 32) | load_be32(p + 4);
}

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

inline void store_le32(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

constexpr std::uint32_t bswap32(std::uint32_t x) {
  return (x >> 24) | ((x >> 8) & 0x0000FF00u) | ((x << 8) & 0x00FF0000u) | (x << 24);
}

inline void store_be64(std::uint8_t* p, std::uint64_t v) {
  store_be32(p, static_cast<std::uint32_t>(v >> 32));
  store_be32(p + 4, static_cast<std::uint32_t>(v));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// AES
// ---------------------------------------------------------------------------

// Expanded AES key as register-pair round keys: 2 dwords per round key,
// little-endian within each dword, rk[2*r] = low half.
struct AesSchedule {
  std::vector<Word64> rk;
  unsigned rounds = 0;  // 10, 12 or 14
};

inline AesSchedule aes_key_schedule(const std::uint8_t* key, std::size_t key_len) {
  using detail::load_le64;
  const auto ks1 = [](Word64 r, std::uint64_t i) {
    return exec_crypto(Opcode::kSaes64Ks1, r, 0, i);
  };
  const auto ks2 = [](Word64 a, Word64 b) {
    return exec_crypto(Opcode::kSaes64Ks2, a, b);
  };
  AesSchedule s;
  if (key_len == 16) {
    s.rounds = 10;
    Word64 k0 = load_le64(key), k1 = load_le64(key + 8);
    s.rk.push_back(k0);
    s.rk.push_back(k1);
    for (std::uint64_t i = 0; i < 10; ++i) {
      Word64 t = ks1(k1, i);
      k0 = ks2(t, k0);
      k1 = ks2(k0, k1);
      s.rk.push_back(k0);
      s.rk.push_back(k1);
    }
  } else if (key_len == 24) {
    s.rounds = 12;
    Word64 k0 = load_le64(key), k1 = load_le64(key + 8), k2 = load_le64(key + 16);
    s.rk.push_back(k0);
    s.rk.push_back(k1);
    s.rk.push_back(k2);
    for (std::uint64_t i = 0; i < 8; ++i) {
      Word64 t = ks1(k2, i);
      k0 = ks2(t, k0);
      k1 = ks2(k0, k1);
      k2 = ks2(k1, k2);
      s.rk.push_back(k0);
      s.rk.push_back(k1);
      s.rk.push_back(k2);
    }
    s.rk.resize(2 * (s.rounds + 1));  // 26 dwords used; last generated dword spare
  } else if (key_len == 32) {
    s.rounds = 14;
    Word64 k0 = load_le64(key), k1 = load_le64(key + 8);
    Word64 k2 = load_le64(key + 16), k3 = load_le64(key + 24);
    s.rk.push_back(k0);
    s.rk.push_back(k1);
    s.rk.push_back(k2);
    s.rk.push_back(k3);
    for (std::uint64_t i = 0; i < 6; ++i) {
      Word64 t = ks1(k3, i);
      k0 = ks2(t, k0);
      k1 = ks2(k0, k1);
      s.rk.push_back(k0);
      s.rk.push_back(k1);
      t = ks1(k1, 10);  // rnum 10: subword without rotate, rcon 0
      k2 = ks2(t, k2);
      k3 = ks2(k2, k3);
      s.rk.push_back(k2);
      s.rk.push_back(k3);
    }
    Word64 t = ks1(k3, 6);
    k0 = ks2(t, k0);
    k1 = ks2(k0, k1);
    s.rk.push_back(k0);
    s.rk.push_back(k1);
  } else {
    throw std::invalid_argument("aes_key_schedule: key must be 16, 24 or 32 bytes");
  }
  return s;
}

inline void aes_encrypt_block(const AesSchedule& s, const std::uint8_t in[16],
                              std::uint8_t out[16]) {
  using detail::load_le64;
  using detail::store_le64;
  Word64 t0 = load_le64(in) ^ s.rk[0];
  Word64 t1 = load_le64(in + 8) ^ s.rk[1];
  for (unsigned r = 1; r < s.rounds; ++r) {
    Word64 u0 = exec_crypto(Opcode::kSaes64Encsm, t0, t1) ^ s.rk[2 * r];
    Word64 u1 = exec_crypto(Opcode::kSaes64Encsm, t1, t0) ^ s.rk[2 * r + 1];
    t0 = u0;
    t1 = u1;
  }
  Word64 u0 = exec_crypto(Opcode::kSaes64Encs, t0, t1) ^ s.rk[2 * s.rounds];
  Word64 u1 = exec_crypto(Opcode::kSaes64Encs, t1, t0) ^ s.rk[2 * s.rounds + 1];
  store_le64(out, u0);
  store_le64(out + 8, u1);
}

inline void aes_decrypt_block(const AesSchedule& s, const std::uint8_t in[16],
                              std::uint8_t out[16]) {
  using detail::load_le64;
  using detail::store_le64;
  // Equivalent inverse cipher: middle round keys pass through saes64.im.
  Word64 t0 = load_le64(in) ^ s.rk[2 * s.rounds];
  Word64 t1 = load_le64(in + 8) ^ s.rk[2 * s.rounds + 1];
  for (unsigned r = s.rounds - 1; r >= 1; --r) {
    Word64 ik0 = exec_crypto(Opcode::kSaes64Im, s.rk[2 * r], 0);
    Word64 ik1 = exec_crypto(Opcode::kSaes64Im, s.rk[2 * r + 1], 0);
    Word64 u0 = exec_crypto(Opcode::kSaes64Dsm, t0, t1) ^ ik0;
    Word64 u1 = exec_crypto(Opcode::kSaes64Dsm, t1, t0) ^ ik1;
    t0 = u0;
    t1 = u1;
  }
  Word64 u0 = exec_crypto(Opcode::kSaes64Ds, t0, t1) ^ s.rk[0];
  Word64 u1 = exec_crypto(Opcode::kSaes64Ds, t1, t0) ^ s.rk[1];
  store_le64(out, u0);
  store_le64(out + 8, u1);
}

// ---------------------------------------------------------------------------
// SHA-256
// ---------------------------------------------------------------------------

inline constexpr std::array<std::uint32_t, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

inline constexpr std::array<std::uint32_t, 8> kSha256Iv = {
    0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
    0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

inline void sha256_compress(std::array<std::uint32_t, 8>& h,
                            const std::uint8_t block[64]) {
  const auto op32 = [](Opcode op, std::uint32_t x) {
    return static_cast<std::uint32_t>(exec_crypto(op, x, 0));
  };
  std::array<std::uint32_t, 64> w;
  for (unsigned t = 0; t < 16; ++t) w[t] = detail::load_be32(block + 4 * t);
  for (unsigned t = 16; t < 64; ++t) {
    w[t] = op32(Opcode::kSsha256Sig1, w[t - 2]) + w[t - 7] +
           op32(Opcode::kSsha256Sig0, w[t - 15]) + w[t - 16];
  }
  std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
  std::uint32_t e = h[4], f = h[5], g = h[6], hh = h[7];
  for (unsigned t = 0; t < 64; ++t) {
    std::uint32_t ch = (e & f) ^ (~e & g);
    std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
    std::uint32_t t1 = hh + op32(Opcode::kSsha256Sum1, e) + ch + kSha256K[t] + w[t];
    std::uint32_t t2 = op32(Opcode::kSsha256Sum0, a) + maj;
    hh = g; g = f; f = e; e = d + t1;
    d = c; c = b; b = a; a = t1 + t2;
  }
  h[0] += a; h[1] += b; h[2] += c; h[3] += d;
  h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
}

inline void sha256(const std::uint8_t* msg, std::size_t len, std::uint8_t out[32]) {
  std::array<std::uint32_t, 8> h = kSha256Iv;
  std::vector<std::uint8_t> padded(msg, msg + len);
  padded.push_back(0x80);
  while (padded.size() % 64 != 56) padded.push_back(0);
  const std::uint64_t bits = static_cast<std::uint64_t>(len) * 8;
  for (int i = 7; i >= 0; --i) padded.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  for (std::size_t off = 0; off < padded.size(); off += 64) {
    sha256_compress(h, padded.data() + off);
  }
  for (unsigned i = 0; i < 8; ++i) detail::store_be32(out + 4 * i, h[i]);
}

// ---------------------------------------------------------------------------
// SHA-512
// ---------------------------------------------------------------------------

inline constexpr std::array<std::uint64_t, 80> kSha512K = {
    0x428a2f98d728ae22ull, 0x7137449123ef65cdull, 0xb5c0fbcfec4d3b2full,
    0xe9b5dba58189dbbcull, 0x3956c25bf348b538ull, 0x59f111f1b605d019ull,
    0x923f82a4af194f9bull, 0xab1c5ed5da6d8118ull, 0xd807aa98a3030242ull,
    0x12835b0145706fbeull, 0x243185be4ee4b28cull, 0x550c7dc3d5ffb4e2ull,
    0x72be5d74f27b896full, 0x80deb1fe3b1696b1ull, 0x9bdc06a725c71235ull,
    0xc19bf174cf692694ull, 0xe49b69c19ef14ad2ull, 0xefbe4786384f25e3ull,
    0x0fc19dc68b8cd5b5ull, 0x240ca1cc77ac9c65ull, 0x2de92c6f592b0275ull,
    0x4a7484aa6ea6e483ull, 0x5cb0a9dcbd41fbd4ull, 0x76f988da831153b5ull,
    0x983e5152ee66dfabull, 0xa831c66d2db43210ull, 0xb00327c898fb213full,
    0xbf597fc7beef0ee4ull, 0xc6e00bf33da88fc2ull, 0xd5a79147930aa725ull,
    0x06ca6351e003826full, 0x142929670a0e6e70ull, 0x27b70a8546d22ffcull,
    0x2e1b21385c26c926ull, 0x4d2c6dfc5ac42aedull, 0x53380d139d95b3dfull,
    0x650a73548baf63deull, 0x766a0abb3c77b2a8ull, 0x81c2c92e47edaee6ull,
    0x92722c851482353bull, 0xa2bfe8a14cf10364ull, 0xa81a664bbc423001ull,
    0xc24b8b70d0f89791ull, 0xc76c51a30654be30ull, 0xd192e819d6ef5218ull,
    0xd69906245565a910ull, 0xf40e35855771202aull, 0x106aa07032bbd1b8ull,
    0x19a4c116b8d2d0c8ull, 0x1e376c085141ab53ull, 0x2748774cdf8eeb99ull,
    0x34b0bcb5e19b48a8ull, 0x391c0cb3c5c95a63ull, 0x4ed8aa4ae3418acbull,
    0x5b9cca4f7763e373ull, 0x682e6ff3d6b2b8a3ull, 0x748f82ee5defb2fcull,
    0x78a5636f43172f60ull, 0x84c87814a1f0ab72ull, 0x8cc702081a6439ecull,
    0x90befffa23631e28ull, 0xa4506cebde82bde9ull, 0xbef9a3f7b2c67915ull,
    0xc67178f2e372532bull, 0xca273eceea26619cull, 0xd186b8c721c0c207ull,
    0xeada7dd6cde0eb1eull, 0xf57d4f7fee6ed178ull, 0x06f067aa72176fbaull,
    0x0a637dc5a2c898a6ull, 0x113f9804bef90daeull, 0x1b710b35131c471bull,
    0x28db77f523047d84ull, 0x32caab7b40c72493ull, 0x3c9ebe0a15c9bebcull,
    0x431d67c49c100d4cull, 0x4cc5d4becb3e42b6ull, 0x597f299cfc657e2aull,
    0x5fcb6fab3ad6faecull, 0x6c44198c4a475817ull};

inline constexpr std::array<std::uint64_t, 8> kSha512Iv = {
    0x6a09e667f3bcc908ull, 0xbb67ae8584caa73bull, 0x3c6ef372fe94f82bull,
    0xa54ff53a5f1d36f1ull, 0x510e527fade682d1ull, 0x9b05688c2b3e6c1full,
    0x1f83d9abfb41bd6bull, 0x5be0cd19137e2179ull};

inline void sha512_compress(std::array<std::uint64_t, 8>& h,
                            const std::uint8_t block[128]) {
  const auto op64 = [](Opcode op, std::uint64_t x) {
    return exec_crypto(op, x, 0);
  };
  std::array<std::uint64_t, 80> w;
  for (unsigned t = 0; t < 16; ++t) w[t] = detail::load_be64(block + 8 * t);
  for (unsigned t = 16; t < 80; ++t) {
    w[t] = op64(Opcode::kSsha512Sig1, w[t - 2]) + w[t - 7] +
           op64(Opcode::kSsha512Sig0, w[t - 15]) + w[t - 16];
  }
  std::uint64_t a = h[0], b = h[1], c = h[2], d = h[3];
  std::uint64_t e = h[4], f = h[5], g = h[6], hh = h[7];
  for (unsigned t = 0; t < 80; ++t) {
    std::uint64_t ch = (e & f) ^ (~e & g);
    std::uint64_t maj = (a & b) ^ (a & c) ^ (b & c);
    std::uint64_t t1 = hh + op64(Opcode::kSsha512Sum1, e) + ch + kSha512K[t] + w[t];
    std::uint64_t t2 = op64(Opcode::kSsha512Sum0, a) + maj;
    hh = g; g = f; f = e; e = d + t1;
    d = c; c = b; b = a; a = t1 + t2;
  }
  h[0] += a; h[1] += b; h[2] += c; h[3] += d;
  h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
}

inline void sha512(const std::uint8_t* msg, std::size_t len, std::uint8_t out[64]) {
  std::array<std::uint64_t, 8> h = kSha512Iv;
  std::vector<std::uint8_t> padded(msg, msg + len);
  padded.push_back(0x80);
  while (padded.size() % 128 != 112) padded.push_back(0);
  const std::uint64_t bits = static_cast<std::uint64_t>(len) * 8;
  for (unsigned i = 0; i < 8; ++i) padded.push_back(0);  // length < 2^64 bits
  for (int i = 7; i >= 0; --i) padded.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  for (std::size_t off = 0; off < padded.size(); off += 128) {
    sha512_compress(h, padded.data() + off);
  }
  for (unsigned i = 0; i < 8; ++i) detail::store_be64(out + 8 * i, h[i]);
}

// ---------------------------------------------------------------------------
// SM3
// ---------------------------------------------------------------------------

inline constexpr std::array<std::uint32_t, 8> kSm3Iv = {
    0x7380166f, 0x4914b2b9, 0x172442d7, 0xda8a0600,
    0xa96f30bc, 0x163138aa, 0xe38dee4d, 0xb0fb0e4e};

inline void sm3_compress(std::array<std::uint32_t, 8>& v,
                         const std::uint8_t block[64]) {
  using detail::rotl32;
  const auto p0 = [](std::uint32_t x) {
    return static_cast<std::uint32_t>(exec_crypto(Opcode::kSsm3P0, x, 0));
  };
  const auto p1 = [](std::uint32_t x) {
    return static_cast<std::uint32_t>(exec_crypto(Opcode::kSsm3P1, x, 0));
  };
  std::array<std::uint32_t, 68> w;
  for (unsigned t = 0; t < 16; ++t) w[t] = detail::load_be32(block + 4 * t);
  for (unsigned t = 16; t < 68; ++t) {
    w[t] = p1(w[t - 16] ^ w[t - 9] ^ rotl32(w[t - 3], 15)) ^ rotl32(w[t - 13], 7) ^
           w[t - 6];
  }
  std::uint32_t a = v[0], b = v[1], c = v[2], d = v[3];
  std::uint32_t e = v[4], f = v[5], g = v[6], h = v[7];
  for (unsigned j = 0; j < 64; ++j) {
    const std::uint32_t tj = (j < 16) ? 0x79cc4519u : 0x7a879d8au;
    std::uint32_t ss1 = rotl32(rotl32(a, 12) + e + rotl32(tj, j % 32), 7);
    std::uint32_t ss2 = ss1 ^ rotl32(a, 12);
    std::uint32_t ff = (j < 16) ? (a ^ b ^ c) : ((a & b) | (a & c) | (b & c));
    std::uint32_t gg = (j < 16) ? (e ^ f ^ g) : ((e & f) | (~e & g));
    std::uint32_t tt1 = ff + d + ss2 + (w[j] ^ w[j + 4]);
    std::uint32_t tt2 = gg + h + ss1 + w[j];
    d = c; c = rotl32(b, 9); b = a; a = tt1;
    h = g; g = rotl32(f, 19); f = e; e = p0(tt2);
  }
  v[0] ^= a; v[1] ^= b; v[2] ^= c; v[3] ^= d;
  v[4] ^= e; v[5] ^= f; v[6] ^= g; v[7] ^= h;
}

inline void sm3(const std::uint8_t* msg, std::size_t len, std::uint8_t out[32]) {
  std::array<std::uint32_t, 8> v = kSm3Iv;
  std::vector<std::uint8_t> padded(msg, msg + len);
  padded.push_back(0x80);
  while (padded.size() % 64 != 56) padded.push_back(0);
  const std::uint64_t bits = static_cast<std::uint64_t>(len) * 8;
  for (int i = 7; i >= 0; --i) padded.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  for (std::size_t off = 0; off < padded.size(); off += 64) {
    sm3_compress(v, padded.data() + off);
  }
  for (unsigned i = 0; i < 8; ++i) detail::store_be32(out + 4 * i, v[i]);
}

// ---------------------------------------------------------------------------
// SM4
// ---------------------------------------------------------------------------

// The ssm4.* byte-slice transform is engineered so that the standard
// big-endian SM4 byte stream can be consumed with plain little-endian word
// loads: the per-byte shift polynomial is the byte-reflected conjugate of
// SM4's L / L' rotation polynomials. All words below (state, round keys,
// constants) therefore live byte-swapped relative to the textbook values.
inline constexpr std::array<std::uint32_t, 4> kSm4Fk = {0xa3b1bac6, 0x56aa3350,
                                                       0x677d9197, 0xb27022dc};

inline constexpr std::array<std::uint32_t, 32> kSm4Ck = [] {
  std::array<std::uint32_t, 32> ck{};
  for (unsigned i = 0; i < 32; ++i) {
    std::uint32_t w = 0;
    for (unsigned j = 0; j < 4; ++j) {
      w = (w << 8) | static_cast<std::uint32_t>((4 * i + j) * 7 % 256);
    }
    ck[i] = w;
  }
  return ck;
}();

// One SM4 round function application via four byte-sliced ssm4 steps.
inline std::uint32_t sm4_round(Opcode op, std::uint32_t x0, std::uint32_t t) {
  Word64 acc = x0;
  for (std::uint64_t bs = 0; bs < 4; ++bs) {
    acc = exec_crypto(op, acc, t, bs);
  }
  return static_cast<std::uint32_t>(acc);
}

// Round keys in byte-swapped (register) order.
inline std::array<std::uint32_t, 32> sm4_key_schedule(const std::uint8_t key[16]) {
  std::array<std::uint32_t, 36> k;
  for (unsigned i = 0; i < 4; ++i) {
    k[i] = detail::load_le32(key + 4 * i) ^ detail::bswap32(kSm4Fk[i]);
  }
  std::array<std::uint32_t, 32> rk;
  for (unsigned i = 0; i < 32; ++i) {
    k[i + 4] = sm4_round(Opcode::kSsm4Ks, k[i],
                         k[i + 1] ^ k[i + 2] ^ k[i + 3] ^ detail::bswap32(kSm4Ck[i]));
    rk[i] = k[i + 4];
  }
  return rk;
}

inline void sm4_crypt_block(const std::array<std::uint32_t, 32>& rk, bool decrypt,
                            const std::uint8_t in[16], std::uint8_t out[16]) {
  std::array<std::uint32_t, 36> x;
  for (unsigned i = 0; i < 4; ++i) x[i] = detail::load_le32(in + 4 * i);
  for (unsigned i = 0; i < 32; ++i) {
    const std::uint32_t k = decrypt ? rk[31 - i] : rk[i];
    x[i + 4] = sm4_round(Opcode::kSsm4Ed, x[i], x[i + 1] ^ x[i + 2] ^ x[i + 3] ^ k);
  }
  // Reverse-order output; little-endian stores of byte-swapped words emit the
  // standard big-endian stream.
  for (unsigned i = 0; i < 4; ++i) detail::store_le32(out + 4 * i, x[35 - i]);
}

inline void sm4_encrypt_block(const std::array<std::uint32_t, 32>& rk,
                              const std::uint8_t in[16], std::uint8_t out[16]) {
  sm4_crypt_block(rk, false, in, out);
}

inline void sm4_decrypt_block(const std::array<std::uint32_t, 32>& rk,
                              const std::uint8_t in[16], std::uint8_t out[16]) {
  sm4_crypt_block(rk, true, in, out);
}

}  // namespace cryptrisc
