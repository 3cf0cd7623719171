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

// Field Detection Layer: a decode-stage classifier that tags each crypto
// instruction with the algebraic structure its datapath computes in, and
// derives from that tag the masking scheme the execute stage must apply.
// The tag is a static property of the opcode (a lookup, not an analysis),
// mirroring how a hardware decode table would emit a 2-bit control signal.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cryptrisc/isa.hpp"

namespace cryptrisc {

enum class FieldTag {
  kGf2,      // pure XOR/rotate networks: linear over GF(2)
  kGf2n,     // S-box datapaths evaluated over GF(2^8)
  kZ2n,      // mixes XOR with modular addition: ring Z/2^n
  kDefault,  // non-crypto / unclassified
};

// Two-bit masking control signal emitted by decode.
enum class MaskMode : std::uint8_t {
  kNone = 0b00,
  kBoolean = 0b01,
  kAffine = 0b10,
  kArithmetic = 0b11,
};

constexpr FieldTag field_tag(Opcode op) {
  switch (op) {
    case Opcode::kSaes64Encs:
    case Opcode::kSaes64Encsm:
    case Opcode::kSaes64Ds:
    case Opcode::kSaes64Dsm:
    case Opcode::kSaes64Im:
    case Opcode::kSaes64Ks1:
    case Opcode::kSaes64Ks2:
    case Opcode::kSsm4Ed:
    case Opcode::kSsm4Ks:
      return FieldTag::kGf2n;
    case Opcode::kSsm3P0:
    case Opcode::kSsha256Sig0:
    case Opcode::kSsha256Sig1:
    case Opcode::kSsha512Sig0:
    case Opcode::kSsha512Sig1:
      return FieldTag::kGf2;
    case Opcode::kSsm3P1:
    case Opcode::kSsha256Sum0:
    case Opcode::kSsha256Sum1:
    case Opcode::kSsha512Sum0:
    case Opcode::kSsha512Sum1:
      return FieldTag::kZ2n;
    default:
      return FieldTag::kDefault;
  }
}

constexpr MaskMode mask_mode_for(FieldTag tag) {
  switch (tag) {
    case FieldTag::kGf2: return MaskMode::kBoolean;
    case FieldTag::kGf2n: return MaskMode::kAffine;
    case FieldTag::kZ2n: return MaskMode::kArithmetic;
    case FieldTag::kDefault: return MaskMode::kNone;
  }
  return MaskMode::kNone;
}

// Width of the domain the masks live in. GF(2^8) datapaths are masked per
// 8-bit lane; XOR networks take one full-width boolean mask; modular-add
// datapaths are masked per word of their native word size.
constexpr unsigned masking_domain_width(Opcode op) {
  switch (field_tag(op)) {
    case FieldTag::kGf2n:
      return 8;
    case FieldTag::kGf2:
      return 64;
    case FieldTag::kZ2n:
      return (op == Opcode::kSsha512Sum0 || op == Opcode::kSsha512Sum1) ? 64 : 32;
    case FieldTag::kDefault:
      return 64;
  }
  return 64;
}

// Per-tag share counts (1 = plain first-order masking, up to 3).
struct MaskPolicy {
  unsigned shares_gf2 = 1;
  unsigned shares_gf2n = 1;
  unsigned shares_z2n = 1;

  unsigned shares_for(FieldTag tag) const {
    switch (tag) {
      case FieldTag::kGf2: return shares_gf2;
      case FieldTag::kGf2n: return shares_gf2n;
      case FieldTag::kZ2n: return shares_z2n;
      case FieldTag::kDefault: return 1;
    }
    return 1;
  }
};

// Parses a flat key=value policy file. Recognised keys: FIELD_GF2,
// FIELD_GF2N, FIELD_Z2N; values must be 1..3. Blank lines and '#' comments
// are skipped; anything else is an error.
inline MaskPolicy parse_policy(std::istream& in) {
  MaskPolicy policy;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("policy line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(val, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != val.size() || n < 1 || n > 3) {
      throw std::invalid_argument("policy line " + std::to_string(lineno) +
                                  ": share count must be 1..3");
    }
    if (key == "FIELD_GF2") {
      policy.shares_gf2 = static_cast<unsigned>(n);
    } else if (key == "FIELD_GF2N") {
      policy.shares_gf2n = static_cast<unsigned>(n);
    } else if (key == "FIELD_Z2N") {
      policy.shares_z2n = static_cast<unsigned>(n);
    } else {
      throw std::invalid_argument("policy line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  return policy;
}

inline MaskPolicy load_policy_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open policy file: " + path);
  return parse_policy(f);
}

// Policy resolution used by the CLI: the CRYPTRISC_POLICY environment
// variable, when set, names a policy file; otherwise all tags get one share.
inline MaskPolicy policy_from_env() {
  const char* path = std::getenv("CRYPTRISC_POLICY");
  if (path == nullptr || *path == '\0') return MaskPolicy{};
  return load_policy_file(path);
}

}  // namespace cryptrisc
