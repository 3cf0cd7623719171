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

// The simulated machine: 32 x 64-bit registers (x0 hardwired to zero), a
// sparse byte-addressed memory, and an in-order single-issue core with a
// flat latency model (ALU and crypto ops 1 cycle, memory ops 2 cycles,
// branches 1 cycle). Each retired instruction emits one PowerEvent carrying
// the values that crossed the operand and writeback buses that cycle; when
// masking is enabled, crypto instructions place masked values on those buses
// while the architectural result stays the raw value.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cryptrisc/fdl.hpp"
#include "cryptrisc/isa.hpp"
#include "cryptrisc/mcu.hpp"

namespace cryptrisc {

struct PowerEvent {
  std::uint64_t cycle = 0;
  Opcode op = Opcode::kLi;
  Word64 op1 = 0;      // first operand bus
  Word64 op2 = 0;      // second operand bus (immediate for imm-form ops)
  Word64 result = 0;   // writeback bus
  Word64 prev_rd = 0;  // value overwritten in rd (for distance models)
};

struct MachineState {
  std::array<Word64, 32> regs{};
  std::unordered_map<std::uint64_t, std::uint8_t> mem;
  std::uint64_t pc = 0;
  std::uint64_t cycle_count = 0;
  std::uint64_t instret = 0;
  bool masking_enabled = false;
  MaskPolicy policy{};
  PrngState prng = prng_seeded(0);

  Word64 reg(unsigned i) const { return regs[i]; }
  void set_reg(unsigned i, Word64 v) {
    if (i != 0) regs[i] = v;
  }

  std::uint8_t load_byte(std::uint64_t addr) const {
    const auto it = mem.find(addr);
    if (it == mem.end()) {
      throw std::out_of_range("load from uninitialised address 0x" +
                              to_hex(addr));
    }
    return it->second;
  }
  void store_byte(std::uint64_t addr, std::uint8_t v) { mem[addr] = v; }

  Word64 load(std::uint64_t addr, unsigned bytes) const {
    Word64 v = 0;
    for (unsigned i = 0; i < bytes; ++i) {
      v |= static_cast<Word64>(load_byte(addr + i)) << (8 * i);
    }
    return v;
  }
  void store(std::uint64_t addr, Word64 v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i) {
      store_byte(addr + i, static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

 private:
  static std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    do {
      s.insert(s.begin(), digits[v & 0xF]);
      v >>= 4;
    } while (v != 0);
    return s;
  }
};

constexpr unsigned latency_cycles(Opcode op) {
  switch (op) {
    case Opcode::kLbu:
    case Opcode::kLwu:
    case Opcode::kLd:
    case Opcode::kLbuIdx:
    case Opcode::kLwuIdx:
    case Opcode::kSb:
    case Opcode::kSw:
    case Opcode::kSd:
      return 2;
    default:
      return 1;  // ALU, crypto (masked or not) and branches
  }
}

namespace detail {

inline std::uint64_t require_imm(const Instruction& ins) {
  if (!ins.imm) {
    throw std::invalid_argument(std::string(mnemonic(ins.op)) +
                                ": missing immediate");
  }
  return *ins.imm;
}

inline std::uint64_t shift_amount(const Instruction& ins, std::uint64_t limit) {
  const std::uint64_t s = require_imm(ins);
  if (s >= limit) {
    throw std::invalid_argument(std::string(mnemonic(ins.op)) +
                                ": shift amount out of range");
  }
  return s;
}

}  // namespace detail

// Executes the instruction at m.pc, retiring it in one call. Appends one
// PowerEvent to *trace when a trace is supplied.
inline void step(MachineState& m, const std::vector<Instruction>& code,
                 std::vector<PowerEvent>* trace = nullptr) {
  if (m.pc >= code.size()) {
    throw std::runtime_error("pc out of range");
  }
  const Instruction& ins = code[m.pc];
  const Word64 a = m.reg(ins.rs1);
  const Word64 b = m.reg(ins.rs2);

  PowerEvent ev;
  ev.op = ins.op;
  ev.op1 = a;
  ev.op2 = b;
  ev.prev_rd = m.reg(ins.rd);

  std::uint64_t next_pc = m.pc + 1;
  bool writeback = true;
  Word64 result = 0;

  if (is_crypto_op(ins.op)) {
    if (m.masking_enabled) {
      const McuResult r = masked_execute(ins.op, a, b, ins.imm, m.policy, m.prng);
      result = r.raw;
      ev.op1 = r.bus_rs1;
      ev.op2 = r.bus_rs2;
      ev.result = r.bus_rd;
    } else {
      result = exec_crypto(ins.op, a, b, ins.imm);
      ev.result = result;
    }
  } else {
    switch (ins.op) {
      case Opcode::kLi:
        result = detail::require_imm(ins);
        ev.op1 = result;
        ev.op2 = 0;
        break;
      case Opcode::kXor: result = a ^ b; break;
      case Opcode::kAnd: result = a & b; break;
      case Opcode::kOr: result = a | b; break;
      case Opcode::kAdd: result = a + b; break;
      case Opcode::kSub: result = a - b; break;
      case Opcode::kAdd32:
        result = static_cast<std::uint32_t>(a + b);
        break;
      case Opcode::kXori:
        result = a ^ detail::require_imm(ins);
        ev.op2 = *ins.imm;
        break;
      case Opcode::kAndi:
        result = a & detail::require_imm(ins);
        ev.op2 = *ins.imm;
        break;
      case Opcode::kOri:
        result = a | detail::require_imm(ins);
        ev.op2 = *ins.imm;
        break;
      case Opcode::kAddi:
        result = a + detail::require_imm(ins);
        ev.op2 = *ins.imm;
        break;
      case Opcode::kSlli:
        result = a << detail::shift_amount(ins, 64);
        ev.op2 = *ins.imm;
        break;
      case Opcode::kSrli:
        result = a >> detail::shift_amount(ins, 64);
        ev.op2 = *ins.imm;
        break;
      case Opcode::kRotr32:
        result = detail::rotr32(static_cast<std::uint32_t>(a),
                                static_cast<unsigned>(detail::shift_amount(ins, 32)));
        ev.op2 = *ins.imm;
        break;
      case Opcode::kRotr64:
        result = detail::rotr64(a, static_cast<unsigned>(detail::shift_amount(ins, 64)));
        ev.op2 = *ins.imm;
        break;
      case Opcode::kRev8: {
        Word64 v = 0;
        for (unsigned i = 0; i < 8; ++i) {
          v = (v << 8) | ((a >> (8 * i)) & 0xFF);
        }
        result = v;
        break;
      }
      case Opcode::kLbu:
        result = m.load(a + detail::require_imm(ins), 1);
        break;
      case Opcode::kLwu:
        result = m.load(a + detail::require_imm(ins), 4);
        break;
      case Opcode::kLd:
        result = m.load(a + detail::require_imm(ins), 8);
        break;
      case Opcode::kLbuIdx:
        result = m.load(a + b, 1);
        break;
      case Opcode::kLwuIdx:
        result = m.load(a + b, 4);
        break;
      case Opcode::kSb:
        m.store(a + detail::require_imm(ins), b, 1);
        result = b;
        writeback = false;
        break;
      case Opcode::kSw:
        m.store(a + detail::require_imm(ins), b, 4);
        result = b;
        writeback = false;
        break;
      case Opcode::kSd:
        m.store(a + detail::require_imm(ins), b, 8);
        result = b;
        writeback = false;
        break;
      case Opcode::kBeq:
      case Opcode::kBne: {
        const std::uint64_t target = detail::require_imm(ins);
        if (target > code.size()) {
          throw std::runtime_error("branch target out of range");
        }
        const bool taken = (ins.op == Opcode::kBeq) ? (a == b) : (a != b);
        if (taken) next_pc = target;
        writeback = false;
        break;
      }
      default:
        throw std::invalid_argument("unhandled opcode");
    }
    ev.result = result;
  }

  if (writeback) m.set_reg(ins.rd, result);
  m.cycle_count += latency_cycles(ins.op);
  m.instret += 1;
  m.pc = next_pc;
  ev.cycle = m.cycle_count;
  if (trace != nullptr) trace->push_back(ev);
}

inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

struct RunResult {
  MachineState state;
  std::vector<PowerEvent> trace;
};

// Runs to completion (pc == code.size()). Takes the initial state by value
// so callers can replay from a snapshot.
inline RunResult run(MachineState initial, const std::vector<Instruction>& code,
                     std::uint64_t max_steps = kDefaultMaxSteps,
                     bool record_trace = false) {
  RunResult out{std::move(initial), {}};
  std::vector<PowerEvent>* trace = record_trace ? &out.trace : nullptr;
  std::uint64_t steps = 0;
  while (out.state.pc != code.size()) {
    if (steps++ >= max_steps) {
      throw std::runtime_error("instruction limit exceeded");
    }
    step(out.state, code, trace);
  }
  return out;
}

// Program-building shorthand used by the benchmark and campaign generators.
namespace prog {

inline Instruction li(unsigned rd, Word64 imm) {
  return {Opcode::kLi, static_cast<std::uint8_t>(rd), 0, 0, imm};
}
inline Instruction rr(Opcode op, unsigned rd, unsigned rs1, unsigned rs2) {
  return {op, static_cast<std::uint8_t>(rd), static_cast<std::uint8_t>(rs1),
          static_cast<std::uint8_t>(rs2), std::nullopt};
}
inline Instruction ri(Opcode op, unsigned rd, unsigned rs1, std::uint64_t imm) {
  return {op, static_cast<std::uint8_t>(rd), static_cast<std::uint8_t>(rs1), 0,
          imm};
}
inline Instruction crypto(Opcode op, unsigned rd, unsigned rs1, unsigned rs2,
                          std::optional<std::uint64_t> imm = std::nullopt) {
  return {op, static_cast<std::uint8_t>(rd), static_cast<std::uint8_t>(rs1),
          static_cast<std::uint8_t>(rs2), imm};
}
inline Instruction store(Opcode op, unsigned base, unsigned src,
                         std::uint64_t offset) {
  return {op, 0, static_cast<std::uint8_t>(base), static_cast<std::uint8_t>(src),
          offset};
}
inline Instruction branch(Opcode op, unsigned rs1, unsigned rs2,
                          std::uint64_t target) {
  return {op, 0, static_cast<std::uint8_t>(rs1), static_cast<std::uint8_t>(rs2),
          target};
}

}  // namespace prog

}  // namespace cryptrisc
