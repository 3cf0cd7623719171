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

// Synthetic power model. Each PowerEvent contributes one sample: the Hamming
// weights of the two operand buses and the writeback bus, optionally plus the
// Hamming distance across the destination register write, with additive
// Gaussian noise. Noise is generated by Box-Muller over the same LFSR
// generator used for masks (separately seeded), so whole campaigns are
// reproducible from a single seed.

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cryptrisc/mcu.hpp"
#include "cryptrisc/pipeline.hpp"

namespace cryptrisc {

enum class PowerModel {
  kHammingWeight,          // HW(op1) + HW(op2) + HW(result)
  kHammingWeightDistance,  // above + HD(prev_rd, result)
};

inline double hamming_weight(Word64 x) {
  return static_cast<double>(std::popcount(x));
}

inline double leakage_value(const PowerEvent& ev, PowerModel model) {
  double v = hamming_weight(ev.op1) + hamming_weight(ev.op2) +
             hamming_weight(ev.result);
  if (model == PowerModel::kHammingWeightDistance) {
    v += hamming_weight(ev.prev_rd ^ ev.result);
  }
  return v;
}

// Standard-normal sampler: Box-Muller with the sine partner cached. The
// uniform variate maps the top 53 bits of an LFSR word into (0, 1], keeping
// log() finite.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : g_(prng_seeded(seed)) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = to_unit(prng_next(g_));
    const double u2 = to_unit(prng_next(g_));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;

  static double to_unit(std::uint64_t w) {
    return (static_cast<double>(w >> 11) + 1.0) * 0x1.0p-53;
  }

  PrngState g_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// One trace: the leakage samples for every event in order, each with fresh
// N(0, sigma^2) noise.
inline std::vector<double> synthesize_trace(const std::vector<PowerEvent>& events,
                                            PowerModel model, double sigma,
                                            GaussianSampler& noise) {
  std::vector<double> out;
  out.reserve(events.size());
  for (const PowerEvent& ev : events) {
    out.push_back(leakage_value(ev, model) + sigma * noise.next());
  }
  return out;
}

inline std::vector<PowerEvent> events_for_op(const std::vector<PowerEvent>& trace,
                                             Opcode op) {
  std::vector<PowerEvent> out;
  for (const PowerEvent& ev : trace) {
    if (ev.op == op) out.push_back(ev);
  }
  return out;
}

}  // namespace cryptrisc
