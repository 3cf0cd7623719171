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

// Side-channel evaluation over synthesized traces: Welch-t leakage detection
// (fixed-vs-random) and first-order CPA key recovery against the initial
// AES S-box layer. Campaigns are fully deterministic: every random stream
// (mask PRNG, noise, inputs, group shuffle) is derived from one master seed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cryptrisc/power.hpp"

namespace cryptrisc {

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

// Sentinel for a t statistic whose denominator vanished with unequal means:
// finite so it survives comparisons and serialization, large enough to fail
// any plausible threshold.
inline constexpr double kInfiniteT = 1e300;
inline constexpr double kTvlaThreshold = 4.5;

inline double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean of empty sample");
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Unbiased sample variance (ddof = 1).
inline double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("variance needs n >= 2");
  const double m = mean(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return acc / static_cast<double>(v.size() - 1);
}

inline double welch_t(const std::vector<double>& a, const std::vector<double>& b) {
  const double ma = mean(a), mb = mean(b);
  const double va = sample_variance(a), vb = sample_variance(b);
  const double denom2 = va / static_cast<double>(a.size()) +
                        vb / static_cast<double>(b.size());
  if (denom2 == 0.0) {
    if (ma == mb) return 0.0;
    return ma > mb ? kInfiniteT : -kInfiniteT;
  }
  return (ma - mb) / std::sqrt(denom2);
}

// Pearson correlation; either column constant -> 0 by convention.
inline double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("pearson needs n >= 2");
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

inline double normal_sf(double z) {
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

// Two-sided p-value for a correlation via the Fisher z transform.
inline double fisher_p_value(double r, std::size_t n) {
  if (n < 4) throw std::invalid_argument("fisher p-value needs n >= 4");
  if (std::abs(r) >= 1.0) return 0.0;
  const double z = std::atanh(r) * std::sqrt(static_cast<double>(n - 3));
  return 2.0 * normal_sf(std::abs(z));
}

// ---------------------------------------------------------------------------
// TVLA (fixed vs random Welch t-test)
// ---------------------------------------------------------------------------

struct TvlaResult {
  std::vector<double> t;  // per sample point
  double max_abs_t = 0.0;
  std::size_t n_fixed = 0;
  std::size_t n_random = 0;
};

inline TvlaResult tvla_t_test(const std::vector<std::vector<double>>& fixed,
                              const std::vector<std::vector<double>>& random) {
  if (fixed.size() < 2 || random.size() < 2) {
    throw std::invalid_argument("tvla needs >= 2 traces per group");
  }
  const std::size_t samples = fixed.front().size();
  for (const auto& tr : fixed) {
    if (tr.size() != samples) throw std::invalid_argument("ragged trace matrix");
  }
  for (const auto& tr : random) {
    if (tr.size() != samples) throw std::invalid_argument("ragged trace matrix");
  }
  TvlaResult out;
  out.n_fixed = fixed.size();
  out.n_random = random.size();
  out.t.resize(samples);
  std::vector<double> col_f(fixed.size()), col_r(random.size());
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < fixed.size(); ++i) col_f[i] = fixed[i][s];
    for (std::size_t i = 0; i < random.size(); ++i) col_r[i] = random[i][s];
    out.t[s] = welch_t(col_f, col_r);
    out.max_abs_t = std::max(out.max_abs_t, std::abs(out.t[s]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic stream derivation
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::uint64_t kNoiseStreamTag = 0x6E6F697365ull;    // "noise"
inline constexpr std::uint64_t kInputStreamTag = 0x696E707574ull;    // "input"
inline constexpr std::uint64_t kShuffleStreamTag = 0x7368756666ull;  // "shuff"

// Sequential splitmix64 stream for shuffling and input material.
class SplitMixStream {
 public:
  explicit SplitMixStream(std::uint64_t seed) : x_(seed) {}
  std::uint64_t next() {
    const std::uint64_t v = splitmix64(x_);
    x_ += 1;
    return v;
  }

 private:
  std::uint64_t x_;
};

// Half-fixed / half-random labels in a seeded Fisher-Yates order.
inline std::vector<std::uint8_t> group_labels(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint8_t> g(n, 0);
  for (std::size_t i = 0; i < n / 2; ++i) g[i] = 1;
  SplitMixStream s(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(s.next() % i);
    std::swap(g[i - 1], g[j]);
  }
  return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// TVLA campaign
// ---------------------------------------------------------------------------

inline constexpr Word64 kTvlaFixedRs1 = 0x1122334455667788ull;
inline constexpr Word64 kTvlaFixedRs2 = 0x8877665544332211ull;
// Number of back-to-back executions of the target instruction per trace.
// Short windows keep the multiple-comparison budget of the per-sample max
// small; the window length is a free campaign parameter.
inline constexpr std::size_t kTvlaWindow = 10;

inline std::optional<std::uint64_t> default_crypto_imm(Opcode op) {
  if (op == Opcode::kSaes64Ks1) return 4;
  if (op == Opcode::kSsm4Ed || op == Opcode::kSsm4Ks) return 0;
  return std::nullopt;
}

struct TvlaConfig {
  Opcode target = Opcode::kSaes64Encs;
  bool masked = false;
  std::size_t n_traces = 1000;  // total across both groups
  double sigma = 1.0;
  std::uint64_t seed = 0;
  MaskPolicy policy{};
  PowerModel model = PowerModel::kHammingWeightDistance;
};

struct TvlaCampaignResult {
  TvlaConfig config;
  std::vector<std::uint8_t> group;          // acquisition order; 1 = fixed
  std::vector<std::vector<double>> traces;  // acquisition order
  TvlaResult result;
};

inline std::vector<Instruction> tvla_program(Opcode target, Word64 rs1, Word64 rs2) {
  std::vector<Instruction> code;
  code.push_back(prog::li(1, rs1));
  code.push_back(prog::li(2, rs2));
  for (std::size_t i = 0; i < kTvlaWindow; ++i) {
    code.push_back(prog::crypto(target, 3, 1, 2, default_crypto_imm(target)));
  }
  return code;
}

inline TvlaCampaignResult run_tvla_campaign(const TvlaConfig& cfg) {
  if (!is_crypto_op(cfg.target)) {
    throw std::invalid_argument("tvla target must be a crypto instruction");
  }
  if (cfg.n_traces < 4) throw std::invalid_argument("tvla needs >= 4 traces");

  TvlaCampaignResult out;
  out.config = cfg;
  out.group = detail::group_labels(cfg.n_traces,
                                   splitmix64(cfg.seed ^ detail::kShuffleStreamTag));
  const std::uint64_t noise_base = splitmix64(cfg.seed ^ detail::kNoiseStreamTag);
  const std::uint64_t input_base = splitmix64(cfg.seed ^ detail::kInputStreamTag);

  std::vector<std::vector<double>> fixed, random;
  for (std::size_t i = 0; i < cfg.n_traces; ++i) {
    const bool is_fixed = out.group[i] != 0;
    const Word64 rs1 =
        is_fixed ? kTvlaFixedRs1 : splitmix64(input_base + 2 * i);
    const Word64 rs2 =
        is_fixed ? kTvlaFixedRs2 : splitmix64(input_base + 2 * i + 1);

    MachineState m;
    m.masking_enabled = cfg.masked;
    m.policy = cfg.policy;
    m.prng = prng_seeded(cfg.seed ^ static_cast<std::uint64_t>(i));
    const RunResult rr = run(m, tvla_program(cfg.target, rs1, rs2),
                             kDefaultMaxSteps, true);
    const std::vector<PowerEvent> window = events_for_op(rr.trace, cfg.target);

    GaussianSampler noise(splitmix64(noise_base + i));
    std::vector<double> samples = synthesize_trace(window, cfg.model, cfg.sigma, noise);
    out.traces.push_back(samples);
    (is_fixed ? fixed : random).push_back(std::move(samples));
  }
  out.result = tvla_t_test(fixed, random);
  return out;
}

// ---------------------------------------------------------------------------
// CPA
// ---------------------------------------------------------------------------

// Fixed key used by the CPA campaign (little-endian halves; the attacked
// byte is the low byte of the low half).
inline constexpr Word64 kCpaKeyLo = 0xA6D2AE2816157E2Bull;
inline constexpr Word64 kCpaKeyHi = 0x3C4FCF098815F7ABull;

struct CpaConfig {
  bool masked = false;
  std::size_t n_traces = 2000;
  double sigma = 2.0;
  std::uint64_t seed = 0;
  MaskPolicy policy{};
  PowerModel model = PowerModel::kHammingWeightDistance;
};

struct CpaAttackResult {
  std::array<double, 256> score{};   // max |r| over the window, per key guess
  std::vector<unsigned> ranking;     // guesses by descending score, ties upward
  unsigned best_guess = 0;
  double best_score = 0.0;
  double best_p_value = 1.0;
  unsigned true_key_rank = 0;  // 1-based
  double true_key_score = 0.0;
  double true_key_p_value = 1.0;
};

// First-order CPA with an HW(sbox(pt ^ guess)) hypothesis. `windows` holds
// one row of samples per trace (all rows the same length).
inline CpaAttackResult cpa_attack(const std::vector<std::vector<double>>& windows,
                                  const std::vector<std::uint8_t>& pt_bytes,
                                  std::uint8_t true_key) {
  const std::size_t n = windows.size();
  if (n != pt_bytes.size()) throw std::invalid_argument("cpa: size mismatch");
  if (n < 4) throw std::invalid_argument("cpa needs >= 4 traces");
  const std::size_t samples = windows.front().size();
  if (samples == 0) throw std::invalid_argument("cpa: empty window");
  for (const auto& w : windows) {
    if (w.size() != samples) throw std::invalid_argument("cpa: ragged window");
  }

  CpaAttackResult out;
  std::vector<double> hyp(n), col(n);
  std::array<double, 256> best_r_signed{};
  for (unsigned guess = 0; guess < 256; ++guess) {
    for (std::size_t i = 0; i < n; ++i) {
      hyp[i] = hamming_weight(
          kAesSbox[static_cast<std::uint8_t>(pt_bytes[i] ^ guess)]);
    }
    double best = -1.0, best_signed = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      for (std::size_t i = 0; i < n; ++i) col[i] = windows[i][s];
      const double r = pearson_r(hyp, col);
      if (std::abs(r) > best) {
        best = std::abs(r);
        best_signed = r;
      }
    }
    out.score[guess] = best;
    best_r_signed[guess] = best_signed;
  }

  out.ranking.resize(256);
  std::iota(out.ranking.begin(), out.ranking.end(), 0u);
  std::stable_sort(out.ranking.begin(), out.ranking.end(),
                   [&](unsigned a, unsigned b) {
                     if (out.score[a] != out.score[b]) {
                       return out.score[a] > out.score[b];
                     }
                     return a < b;
                   });
  out.best_guess = out.ranking.front();
  out.best_score = out.score[out.best_guess];
  out.best_p_value = fisher_p_value(best_r_signed[out.best_guess], n);
  const auto it = std::find(out.ranking.begin(), out.ranking.end(),
                            static_cast<unsigned>(true_key));
  out.true_key_rank = static_cast<unsigned>(it - out.ranking.begin()) + 1;
  out.true_key_score = out.score[true_key];
  out.true_key_p_value = fisher_p_value(best_r_signed[true_key], n);
  return out;
}

struct CpaCampaignResult {
  CpaConfig config;
  std::uint8_t true_key_byte = 0;
  std::vector<std::uint8_t> pt_byte0;
  std::vector<std::vector<double>> windows;
  CpaAttackResult attack;
  // Smallest trace-count prefix (multiples of 250) at which the true key
  // ranks first; empty if it never does within the campaign.
  std::optional<std::size_t> min_traces_to_rank1;
};

// Target program: AddRoundKey then the forward S-box layer. Byte 0 of the
// saes64.encs result is sbox(pt[0] ^ key[0]), the classic CPA target.
inline std::vector<Instruction> cpa_program(Word64 pt_lo, Word64 pt_hi) {
  return {
      prog::li(1, pt_lo),
      prog::li(2, pt_hi),
      prog::li(3, kCpaKeyLo),
      prog::li(4, kCpaKeyHi),
      prog::rr(Opcode::kXor, 5, 1, 3),
      prog::rr(Opcode::kXor, 6, 2, 4),
      prog::crypto(Opcode::kSaes64Encs, 7, 5, 6),
  };
}

inline CpaCampaignResult run_cpa_campaign(const CpaConfig& cfg) {
  if (cfg.n_traces < 4) throw std::invalid_argument("cpa needs >= 4 traces");
  CpaCampaignResult out;
  out.config = cfg;
  out.true_key_byte = static_cast<std::uint8_t>(kCpaKeyLo & 0xFF);

  const std::uint64_t noise_base = splitmix64(cfg.seed ^ detail::kNoiseStreamTag);
  const std::uint64_t input_base = splitmix64(cfg.seed ^ detail::kInputStreamTag);

  for (std::size_t i = 0; i < cfg.n_traces; ++i) {
    const Word64 pt_lo = splitmix64(input_base + 2 * i);
    const Word64 pt_hi = splitmix64(input_base + 2 * i + 1);
    out.pt_byte0.push_back(static_cast<std::uint8_t>(pt_lo & 0xFF));

    MachineState m;
    m.masking_enabled = cfg.masked;
    m.policy = cfg.policy;
    m.prng = prng_seeded(cfg.seed ^ static_cast<std::uint64_t>(i));
    const RunResult rr = run(m, cpa_program(pt_lo, pt_hi), kDefaultMaxSteps, true);
    const std::vector<PowerEvent> window =
        events_for_op(rr.trace, Opcode::kSaes64Encs);

    GaussianSampler noise(splitmix64(noise_base + i));
    out.windows.push_back(synthesize_trace(window, cfg.model, cfg.sigma, noise));
  }

  out.attack = cpa_attack(out.windows, out.pt_byte0, out.true_key_byte);
  for (std::size_t k = 250; k <= cfg.n_traces; k += 250) {
    const std::vector<std::vector<double>> w(out.windows.begin(),
                                             out.windows.begin() + k);
    const std::vector<std::uint8_t> p(out.pt_byte0.begin(),
                                      out.pt_byte0.begin() + k);
    const CpaAttackResult a = cpa_attack(w, p, out.true_key_byte);
    if (a.ranking.front() == out.true_key_byte) {
      out.min_traces_to_rank1 = k;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trace export
// ---------------------------------------------------------------------------

// One row per trace: label, per-trace derived seed, then samples with %.9g.
inline void write_trace_csv(std::ostream& os, const std::string& label_name,
                            const std::vector<std::uint8_t>& labels,
                            const std::vector<std::vector<double>>& traces,
                            std::uint64_t master_seed) {
  if (labels.size() != traces.size()) {
    throw std::invalid_argument("csv: label/trace size mismatch");
  }
  std::size_t samples = 0;
  for (const auto& t : traces) samples = std::max(samples, t.size());
  os << label_name << ",seed";
  for (std::size_t s = 0; s < samples; ++s) os << ",s" << s;
  os << "\n";
  char buf[40];
  for (std::size_t i = 0; i < traces.size(); ++i) {
    os << static_cast<unsigned>(labels[i]) << ","
       << (master_seed ^ static_cast<std::uint64_t>(i));
    for (double v : traces[i]) {
      std::snprintf(buf, sizeof buf, "%.9g", v);
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace cryptrisc
