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

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cryptrisc/bench.hpp"
#include "cryptrisc/compose.hpp"
#include "cryptrisc/fdl.hpp"
#include "cryptrisc/mcu.hpp"
#include "cryptrisc/pipeline.hpp"
#include "cryptrisc/sca.hpp"

namespace {

using nlohmann::json;

std::string to_hex(const std::uint8_t* p, std::size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(digits[p[i] >> 4]);
    s.push_back(digits[p[i] & 0xF]);
  }
  return s;
}

std::string to_hex(const std::vector<std::uint8_t>& v) {
  return to_hex(v.data(), v.size());
}

// Effective masking policy: environment file first, then an explicit
// --policy file, then a --shares override applied to every field class.
cryptrisc::MaskPolicy resolve_policy(const std::optional<std::string>& file,
                                     const std::optional<unsigned>& shares) {
  cryptrisc::MaskPolicy p = cryptrisc::policy_from_env();
  if (file) p = cryptrisc::load_policy_file(*file);
  if (shares) {
    if (*shares < 1 || *shares > cryptrisc::kMaxShares) {
      throw std::invalid_argument("--shares must be 1..3");
    }
    p.shares_gf2 = p.shares_gf2n = p.shares_z2n = *shares;
  }
  return p;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << j.dump(2) << "\n";
}

void dump_traces_file(const std::string& path, const std::string& label_name,
                      const std::vector<std::uint8_t>& labels,
                      const std::vector<std::vector<double>>& traces,
                      std::uint64_t seed) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  cryptrisc::write_trace_csv(f, label_name, labels, traces, seed);
}

// --- selftest ---------------------------------------------------------------

int run_selftest(bool inject_fault) {
  using namespace cryptrisc;
  int failures = 0;
  const auto check = [&](const char* name, bool ok) {
    std::printf("selftest: %-22s %s\n", name, ok ? "ok" : "FAILED");
    if (!ok) ++failures;
  };

  std::uint8_t buf[64];

  // Cipher known answers (published vectors).
  {
    std::uint8_t key[32], pt[16];
    for (int i = 0; i < 32; ++i) key[i] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < 16; ++i) pt[i] = static_cast<std::uint8_t>(i * 0x11);
    std::string expect128 = "69c4e0d86a7b0430d8cdb78070b4c55a";
    if (inject_fault) expect128[0] = 'f';  // deliberate corruption
    aes_encrypt_block(aes_key_schedule(key, 16), pt, buf);
    check("aes128 kat", to_hex(buf, 16) == expect128);
    aes_encrypt_block(aes_key_schedule(key, 24), pt, buf);
    check("aes192 kat", to_hex(buf, 16) == "dda97ca4864cdfe06eaf70a0ec0d7191");
    aes_encrypt_block(aes_key_schedule(key, 32), pt, buf);
    check("aes256 kat", to_hex(buf, 16) == "8ea2b7ca516745bfeafc49904b496089");

    const std::uint8_t sk[16] = {0x01, 0x23, 0x45, 0x67, 0x89, 0xab, 0xcd, 0xef,
                                 0xfe, 0xdc, 0xba, 0x98, 0x76, 0x54, 0x32, 0x10};
    sm4_encrypt_block(sm4_key_schedule(sk), sk, buf);
    check("sm4 kat", to_hex(buf, 16) == "681edf34d206965e86b3e94f536e4246");
  }

  // Hash known answers for "abc".
  {
    const std::uint8_t abc[3] = {'a', 'b', 'c'};
    sha256(abc, 3, buf);
    check("sha256 kat",
          to_hex(buf, 32) ==
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    sha512(abc, 3, buf);
    check("sha512 kat",
          to_hex(buf, 64) ==
              "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
              "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f");
    sm3(abc, 3, buf);
    check("sm3 kat",
          to_hex(buf, 32) ==
              "66c7f0f462eeedd9d1f2d46bdc10e4e24167c4875cf2f7a2297da02b8f4ba8e0");
  }

  // Masked execution must be transparent for every instruction.
  {
    bool ok = true;
    PrngState prng = prng_seeded(7);
    MaskPolicy pol;
    pol.shares_gf2 = 2;
    pol.shares_gf2n = 2;
    pol.shares_z2n = 2;
    for (Opcode op : kCryptoOpcodes) {
      for (int k = 0; k < 8 && ok; ++k) {
        const Word64 a = prng_next(prng);
        const Word64 b = prng_next(prng);
        const auto imm = default_crypto_imm(op);
        const McuResult r = masked_execute(op, a, b, imm, pol, prng);
        if (r.raw != exec_crypto(op, a, b, imm)) ok = false;
      }
    }
    check("masking transparent", ok);
  }

  // End-to-end pipeline: AES-128 and SM4 one-block programs, both
  // implementations, masked and unmasked (output equality enforced inside).
  {
    bool ok = true;
    try {
      for (const char* n : {"aes128", "sm4"}) {
        const BenchCase bc = default_benchmark(n);
        run_benchmark(bc, false);
        run_benchmark(bc, true, MaskPolicy{}, 99);
      }
    } catch (const std::exception&) {
      ok = false;
    }
    check("pipeline benchmarks", ok);
  }

  if (failures == 0) {
    std::printf("selftest: all checks passed\n");
    return 0;
  }
  std::printf("selftest: %d check(s) failed\n", failures);
  return 1;
}

// --- bench ------------------------------------------------------------------

int run_bench(const std::vector<std::string>& names, bool masked,
              const cryptrisc::MaskPolicy& policy, std::uint64_t seed,
              const std::optional<std::string>& json_path) {
  using namespace cryptrisc;
  json report = json::array();
  std::printf("benchmark,baseline_cycles,accel_cycles,speedup,output\n");
  for (const std::string& name : names) {
    const BenchCase bc = default_benchmark(name);
    const BenchResult r = run_benchmark(bc, masked, policy, seed);
    std::printf("%s,%llu,%llu,%.4f,%s\n", name.c_str(),
                static_cast<unsigned long long>(r.baseline_cycles),
                static_cast<unsigned long long>(r.accel_cycles), r.speedup,
                to_hex(r.output).c_str());
    report.push_back({{"benchmark", name},
                      {"baseline_cycles", r.baseline_cycles},
                      {"accel_cycles", r.accel_cycles},
                      {"speedup", r.speedup},
                      {"masked", masked},
                      {"output", to_hex(r.output)}});
  }
  if (json_path) write_json_file(*json_path, report);
  return 0;
}

// --- tvla -------------------------------------------------------------------

int run_tvla(const std::string& target_name, bool masked, std::size_t n,
             double sigma, std::uint64_t seed, const cryptrisc::MaskPolicy& policy,
             const std::optional<std::string>& json_path,
             const std::optional<std::string>& traces_path) {
  using namespace cryptrisc;
  const auto op = parse_crypto_mnemonic(target_name);
  if (!op) {
    std::fprintf(stderr, "unknown instruction: %s (try --list)\n",
                 target_name.c_str());
    return 1;
  }
  TvlaConfig cfg;
  cfg.target = *op;
  cfg.masked = masked;
  cfg.n_traces = n;
  cfg.sigma = sigma;
  cfg.seed = seed;
  cfg.policy = policy;
  const TvlaCampaignResult res = run_tvla_campaign(cfg);
  const bool leaky = res.result.max_abs_t > kTvlaThreshold;
  std::printf("tvla %s %s: n=%zu sigma=%g seed=%llu max|t|=%.3f threshold=%.1f -> %s\n",
              target_name.c_str(), masked ? "masked" : "unmasked", n, sigma,
              static_cast<unsigned long long>(seed), res.result.max_abs_t,
              kTvlaThreshold, leaky ? "LEAKAGE DETECTED" : "no leakage detected");
  if (json_path) {
    write_json_file(*json_path,
                    json{{"target", target_name},
                         {"masked", masked},
                         {"n_traces", n},
                         {"sigma", sigma},
                         {"seed", seed},
                         {"threshold", kTvlaThreshold},
                         {"max_abs_t", res.result.max_abs_t},
                         {"leakage_detected", leaky},
                         {"n_fixed", res.result.n_fixed},
                         {"n_random", res.result.n_random},
                         {"t", res.result.t}});
  }
  if (traces_path) {
    dump_traces_file(*traces_path, "fixed", res.group, res.traces, seed);
  }
  return 0;
}

// --- cpa --------------------------------------------------------------------

int run_cpa(bool masked, std::size_t n, double sigma, std::uint64_t seed,
            const cryptrisc::MaskPolicy& policy,
            const std::optional<std::string>& json_path,
            const std::optional<std::string>& traces_path) {
  using namespace cryptrisc;
  CpaConfig cfg;
  cfg.masked = masked;
  cfg.n_traces = n;
  cfg.sigma = sigma;
  cfg.seed = seed;
  cfg.policy = policy;
  const CpaCampaignResult res = run_cpa_campaign(cfg);
  std::printf("cpa %s: n=%zu sigma=%g seed=%llu\n", masked ? "masked" : "unmasked",
              n, sigma, static_cast<unsigned long long>(seed));
  std::printf("  true key byte  0x%02x  rank %u  |r|=%.4f  p=%.4g\n",
              res.true_key_byte, res.attack.true_key_rank,
              res.attack.true_key_score, res.attack.true_key_p_value);
  std::printf("  best guess     0x%02x  |r|=%.4f  p=%.4g\n", res.attack.best_guess,
              res.attack.best_score, res.attack.best_p_value);
  if (res.min_traces_to_rank1) {
    std::printf("  recovered with %zu traces\n", *res.min_traces_to_rank1);
  } else {
    std::printf("  key not recovered within %zu traces\n", n);
  }
  if (json_path) {
    json j{{"masked", masked},
           {"n_traces", n},
           {"sigma", sigma},
           {"seed", seed},
           {"true_key_byte", res.true_key_byte},
           {"true_key_rank", res.attack.true_key_rank},
           {"true_key_score", res.attack.true_key_score},
           {"true_key_p_value", res.attack.true_key_p_value},
           {"best_guess", res.attack.best_guess},
           {"best_score", res.attack.best_score},
           {"best_p_value", res.attack.best_p_value},
           {"scores", res.attack.score}};
    if (res.min_traces_to_rank1) {
      j["min_traces_to_rank1"] = *res.min_traces_to_rank1;
    } else {
      j["min_traces_to_rank1"] = nullptr;
    }
    write_json_file(*json_path, j);
  }
  if (traces_path) {
    dump_traces_file(*traces_path, "pt_byte0", res.pt_byte0, res.windows, seed);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CryptRISC scalar-crypto simulator"};
  app.require_subcommand(1);

  // selftest
  bool inject_fault = false;
  CLI::App* sc_self = app.add_subcommand("selftest", "run built-in known-answer checks");
  sc_self->add_flag("--inject-fault", inject_fault,
                    "corrupt one expected value (harness verification)");

  // bench
  std::string bench_name;
  bool bench_all = false;
  std::string bench_masking = "off";
  std::optional<std::string> bench_policy_file;
  std::optional<unsigned> bench_shares;
  std::uint64_t bench_seed = 1;
  std::optional<std::string> bench_json;
  CLI::App* sc_bench = app.add_subcommand("bench", "cycle-count benchmarks");
  sc_bench->add_option("name", bench_name, "benchmark name");
  sc_bench->add_flag("--all", bench_all, "run every benchmark");
  sc_bench->add_option("--masking", bench_masking, "on|off (default off)")
      ->check(CLI::IsMember({"on", "off"}));
  sc_bench->add_option("--policy", bench_policy_file, "masking policy file");
  sc_bench->add_option("--shares", bench_shares, "shares per operand (1..3)");
  sc_bench->add_option("--seed", bench_seed, "PRNG seed for masked runs");
  sc_bench->add_option("--json", bench_json, "write JSON report to file");

  // tvla
  std::string tvla_target;
  bool tvla_list = false;
  bool tvla_masked = false;
  bool tvla_unmasked = false;
  std::size_t tvla_n = 2000;
  double tvla_sigma = 1.0;
  std::optional<std::uint64_t> tvla_seed;
  std::optional<unsigned> tvla_shares;
  std::optional<std::string> tvla_policy_file;
  std::optional<std::string> tvla_json;
  std::optional<std::string> tvla_traces;
  CLI::App* sc_tvla = app.add_subcommand("tvla", "fixed-vs-random Welch t-test");
  sc_tvla->add_option("instruction", tvla_target, "target instruction mnemonic");
  sc_tvla->add_flag("--list", tvla_list, "list instrumentable instructions");
  sc_tvla->add_flag("--masked", tvla_masked, "run with masking enabled");
  sc_tvla->add_flag("--unmasked", tvla_unmasked, "run with masking disabled (default)");
  sc_tvla->add_option("--n", tvla_n, "total traces across both groups");
  sc_tvla->add_option("--sigma", tvla_sigma, "Gaussian noise sigma");
  sc_tvla->add_option("--seed", tvla_seed, "campaign seed (required)");
  sc_tvla->add_option("--shares", tvla_shares, "shares per operand (1..3)");
  sc_tvla->add_option("--policy", tvla_policy_file, "masking policy file");
  sc_tvla->add_option("--json", tvla_json, "write JSON report to file");
  sc_tvla->add_option("--dump-traces", tvla_traces, "write trace matrix CSV to file");

  // cpa
  bool cpa_masked = false;
  bool cpa_unmasked = false;
  std::size_t cpa_n = 2000;
  double cpa_sigma = 2.0;
  std::optional<std::uint64_t> cpa_seed;
  std::optional<unsigned> cpa_shares;
  std::optional<std::string> cpa_policy_file;
  std::optional<std::string> cpa_json;
  std::optional<std::string> cpa_traces;
  CLI::App* sc_cpa = app.add_subcommand("cpa", "first-round correlation attack");
  sc_cpa->add_flag("--masked", cpa_masked, "run with masking enabled");
  sc_cpa->add_flag("--unmasked", cpa_unmasked, "run with masking disabled (default)");
  sc_cpa->add_option("--n", cpa_n, "number of traces");
  sc_cpa->add_option("--sigma", cpa_sigma, "Gaussian noise sigma");
  sc_cpa->add_option("--seed", cpa_seed, "campaign seed (required)");
  sc_cpa->add_option("--shares", cpa_shares, "shares per operand (1..3)");
  sc_cpa->add_option("--policy", cpa_policy_file, "masking policy file");
  sc_cpa->add_option("--json", cpa_json, "write JSON report to file");
  sc_cpa->add_option("--dump-traces", cpa_traces, "write trace matrix CSV to file");

  // vectors
  CLI::App* sc_vec = app.add_subcommand("vectors", "print built-in test vectors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc_self->parsed()) return run_selftest(inject_fault);

    if (sc_bench->parsed()) {
      std::vector<std::string> names;
      if (bench_all) {
        names = cryptrisc::benchmark_names();
      } else if (!bench_name.empty()) {
        names = {bench_name};
      } else {
        std::fprintf(stderr, "bench: give a benchmark name or --all\n");
        return 1;
      }
      return run_bench(names, bench_masking == "on",
                       resolve_policy(bench_policy_file, bench_shares),
                       bench_seed, bench_json);
    }

    if (sc_tvla->parsed()) {
      if (tvla_list) {
        for (cryptrisc::Opcode op : cryptrisc::kCryptoOpcodes) {
          std::printf("%s\n", std::string(cryptrisc::mnemonic(op)).c_str());
        }
        return 0;
      }
      if (tvla_target.empty()) {
        std::fprintf(stderr, "tvla: give an instruction mnemonic or --list\n");
        return 1;
      }
      if (tvla_masked && tvla_unmasked) {
        std::fprintf(stderr, "tvla: --masked and --unmasked are exclusive\n");
        return 1;
      }
      if (!tvla_seed) {
        std::fprintf(stderr, "tvla: --seed is required for campaigns\n");
        return 1;
      }
      return run_tvla(tvla_target, tvla_masked, tvla_n, tvla_sigma, *tvla_seed,
                      resolve_policy(tvla_policy_file, tvla_shares), tvla_json,
                      tvla_traces);
    }

    if (sc_cpa->parsed()) {
      if (cpa_masked && cpa_unmasked) {
        std::fprintf(stderr, "cpa: --masked and --unmasked are exclusive\n");
        return 1;
      }
      if (!cpa_seed) {
        std::fprintf(stderr, "cpa: --seed is required for campaigns\n");
        return 1;
      }
      return run_cpa(cpa_masked, cpa_n, cpa_sigma, *cpa_seed,
                     resolve_policy(cpa_policy_file, cpa_shares), cpa_json,
                     cpa_traces);
    }

    if (sc_vec->parsed()) {
      for (const std::string& name : cryptrisc::benchmark_names()) {
        const cryptrisc::BenchCase bc = cryptrisc::default_benchmark(name);
        std::printf("%-8s %s\n", name.c_str(), to_hex(bc.expected).c_str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
