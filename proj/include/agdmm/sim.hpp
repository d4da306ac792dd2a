#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agdmm/codec.hpp"
#include "agdmm/rng.hpp"

namespace agdmm {

enum class StragglerKind { FixedPermutation, ShiftedExponential, Bernoulli };

// Per-worker latency model. FixedPermutation assigns latency pos+1 to worker
// permutation[pos], so the permutation lists workers in finish order. The
// other two sample independently per worker from the trial's RNG stream.
struct StragglerModel {
  StragglerKind kind = StragglerKind::FixedPermutation;
  std::uint64_t seed = 0;
  std::vector<std::int32_t> permutation;
  double shift = 0.0;          // shifted exponential tau >= 0
  double rate = 1.0;           // shifted exponential lambda > 0
  double straggle_prob = 0.0;  // bernoulli rho in [0, 1]
  double slow_factor = 10.0;   // bernoulli sigma > 1

  static StragglerModel fixed(std::vector<std::int32_t> permutation, std::uint64_t seed = 0);
  static StragglerModel shifted_exponential(double tau, double lambda, std::uint64_t seed);
  static StragglerModel bernoulli(double rho, double sigma, std::uint64_t seed);
};

std::vector<std::int32_t> identity_permutation(std::int64_t n);
std::vector<std::int32_t> reversed_permutation(std::int64_t n);

// "fixed-perm:identity|reversed|<i,j,...>", "shifted-exp:tau=..,lambda=..",
// "bernoulli:p=..,sigma=..". `workers` materializes the named permutations.
StragglerModel parse_model(const std::string& spec, std::int64_t workers, std::uint64_t seed);

std::vector<double> sample_latencies(const StragglerModel& model, std::int64_t workers,
                                     Xoshiro256StarStar& rng);
// Worker indices ordered by (latency, index).
std::vector<std::int32_t> completion_order(const std::vector<double>& latencies);

struct SimulationReport {
  std::int64_t workers = 0;
  std::int64_t threshold = 0;
  std::vector<double> completion_times;  // indexed by worker
  double finish_time = 0.0;              // threshold-th order statistic
  std::vector<std::int32_t> responders_used;
  bool decode_ok = false;
  std::uint64_t worker_mults = 0;
  std::uint64_t decode_mults = 0;
};

// One report per trial; trial t draws latencies from trial_stream(seed, t),
// decodes from the first `threshold` finishers and checks the product
// against the schoolbook result.
std::vector<SimulationReport> simulate(const CodeScheme& scheme, const Matrix& a, const Matrix& b,
                                       const StragglerModel& model, std::int64_t trials);

struct SpeedupSummary {
  std::int64_t workers = 0;
  std::int64_t threshold = 0;
  double rho = 0.0;  // threshold / workers
  double mean_finish = 0.0;
  double p50 = 0.0;
  double p95 = 0.0;
  double baseline_mean = 0.0;  // waiting for every worker
};

SpeedupSummary speedup_report(const CodeScheme& scheme, const StragglerModel& model,
                              std::int64_t trials);

}  // namespace agdmm
