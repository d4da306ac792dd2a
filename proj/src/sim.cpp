#include "agdmm/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace agdmm {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(Errc::BadInput, "bad number '" + s + "' in model spec");
  }
  require(used == s.size(), Errc::BadInput, "bad number '" + s + "' in model spec");
  return value;
}

void check_permutation(const std::vector<std::int32_t>& perm, std::int64_t workers) {
  require(static_cast<std::int64_t>(perm.size()) == workers, Errc::BadInput,
          "permutation length differs from worker count");
  std::vector<bool> seen(perm.size(), false);
  for (auto i : perm) {
    require(i >= 0 && i < workers && !seen[static_cast<std::size_t>(i)], Errc::BadInput,
            "not a permutation of the workers");
    seen[static_cast<std::size_t>(i)] = true;
  }
}

// nearest-rank percentile on an ascending vector
double percentile(const std::vector<double>& sorted, double p) {
  const auto rank = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(sorted.size())));
  return sorted[std::max<std::size_t>(rank, 1) - 1];
}

}  // namespace

StragglerModel StragglerModel::fixed(std::vector<std::int32_t> permutation, std::uint64_t seed) {
  StragglerModel m;
  m.kind = StragglerKind::FixedPermutation;
  m.permutation = std::move(permutation);
  m.seed = seed;
  return m;
}

StragglerModel StragglerModel::shifted_exponential(double tau, double lambda, std::uint64_t seed) {
  require(tau >= 0.0, Errc::BadInput, "tau must be nonnegative");
  require(lambda > 0.0, Errc::BadInput, "lambda must be positive");
  StragglerModel m;
  m.kind = StragglerKind::ShiftedExponential;
  m.shift = tau;
  m.rate = lambda;
  m.seed = seed;
  return m;
}

StragglerModel StragglerModel::bernoulli(double rho, double sigma, std::uint64_t seed) {
  require(rho >= 0.0 && rho <= 1.0, Errc::BadInput, "straggle probability must lie in [0, 1]");
  require(sigma > 1.0, Errc::BadInput, "slow factor must exceed 1");
  StragglerModel m;
  m.kind = StragglerKind::Bernoulli;
  m.straggle_prob = rho;
  m.slow_factor = sigma;
  m.seed = seed;
  return m;
}

std::vector<std::int32_t> identity_permutation(std::int64_t n) {
  std::vector<std::int32_t> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<std::int32_t> reversed_permutation(std::int64_t n) {
  auto out = identity_permutation(n);
  std::reverse(out.begin(), out.end());
  return out;
}

StragglerModel parse_model(const std::string& spec, std::int64_t workers, std::uint64_t seed) {
  const auto colon = spec.find(':');
  require(colon != std::string::npos, Errc::BadInput, "model spec needs '<kind>:<params>'");
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);

  if (kind == "fixed-perm") {
    if (params == "identity") return StragglerModel::fixed(identity_permutation(workers), seed);
    if (params == "reversed") return StragglerModel::fixed(reversed_permutation(workers), seed);
    std::vector<std::int32_t> perm;
    for (const auto& item : split(params, ',')) {
      const double v = parse_number(item);
      perm.push_back(static_cast<std::int32_t>(v));
      require(static_cast<double>(perm.back()) == v, Errc::BadInput,
              "permutation entries must be integers");
    }
    check_permutation(perm, workers);
    return StragglerModel::fixed(std::move(perm), seed);
  }

  double tau = -1.0, lambda = -1.0, p = -1.0, sigma = -1.0;
  for (const auto& item : split(params, ',')) {
    const auto eq = item.find('=');
    require(eq != std::string::npos, Errc::BadInput, "model parameter needs key=value");
    const std::string key = item.substr(0, eq);
    const double value = parse_number(item.substr(eq + 1));
    if (key == "tau")
      tau = value;
    else if (key == "lambda")
      lambda = value;
    else if (key == "p")
      p = value;
    else if (key == "sigma")
      sigma = value;
    else
      fail(Errc::BadInput, "unknown model parameter '" + key + "'");
  }
  if (kind == "shifted-exp") {
    require(tau >= 0.0 && lambda > 0.0, Errc::BadInput, "shifted-exp needs tau>=0 and lambda>0");
    return StragglerModel::shifted_exponential(tau, lambda, seed);
  }
  if (kind == "bernoulli") {
    require(p >= 0.0 && sigma > 1.0, Errc::BadInput, "bernoulli needs p in [0,1] and sigma>1");
    return StragglerModel::bernoulli(p, sigma, seed);
  }
  fail(Errc::BadInput, "unknown straggler model '" + kind + "'");
}

std::vector<double> sample_latencies(const StragglerModel& model, std::int64_t workers,
                                     Xoshiro256StarStar& rng) {
  std::vector<double> lat(static_cast<std::size_t>(workers));
  switch (model.kind) {
    case StragglerKind::FixedPermutation: {
      check_permutation(model.permutation, workers);
      for (std::size_t pos = 0; pos < model.permutation.size(); ++pos)
        lat[static_cast<std::size_t>(model.permutation[pos])] = static_cast<double>(pos + 1);
      break;
    }
    case StragglerKind::ShiftedExponential: {
      for (auto& l : lat) l = model.shift + -std::log(rng.uniform01()) / model.rate;
      break;
    }
    case StragglerKind::Bernoulli: {
      for (auto& l : lat) l = rng.uniform01() < model.straggle_prob ? model.slow_factor : 1.0;
      break;
    }
  }
  return lat;
}

std::vector<std::int32_t> completion_order(const std::vector<double>& latencies) {
  auto order = identity_permutation(static_cast<std::int64_t>(latencies.size()));
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const double la = latencies[static_cast<std::size_t>(a)];
    const double lb = latencies[static_cast<std::size_t>(b)];
    return la != lb ? la < lb : a < b;
  });
  return order;
}

std::vector<SimulationReport> simulate(const CodeScheme& scheme, const Matrix& a, const Matrix& b,
                                       const StragglerModel& model, std::int64_t trials) {
  require(trials >= 1, Errc::BadInput, "need at least one trial");
  const Field& gf = scheme.curve.field();
  const Matrix expect = multiply(gf, a, b);

  std::vector<WorkerResult> all;
  for (const auto& share : encode(scheme, a, b)) all.push_back(worker_multiply(scheme, share));

  const std::int64_t workers = scheme.workers();
  const std::int64_t threshold = scheme.threshold();
  std::vector<SimulationReport> reports;
  reports.reserve(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) {
    auto rng = trial_stream(model.seed, static_cast<std::uint64_t>(t));
    const auto latencies = sample_latencies(model, workers, rng);
    const auto order = completion_order(latencies);

    std::vector<WorkerResult> arrived;
    arrived.reserve(static_cast<std::size_t>(threshold));
    for (std::int64_t i = 0; i < threshold; ++i)
      arrived.push_back(all[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    const auto outcome = decode(scheme, arrived);

    SimulationReport rep;
    rep.workers = workers;
    rep.threshold = threshold;
    rep.completion_times = latencies;
    rep.finish_time = latencies[static_cast<std::size_t>(order[static_cast<std::size_t>(threshold - 1)])];
    rep.responders_used = outcome.report.responders_used;
    rep.decode_ok = outcome.product == expect;
    rep.worker_mults = outcome.report.worker_mults;
    rep.decode_mults = outcome.report.decode_mults;
    reports.push_back(std::move(rep));
  }
  return reports;
}

SpeedupSummary speedup_report(const CodeScheme& scheme, const StragglerModel& model,
                              std::int64_t trials) {
  require(trials >= 100, Errc::BadInput, "speedup summaries need at least 100 trials");
  const std::int64_t workers = scheme.workers();
  const std::int64_t threshold = scheme.threshold();

  std::vector<double> finishes, baselines;
  finishes.reserve(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) {
    auto rng = trial_stream(model.seed, static_cast<std::uint64_t>(t));
    auto latencies = sample_latencies(model, workers, rng);
    std::sort(latencies.begin(), latencies.end());
    finishes.push_back(latencies[static_cast<std::size_t>(threshold - 1)]);
    baselines.push_back(latencies.back());
  }

  SpeedupSummary out;
  out.workers = workers;
  out.threshold = threshold;
  out.rho = static_cast<double>(threshold) / static_cast<double>(workers);
  out.mean_finish = std::accumulate(finishes.begin(), finishes.end(), 0.0) /
                    static_cast<double>(trials);
  out.baseline_mean = std::accumulate(baselines.begin(), baselines.end(), 0.0) /
                      static_cast<double>(trials);
  std::sort(finishes.begin(), finishes.end());
  out.p50 = percentile(finishes, 0.50);
  out.p95 = percentile(finishes, 0.95);
  return out;
}

}  // namespace agdmm
