#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "agdmm/sim.hpp"

using namespace agdmm;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an agdmm::Error");
  return Errc::BadInput;
}

NumericalSemigroup sg(std::vector<std::int64_t> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}

// 8 workers, threshold 6, GF(4) block products of 4x4 inputs
CodeScheme hermitian_poly_scheme() {
  return scheme_build(ProblemKind::Poly, Curve::hermitian(2), sg({2, 3}), "apery", 2, 2, 8);
}

Matrix sample_input(const Field& gf, std::uint64_t seed) {
  auto rng = trial_stream(seed, 0);
  return random_matrix(gf, 4, 4, rng);
}

}  // namespace

TEST_CASE("permutation helpers and latency assignment") {
  CHECK(identity_permutation(4) == std::vector<std::int32_t>{0, 1, 2, 3});
  CHECK(reversed_permutation(4) == std::vector<std::int32_t>{3, 2, 1, 0});

  // the permutation lists workers in finish order: first listed gets latency 1
  const auto model = StragglerModel::fixed({2, 0, 1});
  auto rng = trial_stream(0, 0);
  const auto lat = sample_latencies(model, 3, rng);
  CHECK(lat == std::vector<double>{2.0, 3.0, 1.0});
  CHECK(completion_order(lat) == std::vector<std::int32_t>{2, 0, 1});

  // latency ties fall back to worker index
  CHECK(completion_order({1.0, 1.0, 0.5}) == std::vector<std::int32_t>{2, 0, 1});

  CHECK(code_of([] { StragglerModel::shifted_exponential(-0.1, 1.0, 0); }) == Errc::BadInput);
  CHECK(code_of([] { StragglerModel::shifted_exponential(0.0, 0.0, 0); }) == Errc::BadInput);
  CHECK(code_of([] { StragglerModel::bernoulli(1.5, 10.0, 0); }) == Errc::BadInput);
  CHECK(code_of([] { StragglerModel::bernoulli(0.5, 1.0, 0); }) == Errc::BadInput);
}

TEST_CASE("model specs parse") {
  const auto ident = parse_model("fixed-perm:identity", 4, 9);
  CHECK(ident.kind == StragglerKind::FixedPermutation);
  CHECK(ident.permutation == identity_permutation(4));
  CHECK(ident.seed == 9);

  CHECK(parse_model("fixed-perm:reversed", 4, 0).permutation == reversed_permutation(4));
  CHECK(parse_model("fixed-perm:1,3,0,2", 4, 0).permutation ==
        std::vector<std::int32_t>{1, 3, 0, 2});

  const auto se = parse_model("shifted-exp:tau=0.5,lambda=2", 4, 7);
  CHECK(se.kind == StragglerKind::ShiftedExponential);
  CHECK(se.shift == 0.5);
  CHECK(se.rate == 2.0);
  CHECK(se.seed == 7);

  const auto be = parse_model("bernoulli:p=0.25,sigma=8", 4, 7);
  CHECK(be.kind == StragglerKind::Bernoulli);
  CHECK(be.straggle_prob == 0.25);
  CHECK(be.slow_factor == 8.0);

  CHECK(code_of([] { parse_model("nonsense", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("uniform:p=1", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("shifted-exp:tau=0.5", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("shifted-exp:tau=x,lambda=1", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("shifted-exp:tau=0.5,scale=1", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("bernoulli:p", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("bernoulli:p=2,sigma=8", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("fixed-perm:0,1,2", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("fixed-perm:0,0,1,2", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("fixed-perm:0,1,2,4", 4, 0); }) == Errc::BadInput);
  CHECK(code_of([] { parse_model("fixed-perm:0,1,2,3.5", 4, 0); }) == Errc::BadInput);
}

TEST_CASE("fixed permutations pick the expected responders") {
  const auto scheme = hermitian_poly_scheme();
  const Field& gf = scheme.curve.field();
  const Matrix a = sample_input(gf, 11);
  const Matrix b = sample_input(gf, 22);

  const auto ident = simulate(scheme, a, b, parse_model("fixed-perm:identity", 8, 0), 1);
  REQUIRE(ident.size() == 1);
  CHECK(ident[0].workers == 8);
  CHECK(ident[0].threshold == 6);
  CHECK(ident[0].completion_times ==
        std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(ident[0].finish_time == 6.0);
  CHECK(ident[0].responders_used == std::vector<std::int32_t>{0, 1, 2, 3, 4, 5});
  CHECK(ident[0].decode_ok);
  CHECK(ident[0].worker_mults > 0);
  CHECK(ident[0].decode_mults > 0);

  const auto rev = simulate(scheme, a, b, parse_model("fixed-perm:reversed", 8, 0), 1);
  CHECK(rev[0].finish_time == 6.0);
  CHECK(rev[0].responders_used == std::vector<std::int32_t>{2, 3, 4, 5, 6, 7});
  CHECK(rev[0].decode_ok);

  const auto scrambled =
      simulate(scheme, a, b, parse_model("fixed-perm:4,7,0,1,6,5,2,3", 8, 0), 1);
  // finish order 4,7,0,1,6,5; worker 2 and 3 straggle
  CHECK(scrambled[0].responders_used == std::vector<std::int32_t>{0, 1, 4, 5, 6, 7});
  CHECK(scrambled[0].decode_ok);
}

TEST_CASE("trials are reproducible from the seed") {
  const auto scheme = hermitian_poly_scheme();
  const Field& gf = scheme.curve.field();
  const Matrix a = sample_input(gf, 1);
  const Matrix b = sample_input(gf, 2);
  const auto model = StragglerModel::shifted_exponential(0.5, 2.0, 42);

  const auto first = simulate(scheme, a, b, model, 20);
  const auto second = simulate(scheme, a, b, model, 20);
  REQUIRE(first.size() == 20);
  for (std::size_t t = 0; t < first.size(); ++t) {
    CHECK(first[t].completion_times == second[t].completion_times);
    CHECK(first[t].finish_time == second[t].finish_time);
    CHECK(first[t].responders_used == second[t].responders_used);
    CHECK(first[t].decode_ok == second[t].decode_ok);
  }

  const auto other = simulate(scheme, a, b, StragglerModel::shifted_exponential(0.5, 2.0, 43), 1);
  CHECK(other[0].completion_times != first[0].completion_times);

  CHECK(code_of([&] { simulate(scheme, a, b, model, 0); }) == Errc::BadInput);
}

TEST_CASE("bernoulli stragglers stretch the tail but not the answer") {
  const auto scheme = scheme_build(ProblemKind::Matdot, Curve::hermitian(2), sg({2, 3}),
                                   "trivial", 2, {}, 8);
  const Field& gf = scheme.curve.field();
  const Matrix a = sample_input(gf, 3);
  const Matrix b = sample_input(gf, 4);

  const auto all_slow = simulate(scheme, a, b, StragglerModel::bernoulli(1.0, 10.0, 5), 1);
  CHECK(all_slow[0].finish_time == 10.0);
  CHECK(all_slow[0].decode_ok);

  const auto none_slow = simulate(scheme, a, b, StragglerModel::bernoulli(0.0, 10.0, 5), 1);
  CHECK(none_slow[0].finish_time == 1.0);
  CHECK(none_slow[0].decode_ok);

  for (const auto& rep : simulate(scheme, a, b, StragglerModel::bernoulli(0.5, 10.0, 6), 50)) {
    CHECK(rep.decode_ok);
    CHECK((rep.finish_time == 1.0 || rep.finish_time == 10.0));
  }
}

TEST_CASE("shifted exponential trials decode from the fastest workers") {
  const auto scheme = hermitian_poly_scheme();
  const Field& gf = scheme.curve.field();
  const Matrix a = sample_input(gf, 7);
  const Matrix b = sample_input(gf, 8);
  const auto model = StragglerModel::shifted_exponential(1.0, 0.5, 2024);

  for (const auto& rep : simulate(scheme, a, b, model, 100)) {
    CHECK(rep.decode_ok);
    for (double t : rep.completion_times) CHECK(t > 1.0);

    auto sorted = rep.completion_times;
    std::sort(sorted.begin(), sorted.end());
    CHECK(rep.finish_time == sorted[5]);

    auto expected = completion_order(rep.completion_times);
    expected.resize(6);
    std::sort(expected.begin(), expected.end());
    CHECK(rep.responders_used == expected);
  }
}

TEST_CASE("speedup summaries") {
  const auto scheme = hermitian_poly_scheme();

  const auto flat = speedup_report(scheme, parse_model("fixed-perm:identity", 8, 0), 100);
  CHECK(flat.workers == 8);
  CHECK(flat.threshold == 6);
  CHECK(flat.rho == doctest::Approx(0.75));
  CHECK(flat.mean_finish == doctest::Approx(6.0));
  CHECK(flat.p50 == doctest::Approx(6.0));
  CHECK(flat.p95 == doctest::Approx(6.0));
  CHECK(flat.baseline_mean == doctest::Approx(8.0));

  const auto model = StragglerModel::shifted_exponential(1.0, 1.0, 99);
  const auto sum = speedup_report(scheme, model, 500);
  CHECK(sum.p50 <= sum.p95);
  CHECK(sum.mean_finish < sum.baseline_mean);
  CHECK(sum.mean_finish > 1.0);

  CHECK(code_of([&] { speedup_report(scheme, model, 99); }) == Errc::BadInput);
}

TEST_CASE("adding workers shortens the wait for a fixed threshold") {
  const Curve rat = Curve::rational(Field(5, 2));
  const auto model = StragglerModel::shifted_exponential(1.0, 1.0, 7);

  // classical poly split, threshold 4, on 10 then 20 of the 25 places
  const auto narrow = scheme_build(ProblemKind::Poly, rat, sg({1}), "classical", 2, 2, 10);
  const auto wide = scheme_build(ProblemKind::Poly, rat, sg({1}), "classical", 2, 2, 20);
  REQUIRE(narrow.threshold() == 4);
  REQUIRE(wide.threshold() == 4);

  const auto slow = speedup_report(narrow, model, 1000);
  const auto fast = speedup_report(wide, model, 1000);
  CHECK(fast.mean_finish < slow.mean_finish);
  CHECK(fast.p50 < slow.p50);
  CHECK(fast.rho == doctest::Approx(0.2));
  CHECK(slow.rho == doctest::Approx(0.4));
  // waiting on everyone gets worse with more workers
  CHECK(fast.baseline_mean > slow.baseline_mean);
}
