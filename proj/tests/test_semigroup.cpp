#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "agdmm/rng.hpp"
#include "agdmm/semigroup.hpp"

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

}  // namespace

TEST_CASE("basic invariants of <2,3> and <3,4>") {
  auto s23 = NumericalSemigroup::from_generators({2, 3});
  CHECK(s23.conductor() == 2);
  CHECK(s23.genus() == 1);
  CHECK(s23.left_part_size() == 1);
  CHECK(s23.multiplicity() == 2);
  CHECK(s23.gaps() == std::vector<std::int64_t>{1});
  CHECK(s23.is_sparse());

  auto s34 = NumericalSemigroup::from_generators({3, 4});
  CHECK(s34.conductor() == 6);
  CHECK(s34.genus() == 3);
  CHECK(s34.left_part_size() == 3);
  CHECK(s34.multiplicity() == 3);
  CHECK(s34.gaps() == std::vector<std::int64_t>{1, 2, 5});
  CHECK_FALSE(s34.is_sparse());
  CHECK(s34.elements_up_to(10) == std::vector<std::int64_t>{0, 3, 4, 6, 7, 8, 9, 10});
  CHECK(s34.contains(-1) == false);
  CHECK(s34.leq(3, 7));        // 4 in S
  CHECK_FALSE(s34.leq(3, 5));  // 2 not in S
  CHECK_FALSE(s34.leq(5, 3));
}

TEST_CASE("the naturals as <1>") {
  auto nat = NumericalSemigroup::from_generators({1});
  CHECK(nat.conductor() == 0);
  CHECK(nat.genus() == 0);
  CHECK(nat.gaps().empty());
  CHECK(nat.multiplicity() == 1);
  CHECK(nat.is_sparse());
  auto prof = nat.delta_profile();
  CHECK(prof.domain == std::vector<std::int64_t>{0});
  CHECK(prof.values == std::vector<std::int64_t>{0});
  CHECK(prof.argmax == 0);
  CHECK(prof.max_value == 0);
  CHECK(code_of([&] { nat.phi(0); }) == Errc::OutOfRange);
}

TEST_CASE("generator validation") {
  CHECK(code_of([] { NumericalSemigroup::from_generators({}); }) == Errc::BadGenerators);
  CHECK(code_of([] { NumericalSemigroup::from_generators({0, 3}); }) == Errc::BadGenerators);
  CHECK(code_of([] { NumericalSemigroup::from_generators({2, 4}); }) == Errc::GcdNotOne);
  CHECK(code_of([] { NumericalSemigroup::from_generators({3, 3, 4}); }) == Errc::DuplicateElement);
}

TEST_CASE("redundant generators define the same semigroup") {
  auto a = NumericalSemigroup::from_generators({2, 3, 7});
  auto b = NumericalSemigroup::from_generators({2, 3});
  CHECK(a == b);
  CHECK(a.generators() == std::vector<std::int64_t>{2, 3, 7});
}

TEST_CASE("apery sets") {
  auto s23 = NumericalSemigroup::from_generators({2, 3});
  CHECK(s23.apery(2) == std::vector<std::int64_t>{0, 3});
  CHECK(s23.apery(3) == std::vector<std::int64_t>{0, 4, 2});
  auto s34 = NumericalSemigroup::from_generators({3, 4});
  CHECK(s34.apery(3) == std::vector<std::int64_t>{0, 4, 8});
  CHECK(code_of([&] { s34.apery(5); }) == Errc::NotInSemigroup);
  CHECK(code_of([&] { s34.apery(0); }) == Errc::NotInSemigroup);
}

TEST_CASE("tail sizes and delta profile of <3,4>") {
  auto s = NumericalSemigroup::from_generators({3, 4});
  CHECK(s.tail_size(0) == 3);
  CHECK(s.tail_size(3) == 2);
  CHECK(s.tail_size(4) == 1);
  CHECK(s.tail_size(6) == 0);
  CHECK(code_of([&] { s.tail_size(1); }) == Errc::InvalidDelta);  // gap
  CHECK(code_of([&] { s.tail_size(7); }) == Errc::InvalidDelta);  // above c
  auto prof = s.delta_profile();
  CHECK(prof.domain == std::vector<std::int64_t>{0, 3, 4, 6});
  CHECK(prof.values == std::vector<std::int64_t>{6, 7, 6, 6});
  CHECK(prof.max_value == 7);
  CHECK(prof.argmax == 3);
  CHECK(prof.argmax_upper_half == 3);
}

TEST_CASE("delta ties break toward the largest element") {
  auto s = NumericalSemigroup::from_generators({2, 3});
  auto prof = s.delta_profile();
  CHECK(prof.domain == std::vector<std::int64_t>{0, 2});
  CHECK(prof.values == std::vector<std::int64_t>{2, 2});
  CHECK(prof.argmax == 2);
  CHECK(prof.argmax_upper_half == 2);
}

TEST_CASE("sparse semigroups put the delta maximum at the conductor") {
  for (auto gens : {std::vector<std::int64_t>{2, 3}, {3, 4, 5}, {2, 5}, {3, 5, 7}}) {
    auto s = NumericalSemigroup::from_generators(gens);
    REQUIRE(s.is_sparse());
    auto prof = s.delta_profile();
    CHECK(prof.argmax == s.conductor());
    CHECK(prof.max_value == s.conductor());
  }
}

TEST_CASE("phi is an order-reversing gap-flipping involution") {
  auto s = NumericalSemigroup::from_generators({3, 4});
  CHECK(s.phi(0) == 5);
  CHECK(s.phi(5) == 0);
  CHECK(s.phi(3) == 2);
  const std::int64_t c = s.conductor();
  for (std::int64_t x = 0; x < c; ++x) {
    CHECK(s.phi(s.phi(x)) == x);
    CHECK(s.contains(x) == !s.contains(s.phi(x)));
    for (std::int64_t y = 0; y < c; ++y) CHECK(s.leq(x, y) == s.leq(s.phi(y), s.phi(x)));
  }
  CHECK(code_of([&] { s.phi(6); }) == Errc::OutOfRange);
  CHECK(code_of([&] { s.phi(-1); }) == Errc::OutOfRange);
}

TEST_CASE("hermitian semigroups <q, q+1>") {
  auto h4 = NumericalSemigroup::hermitian(4);
  CHECK(h4.generators() == std::vector<std::int64_t>{4, 5});
  CHECK(h4.conductor() == 12);
  CHECK(h4.genus() == 6);
  CHECK(h4.left_part_size() == 6);
  CHECK(h4.elements_up_to(11) == std::vector<std::int64_t>{0, 4, 5, 8, 9, 10});
  // n(kq) = (q-1-k)(q+k)/2
  CHECK(h4.tail_size(0) == 6);
  CHECK(h4.tail_size(4) == 5);
  CHECK(h4.tail_size(8) == 3);
  CHECK(h4.delta_profile().argmax == 8);  // q*ceil((q-1)/2)

  auto h5 = NumericalSemigroup::hermitian(5);
  CHECK(h5.conductor() == 20);
  CHECK(h5.genus() == 10);
  CHECK_FALSE(h5.is_sparse());
  CHECK(h5.delta_profile().argmax == 10);
  CHECK(h5.delta_profile().max_value == 24);
}

TEST_CASE("random semigroups satisfy the structural identities") {
  Xoshiro256StarStar rng(0xa6e5);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<std::int64_t> gens;
    while (true) {
      gens.clear();
      const int count = 2 + static_cast<int>(rng.below(3));
      for (int i = 0; i < count; ++i) gens.push_back(2 + static_cast<std::int64_t>(rng.below(38)));
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      if (gens.size() < 2) continue;
      std::int64_t g = 0;
      for (auto v : gens) g = std::gcd(g, v);
      if (g == 1) break;
    }
    auto s = NumericalSemigroup::from_generators(gens);
    const std::int64_t c = s.conductor();
    if (c > 0) CHECK_FALSE(s.contains(c - 1));
    CHECK(s.contains(c));
    CHECK(s.genus() == static_cast<std::int64_t>(s.gaps().size()));
    CHECK(s.left_part_size() == s.tail_size(0));
    // conductor from any apery set: c = max(Ap(S, n)) - n + 1
    const std::int64_t n = s.multiplicity();
    auto ap = s.apery(n);
    CHECK(c == *std::max_element(ap.begin(), ap.end()) - n + 1);
    for (std::int64_t i = 0; i < n; ++i) {
      CHECK(ap[static_cast<std::size_t>(i)] % n == i);
      CHECK(s.contains(ap[static_cast<std::size_t>(i)]));
      CHECK_FALSE(s.contains(ap[static_cast<std::size_t>(i)] - n));
    }
    // closure under addition of generators on a sample range
    for (std::int64_t t = 0; t <= c + 5; ++t)
      if (s.contains(t))
        for (auto g : gens) CHECK(s.contains(t + g));
  }
}
