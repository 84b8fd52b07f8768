#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orsti/rmq.hpp"

using orsti::Rmq;
using orsti::index_t;

TEST_CASE("argmin basics and leftmost tie-break") {
  Rmq r({5, 2, 7, 2, 9});
  CHECK(r.argmin(1, 5) == 2);
  CHECK(r.argmin(3, 5) == 4);
  CHECK(r.argmin(2, 4) == 2);  // two minima, leftmost wins
  CHECK(r.min_value(1, 5) == 2);

  Rmq single({4});
  CHECK(single.argmin(1, 1) == 1);
}

TEST_CASE("invalid ranges are rejected") {
  Rmq r({1, 2, 3});
  CHECK_THROWS_AS((void)r.argmin(2, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)r.argmin(0, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)r.argmin(1, 4), std::invalid_argument);
}

TEST_CASE("bounded_report lists positions below the bound, ascending") {
  Rmq r({3, 1, 4, 1, 5, 0});
  CHECK(r.bounded_report(1, 6, 2) == std::vector<index_t>{2, 4, 6});
  CHECK(r.bounded_report(1, 6, 1) == std::vector<index_t>{6});
  CHECK(r.bounded_report(1, 6, 0).empty());
  CHECK(r.bounded_report(3, 5, 5) == std::vector<index_t>{3, 4});
}

TEST_CASE("bounded_report issues O(answer) argmin calls") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<index_t> val(0, 30);
  for (int round = 0; round < 50; ++round) {
    std::vector<index_t> a(200);
    for (auto& v : a) v = val(rng);
    Rmq r(a);
    std::uniform_int_distribution<index_t> pos(1, 200);
    index_t i = pos(rng), j = pos(rng);
    if (i > j) std::swap(i, j);
    const index_t bound = val(rng);
    std::uint64_t calls = 0;
    const auto got = r.bounded_report(i, j, bound, &calls);
    CHECK(got == oracle::rmq_bounded_report(a, i, j, bound));
    CHECK(calls <= 2 * got.size() + 1);
  }
}

TEST_CASE("randomized argmin against scan oracle") {
  std::mt19937 rng(42);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<index_t> len(1, 300);
    const index_t n = len(rng);
    std::uniform_int_distribution<index_t> val(-50, 50);
    std::vector<index_t> a(static_cast<std::size_t>(n));
    for (auto& v : a) v = val(rng);
    Rmq r(a);
    std::uniform_int_distribution<index_t> pos(1, n);
    for (int q = 0; q < 50; ++q) {
      index_t i = pos(rng), j = pos(rng);
      if (i > j) std::swap(i, j);
      CHECK(r.argmin(i, j) == oracle::rmq_argmin(a, i, j));
    }
  }
}
