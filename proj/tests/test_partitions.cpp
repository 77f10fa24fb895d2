#include <doctest.h>

#include <random>

#include "kq/partitions.hpp"

using namespace kq;

namespace {

// Independent oracle: partition counts from the Euler pentagonal recurrence
// p(n) = sum_{k!=0} (-1)^{k-1} p(n - k(3k-1)/2).
std::vector<long long> pentagonal_counts(int max_n) {
  std::vector<long long> p(static_cast<size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) acc += sign * p[static_cast<size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<size_t>(n - g2)];
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

Partition random_partition(std::mt19937& rng, int max_weight) {
  std::uniform_int_distribution<int> wd(0, max_weight);
  auto all = enumerate_partitions(wd(rng), PartitionClass::all);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("enumeration examples in canonical order") {
  CHECK(enumerate_partitions(4, PartitionClass::odd) ==
        std::vector<Partition>{{3, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(4, PartitionClass::strict) ==
        std::vector<Partition>{{4}, {3, 1}});
  CHECK(enumerate_partitions(0, PartitionClass::all) ==
        std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(5, PartitionClass::all) ==
        std::vector<Partition>{
            {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1},
            {1, 1, 1, 1, 1}});
}

TEST_CASE("counts match the pentagonal recurrence up to 30") {
  auto oracle = pentagonal_counts(30);
  for (int n = 0; n <= 30; ++n)
    CHECK(enumerate_partitions(n, PartitionClass::all).size() ==
          static_cast<size_t>(oracle[static_cast<size_t>(n)]));
}

TEST_CASE("odd and strict classes are equinumerous (Euler)") {
  for (int n = 0; n <= 30; ++n) {
    auto odd = enumerate_partitions(n, PartitionClass::odd);
    auto strict = enumerate_partitions(n, PartitionClass::strict);
    CHECK(odd.size() == strict.size());
    for (const auto& lam : odd) CHECK(lam.all_odd());
    for (const auto& lam : strict) CHECK(lam.all_distinct());
  }
}

TEST_CASE("z_lambda") {
  CHECK(z_lambda(Partition({3, 1, 1})) == Int(6));
  CHECK(z_lambda(Partition({2, 2})) == Int(8));
  CHECK(z_lambda(Partition()) == Int(1));
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Partition lam = random_partition(rng, 12);
    CHECK(z_lambda(lam) >= 1);
  }
  for (int n = 0; n <= 12; ++n)
    for (const auto& lam : enumerate_partitions(n, PartitionClass::strict)) {
      Int prod = 1;
      for (int p : lam.parts()) prod *= Int(p);
      CHECK(z_lambda(lam) == prod);
    }
}

TEST_CASE("succ order examples") {
  CHECK(cmp_succ(Partition({2, 2}), Partition({3, 1})) == std::strong_ordering::greater);
  CHECK(cmp_succ(Partition({5}), Partition({3, 1})) == std::strong_ordering::greater);
  CHECK(cmp_succ(Partition({3, 1}), Partition({3, 1})) == std::strong_ordering::equal);
  CHECK(cmp_succ_prime(Partition({3, 1}), Partition({2, 2})) ==
        std::strong_ordering::greater);
  CHECK(cmp_succ_prime(Partition({5}), Partition({4, 1})) ==
        std::strong_ordering::greater);
  CHECK(cmp_succ_prime(Partition({1}), Partition({1})) == std::strong_ordering::equal);
}

TEST_CASE("both succ orders are total orders on random triples") {
  std::mt19937 rng(13);
  auto check_order = [&](auto cmp) {
    for (int i = 0; i < 300; ++i) {
      Partition a = random_partition(rng, 8), b = random_partition(rng, 8),
                c = random_partition(rng, 8);
      // antisymmetry
      if (cmp(a, b) == std::strong_ordering::greater)
        CHECK(cmp(b, a) == std::strong_ordering::less);
      if (cmp(a, b) == std::strong_ordering::equal) CHECK(a == b);
      // transitivity
      if (cmp(a, b) != std::strong_ordering::less &&
          cmp(b, c) != std::strong_ordering::less)
        CHECK(cmp(a, c) != std::strong_ordering::less);
    }
  };
  check_order([](const Partition& x, const Partition& y) { return cmp_succ(x, y); });
  check_order(
      [](const Partition& x, const Partition& y) { return cmp_succ_prime(x, y); });
}

TEST_CASE("canonical map order agrees with the enumeration order") {
  auto v = enumerate_partitions_up_to(7, PartitionClass::all);
  for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK(Partition({3, 1}).concat(Partition({2})) == Partition({3, 2, 1}));
  CHECK(Partition({2, 2, 1}).multiplicity(2) == 2);
}

}  // TEST_SUITE
