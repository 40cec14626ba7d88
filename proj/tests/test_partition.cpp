#include <doctest.h>

#include "csf/partition.hpp"

using namespace csf;

TEST_CASE("partition predicates and trimming") {
  CHECK(is_weakly_decreasing({3, 2, 2, 0}));
  CHECK_FALSE(is_weakly_decreasing({2, 3}));
  CHECK(is_partition_shape({3, 1, 0, 0}));
  CHECK_FALSE(is_partition_shape({3, -1}));
  CHECK_FALSE(is_partition_shape({1, 2}));
  CHECK(trim_zeros({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(trim_zeros({}) == Partition{});
  CHECK_THROWS_AS(trim_zeros({1, 2}), std::invalid_argument);
  CHECK(weight({3, 2, 1}) == 6);
  CHECK(pad_to({3, 1}, 3) == Composition{3, 1, 0});
  CHECK(pad_to({3, 1, 0, 0}, 2) == Composition{3, 1});
}

TEST_CASE("conjugate") {
  CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate({1, 1, 1}) == Partition{3});
  CHECK(conjugate({}) == Partition{});
  for (const auto& lam : partitions_of(9, 9)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("partitions_of in descending lexicographic order") {
  CHECK(partitions_of(4, 4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(4, 2) == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
  CHECK(partitions_of(0, 3) == std::vector<Partition>{{}});
  // p(n) for n = 1..10: 1 2 3 5 7 11 15 22 30 42
  int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    auto parts = partitions_of(n, n);
    CHECK((int)parts.size() == expected[n - 1]);
    for (size_t i = 0; i + 1 < parts.size(); ++i) CHECK(LexGreater{}(parts[i], parts[i + 1]));
    for (const auto& lam : parts) {
      CHECK(weight(lam) == n);
      CHECK(is_partition_shape(lam));
    }
  }
}

TEST_CASE("csv parsing") {
  CHECK(parse_csv_ints("3,1") == Composition{3, 1});
  CHECK(format_csv({3, 1}) == "3,1");
  CHECK(format_csv({}) == "");
  CHECK_THROWS_AS(parse_csv_ints("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_ints("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_ints("1,2x"), std::invalid_argument);
}

TEST_CASE("arrangement counts") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(arrangement_count({4}, 4) == 4);          // 4!/3! placements of one part
  CHECK(arrangement_count({2, 1, 1}, 4) == 12);   // 4!/2!
  CHECK(arrangement_count({1, 1, 1, 1}, 4) == 1); // 4!/4!
  CHECK(arrangement_count({2, 2}, 4) == 6);       // 4!/(2!·2!)
}
