#include <catch2/catch_amalgamated.hpp>

#include "lrmosaic/partition.hpp"

using namespace lrm;

TEST_CASE("string encoding round trip in the 2x2 box") {
  BoxParams box{2, 4};
  REQUIRE(string_of_partition(Partition{{}}, box) == "0011");
  REQUIRE(string_of_partition(Partition{{1}}, box) == "0101");
  REQUIRE(string_of_partition(Partition{{2, 2}}, box) == "1100");
  for (const auto& p : partitions_in_box(box)) {
    auto s = string_of_partition(p, box);
    REQUIRE(string_in_box(s, box));
    REQUIRE(partition_of_string(s, box) == p);
  }
}

TEST_CASE("complement is string reversal") {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d) {
      BoxParams box{d, n};
      for (const auto& p : partitions_in_box(box)) {
        Partition c = p.complement(box);
        REQUIRE(c.complement(box) == p);
        REQUIRE(string_of_partition(c, box) == reverse_string(string_of_partition(p, box)));
      }
    }
}

TEST_CASE("complement examples") {
  BoxParams box{2, 5};
  REQUIRE(Partition{{3, 1}}.complement(box) == Partition{{2}});
  REQUIRE(Partition{{}}.complement(box) == Partition{{3, 3}});
}

TEST_CASE("conjugate") {
  REQUIRE(Partition{{3, 1, 1}}.conjugate() == Partition{{3, 1, 1}});
  REQUIRE(Partition{{4, 2}}.conjugate() == Partition{{2, 2, 1, 1}});
  REQUIRE(Partition{{}}.conjugate() == Partition{{}});
}

TEST_CASE("partition counts in boxes are binomial") {
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d < n; ++d)
      REQUIRE((long long)partitions_in_box(BoxParams{d, n}).size() == binom(n, d));
}

TEST_CASE("invalid inputs are rejected") {
  REQUIRE_THROWS(Partition{{1, 2}});
  REQUIRE_THROWS(string_of_partition(Partition{{5}}, BoxParams{1, 3}));
  REQUIRE_THROWS(partition_of_string("0101", BoxParams{1, 4}));
}
