#include <catch2/catch_amalgamated.hpp>

#include "lrmosaic/schur.hpp"
#include "lrmosaic/tableau.hpp"

using namespace lrm;

TEST_CASE("pieri rule basics") {
  BoxParams box{2, 4};
  SchurExpansion one;
  add_term(one, Partition{{}}, 1);
  auto h1 = pieri_multiply(one, 1, box);
  REQUIRE(h1.size() == 1);
  REQUIRE(h1.at(Partition{{1}}) == 1);
  auto h1h1 = pieri_multiply(h1, 1, box);
  REQUIRE(h1h1.at(Partition{{2}}) == 1);
  REQUIRE(h1h1.at(Partition{{1, 1}}) == 1);
  // truncation: multiplying the full box by h_1 gives zero
  SchurExpansion full;
  add_term(full, Partition{{2, 2}}, 1);
  REQUIRE(pieri_multiply(full, 1, box).empty());
}

TEST_CASE("jacobi-trudi reproduces schur functions") {
  BoxParams box{3, 6};
  SchurExpansion one;
  add_term(one, Partition{{}}, 1);
  for (const auto& nu : partitions_in_box(box)) {
    auto x = jacobi_trudi_multiply(one, nu, box);
    REQUIRE(x.size() == 1);
    REQUIRE(x.at(nu) == 1);
  }
}

TEST_CASE("known coefficients") {
  REQUIRE(lr_coefficient_algebra(Partition{{1}}, Partition{{1}}, Partition{{1, 1}},
                                 BoxParams{2, 4}) == 1);
  // a_{(2,1)(2,1)}^{(3,2,1)} = 2 in Gr(3,6); complement of (3,2,1) is (2,1)
  REQUIRE(lr_coefficient_algebra(Partition{{2, 1}}, Partition{{2, 1}}, Partition{{2, 1}},
                                 BoxParams{3, 6}) == 2);
}

TEST_CASE("tableau counts agree with the algebra oracle on all small boxes") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      BoxParams box{d, n};
      auto ps = partitions_in_box(box);
      for (const auto& nu : ps)
        for (const auto& mu : ps)
          for (const auto& lam : ps) {
            Partition lc = lam.complement(box);
            long long a = lr_coefficient_algebra(nu, mu, lc, box);
            long long c = lr_coefficient_tableau(nu, mu, lc, box);
            INFO("d=" << d << " n=" << n << " nu=" << nu.to_string() << " mu=" << mu.to_string()
                      << " lam=" << lam.to_string());
            REQUIRE(a == c);
          }
    }
}

TEST_CASE("coefficient symmetry under permuting the boundary data") {
  BoxParams box{2, 5};
  auto ps = partitions_in_box(box);
  for (const auto& nu : ps)
    for (const auto& mu : ps)
      for (const auto& lam : ps) {
        Partition lc = lam.complement(box);
        long long base = lr_coefficient_algebra(nu, mu, lc, box);
        REQUIRE(base == lr_coefficient_algebra(mu, nu, lc, box));
        REQUIRE(base == lr_coefficient_algebra(lc, mu, nu, box));
      }
}
