#include <doctest.h>

#include "support/random.hpp"
#include "tav/kuga_satake.hpp"

using namespace tav;
using namespace tav::testing;

TEST_CASE("even Clifford rank") {
  CHECK(even_clifford_rank(1) == Int(1));
  CHECK(even_clifford_rank(3) == Int(4));
  CHECK(even_clifford_rank(6) == Int(32));
  CHECK_THROWS_AS(even_clifford_rank(0), Error);

  // equals the sum of the even binomial coefficients
  for (Index r = 1; r <= 12; ++r) {
    Int total = 0;
    for (Index j = 0; 2 * j <= r; ++j) total += binomial(r, 2 * j);
    CHECK(even_clifford_rank(r) == total);
  }
}

TEST_CASE("closed-form degree") {
  CHECK(ks_degree(1, 5) == Int(1));
  CHECK(ks_degree(2, 3) == Int(4));
  CHECK(ks_degree(3, 4) == Int(81));
  CHECK_THROWS_AS(ks_degree(2, 1), Error);
  CHECK_THROWS_AS(ks_degree(0, 3), Error);
}

TEST_CASE("oracle reports on the spec instances") {
  auto identity_report = exterior_kernel_oracle(int_identity(3));
  CHECK(identity_report.oracle_value == Int(1));
  CHECK(identity_report.closed_form == Int(1));
  CHECK(identity_report.agree);

  auto report = exterior_kernel_oracle(diagonal_matrix({Int(2), Int(1), Int(1)}));
  CHECK(report.index_d == Int(2));
  REQUIRE(report.per_grade.size() == 1);
  CHECK(report.per_grade[0].first == 2);
  CHECK(report.per_grade[0].second == Int(4));
  CHECK(report.oracle_value == Int(4));
  CHECK(report.closed_form == Int(4));
  CHECK(report.agree);
  CHECK(report.closed_form_square);

  CHECK_THROWS_AS(exterior_kernel_oracle(int_zero(3, 3)), Error);
}

TEST_CASE("random 4x4 with |det| = 3 has total kernel order 81") {
  Rng rng(83);
  int found = 0;
  while (found < 5) {
    IntMatrix a = random_nonsingular(4, -3, 3, rng);
    if (abs(determinant(a)) != Int(3)) continue;
    auto report = exterior_kernel_oracle(a);
    CHECK(report.oracle_value == Int(81));
    CHECK(report.agree);
    ++found;
  }
}

TEST_CASE("oracle agreement sweep") {
  Rng rng(89);
  for (Index r = 3; r <= 5; ++r) {
    for (int trial = 0; trial < 15; ++trial) {
      IntMatrix a = random_nonsingular(r, -3, 3, rng);
      auto report = exterior_kernel_oracle(a);
      CHECK(report.agree);
      CHECK(report.closed_form == ks_degree(report.index_d, r));
      // per-grade orders follow the compound-determinant identity
      for (const auto& [grade, det] : report.per_grade)
        CHECK(det == pow(report.index_d, binomial(r - 1, grade - 1)));
    }
  }
}

TEST_CASE("closed form is a perfect square for r >= 3") {
  for (long d = 1; d <= 20; ++d)
    for (Index r = 3; r <= 8; ++r)
      CHECK(is_perfect_square(ks_degree(Int(d), r)));
}
