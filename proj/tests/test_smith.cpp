#include <doctest.h>

#include "support/oracles.hpp"
#include "support/random.hpp"
#include "tav/smith.hpp"

using namespace tav;
using namespace tav::testing;

namespace {

void check_decomposition(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  CHECK(equal(IntMatrix(snf.U * a * snf.V), snf.D));
  CHECK(abs(cofactor_determinant(snf.U)) == Int(1));
  CHECK(abs(cofactor_determinant(snf.V)) == Int(1));
  CHECK(is_diagonal(snf.D));
  auto d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i > 0 && d[i - 1] > 0) CHECK((d[i] % d[i - 1]).is_zero());
    if (i > 0 && d[i - 1].is_zero()) CHECK(d[i].is_zero());
  }
}

}  // namespace

TEST_CASE("Smith form of the identity") {
  auto snf = smith_normal_form(int_identity(2));
  CHECK(equal(snf.D, int_identity(2)));
  CHECK(equal(IntMatrix(snf.U * int_identity(2) * snf.V), snf.D));
}

TEST_CASE("Smith form of [[2,1],[0,2]] has diagonal (1,4)") {
  IntMatrix a(2, 2);
  a << 2, 1, 0, 2;
  auto snf = smith_normal_form(a);
  CHECK(equal(snf.D, diagonal_matrix({Int(1), Int(4)})));
  check_decomposition(a);
  // independent route: gcds of k x k minors
  CHECK(minor_gcd_invariant_factors(a) == std::vector<Int>{Int(1), Int(4)});
}

TEST_CASE("diag(6,2) sorts into the invariant chain (2,6)") {
  IntMatrix a = diagonal_matrix({Int(6), Int(2)});
  auto snf = smith_normal_form(a);
  CHECK(equal(snf.D, diagonal_matrix({Int(2), Int(6)})));
  check_decomposition(a);
  // brute-force group decomposition of Z/6 + Z/2
  CHECK(primary_merge_invariant_factors({Int(6), Int(2)}) ==
        std::vector<Int>{Int(2), Int(6)});
}

TEST_CASE("randomized Smith sweep: recomposition, unimodularity, chain") {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    Index rows = rng.uniform(1, 6);
    Index cols = rng.uniform(1, 6);
    IntMatrix a = random_int_matrix(rows, cols, -100, 100, rng);
    check_decomposition(a);
  }
}

TEST_CASE("Smith sweep against the minor-gcd oracle") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Index n = rng.uniform(1, 4);
    IntMatrix a = random_nonsingular(n, -8, 8, rng);
    auto snf = smith_normal_form(a);
    CHECK(snf.diagonal() == minor_gcd_invariant_factors(a));
  }
}

TEST_CASE("cokernels of the spec instances") {
  CHECK(cokernel_of(int_identity(4)).trivial());
  CHECK(cokernel_of(diagonal_matrix({Int(1), Int(4)})).invariant_factors() ==
        std::vector<Int>{Int(4)});

  IntMatrix a(2, 2);
  a << 2, 1, 0, 2;
  CHECK(cokernel_of(a).invariant_factors() == std::vector<Int>{Int(4)});
  CHECK(cokernel_of(a).invariant_factors() ==
        FiniteAbelianGroup(cokernel_2x2_by_element_orders(a)).invariant_factors());

  CHECK_THROWS_AS(cokernel_of(int_zero(2, 2)), Error);
}

TEST_CASE("cokernel order equals |det|") {
  Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Index n = rng.uniform(1, 4);
    IntMatrix a = random_nonsingular(n, -6, 6, rng);
    CHECK(cokernel_of(a).order() == abs(determinant(a)));
  }
}

TEST_CASE("group construction and invariants") {
  FiniteAbelianGroup trivial;
  CHECK(trivial.trivial());
  CHECK(trivial.order() == Int(1));
  CHECK(trivial.exponent() == Int(1));
  CHECK(trivial.spectrally_paired());

  FiniteAbelianGroup g({Int(1), Int(2), Int(2)});
  CHECK(g.invariant_factors() == std::vector<Int>{Int(2), Int(2)});
  CHECK(g.spectrally_paired());
  CHECK(g.paired_targets() == std::vector<Int>{Int(2)});

  CHECK_THROWS_AS(FiniteAbelianGroup({Int(2), Int(3)}), Error);
  CHECK_THROWS_AS(FiniteAbelianGroup({Int(0)}), Error);

  CHECK(group_from_orders({Int(6), Int(2)}).invariant_factors() ==
        std::vector<Int>{Int(2), Int(6)});
  CHECK(group_from_orders({Int(2), Int(3)}).invariant_factors() ==
        std::vector<Int>{Int(6)});
}

TEST_CASE("pairing rule matches brute-force regrouping on all small chains") {
  // all divisibility chains with entries in [2, 8] and length <= 6
  std::vector<std::vector<Int>> chains{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::vector<Int>> next;
    for (const auto& chain : chains) {
      if (static_cast<int>(chain.size()) == len - 1) {
        long lo = chain.empty() ? 2 : to_long(chain.back());
        for (long d = lo; d <= 8; ++d) {
          if (!chain.empty() && d % to_long(chain.back()) != 0) continue;
          auto extended = chain;
          extended.push_back(Int(d));
          next.push_back(std::move(extended));
        }
      }
    }
    for (const auto& chain : next) {
      FiniteAbelianGroup g(std::vector<Int>(chain));
      CHECK(g.spectrally_paired() == brute_force_spectrally_paired(chain));
    }
    chains.insert(chains.end(), next.begin(), next.end());
  }
}
