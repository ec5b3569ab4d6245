#include <doctest.h>

#include "support/random.hpp"
#include "tav/cocycle.hpp"

using namespace tav;
using namespace tav::testing;

namespace {

IntMatrix j2_mod(const Int& n) {
  IntMatrix j(2, 2);
  j << Int(0), Int(1), mod_floor(Int(-1), n), Int(0);
  return j;
}

// ordered tuples (a_1, ..., a_r) of divisors of n, r <= genus
std::vector<std::vector<Int>> divisor_tuples(const Int& n, Index genus) {
  std::vector<Int> divisors;
  for (Int d = 1; d <= n; d += 1)
    if (divides(d, n)) divisors.push_back(d);
  std::vector<std::vector<Int>> out{{}};
  std::vector<std::vector<Int>> frontier{{}};
  for (Index r = 1; r <= genus; ++r) {
    std::vector<std::vector<Int>> next;
    for (const auto& tuple : frontier)
      for (const auto& d : divisors) {
        auto extended = tuple;
        extended.push_back(d);
        next.push_back(std::move(extended));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("twist with full image is the standard symplectic block") {
  for (long n = 2; n <= 5; ++n) {
    auto twist = antisym_with_image({Int(n)}, Int(n), 1);
    CHECK(equal(twist.matrix(), j2_mod(Int(n))));
    CHECK(image_mod_n(twist.matrix(), Int(n)) ==
          group_from_orders({Int(n), Int(n)}));
  }
}

TEST_CASE("empty target list gives the zero twist") {
  auto twist = antisym_with_image({}, 4, 2);
  CHECK(is_zero(twist.matrix()));
  CHECK(image_mod_n(twist.matrix(), 4).trivial());
}

TEST_CASE("scaled block has the scaled image") {
  auto twist = antisym_with_image({Int(2)}, 6, 1);
  IntMatrix expected(2, 2);
  expected << Int(0), Int(3), Int(3), Int(0);
  CHECK(equal(twist.matrix(), expected));
  CHECK(image_mod_n(twist.matrix(), 6) == group_from_orders({Int(2), Int(2)}));
}

TEST_CASE("target validation") {
  CHECK_THROWS_AS(antisym_with_image({Int(2), Int(2)}, 2, 1), Error);
  CHECK_THROWS_AS(antisym_with_image({Int(4)}, 6, 1), Error);
  CHECK_THROWS_AS(antisym_with_image({Int(0)}, 6, 1), Error);
}

TEST_CASE("image of block-diagonal twists") {
  CHECK(image_mod_n(int_zero(2, 2), 5).trivial());

  IntMatrix blocks = int_zero(4, 4);
  blocks.block(0, 0, 2, 2) = j2_mod(4) * Int(2);
  blocks.block(2, 2, 2, 2) = j2_mod(4);
  blocks = reduce_mod(blocks, 4);
  CHECK(image_mod_n(blocks, 4) ==
        group_from_orders({Int(2), Int(2), Int(4), Int(4)}));
}

TEST_CASE("pairing of a cocycle is beta minus beta transpose") {
  CHECK(is_zero(pairing_of_cocycle(BilinearCocycle(7, int_zero(2, 2))).matrix()));

  IntMatrix beta1(2, 2);
  beta1 << Int(0), Int(0), Int(4), Int(0);  // -1 mod 5
  CHECK(equal(pairing_of_cocycle(BilinearCocycle(5, beta1)).matrix(), j2_mod(5)));

  IntMatrix beta2(2, 2);
  beta2 << Int(1), Int(2), Int(0), Int(1);
  IntMatrix expected(2, 2);
  expected << Int(0), Int(2), Int(3), Int(0);
  CHECK(equal(pairing_of_cocycle(BilinearCocycle(5, beta2)).matrix(), expected));
}

TEST_CASE("canonical cocycle lift and round trip") {
  CHECK(is_zero(cocycle_from_pairing(AlternatingForm(9, int_zero(3, 3))).matrix()));

  for (long n = 2; n <= 6; ++n) {
    IntMatrix expected(2, 2);
    expected << Int(0), Int(0), Int(n - 1), Int(0);
    CHECK(equal(cocycle_from_pairing(AlternatingForm(Int(n), j2_mod(Int(n)))).matrix(),
                expected));
  }

  IntMatrix e(2, 2);
  e << Int(0), Int(2), Int(3), Int(0);
  IntMatrix beta(2, 2);
  beta << Int(0), Int(0), Int(3), Int(0);
  CHECK(equal(cocycle_from_pairing(AlternatingForm(5, e)).matrix(), beta));

  // exhaustive k = 2 round trip for n <= 12
  for (long n = 1; n <= 12; ++n) {
    for (long v = 0; v < n; ++v) {
      IntMatrix m(2, 2);
      m << Int(0), Int(v), mod_floor(Int(-v), Int(n)), Int(0);
      AlternatingForm form(Int(n), m);
      CHECK(equal(pairing_of_cocycle(cocycle_from_pairing(form)).matrix(), form.matrix()));
    }
  }

  // random k <= 4
  Rng rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    long n = rng.uniform(1, 12);
    Index k = rng.uniform(1, 4);
    IntMatrix m = int_zero(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = i + 1; j < k; ++j) {
        Int v(rng.uniform(0, n - 1));
        m(i, j) = v;
        m(j, i) = mod_floor(-v, Int(n));
      }
    AlternatingForm form(Int(n), m);
    CHECK(equal(pairing_of_cocycle(cocycle_from_pairing(form)).matrix(), form.matrix()));
  }
}

TEST_CASE("bilinear tables satisfy the cocycle condition, perturbations fail") {
  IntMatrix beta(2, 2);
  beta << Int(1), Int(1), Int(0), Int(1);
  auto table = CocycleTable::bilinear(2, 2, 2, beta);
  CHECK(verify_cocycle_table(table));

  // single-entry increment away from any bilinear table breaks the check
  auto perturbed = table;
  perturbed.value(1, 2) = mod_floor(perturbed.value(1, 2) + 1, Int(2));
  CHECK_FALSE(verify_cocycle_table(perturbed));

  // non-normalized tables are rejected
  auto denormalized = table;
  denormalized.value(0, 1) = 1;
  CHECK_FALSE(verify_cocycle_table(denormalized));
}

TEST_CASE("table shape validation") {
  CHECK_THROWS_AS(CocycleTable(2, 2, 2, std::vector<Int>(15, Int(0))), Error);
  CHECK_THROWS_AS(CocycleTable(2, 2, 13, {}), Error);
}

TEST_CASE("isotropy check") {
  CHECK(isotropy_check(j2_mod(2), 2));
  CHECK_FALSE(isotropy_check(int_identity(2), 4));
}

TEST_CASE("exhaustive image correctness for divisor tuples") {
  for (long n = 1; n <= 6; ++n) {
    for (Index g = 1; g <= 2; ++g) {
      for (const auto& targets : divisor_tuples(Int(n), g)) {
        auto twist = antisym_with_image(targets, Int(n), g);
        CHECK(isotropy_check(twist));

        // image as an abstract group: the direct sum of (Z/a_i)^2
        std::vector<Int> doubled;
        for (const auto& a : targets) {
          doubled.push_back(a);
          doubled.push_back(a);
        }
        auto image = image_mod_n(twist.matrix(), Int(n));
        CHECK(image == group_from_orders(doubled));

        // image as an exact subgroup of (Z/n)^{2g}: same Hermite basis as
        // the diagonal model lattice
        IntMatrix model = int_identity(2 * g) * Int(n);
        for (std::size_t i = 0; i < targets.size(); ++i) {
          model(2 * static_cast<Index>(i), 2 * static_cast<Index>(i)) = Int(n) / targets[i];
          model(2 * static_cast<Index>(i) + 1, 2 * static_cast<Index>(i) + 1) =
              Int(n) / targets[i];
        }
        CHECK(equal(image_lattice_mod_n(twist.matrix(), Int(n)),
                    hermite_column_basis(model)));

        // order divides n^{2g} and equals the product of the a_i^2
        Int expected_order = 1;
        for (const auto& a : targets) expected_order *= a * a;
        CHECK(image.order() == expected_order);
        CHECK(divides(image.order(), pow(Int(n), Int(2 * g))));
      }
    }
  }
}
