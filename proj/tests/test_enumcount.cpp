#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walign/enumcount.hpp"
#include "walign/errors.hpp"

using namespace walign;

TEST_CASE("census of small symmetric groups") {
  const std::int64_t wa[] = {1, 3, 17, 147};
  const std::int64_t wa132[] = {1, 3, 15, 105};
  const std::int64_t classes[] = {1, 2, 8, 52};
  for (int n = 1; n <= 4; ++n) {
    CensusResult r = census(n);
    CHECK(r.n == n);
    CHECK(r.wa_count == wa[n - 1]);
    CHECK(r.wa132_count == wa132[n - 1]);
    CHECK(r.equivalence_class_count == classes[n - 1]);
    CHECK(r.very_wa_count <= r.wa_count);
    // thread count does not change the result
    CensusResult r4 = census(n, 4);
    CHECK(r4.wa_count == r.wa_count);
    CHECK(r4.wa132_count == r.wa132_count);
    CHECK(r4.very_wa_count == r.very_wa_count);
    CHECK(r4.equivalence_class_count == r.equivalence_class_count);
  }
  CHECK_THROWS_AS(census(9), DomainError);
  CHECK_THROWS_AS(census(0), DomainError);
}

TEST_CASE("generating-function identity") {
  CHECK(check_functional_equation({1, 1}));
  CHECK(check_functional_equation({1, 1, 3, 17, 147, 1729, 25827, 468593}));
  CHECK_FALSE(check_functional_equation({1, 1, 3, 18, 147, 1729}));
  CHECK_THROWS_AS(check_functional_equation({}), DomainError);
  CHECK_FALSE(check_functional_equation({2, 1}));
}

TEST_CASE("permutation enumeration") {
  CHECK(all_permutations(1).size() == 1);
  CHECK(all_permutations(4).size() == 24);
}
