#include <doctest.h>

#include "qkhook/errors.hpp"
#include "qkhook/integer.hpp"

using namespace qkhook;

TEST_SUITE("integer-combinatorics") {
  TEST_CASE("binomial of small arguments") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 3) == -4);
  }

  TEST_CASE("binomial agrees with Pascal's rule on a grid") {
    for (std::int64_t x = -20; x <= 20; ++x) {
      for (std::int64_t k = 1; k <= 20; ++k) {
        CHECK(binomial(x, k) == binomial(x - 1, k) + binomial(x - 1, k - 1));
      }
    }
  }

  TEST_CASE("negative upper argument reflects") {
    for (std::int64_t x = -10; x <= 10; ++x) {
      for (std::int64_t k = 0; k <= 10; ++k) {
        CHECK(binomial(-x, k) == sign_power(k) * binomial(x + k - 1, k));
      }
    }
  }

  TEST_CASE("large values are exact") {
    CHECK(to_string(binomial(100, 50)) == "100891344545564193334812497256");
    CHECK(to_string(binomial(Integer(1) << 70, 2)) == "696898287454081973172400900209902591410176");
    CHECK(!fits_int64(binomial(100, 50)));
    CHECK(fits_int64(binomial(60, 30)));
    CHECK(to_int64(binomial(60, 30)) == 118264581564861424LL);
  }

  TEST_CASE("Vandermonde-type identity holds everywhere") {
    CHECK(alternating_binomial_residual(4, 3, 2) == 0);
    CHECK(alternating_binomial_residual(-2, 5, 3) == 0);
    CHECK(alternating_binomial_residual(0, 0, 0) == 0);
    for (std::int64_t n = -10; n <= 10; ++n) {
      for (std::int64_t m = -4; m <= 10; ++m) {
        for (std::int64_t k = 0; k <= 10; ++k) CHECK(alternating_binomial_residual(n, m, k) == 0);
      }
    }
    CHECK_THROWS_AS(alternating_binomial_residual(1, 1, -1), InputError);
  }

  TEST_CASE("sign_power") {
    CHECK(sign_power(0) == 1);
    CHECK(sign_power(3) == -1);
    CHECK(sign_power(-3) == -1);
    CHECK(sign_power(-4) == 1);
  }
}
