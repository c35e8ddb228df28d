#include "qkhook/integer.hpp"

#include "qkhook/errors.hpp"

#include <limits>
#include <stdexcept>

namespace qkhook {

Integer binomial(const Integer& x, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  // For 0 <= x < k one of the factors x-i vanishes.
  if (x >= 0 && x < k) return 0;
  // C(x,k) = C(x,x-k) shortens the loop for large nonnegative x.
  if (x >= 0 && x - k < k) {
    return binomial(x, static_cast<std::int64_t>(x - k));
  }
  Integer result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    // result == C(x, i) here, so result * (x - i) is divisible by i + 1.
    result *= (x - i);
    result /= (i + 1);
  }
  return result;
}

Integer alternating_binomial_residual(const Integer& n, const Integer& m, std::int64_t k) {
  if (k < 0) throw InputError("alternating binomial identity requires k >= 0");
  Integer sum = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    Integer term = binomial(n + m - j, k - j) * binomial(m, j);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return binomial(n, k) - sum;
}

bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer does not fit in int64: " + v.str());
  return v.convert_to<std::int64_t>();
}

std::string to_string(const Integer& v) { return v.str(); }

}  // namespace qkhook
