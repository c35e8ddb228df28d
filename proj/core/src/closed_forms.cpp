#include "qkhook/closed_forms.hpp"

#include <algorithm>

#include "qkhook/errors.hpp"

namespace qkhook {
namespace {

void require_t(std::int64_t t) {
  if (t < 1) throw InputError("t must be >= 1, got " + std::to_string(t));
}

Integer signed_term(std::int64_t exponent, Integer value) {
  return sign_power(exponent) > 0 ? value : Integer(-value);
}

}  // namespace

Integer c_double_sum(std::int64_t t, std::int64_t a, std::int64_t b) {
  require_t(t);
  Integer sum = 0;
  for (std::int64_t i = 1; i <= a; ++i) {
    const Integer ci = binomial(t - 1, i - 1);
    if (ci == 0) continue;
    for (std::int64_t j = 1; j <= b; ++j) {
      sum += signed_term(i + j + 1,
                         binomial(a - i + b - j, a - i) * ci * binomial(t - 1, j - 1));
    }
  }
  return sum;
}

Integer c_single_sum(std::int64_t t, std::int64_t a, std::int64_t b) {
  require_t(t);
  if (b < 0) return 0;
  Integer sum = 0;
  for (std::int64_t i = 1; i <= a; ++i) {
    sum += signed_term(b + i + 1, binomial(t - 1, i - 1) * binomial(t - 2 - a + i, b - 1));
  }
  return sum;
}

Integer c_positive(std::int64_t t, std::int64_t a, std::int64_t b) {
  require_t(t);
  if (a < 0 || b < 0) return 0;
  if (a > t || b > t) {
    throw InputError("positive formula holds for 0 <= a, b <= t; got t=" + std::to_string(t) +
                     ", a=" + std::to_string(a) + ", b=" + std::to_string(b));
  }
  Integer sum = 0;
  for (std::int64_t i = 1; i <= std::min(a, b); ++i) {
    sum += binomial(t - 1 - i, a - i) * binomial(t - 1 - i, b - i);
  }
  return signed_term(a + b + 1, sum);
}

Integer f_aux(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t r) {
  if (a < 2 || b < 1) throw InputError("f is defined for a >= 2 and b >= 1");
  Integer sum = 0;
  for (std::int64_t i = 1; i <= a - 1; ++i) {
    sum += signed_term(a + i, binomial(t - 1, i - 1) * binomial(t - 2 - a + r + i, b - 1));
  }
  return sum;
}

Integer g_aux(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t r) {
  if (a < 2 || b < 1) throw InputError("g is defined for a >= 2 and b >= 1");
  Integer sum = -(binomial(t - 2, a - 2) * binomial(t - 2 + r, b - 1));
  for (std::int64_t i = 1; i <= a - 1; ++i) {
    sum += signed_term(a + i + 1, binomial(t - 2, i - 1) * binomial(t - 2 - a + r + i, b - 2));
  }
  return sum;
}

Integer C_direct(const QuantumShape& lambda, std::int64_t a, std::int64_t b) {
  const auto m = lambda.context().m();
  const auto n = lambda.context().n();
  const auto t = quantum_corners(lambda);
  Integer sum = 0;
  for (std::int64_t i = 1; i <= a; ++i) {
    const Integer ci = binomial(t - 1, m - i);
    if (ci == 0) continue;
    for (std::int64_t j = 1; j <= b; ++j) {
      sum += signed_term(n - i - j - 1,
                         binomial(a - i + b - j, a - i) * ci * binomial(t - 1, n - m - j));
    }
  }
  return sum;
}

Integer C_reduced(const QuantumShape& lambda, std::int64_t a, std::int64_t b) {
  const auto& ctx = lambda.context();
  if (!is_classical(lambda)) {
    throw InputError("reduction formula needs a classical shape, got " + to_string(lambda));
  }
  if (a < 0 || b < 0) return 0;
  if (a > ctx.m() || b > ctx.cols()) {
    throw InputError("reduction formula needs 0 <= a <= m and 0 <= b <= n-m");
  }
  const auto t = quantum_corners(lambda);
  const auto alpha = a - ctx.m() + t;
  const auto beta = b - ctx.n() + ctx.m() + t;
  if (alpha < 0 || beta < 0) return 0;
  return c_positive(t, alpha, beta);
}

}  // namespace qkhook
