#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qkhook {

/// Exact signed integer used for every structure constant and formula value.
using Integer = boost::multiprecision::cpp_int;

/// (-1)^e for any integer exponent.
inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Binomial coefficient extended polynomially in the upper argument:
/// x(x-1)...(x-k+1)/k! for k >= 0, and 0 for k < 0. Valid for negative x.
Integer binomial(const Integer& x, std::int64_t k);

/// binomial(n,k) minus the inclusion-exclusion expansion
/// sum_{j=0}^{k} (-1)^j binomial(n+m-j, k-j) binomial(m, j).
/// Always 0; exposed as a self-test of the polynomial extension.
/// Throws InputError when k < 0.
Integer alternating_binomial_residual(const Integer& n, const Integer& m, std::int64_t k);

/// Narrowing conversion that throws std::overflow_error when the value does
/// not fit in int64.
std::int64_t to_int64(const Integer& v);

/// True when v is representable as int64.
bool fits_int64(const Integer& v);

std::string to_string(const Integer& v);

}  // namespace qkhook
