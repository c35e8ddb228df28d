#pragma once

#include <cstdint>
#include <vector>

#include "qkhook/integer.hpp"
#include "qkhook/partition.hpp"
#include "qkhook/quantum_shape.hpp"

namespace qkhook {

// Closed formulas for C_{m,n}(lambda,a,b), the coefficient of O^{lambda[1]} in
// O^lambda * O^{(a\b)}, and for c(t,a,b) = C_{t,2t}(rho_t,a,b). Every evaluator
// returns 0 when a < 0 or b < 0 and throws InputError for t < 1.

/// sum_{i=1}^a sum_{j=1}^b (-1)^{i+j+1} C(a-i+b-j, a-i) C(t-1, i-1) C(t-1, j-1).
Integer c_double_sum(std::int64_t t, std::int64_t a, std::int64_t b);

/// sum_{i=1}^a (-1)^{b+i+1} C(t-1, i-1) C(t-2-a+i, b-1).
Integer c_single_sum(std::int64_t t, std::int64_t a, std::int64_t b);

/// (-1)^{a+b+1} sum_{i=1}^{min(a,b)} C(t-1-i, a-i) C(t-1-i, b-i).
/// Throws InputError when a > t or b > t.
Integer c_positive(std::int64_t t, std::int64_t a, std::int64_t b);

/// Auxiliary sums for the inductive step; both need a >= 2 and b >= 1.
Integer f_aux(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t r);
Integer g_aux(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t r);

/// Double sum in the context's own m, n with t = quantum_corners(lambda).
/// Accepts any quantum shape.
Integer C_direct(const QuantumShape& lambda, std::int64_t a, std::int64_t b);

/// c_positive(t, a-m+t, b-n+m+t); 0 if a shifted argument is negative.
/// Needs classical lambda, 0 <= a <= m and 0 <= b <= n-m.
Integer C_reduced(const QuantumShape& lambda, std::int64_t a, std::int64_t b);

/// One stage of the reduction of (Gr(m,n), lambda, a, b) toward (Gr(t,2t), rho_t).
struct ReductionState {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Partition lambda;
  std::int64_t a = 0;
  std::int64_t b = 0;

  GrassContext context() const { return GrassContext(m, n); }
  QuantumShape shape() const { return QuantumShape::from_partition(context(), lambda); }
  friend bool operator==(const ReductionState&, const ReductionState&) = default;
};

/// Removes one repeated row (m-1, n-1, a-1) or, when no row repeats, one
/// repeated column (n-1, b-1), keeping the quantum corner count t. Throws
/// InputError when t == max(m, n-m) and nothing repeats.
ReductionState reduce_step(const ReductionState& s);

/// True when reduce_step has a repeat to remove.
bool can_reduce(const ReductionState& s);

struct ReductionChain {
  std::vector<ReductionState> states;  ///< states.front() is the input
  /// The last removal left (t, t-1, ..., 1); the final state is that shape
  /// translated one row up onto rho_t.
  bool aligned = false;
};

/// Iterates reduce_step to a shape with t == m == n-m, then aligns it onto rho_t.
ReductionChain reduction_chain(const ReductionState& start);

}  // namespace qkhook
