#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qkhook/integer.hpp"
#include "qkhook/linear_combination.hpp"
#include "qkhook/partition.hpp"
#include "qkhook/quantum_shape.hpp"

namespace qkhook {

/// O^lambda * O^j: sum over horizontal strips nu/lambda of
/// (-1)^{|nu/lambda|-j} C(Row(nu/lambda)-1, |nu/lambda|-j) O^nu.
/// Requires 0 <= j <= n-m.
QLinearCombination pieri_row(const QuantumShape& lambda, std::int64_t j);

/// O^lambda * O^{1^i}: the vertical-strip analogue weighted by Col(mu/lambda).
/// Requires 0 <= i <= m.
QLinearCombination pieri_col(const QuantumShape& lambda, std::int64_t i);

/// Extends pieri_row / pieri_col linearly.
QLinearCombination apply_pieri_row(const QLinearCombination& lc, std::int64_t j);
QLinearCombination apply_pieri_col(const QLinearCombination& lc, std::int64_t i);

/// Symbolic pieces of the hook decomposition.
struct ColumnClass {
  std::int64_t i;  ///< O^{1^i}
  friend bool operator==(const ColumnClass&, const ColumnClass&) = default;
};
struct RowClass {
  std::int64_t j;  ///< O^j
  friend bool operator==(const RowClass&, const RowClass&) = default;
};
struct ProductClass {
  std::int64_t i;  ///< O^{1^i} * O^j
  std::int64_t j;
  friend bool operator==(const ProductClass&, const ProductClass&) = default;
};

struct HookTerm {
  Integer coeff;
  std::variant<ColumnClass, RowClass, ProductClass> kind;
  friend bool operator==(const HookTerm&, const HookTerm&) = default;
};

/// O^{(a\b)} for a, b >= 1 as
///   sum_{i=2}^{a+1} C(a-i+b, b-1) O^{1^i}
/// + sum_{j=2}^{b+1} C(a+b-j, a-1) O^j
/// - sum_{i=1}^{a} sum_{j=1}^{b} C(a-i+b-j, a-i) O^{1^i} O^j,
/// listed column terms, row terms, then products in (i, j) order.
/// Throws InputError when a < 1 or b < 1.
std::vector<HookTerm> hook_decomposition(std::int64_t a, std::int64_t b);

/// True when (a\b) is a classical shape of the context: a+1 <= m, b+1 <= n-m.
bool hook_fits(const GrassContext& ctx, const HookParams& h) noexcept;

/// O^lambda * O^{(a\b)} in QK(Gr(m,n))_q, every structure constant N^nu.
/// Throws InputError when the hook is invalid or does not fit the rectangle.
QLinearCombination multiply_by_hook(const QuantumShape& lambda, const HookParams& h);

/// Every support shape nu of the product satisfies lambda <= nu <= lambda[1].
bool verify_support(const QuantumShape& lambda, const HookParams& h);

/// Translating lambda by (rows, cols) translates the product expansion identically.
bool translation_covariance_check(const QuantumShape& lambda, const HookParams& h,
                                  std::int64_t rows, std::int64_t cols);

}  // namespace qkhook
