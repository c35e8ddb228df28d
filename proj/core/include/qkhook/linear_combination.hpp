#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qkhook/integer.hpp"
#include "qkhook/quantum_shape.hpp"

namespace qkhook {

/// Finite integer combination of basis classes O^nu over quantum shapes nu of
/// one Grassmannian. Zero coefficients are never stored.
class QLinearCombination {
 public:
  using Terms = std::map<std::vector<std::int64_t>, Integer>;

  explicit QLinearCombination(const GrassContext& ctx) : ctx_(ctx) {}
  /// 1 * O^shape.
  static QLinearCombination basis(const QuantumShape& shape);

  const GrassContext& context() const noexcept { return ctx_; }
  /// Keys are the part lists of the shapes.
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<QuantumShape> support() const;

  void add(const QuantumShape& shape, const Integer& coeff);
  QLinearCombination& operator+=(const QLinearCombination& other);
  QLinearCombination& operator-=(const QLinearCombination& other);
  QLinearCombination& operator*=(const Integer& scalar);

  friend bool operator==(const QLinearCombination&, const QLinearCombination&) = default;

 private:
  void require_context(const GrassContext& other) const;

  GrassContext ctx_;
  Terms terms_;
};

QLinearCombination operator+(QLinearCombination lhs, const QLinearCombination& rhs);
QLinearCombination operator-(QLinearCombination lhs, const QLinearCombination& rhs);
QLinearCombination operator*(const Integer& scalar, QLinearCombination lc);

/// Stored coefficient of O^nu, or 0. Throws ContextMismatch.
Integer coefficient(const QLinearCombination& lc, const QuantumShape& nu);

/// Image of every basis shape under the same translation.
QLinearCombination translate(const QLinearCombination& lc, std::int64_t rows, std::int64_t cols);

/// coeff * q^degree * O^shape with shape classical.
struct GradedTerm {
  Partition shape;
  std::int64_t degree = 0;
  Integer coeff;

  friend bool operator==(const GradedTerm&, const GradedTerm&) = default;
};

/// Rewrites O^nu = q^d O^{nu[-d]}; sorted by (degree, parts).
std::vector<GradedTerm> normalize(const QLinearCombination& lc);

/// Inverse of normalize: q^d O^mu becomes O^{mu[d]}.
QLinearCombination denormalize(const GrassContext& ctx, const std::vector<GradedTerm>& terms);

/// "+1*O^(2,2) + 1*q*O^() - 1*q*O^(1)"; "0" when empty.
std::string to_string(const std::vector<GradedTerm>& terms);
std::string to_string(const QLinearCombination& lc);

}  // namespace qkhook
