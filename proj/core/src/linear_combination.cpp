#include "qkhook/linear_combination.hpp"

#include <algorithm>
#include <sstream>

#include "qkhook/errors.hpp"

namespace qkhook {

QLinearCombination QLinearCombination::basis(const QuantumShape& shape) {
  QLinearCombination lc(shape.context());
  lc.add(shape, 1);
  return lc;
}

std::vector<QuantumShape> QLinearCombination::support() const {
  std::vector<QuantumShape> out;
  out.reserve(terms_.size());
  for (const auto& [parts, coeff] : terms_) out.emplace_back(ctx_, parts);
  return out;
}

void QLinearCombination::require_context(const GrassContext& other) const {
  if (other != ctx_) throw ContextMismatch();
}

void QLinearCombination::add(const QuantumShape& shape, const Integer& coeff) {
  require_context(shape.context());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(shape.parts(), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QLinearCombination& QLinearCombination::operator+=(const QLinearCombination& other) {
  require_context(other.ctx_);
  for (const auto& [parts, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(parts, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QLinearCombination& QLinearCombination::operator-=(const QLinearCombination& other) {
  require_context(other.ctx_);
  for (const auto& [parts, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(parts, Integer(-coeff));
    if (!inserted) {
      it->second -= coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QLinearCombination& QLinearCombination::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [parts, coeff] : terms_) coeff *= scalar;
  return *this;
}

QLinearCombination operator+(QLinearCombination lhs, const QLinearCombination& rhs) {
  lhs += rhs;
  return lhs;
}

QLinearCombination operator-(QLinearCombination lhs, const QLinearCombination& rhs) {
  lhs -= rhs;
  return lhs;
}

QLinearCombination operator*(const Integer& scalar, QLinearCombination lc) {
  lc *= scalar;
  return lc;
}

Integer coefficient(const QLinearCombination& lc, const QuantumShape& nu) {
  if (nu.context() != lc.context()) throw ContextMismatch();
  auto it = lc.terms().find(nu.parts());
  return it == lc.terms().end() ? Integer(0) : it->second;
}

QLinearCombination translate(const QLinearCombination& lc, std::int64_t rows, std::int64_t cols) {
  QLinearCombination out(lc.context());
  for (const auto& [parts, coeff] : lc.terms()) {
    out.add(translate(QuantumShape(lc.context(), parts), rows, cols), coeff);
  }
  return out;
}

std::vector<GradedTerm> normalize(const QLinearCombination& lc) {
  std::vector<GradedTerm> out;
  out.reserve(lc.size());
  for (const auto& [parts, coeff] : lc.terms()) {
    auto [shape, degree] = classicalize(QuantumShape(lc.context(), parts));
    out.push_back(GradedTerm{std::move(shape), degree, coeff});
  }
  std::sort(out.begin(), out.end(), [](const GradedTerm& x, const GradedTerm& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.shape < y.shape;
  });
  return out;
}

QLinearCombination denormalize(const GrassContext& ctx, const std::vector<GradedTerm>& terms) {
  QLinearCombination out(ctx);
  for (const auto& term : terms) {
    out.add(shift(QuantumShape::from_partition(ctx, term.shape), term.degree), term.coeff);
  }
  return out;
}

std::string to_string(const std::vector<GradedTerm>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    if (!first) {
      os << (negative ? " - " : " + ");
    } else if (negative) {
      os << "-";
    }
    first = false;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    os << mag << "*";
    if (t.degree == 1) {
      os << "q*";
    } else if (t.degree != 0) {
      os << "q^" << t.degree << "*";
    }
    os << "O^" << to_string(t.shape);
  }
  return os.str();
}

std::string to_string(const QLinearCombination& lc) {
  if (lc.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [parts, coeff] : lc.terms()) {
    const bool negative = coeff < 0;
    if (!first) {
      os << (negative ? " - " : " + ");
    } else if (negative) {
      os << "-";
    }
    first = false;
    os << (negative ? Integer(-coeff) : coeff) << "*O^" << parts_to_string(parts);
  }
  return os.str();
}

}  // namespace qkhook
