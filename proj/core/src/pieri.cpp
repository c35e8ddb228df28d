#include "qkhook/pieri.hpp"

#include "qkhook/errors.hpp"

namespace qkhook {
namespace {

// (-1)^{size-k} C(count-1, size-k); zero when size < k.
Integer pieri_weight(std::int64_t size, std::int64_t k, std::int64_t count) {
  const auto excess = size - k;
  if (excess < 0) return 0;
  Integer w = binomial(count - 1, excess);
  return excess % 2 == 0 ? w : Integer(-w);
}

}  // namespace

QLinearCombination pieri_row(const QuantumShape& lambda, std::int64_t j) {
  const auto& ctx = lambda.context();
  if (j < 0 || j > ctx.cols()) {
    throw InputError("row Pieri index j=" + std::to_string(j) + " outside [0, n-m] for " +
                     to_string(ctx));
  }
  QLinearCombination out(ctx);
  const auto& l = lambda.parts();
  const auto m = l.size();
  std::vector<std::int64_t> nu(l);
  // Horizontal strips are exactly the independent choices
  // nu_i in [lambda_i, lambda_{i-1}] with lambda_0 = lambda_m + n - m.
  auto recurse = [&](auto&& self, std::size_t row, std::int64_t size, std::int64_t rows) -> void {
    if (row == m) {
      Integer w = pieri_weight(size, j, rows);
      if (w != 0) out.add(QuantumShape(ctx, nu), w);
      return;
    }
    const auto cap = row == 0 ? l[m - 1] + ctx.cols() : l[row - 1];
    for (auto v = l[row]; v <= cap; ++v) {
      nu[row] = v;
      self(self, row + 1, size + (v - l[row]), rows + (v > l[row] ? 1 : 0));
    }
    nu[row] = l[row];
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

QLinearCombination pieri_col(const QuantumShape& lambda, std::int64_t i) {
  const auto& ctx = lambda.context();
  if (i < 0 || i > ctx.m()) {
    throw InputError("column Pieri index i=" + std::to_string(i) + " outside [0, m] for " +
                     to_string(ctx));
  }
  QLinearCombination out(ctx);
  const auto& l = lambda.parts();
  const auto m = l.size();
  std::vector<std::int64_t> mu(l);
  // Subsets of rows gaining one box, filtered by the two shape constraints.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::int64_t size = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const bool grow = (mask >> r) & 1U;
      mu[r] = l[r] + (grow ? 1 : 0);
      size += grow ? 1 : 0;
    }
    if (size < i) continue;
    bool valid = mu[m - 1] + ctx.cols() >= mu[0];
    for (std::size_t r = 0; valid && r + 1 < m; ++r) valid = mu[r] >= mu[r + 1];
    if (!valid) continue;
    QuantumShape shape(ctx, mu);
    Integer w = pieri_weight(size, i, col_count(shape, lambda));
    if (w != 0) out.add(shape, w);
  }
  return out;
}

QLinearCombination apply_pieri_row(const QLinearCombination& lc, std::int64_t j) {
  QLinearCombination out(lc.context());
  for (const auto& [parts, coeff] : lc.terms()) {
    out += coeff * pieri_row(QuantumShape(lc.context(), parts), j);
  }
  return out;
}

QLinearCombination apply_pieri_col(const QLinearCombination& lc, std::int64_t i) {
  QLinearCombination out(lc.context());
  for (const auto& [parts, coeff] : lc.terms()) {
    out += coeff * pieri_col(QuantumShape(lc.context(), parts), i);
  }
  return out;
}

std::vector<HookTerm> hook_decomposition(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) {
    throw InputError("hook decomposition needs a, b >= 1; (a\\0) and (0\\b) are a column and a row");
  }
  std::vector<HookTerm> terms;
  for (std::int64_t i = 2; i <= a + 1; ++i) {
    terms.push_back({binomial(a - i + b, b - 1), ColumnClass{i}});
  }
  for (std::int64_t j = 2; j <= b + 1; ++j) {
    terms.push_back({binomial(a + b - j, a - 1), RowClass{j}});
  }
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t j = 1; j <= b; ++j) {
      terms.push_back({-binomial(a - i + b - j, a - i), ProductClass{i, j}});
    }
  }
  return terms;
}

bool hook_fits(const GrassContext& ctx, const HookParams& h) noexcept {
  return h.valid() && h.a + 1 <= ctx.m() && h.b + 1 <= ctx.cols();
}

QLinearCombination multiply_by_hook(const QuantumShape& lambda, const HookParams& h) {
  const auto& ctx = lambda.context();
  if (!h.valid()) {
    throw InputError("hook (" + std::to_string(h.a) + "\\" + std::to_string(h.b) +
                     ") is the zero class, not a basis class");
  }
  if (!hook_fits(ctx, h)) {
    throw InputError("hook (" + std::to_string(h.a) + "\\" + std::to_string(h.b) +
                     ") does not fit the " + std::to_string(ctx.m()) + "x" +
                     std::to_string(ctx.cols()) + " rectangle of " + to_string(ctx));
  }
  if (h.a == 0) return pieri_row(lambda, h.b + 1);
  if (h.b == 0) return pieri_col(lambda, h.a + 1);

  QLinearCombination out(ctx);
  for (const auto& term : hook_decomposition(h.a, h.b)) {
    QLinearCombination piece = std::visit(
        [&](const auto& k) -> QLinearCombination {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, ColumnClass>) {
            return pieri_col(lambda, k.i);
          } else if constexpr (std::is_same_v<K, RowClass>) {
            return pieri_row(lambda, k.j);
          } else {
            return apply_pieri_row(pieri_col(lambda, k.i), k.j);
          }
        },
        term.kind);
    out += term.coeff * std::move(piece);
  }
  return out;
}

bool verify_support(const QuantumShape& lambda, const HookParams& h) {
  const auto product = multiply_by_hook(lambda, h);
  const auto upper = shift(lambda, 1);
  for (const auto& nu : product.support()) {
    if (!contains(lambda, nu) || !contains(nu, upper)) return false;
  }
  return true;
}

bool translation_covariance_check(const QuantumShape& lambda, const HookParams& h,
                                  std::int64_t rows, std::int64_t cols) {
  const auto base = multiply_by_hook(lambda, h);
  const auto moved = multiply_by_hook(translate(lambda, rows, cols), h);
  return translate(base, rows, cols) == moved;
}

}  // namespace qkhook
