#include "qkhook/quantum_shape.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qkhook/errors.hpp"

namespace qkhook {
namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t p) {
  auto r = x % p;
  return r < 0 ? r + p : r;
}

void require_same_context(const QuantumShape& a, const QuantumShape& b) {
  if (a.context() != b.context()) throw ContextMismatch();
}

void require_contained(const QuantumShape& lambda, const QuantumShape& nu) {
  if (!contains(lambda, nu)) {
    throw InputError("skew shape " + to_string(nu) + "/" + to_string(lambda) +
                     " is undefined: inner shape not contained");
  }
}

}  // namespace

QuantumShape::QuantumShape(const GrassContext& ctx, std::vector<std::int64_t> parts)
    : ctx_(ctx), parts_(std::move(parts)) {
  const auto m = static_cast<std::size_t>(ctx_.m());
  if (parts_.size() != m) {
    throw ShapeError(ShapeViolation::kLengthMismatch,
                     "length mismatch: expected " + std::to_string(m) + " parts for " +
                         to_string(ctx_) + ", got " + std::to_string(parts_.size()));
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (parts_[i] < parts_[i + 1]) {
      throw ShapeError(ShapeViolation::kNotDecreasing,
                       "monotonicity violated: part " + std::to_string(i + 1) + " (" +
                           std::to_string(parts_[i]) + ") < part " + std::to_string(i + 2) + " (" +
                           std::to_string(parts_[i + 1]) + ")");
    }
  }
  if (parts_[m - 1] + ctx_.cols() < parts_[0]) {
    throw ShapeError(ShapeViolation::kWrapConstraint,
                     "wrap constraint violated: last part + (n-m) = " +
                         std::to_string(parts_[m - 1] + ctx_.cols()) + " < first part " +
                         std::to_string(parts_[0]));
  }
}

QuantumShape QuantumShape::from_partition(const GrassContext& ctx, const Partition& p) {
  if (!p.fits(ctx)) {
    throw InputError("partition " + to_string(p) + " does not fit the rectangle of " +
                     to_string(ctx));
  }
  return QuantumShape(ctx, p.padded(static_cast<std::size_t>(ctx.m())));
}

std::int64_t QuantumShape::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool is_classical(const QuantumShape& s) noexcept {
  const auto cols = s.context().cols();
  return std::all_of(s.parts().begin(), s.parts().end(),
                     [cols](std::int64_t p) { return p >= 0 && p <= cols; });
}

Partition to_partition(const QuantumShape& s) {
  if (!is_classical(s)) throw InputError("shape " + to_string(s) + " is not classical");
  return Partition(s.parts());
}

QuantumShape shift(const QuantumShape& s, std::int64_t d) {
  const auto& ctx = s.context();
  const auto m = static_cast<std::size_t>(ctx.m());
  // d = k*m + rem: a full turn of m steps adds n to every part.
  const std::int64_t turns = d >= 0 ? d / ctx.m() : -((-d + ctx.m() - 1) / ctx.m());
  std::int64_t rem = d - turns * ctx.m();
  std::vector<std::int64_t> parts = s.parts();
  for (auto& p : parts) p += turns * ctx.n();
  for (; rem > 0; --rem) {
    std::vector<std::int64_t> next(m);
    next[0] = parts[m - 1] + ctx.cols() + 1;
    for (std::size_t i = 1; i < m; ++i) next[i] = parts[i - 1] + 1;
    parts = std::move(next);
  }
  return QuantumShape(QuantumShape::Unchecked{}, ctx, std::move(parts));
}

std::pair<Partition, std::int64_t> classicalize(const QuantumShape& s) {
  const auto& ctx = s.context();
  std::int64_t d = 0;
  QuantumShape cur = s;
  // Coarse jump by whole turns, then single steps.
  if (cur.parts().front() > ctx.cols()) {
    const std::int64_t turns = (cur.parts().front() - ctx.cols()) / ctx.n();
    cur = shift(cur, -turns * ctx.m());
    d += turns * ctx.m();
  } else if (cur.parts().back() < 0) {
    const std::int64_t turns = (-cur.parts().back()) / ctx.n();
    cur = shift(cur, turns * ctx.m());
    d -= turns * ctx.m();
  }
  while (cur.parts().front() > ctx.cols()) {
    cur = shift(cur, -1);
    ++d;
  }
  while (cur.parts().back() < 0) {
    cur = shift(cur, 1);
    --d;
  }
  return {Partition(cur.parts()), d};
}

QuantumShape translate(const QuantumShape& s, std::int64_t rows, std::int64_t cols) {
  const auto& ctx = s.context();
  const auto m = static_cast<std::size_t>(ctx.m());
  // m row steps equal n-m column steps.
  const std::int64_t turns = rows >= 0 ? rows / ctx.m() : -((-rows + ctx.m() - 1) / ctx.m());
  std::int64_t rem = rows - turns * ctx.m();
  std::vector<std::int64_t> parts = s.parts();
  for (auto& p : parts) p += turns * ctx.cols() + cols;
  if (rem > 0) {
    const auto r = static_cast<std::size_t>(rem);
    // Row i+r of the result is row i of the source; rows wrapping past m pick up n-m.
    std::vector<std::int64_t> next(m);
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = i >= r ? parts[i - r] : parts[m - r + i] + ctx.cols();
    }
    parts = std::move(next);
  }
  return QuantumShape(QuantumShape::Unchecked{}, ctx, std::move(parts));
}

bool contains(const QuantumShape& lambda, const QuantumShape& nu) {
  require_same_context(lambda, nu);
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (lambda.parts()[i] > nu.parts()[i]) return false;
  }
  return true;
}

std::int64_t skew_size(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  return nu.size() - lambda.size();
}

bool is_horizontal_strip(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  const auto& l = lambda.parts();
  const auto& v = nu.parts();
  std::int64_t above = l.back() + lambda.context().cols();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (v[i] > above) return false;
    above = l[i];
  }
  return true;
}

bool is_vertical_strip(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (nu.parts()[i] > lambda.parts()[i] + 1) return false;
  }
  return true;
}

bool is_rim(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  return nu != lambda && contains(nu, shift(lambda, 1));
}

bool is_unbroken_rim(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  return nu == shift(lambda, 1);
}

std::int64_t row_count(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  std::int64_t rows = 0;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (nu.parts()[i] > lambda.parts()[i]) ++rows;
  }
  return rows;
}

std::int64_t col_count(const QuantumShape& nu, const QuantumShape& lambda) {
  require_contained(lambda, nu);
  const auto cols = lambda.context().cols();
  std::set<std::int64_t> residues;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    const auto lo = lambda.parts()[i] + 1;
    const auto hi = std::min(nu.parts()[i], lambda.parts()[i] + cols);
    for (auto c = lo; c <= hi; ++c) residues.insert(floor_mod(c, cols));
  }
  return static_cast<std::int64_t>(residues.size());
}

std::int64_t quantum_corners(const QuantumShape& s) noexcept {
  const auto& p = s.parts();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto below = i + 1 < p.size() ? p[i + 1] : p.front() - s.context().cols();
    if (p[i] > below) ++count;
  }
  return count;
}

std::pair<GrassContext, QuantumShape> rho(std::int64_t t) {
  if (t < 1) throw InputError("staircase rho_t requires t >= 1");
  GrassContext ctx(t, 2 * t);
  return {ctx, QuantumShape::from_partition(ctx, rho_partition(t))};
}

std::vector<QuantumShape> classical_shapes(const GrassContext& ctx) {
  std::vector<QuantumShape> out;
  const auto m = static_cast<std::size_t>(ctx.m());
  std::vector<std::int64_t> parts(m, 0);
  // Odometer over weakly decreasing sequences in [0, n-m], lexicographic.
  auto recurse = [&](auto&& self, std::size_t row, std::int64_t cap) -> void {
    if (row == m) {
      out.push_back(QuantumShape(ctx, parts));
      return;
    }
    for (std::int64_t v = 0; v <= cap; ++v) {
      parts[row] = v;
      self(self, row + 1, v);
    }
  };
  recurse(recurse, 0, ctx.cols());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const QuantumShape& s) { return parts_to_string(s.parts()); }

}  // namespace qkhook
