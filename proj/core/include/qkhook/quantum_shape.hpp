#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qkhook/context.hpp"
#include "qkhook/partition.hpp"

namespace qkhook {

/// An order ideal of the quantum poset Z^2 / Z(m, m-n), stored by the column of
/// the last box in each of rows 1..m. Parts may be any integers provided
///   parts[i] >= parts[i+1]            (rows weakly decrease)
///   parts[m-1] + (n-m) >= parts[0]    (the wrap-around row stays downward closed)
/// Two shapes are equal iff their contexts and part lists are equal.
class QuantumShape {
 public:
  /// Validating constructor; throws ShapeError naming the violated constraint.
  QuantumShape(const GrassContext& ctx, std::vector<std::int64_t> parts);

  /// Embeds a partition fitting the rectangle as a classical shape.
  static QuantumShape from_partition(const GrassContext& ctx, const Partition& p);

  const GrassContext& context() const noexcept { return ctx_; }
  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  /// Last column of row i for 1-based i in 1..m.
  std::int64_t row_end(std::int64_t i) const noexcept { return parts_[static_cast<std::size_t>(i - 1)]; }
  /// Sum of the parts; shifting by d adds d*n.
  std::int64_t size() const noexcept;

  friend bool operator==(const QuantumShape&, const QuantumShape&) = default;
  friend auto operator<=>(const QuantumShape&, const QuantumShape&) = default;

 private:
  struct Unchecked {};
  QuantumShape(Unchecked, const GrassContext& ctx, std::vector<std::int64_t> parts)
      : ctx_(ctx), parts_(std::move(parts)) {}

  friend QuantumShape shift(const QuantumShape&, std::int64_t);
  friend QuantumShape translate(const QuantumShape&, std::int64_t, std::int64_t);

  GrassContext ctx_;
  std::vector<std::int64_t> parts_;
};

inline QuantumShape make_shape(const GrassContext& ctx, std::vector<std::int64_t> parts) {
  return QuantumShape(ctx, std::move(parts));
}

/// True iff 0 <= parts_i <= n-m for every row.
bool is_classical(const QuantumShape& s) noexcept;

/// Strips the zero rows of a classical shape; throws InputError otherwise.
Partition to_partition(const QuantumShape& s);

/// lambda[d]: every box moved d steps down and d steps right.
QuantumShape shift(const QuantumShape& s, std::int64_t d);

/// The unique (mu, d) with s[-d] classical, i.e. O^s = q^d O^mu.
std::pair<Partition, std::int64_t> classicalize(const QuantumShape& s);

/// Translation by r rows down and s columns right. Negative amounts move
/// up/left. translate(x, 1, 1) == shift(x, 1).
QuantumShape translate(const QuantumShape& s, std::int64_t rows, std::int64_t cols);

/// Box-set containment lambda <= nu. Throws ContextMismatch.
bool contains(const QuantumShape& lambda, const QuantumShape& nu);

/// |nu/lambda|. Throws InputError unless lambda <= nu.
std::int64_t skew_size(const QuantumShape& nu, const QuantumShape& lambda);

bool is_horizontal_strip(const QuantumShape& nu, const QuantumShape& lambda);
bool is_vertical_strip(const QuantumShape& nu, const QuantumShape& lambda);
/// Nonempty nu/lambda with nu inside lambda[1].
bool is_rim(const QuantumShape& nu, const QuantumShape& lambda);
/// nu == lambda[1].
bool is_unbroken_rim(const QuantumShape& nu, const QuantumShape& lambda);

/// Nonempty rows among rows 1..m of nu/lambda.
std::int64_t row_count(const QuantumShape& nu, const QuantumShape& lambda);
/// Nonempty columns among columns 1..n-m of nu/lambda viewed in Z^2.
std::int64_t col_count(const QuantumShape& nu, const QuantumShape& lambda);

/// Maximal boxes of the shape: #{i : parts_i > parts_{i+1}} with
/// parts_{m+1} = parts_1 - (n-m). Translation invariant.
std::int64_t quantum_corners(const QuantumShape& s) noexcept;

/// Gr(t,2t) together with the staircase (t-1, ..., 0).
std::pair<GrassContext, QuantumShape> rho(std::int64_t t);

/// Every classical shape of the context, in lexicographic order of parts.
std::vector<QuantumShape> classical_shapes(const GrassContext& ctx);

std::string to_string(const QuantumShape& s);

}  // namespace qkhook
