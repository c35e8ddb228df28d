#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qkhook/context.hpp"

namespace qkhook {

/// A Young diagram: weakly decreasing nonnegative parts, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError on negative or increasing parts.
  explicit Partition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  /// Number of nonzero parts.
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based); 0 past the end.
  std::int64_t operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  std::int64_t size() const noexcept;

  /// Parts padded with zeros to `len`; throws InputError if longer.
  std::vector<std::int64_t> padded(std::size_t len) const;
  bool contains(const Partition& inner) const noexcept;
  bool fits(const GrassContext& ctx) const noexcept;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// Arm/leg parameters of the hook (a\b): a+1 boxes down, b+1 across.
/// Negative values are allowed and denote the zero class.
struct HookParams {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool valid() const noexcept { return a >= 0 && b >= 0; }
  std::int64_t boxes() const noexcept { return a + b + 1; }
  friend bool operator==(const HookParams&, const HookParams&) = default;
};

/// (b+1, 1^a). Throws InputError for negative a or b.
Partition hook_partition(const HookParams& h);

/// Staircase (t-1, ..., 1, 0). Throws InputError for t < 1.
Partition rho_partition(std::int64_t t);

/// Complement in the m x (n-m) rectangle, rotated: dual_i = (n-m) - parts_{m+1-i}.
Partition dual(const Partition& p, const GrassContext& ctx);

/// Boxes with nothing to the south or east; equals the number of distinct nonzero parts.
std::int64_t corners(const Partition& p) noexcept;

/// Comma-separated parts; "" and "()" give the empty partition.
std::vector<std::int64_t> parse_parts(const std::string& text);
Partition parse_partition(const std::string& text);

/// "(3,1,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);
std::string parts_to_string(std::span<const std::int64_t> parts);

}  // namespace qkhook
