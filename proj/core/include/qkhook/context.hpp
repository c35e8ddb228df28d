#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qkhook {

/// Fixes X = Gr(m,n); the quantum poset is Z^2 modulo the period vector (m, m-n).
class GrassContext {
 public:
  /// Throws InputError unless 1 <= m < n.
  GrassContext(std::int64_t m, std::int64_t n);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  /// Width n-m of the m x (n-m) rectangle.
  std::int64_t cols() const noexcept { return n_ - m_; }

  friend bool operator==(const GrassContext&, const GrassContext&) = default;
  friend auto operator<=>(const GrassContext&, const GrassContext&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

/// Parses "m,n".
GrassContext parse_context(const std::string& text);

std::string to_string(const GrassContext& ctx);

}  // namespace qkhook
