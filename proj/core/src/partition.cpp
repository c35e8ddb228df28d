#include "qkhook/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qkhook/errors.hpp"

namespace qkhook {

GrassContext::GrassContext(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m < 1 || m >= n) {
    throw InputError("Grassmannian Gr(m,n) requires 1 <= m < n, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n));
  }
}

GrassContext parse_context(const std::string& text) {
  auto parts = parse_parts(text);
  if (parts.size() != 2) throw InputError("context must be given as \"m,n\", got \"" + text + "\"");
  return GrassContext(parts[0], parts[1]);
}

std::string to_string(const GrassContext& ctx) {
  return "Gr(" + std::to_string(ctx.m()) + "," + std::to_string(ctx.n()) + ")";
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be weakly decreasing");
    }
  }
}

std::int64_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::vector<std::int64_t> Partition::padded(std::size_t len) const {
  if (parts_.size() > len) {
    throw InputError("partition " + to_string(*this) + " has more than " + std::to_string(len) +
                     " rows");
  }
  std::vector<std::int64_t> out(parts_);
  out.resize(len, 0);
  return out;
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner.parts_[i] > parts_[i]) return false;
  }
  return true;
}

bool Partition::fits(const GrassContext& ctx) const noexcept {
  return static_cast<std::int64_t>(length()) <= ctx.m() && (empty() || parts_[0] <= ctx.cols());
}

Partition Partition::conjugate() const {
  if (empty()) return {};
  std::vector<std::int64_t> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (auto p : parts_) {
    for (std::int64_t c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(conj));
}

Partition hook_partition(const HookParams& h) {
  if (!h.valid()) {
    throw InputError("hook (" + std::to_string(h.a) + "\\" + std::to_string(h.b) +
                     ") has a negative arm or leg");
  }
  std::vector<std::int64_t> parts(static_cast<std::size_t>(h.a + 1), 1);
  parts[0] = h.b + 1;
  return Partition(std::move(parts));
}

Partition rho_partition(std::int64_t t) {
  if (t < 1) throw InputError("staircase rho_t requires t >= 1");
  std::vector<std::int64_t> parts;
  for (std::int64_t i = t - 1; i >= 0; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

Partition dual(const Partition& p, const GrassContext& ctx) {
  if (!p.fits(ctx)) {
    throw InputError("partition " + to_string(p) + " does not fit the " + std::to_string(ctx.m()) +
                     "x" + std::to_string(ctx.cols()) + " rectangle");
  }
  const auto m = static_cast<std::size_t>(ctx.m());
  auto padded = p.padded(m);
  std::vector<std::int64_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = ctx.cols() - padded[m - 1 - i];
  return Partition(std::move(out));
}

std::int64_t corners(const Partition& p) noexcept {
  const auto& parts = p.parts();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size() || parts[i] != parts[i + 1]) ++count;
  }
  return count;
}

std::vector<std::int64_t> parse_parts(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') body.push_back(ch);
  }
  std::vector<std::int64_t> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = body.find(',', pos);
    auto token = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("cannot parse integer list \"" + text + "\"");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_parts(text)); }

std::string parts_to_string(std::span<const std::int64_t> parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Partition& p) { return parts_to_string(p.parts()); }

}  // namespace qkhook
