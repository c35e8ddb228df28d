#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Integer choose(std::int64_t x, std::int64_t k) {
  if (k < 0) return 0;
  if (x < 0) return (k % 2 ? -1 : 1) * choose(-x + k - 1, k);
  if (k > x) return 0;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (x - k + i) / i;
  return r;
}

namespace {
std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  return x / d - ((x % d != 0) && ((x < 0) != (d < 0)));
}
}  // namespace

bool has_box(const Parts& shape, const Rect& g, std::int64_t r, std::int64_t c) {
  const auto k = floor_div(r - 1, g.m);
  const auto i = r - k * g.m;
  return c <= shape[static_cast<std::size_t>(i - 1)] - k * g.cols();
}

bool is_order_ideal(const Parts& shape, const Rect& g) {
  if (static_cast<std::int64_t>(shape.size()) != g.m) return false;
  for (std::int64_t r = 1; r <= g.m; ++r) {
    const auto end = shape[static_cast<std::size_t>(r - 1)];
    if (!has_box(shape, g, r - 1, end)) return false;
  }
  return true;
}

bool in_skew(const Parts& nu, const Parts& lambda, const Rect& g, std::int64_t r, std::int64_t c) {
  return has_box(nu, g, r, c) && !has_box(lambda, g, r, c);
}

namespace {
template <typename Fn>
void for_each_skew_box(const Parts& nu, const Parts& lambda, Fn&& fn) {
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (auto c = lambda[i] + 1; c <= nu[i]; ++c) fn(static_cast<std::int64_t>(i + 1), c);
  }
}
}  // namespace

bool horizontal_strip(const Parts& nu, const Parts& lambda, const Rect& g) {
  bool ok = true;
  for_each_skew_box(nu, lambda, [&](std::int64_t r, std::int64_t c) {
    if (in_skew(nu, lambda, g, r + 1, c)) ok = false;
  });
  return ok;
}

bool vertical_strip(const Parts& nu, const Parts& lambda, const Rect& g) {
  bool ok = true;
  for_each_skew_box(nu, lambda, [&](std::int64_t r, std::int64_t c) {
    if (in_skew(nu, lambda, g, r, c + 1)) ok = false;
  });
  return ok;
}

std::int64_t rows_touched(const Parts& nu, const Parts& lambda, const Rect&) {
  std::set<std::int64_t> rows;
  for_each_skew_box(nu, lambda, [&](std::int64_t r, std::int64_t) { rows.insert(r); });
  return static_cast<std::int64_t>(rows.size());
}

std::int64_t column_classes(const Parts& nu, const Parts& lambda, const Rect& g) {
  std::set<std::int64_t> cols;
  for_each_skew_box(nu, lambda, [&](std::int64_t, std::int64_t c) {
    cols.insert(((c % g.cols()) + g.cols()) % g.cols());
  });
  return static_cast<std::int64_t>(cols.size());
}

Parts shift_once(const Parts& shape, const Rect& g) {
  // Move every box one step down and one step right, then read off row ends.
  Parts out(shape.size());
  for (std::int64_t r = 1; r <= g.m; ++r) {
    std::int64_t c = shape[static_cast<std::size_t>((r + g.m - 2) % g.m)];
    if (r == 1) c += g.cols();
    out[static_cast<std::size_t>(r - 1)] = c + 1;
  }
  return out;
}

namespace {

void odometer(const Parts& lo, const Parts& hi, const std::function<void(const Parts&)>& fn) {
  Parts cur = lo;
  while (true) {
    fn(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == hi[k]) cur[k] = lo[k], ++k;
    if (k == cur.size()) return;
    ++cur[k];
  }
}

std::int64_t boxes_between(const Parts& nu, const Parts& lambda) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) s += nu[i] - lambda[i];
  return s;
}

Expansion strip_pieri(const Parts& lambda, const Rect& g, std::int64_t j, bool horizontal) {
  Expansion out;
  if (j == 0) {
    out[lambda] = 1;
    return out;
  }
  Parts hi = lambda;
  for (auto& p : hi) p += horizontal ? g.cols() : 1;
  odometer(lambda, hi, [&](const Parts& nu) {
    if (!is_order_ideal(nu, g)) return;
    const bool strip = horizontal ? horizontal_strip(nu, lambda, g) : vertical_strip(nu, lambda, g);
    if (!strip) return;
    const auto s = boxes_between(nu, lambda);
    if (s < j) return;
    const auto count = horizontal ? rows_touched(nu, lambda, g) : column_classes(nu, lambda, g);
    const Integer coeff = ((s - j) % 2 ? -1 : 1) * choose(count - 1, s - j);
    if (coeff != 0) out[nu] += coeff;
  });
  return out;
}

void add_scaled(Expansion& into, const Expansion& e, const Integer& scale) {
  for (const auto& [k, v] : e) {
    into[k] += scale * v;
    if (into[k] == 0) into.erase(k);
  }
}

Expansion apply_each(const Expansion& e, const std::function<Expansion(const Parts&)>& f) {
  Expansion out;
  for (const auto& [k, v] : e) add_scaled(out, f(k), v);
  return out;
}

}  // namespace

Expansion row_pieri(const Parts& lambda, const Rect& g, std::int64_t j) {
  return strip_pieri(lambda, g, j, true);
}

Expansion column_pieri(const Parts& lambda, const Rect& g, std::int64_t i) {
  return strip_pieri(lambda, g, i, false);
}

// (a\b) = (a-1\b) + (a\b-1) - O^{1^a} O^b, with (0\b) = O^{b+1}, (a\0) = O^{1^{a+1}}.
Expansion hook_product(const Parts& lambda, const Rect& g, std::int64_t a, std::int64_t b) {
  if (a == 0) return row_pieri(lambda, g, b + 1);
  if (b == 0) return column_pieri(lambda, g, a + 1);
  Expansion out = hook_product(lambda, g, a - 1, b);
  add_scaled(out, hook_product(lambda, g, a, b - 1), 1);
  const auto both = apply_each(row_pieri(lambda, g, b), [&](const Parts& p) { return column_pieri(p, g, a); });
  add_scaled(out, both, -1);
  return out;
}

std::vector<Graded> graded(const Expansion& e, const Rect& g) {
  std::vector<Graded> out;
  for (const auto& [k, v] : e) {
    // Shift down until some part goes negative, then step back.
    Parts p = k;
    std::int64_t d = 0;
    auto classical = [&](const Parts& x) {
      return std::all_of(x.begin(), x.end(), [&](auto y) { return 0 <= y && y <= g.cols(); });
    };
    while (!classical(p)) {
      // Undo one shift: row i takes row i+1's end, minus one; row m takes row 1's.
      Parts q(p.size());
      for (std::size_t i = 0; i + 1 < p.size(); ++i) q[i] = p[i + 1] - 1;
      q.back() = p.front() - g.cols() - 1;
      p = q;
      ++d;
      if (d > 1000) throw std::logic_error("oracle: no classical representative");
    }
    out.push_back({p, d, v});
  }
  return out;
}

std::int64_t young_corners(const Parts& p) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto below = i + 1 < p.size() ? p[i + 1] : 0;
    if (p[i] > 0 && below < p[i]) ++k;
  }
  return k;
}

Parts complement(const Parts& p, const Rect& g) {
  Parts padded = p;
  padded.resize(static_cast<std::size_t>(g.m), 0);
  Parts out;
  for (auto it = padded.rbegin(); it != padded.rend(); ++it) out.push_back(g.cols() - *it);
  return out;
}

Integer lr_brute(const Parts& lambda, const Parts& mu, const Parts& nu) {
  const auto lam1 = lambda.empty() ? 0 : lambda.front();
  struct Box {
    std::int64_t r, c;
  };
  std::vector<Box> boxes;
  for (std::size_t r = 0; r < mu.size(); ++r) {
    for (std::int64_t c = 0; c < mu[r]; ++c) boxes.push_back({static_cast<std::int64_t>(r), lam1 + c});
  }
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (std::int64_t c = 0; c < lambda[r]; ++c) {
      boxes.push_back({static_cast<std::int64_t>(mu.size() + r), c});
    }
  }
  const auto letters = static_cast<std::int64_t>(nu.size());
  const auto total = std::accumulate(nu.begin(), nu.end(), std::int64_t{0});
  std::map<std::pair<std::int64_t, std::int64_t>, unsigned> fill;
  std::vector<std::int64_t> used(static_cast<std::size_t>(letters) + 1, 0);
  std::int64_t used_total = 0;
  Integer count = 0;

  auto lowest = [](unsigned s) { return __builtin_ctz(s) + 1; };
  auto highest = [](unsigned s) { return 32 - __builtin_clz(s); };

  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == boxes.size()) {
      for (std::int64_t l = 1; l <= letters; ++l) {
        if (used[static_cast<std::size_t>(l)] != nu[static_cast<std::size_t>(l - 1)]) return;
      }
      // Word: rows bottom to top, left to right, each set increasing.
      std::vector<std::int64_t> word;
      const auto rows = static_cast<std::int64_t>(mu.size() + lambda.size());
      for (auto r = rows - 1; r >= 0; --r) {
        for (const auto& [pos, s] : fill) {
          if (pos.first != r) continue;
          for (std::int64_t l = 1; l <= letters; ++l) {
            if (s & (1U << (l - 1))) word.push_back(l);
          }
        }
      }
      std::vector<std::int64_t> suffix(static_cast<std::size_t>(letters) + 2, 0);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto l = *it;
        if (l > 1 && suffix[static_cast<std::size_t>(l - 1)] <= suffix[static_cast<std::size_t>(l)]) return;
        ++suffix[static_cast<std::size_t>(l)];
      }
      ++count;
      return;
    }
    const auto [r, c] = boxes[k];
    for (unsigned s = 1; s < (1U << letters); ++s) {
      const auto pc = __builtin_popcount(s);
      if (used_total + pc > total) continue;
      auto left = fill.find({r, c - 1});
      if (left != fill.end() && highest(left->second) > lowest(s)) continue;
      auto up = fill.find({r - 1, c});
      if (up != fill.end() && highest(up->second) >= lowest(s)) continue;
      fill[{r, c}] = s;
      for (std::int64_t l = 1; l <= letters; ++l) {
        if (s & (1U << (l - 1))) ++used[static_cast<std::size_t>(l)];
      }
      used_total += pc;
      go(k + 1);
      used_total -= pc;
      for (std::int64_t l = 1; l <= letters; ++l) {
        if (s & (1U << (l - 1))) --used[static_cast<std::size_t>(l)];
      }
      fill.erase({r, c});
    }
  };
  go(0);
  const auto excess = total - std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0}) -
                      std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
  return (excess % 2 ? -1 : 1) * count;
}

Integer direct_sum(std::int64_t m, std::int64_t n, std::int64_t t, std::int64_t a, std::int64_t b) {
  Integer s = 0;
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t j = 1; j <= b; ++j) {
      const Integer sign = ((n - i - j - 1) % 2 == 0) ? 1 : -1;
      s += sign * choose(a - i + b - j, a - i) * choose(t - 1, m - i) * choose(t - 1, n - m - j);
    }
  }
  return s;
}

std::vector<Parts> partitions_in(const Rect& g) {
  std::vector<Parts> out;
  Parts lo(static_cast<std::size_t>(g.m), 0);
  Parts hi(static_cast<std::size_t>(g.m), g.cols());
  odometer(lo, hi, [&](const Parts& p) {
    if (std::is_sorted(p.rbegin(), p.rend())) out.push_back(p);
  });
  return out;
}

}  // namespace oracle
