#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <vector>

#include "qkhook/linear_combination.hpp"
#include "qkhook/quantum_shape.hpp"

namespace testing {

inline qkhook::QuantumShape shape(std::int64_t m, std::int64_t n, std::vector<std::int64_t> parts) {
  return qkhook::make_shape(qkhook::GrassContext(m, n), std::move(parts));
}

inline qkhook::Partition part(std::vector<std::int64_t> parts) { return qkhook::Partition(std::move(parts)); }

using Terms = std::map<std::vector<std::int64_t>, qkhook::Integer>;

inline Terms terms(const qkhook::QLinearCombination& lc) { return lc.terms(); }

// Random classical shape of a random Gr(m,n) with n <= max_n.
struct Sample {
  qkhook::GrassContext ctx{1, 2};
  qkhook::QuantumShape lambda{ctx, {0}};
};

inline Sample random_classical(std::mt19937_64& rng, std::int64_t max_n) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto n = pick(2, max_n);
  const auto m = pick(1, n - 1);
  qkhook::GrassContext ctx(m, n);
  std::vector<std::int64_t> parts(static_cast<std::size_t>(m));
  for (auto& p : parts) p = pick(0, n - m);
  std::sort(parts.rbegin(), parts.rend());
  return {ctx, qkhook::QuantumShape(ctx, parts)};
}

}  // namespace testing
