#include <algorithm>
#include <string>

#include "qkhook/closed_forms.hpp"
#include "qkhook/errors.hpp"

namespace qkhook {
namespace {

// Boundary path of a partition in the m x (n-m) rectangle, read from the
// bottom-left corner: 'E' steps right, 'N' steps up (one N per row, bottom row
// first). Closing the path cyclically gives the quantum-poset boundary; its
// N-runs and E-runs each number quantum_corners.
std::string boundary_word(const Partition& p, std::int64_t m, std::int64_t cols) {
  std::string word;
  std::int64_t x = 0;
  for (std::int64_t row = m; row >= 1; --row) {
    const auto part = p[static_cast<std::size_t>(row - 1)];
    word.append(static_cast<std::size_t>(part - x), 'E');
    word.push_back('N');
    x = part;
  }
  word.append(static_cast<std::size_t>(cols - x), 'E');
  return word;
}

Partition from_word(const std::string& word) {
  std::vector<std::int64_t> rows_bottom_up;
  std::int64_t x = 0;
  for (char c : word) {
    if (c == 'E') {
      ++x;
    } else {
      rows_bottom_up.push_back(x);
    }
  }
  std::reverse(rows_bottom_up.begin(), rows_bottom_up.end());
  return Partition(std::move(rows_bottom_up));
}

bool cyclically_repeated(const std::string& w, std::size_t pos) {
  const auto len = w.size();
  return w[(pos + 1) % len] == w[pos] || w[(pos + len - 1) % len] == w[pos];
}

// Index of the letter to drop, or npos. Boundary letters are preferred so the
// word drifts toward N E N E ... N E, the word of rho_t.
std::size_t removable(const std::string& w, char letter) {
  const auto len = w.size();
  if (letter == 'N' && w[len - 1] == 'N' && cyclically_repeated(w, len - 1)) return len - 1;
  if (letter == 'E' && w[0] == 'E' && cyclically_repeated(w, 0)) return 0;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (w[i] == letter && w[i + 1] == letter) return i;
  }
  return std::string::npos;
}

}  // namespace

bool can_reduce(const ReductionState& s) {
  const auto t = quantum_corners(s.shape());
  return t < std::max(s.m, s.n - s.m);
}

ReductionState reduce_step(const ReductionState& s) {
  const auto ctx = s.context();
  if (!s.lambda.fits(ctx)) throw InputError("reduction state shape does not fit its rectangle");
  if (!can_reduce(s)) {
    throw InputError("no repeated row or column: " + to_string(s.lambda) + " already has " +
                     "max(m, n-m) quantum corners");
  }
  auto word = boundary_word(s.lambda, s.m, ctx.cols());
  ReductionState next = s;
  next.n = s.n - 1;
  auto pos = removable(word, 'N');
  if (pos != std::string::npos && s.m > 1) {
    next.m = s.m - 1;
    next.a = s.a - 1;
  } else {
    pos = removable(word, 'E');
    next.b = s.b - 1;
  }
  word.erase(pos, 1);
  next.lambda = from_word(word);
  return next;
}

ReductionChain reduction_chain(const ReductionState& start) {
  ReductionChain chain;
  chain.states.push_back(start);
  while (can_reduce(chain.states.back())) {
    chain.states.push_back(reduce_step(chain.states.back()));
  }
  const auto& last = chain.states.back();
  const auto t = last.m;
  if (last.lambda != rho_partition(t)) {
    // Only (t, ..., 1) remains possible; move it one row up.
    auto moved = translate(last.shape(), -1, 0);
    ReductionState aligned = last;
    aligned.lambda = to_partition(moved);
    chain.states.push_back(aligned);
    chain.aligned = true;
  }
  return chain;
}

}  // namespace qkhook
