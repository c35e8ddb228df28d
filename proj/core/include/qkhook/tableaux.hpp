#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qkhook/integer.hpp"
#include "qkhook/partition.hpp"

namespace qkhook {

/// outer / inner with inner contained in outer. Rows are 0-based; row r holds
/// columns [inner[r], outer[r]).
class SkewDiagram {
 public:
  SkewDiagram() = default;
  /// Throws InputError unless inner is contained in outer.
  SkewDiagram(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  std::size_t rows() const noexcept { return outer_.length(); }
  std::int64_t row_begin(std::size_t r) const noexcept { return inner_[r]; }
  std::int64_t row_end(std::size_t r) const noexcept { return outer_[r]; }
  std::int64_t box_count() const noexcept { return outer_.size() - inner_.size(); }
  bool has_box(std::int64_t r, std::int64_t c) const noexcept;

  friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// lambda * mu: mu placed with its bottom-left corner on the top-right corner
/// of lambda. Rows of mu come first.
SkewDiagram star_shape(const Partition& lambda, const Partition& mu);

using LetterSet = std::vector<std::int64_t>;  ///< strictly increasing, nonempty

/// Filling of a skew diagram by finite nonempty sets of positive integers.
/// filling()[r][k] is the set in the k-th box (left to right) of row r.
class SetValuedTableau {
 public:
  /// Throws InputError unless every set is nonempty and sorted, rows weakly
  /// increase (max A <= min B) and columns strictly increase (max A < min B).
  SetValuedTableau(SkewDiagram diagram, std::vector<std::vector<LetterSet>> filling);

  const SkewDiagram& diagram() const noexcept { return diagram_; }
  const std::vector<std::vector<LetterSet>>& filling() const noexcept { return filling_; }
  /// Set at absolute row r and column c; the box must exist.
  const LetterSet& at(std::int64_t r, std::int64_t c) const;

 private:
  SkewDiagram diagram_;
  std::vector<std::vector<LetterSet>> filling_;
};

using ReadingWord = std::vector<std::int64_t>;

/// Rows from bottom to top, each row left to right, each box in increasing order.
ReadingWord reading_word(const SetValuedTableau& t);

/// Every letter w_i > 1 is followed by strictly more (w_i - 1)s than w_i s.
bool is_reverse_lattice(const ReadingWord& w) noexcept;

/// c_k = multiplicity of k, for k = 1 .. max letter.
std::vector<std::int64_t> content(const ReadingWord& w);

/// Number of set-valued tableaux of the given shape whose reading word is a
/// reverse lattice word of content nu. The optional visitor sees each one.
Integer count_lr_tableaux(const SkewDiagram& shape, const Partition& nu,
                          const std::function<void(const SetValuedTableau&)>& visit = {});

/// Signed K-theoretic Littlewood-Richardson coefficient N_{lambda,mu}^nu of K(Gr):
/// (-1)^{|nu|-|lambda|-|mu|} times the tableau count on lambda * mu.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// (t, t, t-1, ..., 3, 2): rho_t[1] less one box.
Partition staircase_target(std::int64_t t);

/// Pairs (i, T) with 1 <= i <= min(a,b), T a reverse-lattice set-valued tableau
/// of shape (a\b) * rho_t and content staircase_target(t), and every box
/// holding a letter j <= i equal to {j}. Returns 0 for negative a or b; throws
/// InputError for t < 1.
Integer marked_pair_count(std::int64_t t, std::int64_t a, std::int64_t b);

/// Nested set lists in row order, e.g. [[[1],[1,2]],[[2]]].
std::string to_string(const SetValuedTableau& t);
std::string to_string(const SkewDiagram& d);

}  // namespace qkhook
