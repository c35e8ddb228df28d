#include "qkhook/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "qkhook/errors.hpp"

namespace qkhook {

SkewDiagram::SkewDiagram(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw InputError("skew diagram " + to_string(outer_) + "/" + to_string(inner_) +
                     ": inner shape not contained in outer");
  }
}

bool SkewDiagram::has_box(std::int64_t r, std::int64_t c) const noexcept {
  if (r < 0 || r >= static_cast<std::int64_t>(rows())) return false;
  const auto row = static_cast<std::size_t>(r);
  return c >= row_begin(row) && c < row_end(row);
}

SkewDiagram star_shape(const Partition& lambda, const Partition& mu) {
  std::vector<std::int64_t> outer;
  std::vector<std::int64_t> inner;
  for (auto part : mu.parts()) {
    outer.push_back(part + lambda[0]);
    inner.push_back(lambda[0]);
  }
  for (auto part : lambda.parts()) outer.push_back(part);
  return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

SetValuedTableau::SetValuedTableau(SkewDiagram diagram, std::vector<std::vector<LetterSet>> filling)
    : diagram_(std::move(diagram)), filling_(std::move(filling)) {
  if (filling_.size() != diagram_.rows()) throw InputError("filling has the wrong number of rows");
  for (std::size_t r = 0; r < filling_.size(); ++r) {
    const auto width = diagram_.row_end(r) - diagram_.row_begin(r);
    if (static_cast<std::int64_t>(filling_[r].size()) != width) {
      throw InputError("filling row " + std::to_string(r) + " has the wrong number of boxes");
    }
    for (const auto& set : filling_[r]) {
      if (set.empty()) throw InputError("set-valued tableau boxes must be nonempty");
      if (set.front() < 1) throw InputError("tableau letters must be positive");
      if (!std::is_sorted(set.begin(), set.end()) ||
          std::adjacent_find(set.begin(), set.end()) != set.end()) {
        throw InputError("box sets must be listed strictly increasing");
      }
    }
  }
  for (std::size_t r = 0; r < filling_.size(); ++r) {
    const auto begin = diagram_.row_begin(r);
    for (std::size_t k = 0; k < filling_[r].size(); ++k) {
      const auto c = begin + static_cast<std::int64_t>(k);
      if (k + 1 < filling_[r].size() && filling_[r][k].back() > filling_[r][k + 1].front()) {
        throw InputError("row " + std::to_string(r) + " does not weakly increase");
      }
      const auto above = static_cast<std::int64_t>(r) - 1;
      if (diagram_.has_box(above, c) && at(above, c).back() >= filling_[r][k].front()) {
        throw InputError("column " + std::to_string(c) + " does not strictly increase");
      }
    }
  }
}

const LetterSet& SetValuedTableau::at(std::int64_t r, std::int64_t c) const {
  if (!diagram_.has_box(r, c)) throw std::out_of_range("no such box in the diagram");
  const auto row = static_cast<std::size_t>(r);
  return filling_[row][static_cast<std::size_t>(c - diagram_.row_begin(row))];
}

ReadingWord reading_word(const SetValuedTableau& t) {
  ReadingWord word;
  const auto& rows = t.filling();
  for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
    for (const auto& set : *r) word.insert(word.end(), set.begin(), set.end());
  }
  return word;
}

bool is_reverse_lattice(const ReadingWord& w) noexcept {
  // Scan from the end, counting letters seen so far (those that follow).
  std::vector<std::int64_t> seen;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto x = *it;
    if (x < 1) return false;
    if (seen.size() < static_cast<std::size_t>(x) + 1) seen.resize(static_cast<std::size_t>(x) + 1, 0);
    const auto ux = static_cast<std::size_t>(x);
    if (x > 1 && seen[ux - 1] <= seen[ux]) return false;
    ++seen[ux];
  }
  return true;
}

std::vector<std::int64_t> content(const ReadingWord& w) {
  std::vector<std::int64_t> out;
  for (auto x : w) {
    if (x < 1) throw InputError("reading words hold positive letters");
    if (out.size() < static_cast<std::size_t>(x)) out.resize(static_cast<std::size_t>(x), 0);
    ++out[static_cast<std::size_t>(x - 1)];
  }
  return out;
}

namespace {

// Backtracking over boxes in reverse reading order (rows top to bottom, each
// row right to left, letters within a box descending). Building the word from
// its end means every reverse-lattice test sees its complete suffix.
class LrEnumerator {
 public:
  LrEnumerator(const SkewDiagram& shape, const Partition& nu,
               const std::function<void(const SetValuedTableau&)>& visit)
      : shape_(shape), visit_(visit) {
    if (nu.length() > 62) throw InputError("content has too many parts to enumerate");
    letters_ = static_cast<std::int64_t>(nu.length());
    target_.assign(static_cast<std::size_t>(letters_) + 1, 0);
    for (std::int64_t k = 1; k <= letters_; ++k) target_[static_cast<std::size_t>(k)] = nu[static_cast<std::size_t>(k - 1)];
    total_ = nu.size();
    cnt_.assign(target_.size(), 0);
    offset_.resize(shape.rows() + 1, 0);
    for (std::size_t r = 0; r < shape.rows(); ++r) {
      offset_[r + 1] = offset_[r] + static_cast<std::size_t>(shape.row_end(r) - shape.row_begin(r));
      for (auto c = shape.row_end(r) - 1; c >= shape.row_begin(r); --c) {
        order_.push_back({static_cast<std::int64_t>(r), c});
      }
    }
    masks_.assign(order_.size(), 0);
  }

  Integer run() {
    count_ = 0;
    if (static_cast<std::int64_t>(order_.size()) <= total_) next_box(0);
    return count_;
  }

 private:
  struct Box {
    std::int64_t r;
    std::int64_t c;
  };

  std::size_t slot(std::int64_t r, std::int64_t c) const {
    const auto row = static_cast<std::size_t>(r);
    return offset_[row] + static_cast<std::size_t>(c - shape_.row_begin(row));
  }

  void next_box(std::size_t idx) {
    if (idx == order_.size()) {
      if (placed_ == total_) {
        ++count_;
        if (visit_) visit_(materialize());
      }
      return;
    }
    const auto [r, c] = order_[idx];
    std::int64_t hi = letters_;
    if (shape_.has_box(r, c + 1)) hi = std::countr_zero(masks_[slot(r, c + 1)]);
    std::int64_t lo = 1;
    if (shape_.has_box(r - 1, c)) lo = 63 - std::countl_zero(masks_[slot(r - 1, c)]) + 1;
    if (lo > hi) return;
    fill(idx, hi, lo, 0);
  }

  void fill(std::size_t idx, std::int64_t upper, std::int64_t lo, std::uint64_t mask) {
    const auto boxes_after = static_cast<std::int64_t>(order_.size() - idx - 1);
    for (auto x = upper; x >= lo; --x) {
      const auto ux = static_cast<std::size_t>(x);
      if (cnt_[ux] >= target_[ux]) continue;
      if (x > 1 && cnt_[ux - 1] <= cnt_[ux]) continue;
      ++cnt_[ux];
      ++placed_;
      if (total_ - placed_ >= boxes_after) {
        const auto with_x = mask | (std::uint64_t{1} << x);
        masks_[idx_slot(idx)] = with_x;
        next_box(idx + 1);
        if (x - 1 >= lo) fill(idx, x - 1, lo, with_x);
      }
      --placed_;
      --cnt_[ux];
    }
    masks_[idx_slot(idx)] = mask;
  }

  std::size_t idx_slot(std::size_t idx) const { return slot(order_[idx].r, order_[idx].c); }

  SetValuedTableau materialize() const {
    std::vector<std::vector<LetterSet>> filling(shape_.rows());
    for (std::size_t r = 0; r < shape_.rows(); ++r) {
      for (auto c = shape_.row_begin(r); c < shape_.row_end(r); ++c) {
        LetterSet set;
        const auto mask = masks_[slot(static_cast<std::int64_t>(r), c)];
        for (std::int64_t x = 1; x <= letters_; ++x) {
          if ((mask >> x) & 1U) set.push_back(x);
        }
        filling[r].push_back(std::move(set));
      }
    }
    return SetValuedTableau(shape_, std::move(filling));
  }

  const SkewDiagram& shape_;
  const std::function<void(const SetValuedTableau&)>& visit_;
  std::int64_t letters_ = 0;
  std::int64_t total_ = 0;
  std::int64_t placed_ = 0;
  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> cnt_;
  std::vector<std::size_t> offset_;
  std::vector<Box> order_;
  std::vector<std::uint64_t> masks_;
  Integer count_;
};

}  // namespace

Integer count_lr_tableaux(const SkewDiagram& shape, const Partition& nu,
                          const std::function<void(const SetValuedTableau&)>& visit) {
  LrEnumerator enumerator(shape, nu, visit);
  return enumerator.run();
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Integer count = count_lr_tableaux(star_shape(lambda, mu), nu);
  return sign_power(nu.size() - lambda.size() - mu.size()) > 0 ? count : Integer(-count);
}

Partition staircase_target(std::int64_t t) {
  if (t < 1) throw InputError("staircase target requires t >= 1");
  std::vector<std::int64_t> parts{t};
  for (std::int64_t k = 2; k <= t; ++k) parts.push_back(t + 2 - k);
  return Partition(std::move(parts));
}

Integer marked_pair_count(std::int64_t t, std::int64_t a, std::int64_t b) {
  if (t < 1) throw InputError("marked pair count requires t >= 1");
  if (a < 0 || b < 0) return 0;
  const auto top = std::min(a, b);
  const auto shape = star_shape(hook_partition({a, b}), rho_partition(t));
  const auto rho_rows = static_cast<std::size_t>(t - 1);
  Integer pairs = 0;
  auto visit = [&](const SetValuedTableau& tab) {
    const auto& rows = tab.filling();
    for (std::size_t r = 0; r < rho_rows; ++r) {
      for (const auto& set : rows[r]) {
        if (set != LetterSet{static_cast<std::int64_t>(r) + 1}) {
          throw std::logic_error("staircase block not filled by its row numbers");
        }
      }
    }
    // bad[j]: letter j shares a box with another letter.
    std::vector<bool> bad(static_cast<std::size_t>(t) + 2, false);
    for (const auto& row : rows) {
      for (const auto& set : row) {
        if (set.size() > 1) {
          for (auto x : set) {
            if (x <= t) bad[static_cast<std::size_t>(x)] = true;
          }
        }
      }
    }
    for (std::int64_t i = 1; i <= top; ++i) {
      if (i <= t && bad[static_cast<std::size_t>(i)]) break;
      ++pairs;
    }
  };
  count_lr_tableaux(shape, staircase_target(t), visit);
  return pairs;
}

std::string to_string(const SetValuedTableau& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < t.filling().size(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t k = 0; k < t.filling()[r].size(); ++k) {
      if (k) os << ',';
      os << '[';
      const auto& set = t.filling()[r][k];
      for (std::size_t e = 0; e < set.size(); ++e) {
        if (e) os << ',';
        os << set[e];
      }
      os << ']';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_string(const SkewDiagram& d) {
  return to_string(d.outer()) + "/" + to_string(d.inner());
}

}  // namespace qkhook
