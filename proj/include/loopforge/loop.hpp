#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "loopforge/perm.hpp"

namespace loopforge {

/// A finite loop stored as its Cayley table, `at(x, y) == x·y`.
///
/// Instances only come out of `validate_table`, so every row and column is
/// a permutation and a two-sided identity exists. Left and right division
/// tables are built alongside so that `x R_g^{-1}` and `y L_f^{-1}` are O(1).
class LoopTable {
 public:
  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  bool associative() const noexcept { return associative_; }

  Element at(Element x, Element y) const { return table_[x * n_ + y]; }

  /// The unique x with x·g == z, i.e. z R_g^{-1}.
  Element right_div(Element z, Element g) const { return rdiv_[g * n_ + z]; }
  /// The unique y with f·y == z, i.e. z L_f^{-1}.
  Element left_div(Element f, Element z) const { return ldiv_[f * n_ + z]; }

  std::vector<std::vector<Element>> rows() const;
  std::span<const Element> cells() const noexcept { return table_; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend LoopTable validate_table(const std::vector<std::vector<Element>>& raw);

  std::size_t n_ = 0;
  Element identity_ = 0;
  bool associative_ = false;
  std::vector<Element> table_;
  std::vector<Element> rdiv_;
  std::vector<Element> ldiv_;
};

/// Throws Error with kind NotSquare, OutOfRange, NotLatin or NoIdentity.
LoopTable validate_table(const std::vector<std::vector<Element>>& raw);

struct Translations {
  Perm left;   // y -> x·y
  Perm right;  // y -> y·x
};

Translations translations(const LoopTable& loop, Element x);
Perm left_translation(const LoopTable& loop, Element x);
Perm right_translation(const LoopTable& loop, Element x);

/// A subset of a loop's elements that forms a group under the loop's
/// operation. Orders up to 64 are supported (membership is a bit mask).
class SubgroupSet {
 public:
  /// Throws Error(NotSubgroup) unless `elements` contains the identity, is
  /// closed, associative and has two-sided inverses inside the set.
  static SubgroupSet certify(const LoopTable& loop, std::vector<Element> elements);

  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(Element x) const noexcept {
    return x < 64 && ((mask_ >> x) & 1u) != 0;
  }

  std::string to_string() const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.elements_ == b.elements_;
  }
  /// Size first, then lexicographic.
  friend bool operator<(const SubgroupSet& a, const SubgroupSet& b);

 private:
  friend std::vector<SubgroupSet> subgroups(const LoopTable& loop);

  SubgroupSet(std::vector<Element> elements, std::uint64_t mask)
      : elements_(std::move(elements)), mask_(mask) {}

  std::vector<Element> elements_;
  std::uint64_t mask_ = 0;
};

/// A loop together with a chosen S-subgroup H, 2 <= |H| < n.
class SLoopContext {
 public:
  /// Throws Error(NotSLoop) if H is trivial or the whole loop.
  SLoopContext(LoopTable loop, SubgroupSet h);

  const LoopTable& loop() const noexcept { return loop_; }
  const SubgroupSet& h() const noexcept { return h_; }

 private:
  LoopTable loop_;
  SubgroupSet h_;
};

bool is_subgroup(const LoopTable& loop, std::span<const Element> elements);

/// All subgroups, sorted by size then lexicographically.
std::vector<SubgroupSet> subgroups(const LoopTable& loop);
/// The subgroups with 2 <= |S| < n.
std::vector<SubgroupSet> s_subgroups(const LoopTable& loop);
/// { g : (x·g)·y == x·(g·y) for all x, y }.
SubgroupSet middle_nucleus(const LoopTable& loop);

}  // namespace loopforge
