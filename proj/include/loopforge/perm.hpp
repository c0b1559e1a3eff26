#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loopforge {

/// Index of a loop element, 0..n-1.
using Element = std::uint32_t;

/// A bijection on {0, ..., n-1}.
///
/// Maps act on the right: `p[x]` is the image of x, and `compose(p, q)`
/// applies p first and then q, so `compose(p, q)[x] == q[p[x]]`.
class Perm {
 public:
  /// Throws Error(OutOfRange) unless `images` is a bijection of degree >= 1.
  explicit Perm(std::vector<Element> images);
  Perm(std::initializer_list<Element> images);

  static Perm identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator[](Element x) const { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Comma-separated image list, e.g. "1,2,0".
  std::string to_string() const;
  static Perm parse(std::string_view text);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Perm(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);

  std::vector<Element> images_;
};

/// x -> (x p) q. Throws Error(DegreeMismatch) on unequal degrees.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

/// Every permutation of the given degree, in lexicographic order.
std::vector<Perm> all_perms(std::size_t n);

}  // namespace loopforge
