#include "loopforge/loop.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "loopforge/error.hpp"

namespace loopforge {

namespace {

constexpr std::size_t kMaskBits = 64;

void require_mask_order(const LoopTable& loop) {
  if (loop.order() > kMaskBits) {
    throw Error(ErrorKind::OrderTooLarge,
                "subgroup operations support orders up to 64, got " +
                    std::to_string(loop.order()));
  }
}

std::uint64_t bit(Element x) { return std::uint64_t{1} << x; }

std::vector<Element> members(std::uint64_t mask) {
  std::vector<Element> out;
  for (Element x = 0; mask != 0; ++x, mask >>= 1) {
    if (mask & 1u) out.push_back(x);
  }
  return out;
}

std::uint64_t closure(const LoopTable& loop, std::uint64_t mask) {
  std::uint64_t prev = 0;
  while (prev != mask) {
    prev = mask;
    const auto elems = members(mask);
    for (Element a : elems) {
      for (Element b : elems) mask |= bit(loop.at(a, b));
    }
  }
  return mask;
}

bool associative_on(const LoopTable& loop, std::span<const Element> elems) {
  for (Element a : elems) {
    for (Element b : elems) {
      const Element ab = loop.at(a, b);
      for (Element c : elems) {
        if (loop.at(ab, c) != loop.at(a, loop.at(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Element>> LoopTable::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    out[x].assign(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
  }
  return out;
}

LoopTable validate_table(const std::vector<std::vector<Element>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::NotSquare, "empty table");
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x].size() != n) {
      throw Error(ErrorKind::NotSquare,
                  "row " + std::to_string(x) + " has " +
                      std::to_string(raw[x].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (raw[x][y] >= n) {
        throw Error(ErrorKind::OutOfRange,
                    "entry (" + std::to_string(x) + "," + std::to_string(y) +
                        ") = " + std::to_string(raw[x][y]) + " is not below " +
                        std::to_string(n));
      }
    }
  }

  LoopTable loop;
  loop.n_ = n;
  loop.table_.resize(n * n);
  loop.rdiv_.assign(n * n, static_cast<Element>(n));
  loop.ldiv_.assign(n * n, static_cast<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element z = raw[x][y];
      loop.table_[x * n + y] = z;
      // x·y == z: z R_y^{-1} = x and z L_x^{-1} = y.
      Element& r = loop.rdiv_[y * n + z];
      Element& l = loop.ldiv_[x * n + z];
      if (l != n) {
        throw Error(ErrorKind::NotLatin, "row " + std::to_string(x) +
                                             " repeats entry " + std::to_string(z));
      }
      if (r != n) {
        throw Error(ErrorKind::NotLatin, "column " + std::to_string(y) +
                                             " repeats entry " + std::to_string(z));
      }
      r = static_cast<Element>(x);
      l = static_cast<Element>(y);
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) {
      ok = raw[e][y] == y && raw[y][e] == y;
    }
    if (ok) {
      loop.identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  loop.associative_ = true;
  for (Element a = 0; a < n && loop.associative_; ++a) {
    for (Element b = 0; b < n && loop.associative_; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (loop.at(loop.at(a, b), c) != loop.at(a, loop.at(b, c))) {
          loop.associative_ = false;
          break;
        }
      }
    }
  }
  return loop;
}

Perm left_translation(const LoopTable& loop, Element x) {
  if (x >= loop.order()) {
    throw Error(ErrorKind::OutOfRange, "element " + std::to_string(x) +
                                           " out of range for order " +
                                           std::to_string(loop.order()));
  }
  std::vector<Element> images(loop.order());
  for (Element y = 0; y < loop.order(); ++y) images[y] = loop.at(x, y);
  return Perm(std::move(images));
}

Perm right_translation(const LoopTable& loop, Element x) {
  if (x >= loop.order()) {
    throw Error(ErrorKind::OutOfRange, "element " + std::to_string(x) +
                                           " out of range for order " +
                                           std::to_string(loop.order()));
  }
  std::vector<Element> images(loop.order());
  for (Element y = 0; y < loop.order(); ++y) images[y] = loop.at(y, x);
  return Perm(std::move(images));
}

Translations translations(const LoopTable& loop, Element x) {
  return {left_translation(loop, x), right_translation(loop, x)};
}

bool is_subgroup(const LoopTable& loop, std::span<const Element> elements) {
  const std::size_t n = loop.order();
  std::vector<bool> in(n, false);
  for (Element x : elements) {
    if (x >= n) return false;
    in[x] = true;
  }
  if (!in[loop.identity()]) return false;
  for (Element a : elements) {
    for (Element b : elements) {
      if (!in[loop.at(a, b)]) return false;
    }
  }
  if (!associative_on(loop, elements)) return false;
  const Element e = loop.identity();
  for (Element a : elements) {
    const bool has_inverse = std::any_of(
        elements.begin(), elements.end(),
        [&](Element b) { return loop.at(a, b) == e && loop.at(b, a) == e; });
    if (!has_inverse) return false;
  }
  return true;
}

SubgroupSet SubgroupSet::certify(const LoopTable& loop,
                                 std::vector<Element> elements) {
  require_mask_order(loop);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup(loop, elements)) {
    std::string list;
    for (Element x : elements) list += (list.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorKind::NotSubgroup, "{" + list + "} is not a subgroup");
  }
  std::uint64_t mask = 0;
  for (Element x : elements) mask |= bit(x);
  return SubgroupSet(std::move(elements), mask);
}

std::string SubgroupSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

bool operator<(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements_ < b.elements_;
}

SLoopContext::SLoopContext(LoopTable loop, SubgroupSet h)
    : loop_(std::move(loop)), h_(std::move(h)) {
  if (h_.size() < 2 || h_.size() >= loop_.order()) {
    throw Error(ErrorKind::NotSLoop,
                "S-subgroup " + h_.to_string() +
                    " must be non-trivial and proper (2 <= |H| < " +
                    std::to_string(loop_.order()) + ")");
  }
}

std::vector<SubgroupSet> subgroups(const LoopTable& loop) {
  require_mask_order(loop);
  const std::size_t n = loop.order();
  const std::uint64_t trivial = bit(loop.identity());

  // Grow subgroups one generator at a time. Every subgroup is reachable from
  // {e} through a chain of subgroups, so closed but non-associative subsets
  // never need to be expanded.
  std::set<std::uint64_t> seen{trivial};
  std::vector<std::uint64_t> groups{trivial};
  std::deque<std::uint64_t> queue{trivial};
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    for (Element x = 0; x < n; ++x) {
      if (s & bit(x)) continue;
      const std::uint64_t c = closure(loop, s | bit(x));
      if (!seen.insert(c).second) continue;
      if (is_subgroup(loop, members(c))) {
        groups.push_back(c);
        queue.push_back(c);
      }
    }
  }

  std::vector<SubgroupSet> out;
  out.reserve(groups.size());
  for (std::uint64_t m : groups) out.push_back(SubgroupSet(members(m), m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupSet> s_subgroups(const LoopTable& loop) {
  std::vector<SubgroupSet> out;
  for (auto& s : subgroups(loop)) {
    if (s.size() >= 2 && s.size() < loop.order()) out.push_back(std::move(s));
  }
  return out;
}

SubgroupSet middle_nucleus(const LoopTable& loop) {
  const std::size_t n = loop.order();
  std::vector<Element> nucleus;
  for (Element g = 0; g < n; ++g) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      const Element xg = loop.at(x, g);
      for (Element y = 0; y < n; ++y) {
        if (loop.at(xg, y) != loop.at(x, loop.at(g, y))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) nucleus.push_back(g);
  }
  return SubgroupSet::certify(loop, std::move(nucleus));
}

}  // namespace loopforge
