#include "loopforge/isotopy.hpp"

#include <algorithm>
#include <string>

#include "loopforge/error.hpp"

namespace loopforge {

namespace {

constexpr Element kUnset = ~Element{0};

void require_element(const LoopTable& loop, Element x) {
  if (x >= loop.order()) {
    throw Error(ErrorKind::OutOfRange, "element " + std::to_string(x) +
                                           " out of range for order " +
                                           std::to_string(loop.order()));
  }
}

// Greedy generating sequence: each generator lies outside the subloop
// spanned by the previous ones.
std::vector<Element> generating_sequence(const LoopTable& loop) {
  const std::size_t n = loop.order();
  std::vector<bool> span(n, false);
  std::vector<Element> spanned{loop.identity()};
  span[loop.identity()] = true;
  std::vector<Element> gens;
  for (Element x = 0; x < n; ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    span[x] = true;
    spanned.push_back(x);
    // Close up; new elements are appended and themselves paired later.
    for (std::size_t i = 0; i < spanned.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element z : {loop.at(spanned[i], spanned[j]),
                          loop.at(spanned[j], spanned[i])}) {
          if (!span[z]) {
            span[z] = true;
            spanned.push_back(z);
          }
        }
      }
    }
  }
  return gens;
}

// Partial bijection from one loop into another, extended by closure:
// once a and b are mapped, a·b must go to aA ∘ bA.
class PartialIsomorphism {
 public:
  PartialIsomorphism(const LoopTable& from, const LoopTable& to)
      : from_(&from),
        to_(&to),
        image_(from.order(), kUnset),
        used_(to.order(), false) {}

  bool assign(Element x, Element y) {
    std::vector<std::pair<Element, Element>> pending{{x, y}};
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      if (image_[a] != kUnset) {
        if (image_[a] != b) return false;
        continue;
      }
      if (used_[b]) return false;
      image_[a] = b;
      used_[b] = true;
      assigned_.push_back(a);
      for (Element c : assigned_) {
        const Element ic = image_[c];
        pending.emplace_back(from_->at(a, c), to_->at(b, ic));
        pending.emplace_back(from_->at(c, a), to_->at(ic, b));
      }
    }
    return true;
  }

  bool is_used(Element y) const { return used_[y]; }
  bool complete() const { return assigned_.size() == image_.size(); }
  Perm to_perm() const { return Perm(image_); }

 private:
  const LoopTable* from_;
  const LoopTable* to_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<Element> assigned_;
};

void extend(const PartialIsomorphism& state, std::span<const Element> gens,
            std::size_t next, std::size_t n, std::vector<Perm>& out) {
  if (next == gens.size()) {
    if (state.complete()) out.push_back(state.to_perm());
    return;
  }
  for (Element t = 0; t < n; ++t) {
    if (state.is_used(t)) continue;
    PartialIsomorphism branch = state;
    if (branch.assign(gens[next], t)) extend(branch, gens, next + 1, n, out);
  }
}

}  // namespace

void require_within_cap(std::size_t order, const SearchConfig& config) {
  if (order > config.search_cap) {
    throw Error(ErrorKind::SearchCapExceeded,
                "order " + std::to_string(order) + " exceeds search cap " +
                    std::to_string(config.search_cap));
  }
}

bool satisfies_autotopism_law(const LoopTable& loop, const Perm& u,
                              const Perm& v, const Perm& w) {
  const std::size_t n = loop.order();
  if (u.degree() != n || v.degree() != n || w.degree() != n) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (loop.at(u[x], v[y]) != w[loop.at(x, y)]) return false;
    }
  }
  return true;
}

Autotopism compose(const Autotopism& a, const Autotopism& b) {
  return {compose(a.u, b.u), compose(a.v, b.v), compose(a.w, b.w)};
}

Autotopism inverse(const Autotopism& a) {
  return {inverse(a.u), inverse(a.v), inverse(a.w)};
}

PrincipalIsotopeRecord principal_isotope(const LoopTable& loop, Element f,
                                         Element g) {
  require_element(loop, f);
  require_element(loop, g);
  const std::size_t n = loop.order();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    const Element xr = loop.right_div(x, g);
    for (Element y = 0; y < n; ++y) {
      rows[x][y] = loop.at(xr, loop.left_div(f, y));
    }
  }
  return {loop, f, g, validate_table(rows)};
}

std::pair<PrincipalIsotopeRecord, SLoopContext> smarandache_principal_isotope(
    const SLoopContext& ctx, Element f, Element g) {
  require_element(ctx.loop(), f);
  require_element(ctx.loop(), g);
  if (!ctx.h().contains(f) || !ctx.h().contains(g)) {
    throw Error(ErrorKind::NotSElements,
                "f=" + std::to_string(f) + ", g=" + std::to_string(g) +
                    " are not both in the S-subgroup " + ctx.h().to_string());
  }
  auto record = principal_isotope(ctx.loop(), f, g);
  std::vector<Element> h(ctx.h().elements().begin(), ctx.h().elements().end());
  auto image_h = SubgroupSet::certify(record.result, std::move(h));
  SLoopContext image(record.result, std::move(image_h));
  return {std::move(record), std::move(image)};
}

std::vector<Perm> isomorphisms(const LoopTable& from, const LoopTable& to,
                               const SearchConfig& config) {
  require_within_cap(from.order(), config);
  require_within_cap(to.order(), config);
  if (from.order() != to.order()) return {};
  const std::size_t n = from.order();

  PartialIsomorphism root(from, to);
  if (!root.assign(from.identity(), to.identity())) return {};
  const std::vector<Element> gens = generating_sequence(from);
  if (gens.empty()) {
    return root.complete() ? std::vector<Perm>{root.to_perm()} : std::vector<Perm>{};
  }

  // Top-level branches: the image of the first generator.
  std::vector<std::vector<Perm>> found(n);
  const auto run_branch = [&](Element t) {
    if (root.is_used(t)) return;
    PartialIsomorphism branch = root;
    if (branch.assign(gens[0], t)) extend(branch, gens, 1, n, found[t]);
  };
  if (config.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < n; ++t) run_branch(static_cast<Element>(t));
  } else {
    for (Element t = 0; t < n; ++t) run_branch(t);
  }

  std::vector<Perm> out;
  for (auto& part : found) {
    for (auto& p : part) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> automorphism_group(const LoopTable& loop,
                                     const SearchConfig& config) {
  return isomorphisms(loop, loop, config);
}

std::vector<Autotopism> autotopism_group(const LoopTable& loop,
                                         const SearchConfig& config) {
  require_within_cap(loop.order(), config);
  const std::size_t n = loop.order();
  const SearchConfig inner{config.search_cap, Execution::Serial};

  std::vector<std::vector<Autotopism>> found(n * n);
  const auto run_pair = [&](std::size_t index) {
    const auto f = static_cast<Element>(index / n);
    const auto g = static_cast<Element>(index % n);
    const auto isotope = principal_isotope(loop, f, g);
    const Perm rg_inv = inverse(right_translation(loop, g));
    const Perm lf_inv = inverse(left_translation(loop, f));
    for (auto& w : isomorphisms(loop, isotope.result, inner)) {
      found[index].push_back({compose(w, rg_inv), compose(w, lf_inv), w});
    }
  };
  if (config.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n * n; ++i) run_pair(i);
  } else {
    for (std::size_t i = 0; i < n * n; ++i) run_pair(i);
  }

  std::vector<Autotopism> out;
  for (auto& part : found) {
    for (auto& a : part) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> s_isomorphisms(const SLoopContext& from, const SLoopContext& to,
                                 SIsoSemantics semantics,
                                 const SearchConfig& config) {
  std::vector<Perm> out;
  for (auto& a : isomorphisms(from.loop(), to.loop(), config)) {
    bool into = true;
    for (Element x : from.h().elements()) into = into && to.h().contains(a[x]);
    const bool keep = semantics == SIsoSemantics::Into
                          ? into
                          : into && from.h().size() == to.h().size();
    if (keep) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace loopforge
