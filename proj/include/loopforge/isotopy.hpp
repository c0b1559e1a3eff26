#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "loopforge/loop.hpp"
#include "loopforge/perm.hpp"

namespace loopforge {

enum class Execution { Serial, Parallel };

/// Limits and scheduling for the exhaustive searches. Orders above
/// `search_cap` raise Error(SearchCapExceeded) instead of truncating.
struct SearchConfig {
  std::size_t search_cap = 10;
  Execution execution = Execution::Parallel;
};

void require_within_cap(std::size_t order, const SearchConfig& config);

/// A triple (U, V, W) with xU·yV == (x·y)W for all x, y.
struct Autotopism {
  Perm u;
  Perm v;
  Perm w;

  friend bool operator==(const Autotopism&, const Autotopism&) = default;
  friend auto operator<=>(const Autotopism&, const Autotopism&) = default;
};

bool satisfies_autotopism_law(const LoopTable& loop, const Perm& u,
                              const Perm& v, const Perm& w);
inline bool satisfies_autotopism_law(const LoopTable& loop, const Autotopism& a) {
  return satisfies_autotopism_law(loop, a.u, a.v, a.w);
}

/// Componentwise product, left to right.
Autotopism compose(const Autotopism& a, const Autotopism& b);
Autotopism inverse(const Autotopism& a);

/// (G,∘) with x∘y = xR_g^{-1} · yL_f^{-1}; its identity is f·g.
struct PrincipalIsotopeRecord {
  LoopTable source;
  Element f = 0;
  Element g = 0;
  LoopTable result;
};

PrincipalIsotopeRecord principal_isotope(const LoopTable& loop, Element f,
                                         Element g);

/// Principal isotope with f, g taken from the S-subgroup. The returned
/// context carries the same element set H, re-certified as a subgroup of
/// the isotope. Throws Error(NotSElements) if f or g lies outside H.
std::pair<PrincipalIsotopeRecord, SLoopContext> smarandache_principal_isotope(
    const SLoopContext& ctx, Element f, Element g);

/// All autotopisms, sorted. Found as (W R_g^{-1}, W L_f^{-1}, W) for every
/// pair (f, g) and every isomorphism W onto the f,g-principal isotope.
std::vector<Autotopism> autotopism_group(const LoopTable& loop,
                                         const SearchConfig& config = {});
std::vector<Perm> automorphism_group(const LoopTable& loop,
                                     const SearchConfig& config = {});

/// All A with (x·y)A == xA ∘ yA, sorted. Empty when the orders differ.
std::vector<Perm> isomorphisms(const LoopTable& from, const LoopTable& to,
                               const SearchConfig& config = {});

enum class SIsoSemantics {
  Into,  // x in H1 implies xA in H2
  Onto,  // H1 A == H2
};

std::vector<Perm> s_isomorphisms(const SLoopContext& from, const SLoopContext& to,
                                 SIsoSemantics semantics = SIsoSemantics::Into,
                                 const SearchConfig& config = {});

}  // namespace loopforge
