#pragma once

// Brute-force reference computations for the tests. Everything here works
// from raw Cayley rows and full permutation enumeration, and shares no code
// with the search kernels beyond the Perm value type.

#include <cstddef>
#include <utility>
#include <vector>

#include "loopforge/loop.hpp"
#include "loopforge/perm.hpp"

namespace loopforge::oracle {

using Rows = std::vector<std::vector<Element>>;

Rows cyclic_rows(std::size_t n);
Rows klein_rows();
/// Order-5 non-associative loop with S-subgroup {0,1}.
Rows n5_rows();

LoopTable cyclic(std::size_t n);
LoopTable klein();
LoopTable n5();

bool group_axioms(const Rows& t, const std::vector<Element>& subset);
std::vector<std::vector<Element>> subgroups(const Rows& t);
std::vector<Element> middle_nucleus(const Rows& t);

struct Triple {
  Perm u, v, w;
  auto operator<=>(const Triple&) const = default;
};

bool law(const Rows& t, const Perm& u, const Perm& v, const Perm& w);
/// Full (n!)^3 scan for n <= 4; for n = 5 every (U, V) with W forced by
/// putting y = e in the law, then the law checked.
std::vector<Triple> autotopisms(const Rows& t);
std::vector<Perm> isomorphisms(const Rows& from, const Rows& to);
Rows principal_isotope(const Rows& t, Element f, Element g);

/// (f, g) pairs from `pool` for which (θR_g^{-1}, θL_f^{-1}, θ) is an
/// autotopism, built from explicit translation permutations.
std::vector<std::pair<Element, Element>> witnesses(const Rows& t, const Perm& theta,
                                                   const std::vector<Element>& pool);
std::vector<Perm> bs(const Rows& t);
std::vector<Perm> sbs(const Rows& t, const std::vector<Element>& h);
bool stabilizes(const Perm& p, const std::vector<Element>& h);

/// Reduced Latin squares of order n counted by column-major completion.
std::size_t count_reduced_latin_squares(std::size_t n);

}  // namespace loopforge::oracle
