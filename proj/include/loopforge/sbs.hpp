#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopforge/isotopy.hpp"
#include "loopforge/loop.hpp"
#include "loopforge/perm.hpp"

namespace loopforge {

/// θ together with a pair (f, g) such that (θR_g^{-1}, θL_f^{-1}, θ) is an
/// autotopism of the parent loop.
struct SpecialMapWitness {
  Perm theta;
  Element f = 0;
  Element g = 0;

  friend bool operator==(const SpecialMapWitness&, const SpecialMapWitness&) = default;
};

/// O(n²) check of the autotopism law for (θR_g^{-1}, θL_f^{-1}, θ).
bool is_special_witness(const LoopTable& loop, const Perm& theta, Element f,
                        Element g);

/// The autotopism (θR_g^{-1}, θL_f^{-1}, θ) spelled out.
Autotopism special_triple(const LoopTable& loop, const Perm& theta, Element f,
                          Element g);

/// Witnesses scanned over G×G, or H×H when `restrict_to` is given, in
/// lexicographic (f, g) order.
std::vector<SpecialMapWitness> special_witnesses(
    const LoopTable& loop, const Perm& theta,
    const std::optional<SubgroupSet>& restrict_to = std::nullopt);

enum class GroupLabel { SYM, SSYM, AUM, SA, BS, SBS };
const char* to_string(GroupLabel label);

/// A sorted set of permutations. `closed` records the result of the
/// explicit identity/closure/inverse check run when the set was built.
struct GroupOfPerms {
  std::vector<Perm> members;
  GroupLabel label = GroupLabel::SYM;
  bool closed = false;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Perm& p) const;
};

/// Identity present, closed under compose and inverse. `members` must be
/// sorted and of a common degree.
bool is_perm_group(const std::vector<Perm>& members);

/// {θ : Hθ ⊆ H}, built directly as Sym(H) × Sym(G \ H).
GroupOfPerms ssym(const SLoopContext& ctx, const SearchConfig& config = {});
GroupOfPerms bs_group(const LoopTable& loop, const SearchConfig& config = {});
/// Members of SSYM with a witness (f, g) in H×H.
GroupOfPerms sbs_group(const SLoopContext& ctx, const SearchConfig& config = {});
/// SSYM ∩ AUM.
GroupOfPerms sa_group(const SLoopContext& ctx, const SearchConfig& config = {});

struct OmegaElement {
  Autotopism autotopism;
  SpecialMapWitness witness;
};

/// One element per distinct triple (θR_g^{-1}, θL_f^{-1}, θ) with θ in SSYM
/// and f, g in H; sorted by triple.
std::vector<OmegaElement> omega(const SLoopContext& ctx,
                                const SearchConfig& config = {});

/// Pairs (f, g) in H×H whose Smarandache principal isotope is S-isomorphic
/// to the loop, sorted.
std::vector<std::pair<Element, Element>> theta_set(
    const SLoopContext& ctx, const SearchConfig& config = {});

inline const Perm& phi_project(const OmegaElement& x) { return x.autotopism.w; }
std::vector<OmegaElement> ker_phi(const SLoopContext& ctx,
                                  const SearchConfig& config = {});
/// g·f == e and g in the middle nucleus, for a kernel element.
bool kernel_characterization_holds(const LoopTable& loop, const OmegaElement& x);

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus status);

struct CheckResult {
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;
};

inline constexpr std::array<std::string_view, 15> kCheckKeys = {
    "t10", "c11", "t12", "t12_1", "t8",  "t13", "t14", "t15",
    "t16", "t17", "t18", "t19",   "t20", "c21", "c23"};

struct CardinalityReport {
  std::size_t order = 0;
  std::vector<Element> h_elements;
  std::size_t h = 0;
  std::size_t bs = 0;
  std::size_t sbs = 0;
  std::size_t ssym = 0;
  std::size_t aum = 0;
  std::size_t sa = 0;
  std::size_t aut = 0;
  std::size_t omega = 0;
  std::size_t theta = 0;
  std::size_t n_mu = 0;
  std::size_t n_mu_cap_h = 0;
  std::size_t ker_phi = 0;
  std::size_t bs_sbs_index = 0;
  /// Indexed like kCheckKeys.
  std::array<CheckResult, kCheckKeys.size()> checks;

  const CheckResult& check(std::string_view key) const;
  CheckResult& check(std::string_view key);
};

/// The averaged Lagrange identity over all S-subgroups of one loop.
struct AggregateReport {
  std::size_t order = 0;
  std::size_t s_subgroups = 0;
  std::size_t bs = 0;
  std::size_t weighted_sum = 0;  // Σ |SBS_i| [BS : SBS_i]
  CheckResult t14;
};

struct LoopVerification {
  std::vector<CardinalityReport> reports;
  AggregateReport aggregate;
};

/// Every check for one S-subgroup.
CardinalityReport verify_context(const SLoopContext& ctx,
                                 const SearchConfig& config = {});
/// One report per S-subgroup plus the aggregate. Throws Error(NotSLoop)
/// when the loop has no S-subgroup.
LoopVerification verify_theorems(const LoopTable& loop,
                                 const SearchConfig& config = {});

}  // namespace loopforge
