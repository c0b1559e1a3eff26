#include "loopforge/sbs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "loopforge/error.hpp"

namespace loopforge {

namespace {

bool sorted_contains(const std::vector<Perm>& sorted, const Perm& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

GroupOfPerms make_group(std::vector<Perm> members, GroupLabel label) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  GroupOfPerms group{std::move(members), label, false};
  group.closed = is_perm_group(group.members);
  return group;
}

// Runs body(i) for i in [0, count), in parallel when asked to.
template <typename Body>
void for_each_index(std::size_t count, Execution execution, Body&& body) {
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) body(i);
  } else {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
}

std::string pair_string(Element f, Element g) {
  return "(f=" + std::to_string(f) + ",g=" + std::to_string(g) + ")";
}

std::string subset_string(std::span<const Element> elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i]);
  }
  return out + "}";
}

CheckResult verdict(bool ok, std::string detail) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

std::string eq_string(std::size_t lhs, std::size_t rhs) {
  return std::to_string(lhs) + (lhs == rhs ? " = " : " != ") + std::to_string(rhs);
}

// Loop-level objects shared by every S-subgroup of one loop.
struct LoopFacts {
  GroupOfPerms bs;
  std::vector<Autotopism> aut;
  std::vector<Perm> aum;
  SubgroupSet n_mu;
};

LoopFacts loop_facts(const LoopTable& loop, const SearchConfig& config) {
  auto aut = autotopism_group(loop, config);
  std::vector<Perm> ws;
  ws.reserve(aut.size());
  for (const auto& a : aut) ws.push_back(a.w);
  return {make_group(std::move(ws), GroupLabel::BS), std::move(aut),
          automorphism_group(loop, config), middle_nucleus(loop)};
}

// Number of right cosets SBS·θ of `sub` in `group`, or 0 if `sub` is not
// contained in `group` or some coset leaves it.
std::size_t coset_count(const std::vector<Perm>& group,
                        const std::vector<Perm>& sub) {
  for (const auto& s : sub) {
    if (!sorted_contains(group, s)) return 0;
  }
  std::set<Perm> representatives;
  for (const auto& theta : group) {
    std::optional<Perm> smallest;
    for (const auto& s : sub) {
      Perm p = compose(s, theta);
      if (!sorted_contains(group, p)) return 0;
      if (!smallest || p < *smallest) smallest = std::move(p);
    }
    if (smallest) representatives.insert(std::move(*smallest));
  }
  return representatives.size();
}

CardinalityReport verify_with_facts(const SLoopContext& ctx,
                                    const LoopFacts& facts,
                                    const SearchConfig& config);

}  // namespace

const char* to_string(GroupLabel label) {
  switch (label) {
    case GroupLabel::SYM: return "SYM";
    case GroupLabel::SSYM: return "SSYM";
    case GroupLabel::AUM: return "AUM";
    case GroupLabel::SA: return "SA";
    case GroupLabel::BS: return "BS";
    case GroupLabel::SBS: return "SBS";
  }
  return "?";
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

bool is_special_witness(const LoopTable& loop, const Perm& theta, Element f,
                        Element g) {
  const std::size_t n = loop.order();
  for (Element x = 0; x < n; ++x) {
    const Element u = loop.right_div(theta[x], g);
    for (Element y = 0; y < n; ++y) {
      const Element v = loop.left_div(f, theta[y]);
      if (loop.at(u, v) != theta[loop.at(x, y)]) return false;
    }
  }
  return true;
}

Autotopism special_triple(const LoopTable& loop, const Perm& theta, Element f,
                          Element g) {
  return {compose(theta, inverse(right_translation(loop, g))),
          compose(theta, inverse(left_translation(loop, f))), theta};
}

std::vector<SpecialMapWitness> special_witnesses(
    const LoopTable& loop, const Perm& theta,
    const std::optional<SubgroupSet>& restrict_to) {
  if (theta.degree() != loop.order()) {
    throw Error(ErrorKind::DegreeMismatch,
                "permutation of degree " + std::to_string(theta.degree()) +
                    " on a loop of order " + std::to_string(loop.order()));
  }
  std::vector<Element> candidates;
  if (restrict_to) {
    candidates.assign(restrict_to->elements().begin(), restrict_to->elements().end());
  } else {
    candidates.resize(loop.order());
    std::iota(candidates.begin(), candidates.end(), Element{0});
  }
  std::vector<SpecialMapWitness> out;
  for (Element f : candidates) {
    for (Element g : candidates) {
      if (is_special_witness(loop, theta, f, g)) out.push_back({theta, f, g});
    }
  }
  return out;
}

bool GroupOfPerms::contains(const Perm& p) const {
  return sorted_contains(members, p);
}

bool is_perm_group(const std::vector<Perm>& members) {
  if (members.empty()) return false;
  if (!sorted_contains(members, Perm::identity(members.front().degree()))) {
    return false;
  }
  for (const auto& a : members) {
    if (!sorted_contains(members, inverse(a))) return false;
    for (const auto& b : members) {
      if (!sorted_contains(members, compose(a, b))) return false;
    }
  }
  return true;
}

GroupOfPerms ssym(const SLoopContext& ctx, const SearchConfig& config) {
  const std::size_t n = ctx.loop().order();
  require_within_cap(n, config);
  std::vector<Element> inside(ctx.h().elements().begin(), ctx.h().elements().end());
  std::vector<Element> outside;
  for (Element x = 0; x < n; ++x) {
    if (!ctx.h().contains(x)) outside.push_back(x);
  }

  std::vector<Perm> members;
  std::vector<Element> in_images = inside;
  do {
    std::vector<Element> out_images = outside;
    do {
      std::vector<Element> images(n);
      for (std::size_t i = 0; i < inside.size(); ++i) images[inside[i]] = in_images[i];
      for (std::size_t i = 0; i < outside.size(); ++i) images[outside[i]] = out_images[i];
      members.emplace_back(std::move(images));
    } while (std::next_permutation(out_images.begin(), out_images.end()));
  } while (std::next_permutation(in_images.begin(), in_images.end()));

  std::sort(members.begin(), members.end());
  // Setwise stabilizers are groups; the explicit check is left to callers
  // that need it (it is quadratic in |SSYM|).
  return GroupOfPerms{std::move(members), GroupLabel::SSYM, true};
}

GroupOfPerms bs_group(const LoopTable& loop, const SearchConfig& config) {
  require_within_cap(loop.order(), config);
  std::vector<Perm> ws;
  for (auto& a : autotopism_group(loop, config)) ws.push_back(std::move(a.w));
  return make_group(std::move(ws), GroupLabel::BS);
}

GroupOfPerms sbs_group(const SLoopContext& ctx, const SearchConfig& config) {
  const auto sym = ssym(ctx, config);
  const auto& h = ctx.h().elements();
  std::vector<char> keep(sym.size(), 0);
  for_each_index(sym.size(), config.execution, [&](std::size_t i) {
    for (Element f : h) {
      for (Element g : h) {
        if (is_special_witness(ctx.loop(), sym.members[i], f, g)) {
          keep[i] = 1;
          return;
        }
      }
    }
  });
  std::vector<Perm> members;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (keep[i]) members.push_back(sym.members[i]);
  }
  return make_group(std::move(members), GroupLabel::SBS);
}

GroupOfPerms sa_group(const SLoopContext& ctx, const SearchConfig& config) {
  const auto sym = ssym(ctx, config);
  const auto aum = automorphism_group(ctx.loop(), config);
  std::vector<Perm> members;
  std::set_intersection(sym.members.begin(), sym.members.end(), aum.begin(),
                        aum.end(), std::back_inserter(members));
  return make_group(std::move(members), GroupLabel::SA);
}

std::vector<OmegaElement> omega(const SLoopContext& ctx,
                                const SearchConfig& config) {
  const auto sym = ssym(ctx, config);
  const auto& loop = ctx.loop();
  std::vector<std::vector<OmegaElement>> found(sym.size());
  for_each_index(sym.size(), config.execution, [&](std::size_t i) {
    for (auto& w : special_witnesses(loop, sym.members[i], ctx.h())) {
      found[i].push_back(
          {special_triple(loop, w.theta, w.f, w.g), std::move(w)});
    }
  });

  // A set of triples: distinct witnesses giving the same triple collapse.
  std::map<Autotopism, OmegaElement> unique;
  for (auto& part : found) {
    for (auto& x : part) unique.try_emplace(x.autotopism, std::move(x));
  }
  std::vector<OmegaElement> out;
  out.reserve(unique.size());
  for (auto& [key, x] : unique) out.push_back(std::move(x));
  return out;
}

std::vector<std::pair<Element, Element>> theta_set(const SLoopContext& ctx,
                                                   const SearchConfig& config) {
  require_within_cap(ctx.loop().order(), config);
  const auto& h = ctx.h().elements();
  const std::size_t k = h.size();
  const SearchConfig inner{config.search_cap, Execution::Serial};
  std::vector<char> member(k * k, 0);
  for_each_index(k * k, config.execution, [&](std::size_t i) {
    const auto [record, image] = smarandache_principal_isotope(ctx, h[i / k], h[i % k]);
    member[i] = !s_isomorphisms(image, ctx, SIsoSemantics::Into, inner).empty();
  });
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < k * k; ++i) {
    if (member[i]) out.emplace_back(h[i / k], h[i % k]);
  }
  return out;
}

std::vector<OmegaElement> ker_phi(const SLoopContext& ctx,
                                  const SearchConfig& config) {
  std::vector<OmegaElement> out;
  for (auto& x : omega(ctx, config)) {
    if (phi_project(x).is_identity()) out.push_back(std::move(x));
  }
  return out;
}

bool kernel_characterization_holds(const LoopTable& loop, const OmegaElement& x) {
  const Element f = x.witness.f;
  const Element g = x.witness.g;
  if (!x.witness.theta.is_identity()) return false;
  if (loop.at(g, f) != loop.identity()) return false;
  const std::size_t n = loop.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (loop.at(loop.at(a, g), b) != loop.at(a, loop.at(g, b))) return false;
    }
  }
  return true;
}

const CheckResult& CardinalityReport::check(std::string_view key) const {
  for (std::size_t i = 0; i < kCheckKeys.size(); ++i) {
    if (kCheckKeys[i] == key) return checks[i];
  }
  throw Error(ErrorKind::OutOfRange, "unknown check key " + std::string(key));
}

CheckResult& CardinalityReport::check(std::string_view key) {
  return const_cast<CheckResult&>(std::as_const(*this).check(key));
}

namespace {

CardinalityReport verify_with_facts(const SLoopContext& ctx,
                                    const LoopFacts& facts,
                                    const SearchConfig& config) {
  const LoopTable& loop = ctx.loop();
  const SubgroupSet& h = ctx.h();
  const auto h_elems = h.elements();
  const std::size_t n = loop.order();
  const Element e = loop.identity();
  const SearchConfig inner{config.search_cap, Execution::Serial};

  const auto sym = ssym(ctx, config);
  const auto sbs = sbs_group(ctx, config);
  std::vector<Perm> sa_members;
  std::set_intersection(sym.members.begin(), sym.members.end(),
                        facts.aum.begin(), facts.aum.end(),
                        std::back_inserter(sa_members));
  const auto sa = make_group(std::move(sa_members), GroupLabel::SA);
  const auto om = omega(ctx, config);
  const auto theta = theta_set(ctx, config);

  std::vector<OmegaElement> kernel;
  for (const auto& x : om) {
    if (phi_project(x).is_identity()) kernel.push_back(x);
  }
  std::size_t n_mu_cap_h = 0;
  for (Element g : facts.n_mu.elements()) n_mu_cap_h += h.contains(g) ? 1 : 0;

  CardinalityReport r;
  r.order = n;
  r.h_elements.assign(h_elems.begin(), h_elems.end());
  r.h = h.size();
  r.bs = facts.bs.size();
  r.sbs = sbs.size();
  r.ssym = sym.size();
  r.aum = facts.aum.size();
  r.sa = sa.size();
  r.aut = facts.aut.size();
  r.omega = om.size();
  r.theta = theta.size();
  r.n_mu = facts.n_mu.size();
  r.n_mu_cap_h = n_mu_cap_h;
  r.ker_phi = kernel.size();

  // t10: SBS is a subgroup of BS.
  {
    std::string detail;
    bool ok = sbs.closed;
    if (!sbs.closed) detail = "SBS fails the identity/closure/inverse check; ";
    for (const auto& theta_map : sbs.members) {
      if (!facts.bs.contains(theta_map)) {
        ok = false;
        detail += "theta=" + theta_map.to_string() + " in SBS but not in BS; ";
        break;
      }
    }
    if (ok) detail = "|SBS|=" + std::to_string(sbs.size()) + " <= |BS|=" +
                     std::to_string(facts.bs.size());
    r.check("t10") = verdict(ok, detail);
  }

  // c11: SBS <= SSYM <= SYM.
  {
    const bool ssym_group = is_perm_group(sym.members);
    std::string detail;
    bool ok = ssym_group && sbs.closed;
    if (!ssym_group) detail += "SSYM fails the group check; ";
    for (const auto& theta_map : sbs.members) {
      if (!sym.contains(theta_map)) {
        ok = false;
        detail += "theta=" + theta_map.to_string() + " does not stabilize H; ";
        break;
      }
    }
    for (const auto& s : sym.members) {
      if (s.degree() != n) {
        ok = false;
        detail += "SSYM member of wrong degree; ";
        break;
      }
    }
    if (ok) detail = "|SBS|=" + std::to_string(sbs.size()) + " <= |SSYM|=" +
                     std::to_string(sym.size()) + " <= |SYM|";
    r.check("c11") = verdict(ok, detail);
  }

  // t12, t12_1, t13 and the S-isomorphism route for t8, per (f, g) in H×H.
  {
    bool t12_ok = true, t121_ok = true, t13_ok = true;
    std::string t12_detail, t121_detail, t13_detail;
    std::set<Perm> onto_union, into_union;
    for (Element f : h_elems) {
      for (Element g : h_elems) {
        std::optional<std::pair<PrincipalIsotopeRecord, SLoopContext>> iso;
        try {
          iso.emplace(smarandache_principal_isotope(ctx, f, g));
        } catch (const Error& err) {
          t12_ok = t121_ok = t13_ok = false;
          t12_detail += pair_string(f, g) + ": " + err.what() + "; ";
          continue;
        }
        const auto& [record, image] = *iso;
        const LoopTable& circ = record.result;

        if (circ.identity() != loop.at(f, g)) {
          t12_ok = false;
          t12_detail += pair_string(f, g) + ": isotope identity " +
                        std::to_string(circ.identity()) + " != f·g; ";
        }

        // (G,·) is the g,f-principal isotope of (G,∘), and the ∘-translations
        // satisfy R∘_f = R_g^{-1}, L∘_g = L_f^{-1}.
        const auto back = principal_isotope(circ, g, f);
        const bool translations_ok =
            right_translation(circ, f) == inverse(right_translation(loop, g)) &&
            left_translation(circ, g) == inverse(left_translation(loop, f));
        if (!(back.result == loop) || !translations_ok) {
          t121_ok = false;
          t121_detail += pair_string(f, g) + ": g,f-isotope of the isotope " +
                         (back.result == loop ? "matches" : "differs") +
                         ", translation identities " +
                         (translations_ok ? "hold" : "fail") + "; ";
        }

        const auto image_sbs = sbs_group(image, inner);
        if (image_sbs.members != sbs.members) {
          t13_ok = false;
          std::string witness;
          for (const auto& p : sbs.members) {
            if (!image_sbs.contains(p)) { witness = "theta=" + p.to_string() + " only in SBS(G,·)"; break; }
          }
          if (witness.empty()) {
            for (const auto& p : image_sbs.members) {
              if (!sbs.contains(p)) { witness = "theta=" + p.to_string() + " only in SBS(G,∘)"; break; }
            }
          }
          t13_detail += pair_string(f, g) + ": |SBS(G,∘)|=" +
                        std::to_string(image_sbs.size()) + ", " + witness + "; ";
        }

        for (auto& a : s_isomorphisms(ctx, image, SIsoSemantics::Onto, inner)) {
          onto_union.insert(std::move(a));
        }
        for (auto& a : s_isomorphisms(ctx, image, SIsoSemantics::Into, inner)) {
          into_union.insert(std::move(a));
        }
      }
    }
    const std::size_t pairs = h.size() * h.size();
    r.check("t12") = verdict(t12_ok, t12_ok ? "all " + std::to_string(pairs) +
                                                  " Smarandache principal isotopes are S-loops with S-subgroup " +
                                                  subset_string(h_elems)
                                            : t12_detail);
    r.check("t12_1") = verdict(t121_ok, t121_ok ? "g,f-reconstruction recovers the table for all " +
                                                      std::to_string(pairs) + " pairs"
                                                : t121_detail);
    r.check("t13") = verdict(t13_ok, t13_ok ? "SBS(G,∘) = SBS(G,·) for all " +
                                                  std::to_string(pairs) + " pairs"
                                            : t13_detail);

    const std::vector<Perm> onto(onto_union.begin(), onto_union.end());
    const std::vector<Perm> into(into_union.begin(), into_union.end());
    const bool onto_ok = onto == sbs.members;
    const bool into_ok = into == sbs.members;
    std::string detail = "witness route |SBS|=" + std::to_string(sbs.size()) +
                         "; S-isomorphism route onto=" + std::to_string(onto.size()) +
                         (onto_ok ? " (equal)" : " (differs)") +
                         ", into=" + std::to_string(into.size()) +
                         (into_ok ? " (equal)" : " (differs)");
    if (!onto_ok) {
      for (const auto& p : sbs.members) {
        if (!onto_union.count(p)) { detail += "; theta=" + p.to_string() + " missing from S-isomorphism route"; break; }
      }
      for (const auto& p : onto) {
        if (!sbs.contains(p)) { detail += "; theta=" + p.to_string() + " missing from witness route"; break; }
      }
    }
    r.check("t8") = verdict(onto_ok, detail);
  }

  // t14: Lagrange identity |BS| = |SBS|·[BS:SBS] with the index counted as
  // distinct cosets.
  {
    const std::size_t index = coset_count(facts.bs.members, sbs.members);
    r.bs_sbs_index = index;
    const bool ok = index != 0 && sbs.size() * index == facts.bs.size();
    r.check("t14") = verdict(ok, "|SBS|·[BS:SBS] = " + std::to_string(sbs.size()) +
                                     "·" + std::to_string(index) + " = " +
                                     std::to_string(sbs.size() * index) +
                                     (ok ? " = " : " != ") + "|BS| = " +
                                     std::to_string(facts.bs.size()));
  }

  // t15: Omega <= AUT.
  {
    bool ok = true;
    std::string detail;
    std::vector<Autotopism> triples;
    triples.reserve(om.size());
    for (const auto& x : om) triples.push_back(x.autotopism);
    for (const auto& x : om) {
      const bool in_aut = std::binary_search(facts.aut.begin(), facts.aut.end(), x.autotopism) &&
                          satisfies_autotopism_law(loop, x.autotopism);
      if (!in_aut) {
        ok = false;
        detail += "theta=" + x.witness.theta.to_string() + " " +
                  pair_string(x.witness.f, x.witness.g) + " not an autotopism; ";
        break;
      }
    }
    const Autotopism id{Perm::identity(n), Perm::identity(n), Perm::identity(n)};
    if (!std::binary_search(triples.begin(), triples.end(), id)) {
      ok = false;
      detail += "(I,I,I) missing; ";
    }
    for (std::size_t i = 0; i < triples.size() && ok; ++i) {
      if (!std::binary_search(triples.begin(), triples.end(), inverse(triples[i]))) {
        ok = false;
        detail += "inverse of theta=" + om[i].witness.theta.to_string() + " missing; ";
      }
      for (std::size_t j = 0; j < triples.size() && ok; ++j) {
        if (!std::binary_search(triples.begin(), triples.end(),
                                compose(triples[i], triples[j]))) {
          ok = false;
          detail += "product of theta=" + om[i].witness.theta.to_string() + " " +
                    pair_string(om[i].witness.f, om[i].witness.g) + " and theta=" +
                    om[j].witness.theta.to_string() + " " +
                    pair_string(om[j].witness.f, om[j].witness.g) + " leaves Omega; ";
        }
      }
    }
    r.check("t15") = verdict(ok, ok ? "|Omega|=" + std::to_string(om.size()) +
                                          " <= |AUT|=" + std::to_string(facts.aut.size())
                                    : detail);
  }

  // t16: Phi is a homomorphism onto SBS.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < om.size() && ok; ++i) {
      for (std::size_t j = 0; j < om.size() && ok; ++j) {
        const Autotopism product = compose(om[i].autotopism, om[j].autotopism);
        if (product.w != compose(phi_project(om[i]), phi_project(om[j]))) {
          ok = false;
          detail = "Phi(AB) != Phi(A)Phi(B) for thetas " + om[i].witness.theta.to_string() +
                   " and " + om[j].witness.theta.to_string();
        }
      }
    }
    std::set<Perm> image;
    for (const auto& x : om) image.insert(phi_project(x));
    const bool onto = std::vector<Perm>(image.begin(), image.end()) == sbs.members;
    if (ok && !onto) detail = "image of Phi has " + std::to_string(image.size()) +
                              " elements, |SBS|=" + std::to_string(sbs.size());
    ok = ok && onto;
    r.check("t16") = verdict(ok, ok ? "Phi(AB)=Phi(A)Phi(B) on all " +
                                          std::to_string(om.size() * om.size()) +
                                          " pairs; image = SBS"
                                    : detail);
  }

  // t17: kernel elements are exactly (R_g^{-1}, L_f^{-1}, I) with g·f = e,
  // g in N_mu, for f, g in H.
  {
    bool ok = true;
    std::string detail;
    for (const auto& x : kernel) {
      if (!kernel_characterization_holds(loop, x)) {
        ok = false;
        detail += "kernel element " + pair_string(x.witness.f, x.witness.g) +
                  " violates g·f=e or g in N_mu; ";
      }
    }
    for (Element g : facts.n_mu.elements()) {
      if (!h.contains(g)) continue;
      Element f = e;
      for (Element c : h_elems) {
        if (loop.at(g, c) == e) f = c;
      }
      const bool found = std::any_of(kernel.begin(), kernel.end(), [&](const OmegaElement& x) {
        return x.witness.f == f && x.witness.g == g;
      });
      if (!found) {
        ok = false;
        detail += "g=" + std::to_string(g) + " in N_mu ∩ H with g·f=e, f=" +
                  std::to_string(f) + ", yields no kernel element; ";
      }
    }
    r.check("t17") = verdict(ok, ok ? "all " + std::to_string(kernel.size()) +
                                          " kernel elements have theta=I, g·f=e, g in N_mu"
                                    : detail);
  }

  // t18: stated with the full middle nucleus; the computable reading uses
  // N_mu ∩ H. Status follows the stated form.
  {
    const bool literal_kernel = r.n_mu == r.ker_phi;
    const bool literal_omega = r.omega == r.sbs * r.n_mu;
    const bool cap_kernel = r.n_mu_cap_h == r.ker_phi;
    const bool omega_kernel = r.omega == r.sbs * r.ker_phi;
    std::string detail =
        "|N_mu|=|ker Phi|: " + eq_string(r.n_mu, r.ker_phi) +
        (literal_kernel ? " (holds)" : " (fails)") +
        "; |Omega|=|SBS||N_mu|: " + eq_string(r.omega, r.sbs * r.n_mu) +
        (literal_omega ? " (holds)" : " (fails)") +
        "; N_mu∩H reading |N_mu∩H|=|ker Phi|: " + eq_string(r.n_mu_cap_h, r.ker_phi) +
        (cap_kernel ? " (holds)" : " (fails)") +
        "; |Omega|=|SBS||ker Phi|: " + eq_string(r.omega, r.sbs * r.ker_phi) +
        (omega_kernel ? " (holds)" : " (fails)");
    r.check("t18") = verdict(literal_kernel && literal_omega, detail);
  }

  // t19: |Omega| = |Theta||SA|.
  {
    const bool ok = r.omega == r.theta * r.sa;
    r.check("t19") = verdict(ok, "|Omega|=" + std::to_string(r.omega) + ", |Theta|·|SA|=" +
                                     std::to_string(r.theta) + "·" + std::to_string(r.sa) +
                                     " = " + std::to_string(r.theta * r.sa));
  }

  // t20 / c21: (Theta = H×H) iff |H|²|SA| = |SBS||N_mu|.
  {
    const bool all_pairs = r.theta == r.h * r.h;
    const std::size_t lhs = r.h * r.h * r.sa;
    const bool literal_eq = lhs == r.sbs * r.n_mu;
    const bool cap_eq = lhs == r.sbs * r.n_mu_cap_h;
    const bool literal_ok = all_pairs == literal_eq;
    const bool cap_ok = all_pairs == cap_eq;
    const std::string detail =
        std::string("Theta = H×H: ") + (all_pairs ? "yes" : "no") + " (|Theta|=" +
        std::to_string(r.theta) + ", |H|²=" + std::to_string(r.h * r.h) +
        "); |H|²|SA| vs |SBS||N_mu|: " + eq_string(lhs, r.sbs * r.n_mu) +
        (literal_ok ? " (equivalence holds)" : " (equivalence fails)") +
        "; N_mu∩H reading |SBS||N_mu∩H|: " + eq_string(lhs, r.sbs * r.n_mu_cap_h) +
        (cap_ok ? " (equivalence holds)" : " (equivalence fails)");
    r.check("t20") = verdict(literal_ok, detail);
    r.check("c21") = verdict(literal_ok, std::string("GS-loop via principal isotopes: ") +
                                             (all_pairs ? "yes" : "no") + "; " + detail);
  }

  // c23: consequences for a GS-loop with |N_mu| > 1.
  {
    const bool gs = r.theta == r.h * r.h;
    if (!gs || r.n_mu <= 1) {
      r.check("c23") = {CheckStatus::NotApplicable,
                        std::string("hypothesis not met: GS-loop ") + (gs ? "yes" : "no") +
                            ", |N_mu|=" + std::to_string(r.n_mu)};
    } else {
      const bool ratio_integral = r.sa != 0 && r.sbs % r.sa == 0;
      const std::size_t ratio = ratio_integral ? r.sbs / r.sa : 0;
      const bool lemma = (r.h == r.n_mu) == (ratio_integral && r.h == ratio);
      const bool h_eq_ratio = ratio_integral && r.h == ratio;
      const bool divides = ratio != 0 && n % ratio == 0;
      const std::size_t multiple = divides ? n / ratio : 0;
      const bool cor = h_eq_ratio && divides && multiple > 1;
      std::string detail =
          "|SBS|/|SA|=" + (ratio_integral ? std::to_string(ratio) : std::string("non-integral")) +
          "; lemma |H|=|N_mu| iff |H|=|SBS|/|SA|: " + (lemma ? "holds" : "fails") +
          " (|H|=" + std::to_string(r.h) + ", |N_mu|=" + std::to_string(r.n_mu) +
          "); |H|=|SBS|/|SA|: " + (h_eq_ratio ? "holds" : "fails") +
          "; |G| = m·|SBS|/|SA| with m>1: " +
          (divides ? "m=" + std::to_string(multiple) : std::string("not a multiple")) +
          (cor ? " (holds)" : " (fails)");
      r.check("c23") = verdict(lemma && cor, detail);
    }
  }

  return r;
}

}  // namespace

CardinalityReport verify_context(const SLoopContext& ctx, const SearchConfig& config) {
  require_within_cap(ctx.loop().order(), config);
  return verify_with_facts(ctx, loop_facts(ctx.loop(), config), config);
}

LoopVerification verify_theorems(const LoopTable& loop, const SearchConfig& config) {
  require_within_cap(loop.order(), config);
  const auto hs = s_subgroups(loop);
  if (hs.empty()) {
    throw Error(ErrorKind::NotSLoop, "not an S-loop: no non-trivial proper subgroup");
  }
  const LoopFacts facts = loop_facts(loop, config);

  LoopVerification out;
  for (const auto& h : hs) {
    out.reports.push_back(verify_with_facts(SLoopContext(loop, h), facts, config));
  }

  AggregateReport& agg = out.aggregate;
  agg.order = loop.order();
  agg.s_subgroups = hs.size();
  agg.bs = facts.bs.size();
  std::string terms;
  for (const auto& r : out.reports) {
    agg.weighted_sum += r.sbs * r.bs_sbs_index;
    if (!terms.empty()) terms += " + ";
    terms += std::to_string(r.sbs) + "·" + std::to_string(r.bs_sbs_index);
  }
  const bool ok = agg.weighted_sum == agg.s_subgroups * agg.bs;
  agg.t14 = verdict(ok, "(1/" + std::to_string(agg.s_subgroups) + ")(" + terms + ") = " +
                            std::to_string(agg.weighted_sum) + "/" +
                            std::to_string(agg.s_subgroups) + (ok ? " = " : " != ") +
                            "|BS| = " + std::to_string(agg.bs));
  return out;
}

}  // namespace loopforge
