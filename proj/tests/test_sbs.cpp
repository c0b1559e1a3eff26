#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "loopforge/catalog.hpp"
#include "loopforge/error.hpp"
#include "loopforge/report.hpp"
#include "loopforge/sbs.hpp"
#include "oracles.hpp"

using namespace loopforge;

namespace {

SLoopContext context(const LoopTable& loop, std::vector<Element> h) {
  return SLoopContext(loop, SubgroupSet::certify(loop, std::move(h)));
}

SLoopContext z4_ctx() { return context(oracle::cyclic(4), {0, 2}); }
SLoopContext n5_ctx() { return context(oracle::n5(), {0, 1}); }

Perm affine_z4(Element a, Element t) {
  std::vector<Element> images(4);
  for (Element x = 0; x < 4; ++x) images[x] = (a * x + t) % 4;
  return Perm(images);
}

std::vector<SLoopContext> catalog_contexts(std::size_t max_order) {
  std::vector<SLoopContext> out;
  for (std::size_t n = 4; n <= max_order; ++n) {
    for (const auto& entry : generate_loops(n, {.require_s_subgroup = true})) {
      for (const auto& h : s_subgroups(entry.loop)) out.emplace_back(entry.loop, h);
    }
  }
  return out;
}

}  // namespace

TEST(Ssym, Z4) {
  const auto s = ssym(z4_ctx());
  EXPECT_EQ(s.members, (std::vector<Perm>{Perm{0, 1, 2, 3}, Perm{0, 3, 2, 1},
                                          Perm{2, 1, 0, 3}, Perm{2, 3, 0, 1}}));
  EXPECT_TRUE(s.contains(Perm::identity(4)));
}

TEST(Ssym, FactorialCountAndFilterAgree) {
  const std::size_t fact[] = {1, 1, 2, 6, 24, 120};
  for (const auto& ctx : catalog_contexts(5)) {
    const auto s = ssym(ctx);
    const std::size_t k = ctx.h().size(), n = ctx.loop().order();
    EXPECT_EQ(s.size(), fact[k] * fact[n - k]);
    std::vector<Perm> filtered;
    const std::vector<Element> h(ctx.h().elements().begin(), ctx.h().elements().end());
    for (const auto& p : all_perms(n)) {
      if (oracle::stabilizes(p, h)) filtered.push_back(p);
    }
    EXPECT_EQ(s.members, filtered);
    EXPECT_TRUE(is_perm_group(s.members));
  }
}

TEST(SpecialWitnesses, Examples) {
  const auto z4 = oracle::cyclic(4);
  const auto id = special_witnesses(z4, Perm::identity(4));
  ASSERT_FALSE(id.empty());
  EXPECT_EQ(id.front().f, 0u);
  EXPECT_EQ(id.front().g, 0u);

  const auto shift = special_witnesses(z4, Perm{1, 2, 3, 0});
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& w : shift) pairs.emplace_back(w.f, w.g);
  EXPECT_EQ(pairs, (std::vector<std::pair<Element, Element>>{{0, 1}, {1, 0}, {2, 3}, {3, 2}}));

  EXPECT_TRUE(special_witnesses(z4, Perm{1, 2, 3, 0}, SubgroupSet::certify(z4, {0, 2})).empty());
  EXPECT_THROW(special_witnesses(z4, Perm::identity(3)), Error);
}

TEST(SpecialWitnesses, MatchOracleOnN5) {
  const auto n5 = oracle::n5();
  const std::vector<Element> all{0, 1, 2, 3, 4};
  for (const auto& p : all_perms(5)) {
    std::vector<std::pair<Element, Element>> got;
    for (const auto& w : special_witnesses(n5, p)) got.emplace_back(w.f, w.g);
    ASSERT_EQ(got, oracle::witnesses(oracle::n5_rows(), p, all));
  }
}

TEST(BsGroup, Z4IsTheAffineGroup) {
  const auto bs = bs_group(oracle::cyclic(4));
  std::set<Perm> affine;
  for (Element a : {1u, 3u}) {
    for (Element t = 0; t < 4; ++t) affine.insert(affine_z4(a, t));
  }
  EXPECT_EQ(bs.size(), 8u);
  EXPECT_EQ(bs.members, std::vector<Perm>(affine.begin(), affine.end()));
  EXPECT_EQ(bs.members, oracle::bs(oracle::cyclic_rows(4)));
  EXPECT_TRUE(bs.closed);
}

TEST(BsGroup, N5) {
  const auto bs = bs_group(oracle::n5());
  EXPECT_EQ(bs.size(), 12u);
  for (const auto& a : automorphism_group(oracle::n5())) EXPECT_TRUE(bs.contains(a));
  EXPECT_TRUE(bs.contains(Perm::identity(5)));
}

TEST(BsGroup, MatchesBruteForceOnCatalog) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& entry : generate_loops(n)) {
      const auto bs = bs_group(entry.loop);
      ASSERT_EQ(bs.members, oracle::bs(entry.loop.rows())) << format_table(entry.loop);
      ASSERT_TRUE(bs.closed);
    }
  }
}

TEST(SbsGroup, Z4) {
  const auto sbs = sbs_group(z4_ctx());
  // {id, x -> 3x, x -> 3x+2, x -> x+2}, sorted.
  EXPECT_EQ(sbs.members, (std::vector<Perm>{affine_z4(1, 0), affine_z4(3, 0),
                                            affine_z4(3, 2), affine_z4(1, 2)}));
  EXPECT_TRUE(sbs.closed);
}

TEST(SbsGroup, N5) {
  const auto sbs = sbs_group(n5_ctx());
  EXPECT_EQ(sbs.members, (std::vector<Perm>{Perm{0, 1, 2, 3, 4}, Perm{0, 1, 3, 4, 2},
                                            Perm{0, 1, 4, 2, 3}}));
  const auto bs = bs_group(oracle::n5());
  for (const auto& p : sbs.members) EXPECT_TRUE(bs.contains(p));
}

TEST(SbsGroup, MatchesBruteForceOnCatalog) {
  for (const auto& ctx : catalog_contexts(5)) {
    const std::vector<Element> h(ctx.h().elements().begin(), ctx.h().elements().end());
    const auto sbs = sbs_group(ctx);
    ASSERT_EQ(sbs.members, oracle::sbs(ctx.loop().rows(), h));
    for (const auto& theta : sbs.members) {
      const auto ws = special_witnesses(ctx.loop(), theta, ctx.h());
      ASSERT_FALSE(ws.empty());
      for (const auto& w : ws) {
        ASSERT_TRUE(satisfies_autotopism_law(ctx.loop(), special_triple(ctx.loop(), theta, w.f, w.g)));
      }
    }
  }
}

TEST(SaGroup, Examples) {
  const auto sa = sa_group(z4_ctx());
  EXPECT_EQ(sa.size(), 2u);
  EXPECT_TRUE(sa.contains(Perm::identity(4)));
  for (const auto& ctx : catalog_contexts(5)) {
    const auto sa_c = sa_group(ctx);
    const auto sbs = sbs_group(ctx);
    for (const auto& p : sa_c.members) EXPECT_TRUE(sbs.contains(p));
  }
}

TEST(Omega, Z4) {
  const auto ctx = z4_ctx();
  const auto om = omega(ctx);
  EXPECT_EQ(om.size(), 8u);
  const Autotopism id{Perm::identity(4), Perm::identity(4), Perm::identity(4)};
  EXPECT_TRUE(std::any_of(om.begin(), om.end(), [&](const OmegaElement& x) { return x.autotopism == id; }));
  std::vector<Autotopism> triples;
  for (const auto& x : om) {
    triples.push_back(x.autotopism);
    EXPECT_EQ(x.autotopism, special_triple(ctx.loop(), x.witness.theta, x.witness.f, x.witness.g));
    EXPECT_EQ(phi_project(x), x.witness.theta);
  }
  for (const auto& a : triples) {
    for (const auto& b : triples) {
      EXPECT_TRUE(std::binary_search(triples.begin(), triples.end(), compose(a, b)));
      EXPECT_EQ(compose(a, b).w, compose(a.w, b.w));
    }
  }
}

TEST(Omega, N5) {
  EXPECT_EQ(omega(n5_ctx()).size(), 3u);
  EXPECT_EQ(ker_phi(n5_ctx()).size(), 1u);
  EXPECT_EQ(theta_set(n5_ctx()), (std::vector<std::pair<Element, Element>>{{0, 0}}));
}

TEST(ThetaSet, Z4) {
  EXPECT_EQ(theta_set(z4_ctx()),
            (std::vector<std::pair<Element, Element>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST(ThetaSet, ContainsIdentityPairAndBoundedOnCatalog) {
  for (const auto& ctx : catalog_contexts(5)) {
    const auto theta = theta_set(ctx);
    const Element e = ctx.loop().identity();
    EXPECT_NE(std::find(theta.begin(), theta.end(), std::make_pair(e, e)), theta.end());
    EXPECT_LE(theta.size(), ctx.h().size() * ctx.h().size());
  }
}

TEST(KerPhi, Z4) {
  const auto ctx = z4_ctx();
  const auto ker = ker_phi(ctx);
  ASSERT_EQ(ker.size(), 2u);
  std::set<std::pair<Element, Element>> pairs;
  for (const auto& x : ker) {
    EXPECT_TRUE(phi_project(x).is_identity());
    EXPECT_TRUE(kernel_characterization_holds(ctx.loop(), x));
    pairs.emplace(x.witness.f, x.witness.g);
  }
  EXPECT_EQ(pairs, (std::set<std::pair<Element, Element>>{{0, 0}, {2, 2}}));
}

TEST(KerPhi, CharacterizationOnCatalog) {
  for (const auto& ctx : catalog_contexts(5)) {
    for (const auto& x : ker_phi(ctx)) EXPECT_TRUE(kernel_characterization_holds(ctx.loop(), x));
  }
}

TEST(CardinalityIdentities, HoldOnCatalog) {
  for (const auto& ctx : catalog_contexts(5)) {
    const auto om = omega(ctx);
    const auto sbs = sbs_group(ctx);
    const auto sa = sa_group(ctx);
    const auto theta = theta_set(ctx);
    const auto ker = ker_phi(ctx);
    EXPECT_EQ(om.size(), sbs.size() * ker.size());
    EXPECT_EQ(om.size(), theta.size() * sa.size());
    const auto n_mu = middle_nucleus(ctx.loop());
    std::size_t cap = 0;
    for (Element g : n_mu.elements()) cap += ctx.h().contains(g) ? 1 : 0;
    EXPECT_EQ(ker.size(), cap);
  }
}

TEST(VerifyTheorems, Z4Report) {
  const auto v = verify_theorems(oracle::cyclic(4));
  ASSERT_EQ(v.reports.size(), 1u);
  const auto& r = v.reports[0];
  EXPECT_EQ(r.order, 4u);
  EXPECT_EQ(r.h, 2u);
  EXPECT_EQ(r.bs, 8u);
  EXPECT_EQ(r.sbs, 4u);
  EXPECT_EQ(r.ssym, 4u);
  EXPECT_EQ(r.aum, 2u);
  EXPECT_EQ(r.sa, 2u);
  EXPECT_EQ(r.aut, 32u);
  EXPECT_EQ(r.omega, 8u);
  EXPECT_EQ(r.theta, 4u);
  EXPECT_EQ(r.n_mu, 4u);
  EXPECT_EQ(r.n_mu_cap_h, 2u);
  EXPECT_EQ(r.ker_phi, 2u);
  for (auto key : {"t10", "c11", "t12", "t12_1", "t8", "t13", "t14", "t15", "t16", "t17", "t19"}) {
    EXPECT_EQ(r.check(key).status, CheckStatus::Pass) << key << ": " << r.check(key).detail;
  }
  // Stated with the full middle nucleus these fail at Z4; the N_mu ∩ H
  // reading holds and is reported in the detail.
  EXPECT_EQ(r.check("t18").status, CheckStatus::Fail);
  EXPECT_NE(r.check("t18").detail.find("N_mu∩H reading |N_mu∩H|=|ker Phi|: 2 = 2 (holds)"),
            std::string::npos)
      << r.check("t18").detail;
  EXPECT_EQ(r.check("t20").status, CheckStatus::Fail);
  EXPECT_NE(r.check("t20").detail.find("|SBS||N_mu∩H|: 8 = 8 (equivalence holds)"),
            std::string::npos)
      << r.check("t20").detail;
  EXPECT_EQ(v.aggregate.t14.status, CheckStatus::Pass);
  EXPECT_EQ(v.aggregate.weighted_sum, 8u);
}

TEST(VerifyTheorems, N5Report) {
  const auto v = verify_theorems(oracle::n5());
  ASSERT_EQ(v.reports.size(), 1u);
  const auto& r = v.reports[0];
  EXPECT_EQ(r.bs, 12u);
  EXPECT_EQ(r.sbs, 3u);
  EXPECT_EQ(r.omega, 3u);
  EXPECT_EQ(r.theta, 1u);
  for (auto key : {"t10", "c11", "t15"}) EXPECT_EQ(r.check(key).status, CheckStatus::Pass) << key;
  EXPECT_EQ(r.check("c23").status, CheckStatus::NotApplicable);
}

TEST(VerifyTheorems, NotSLoop) {
  try {
    verify_theorems(oracle::cyclic(5));
    FAIL() << "expected NotSLoop";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSLoop);
  }
}

TEST(VerifyTheorems, SerialAndParallelAgree) {
  const SearchConfig serial{10, Execution::Serial};
  for (const auto& ctx : catalog_contexts(5)) {
    EXPECT_EQ(to_json(verify_context(ctx, serial)).dump(), to_json(verify_context(ctx)).dump());
  }
}

TEST(Report, JsonSchema) {
  const auto v = verify_theorems(oracle::cyclic(4));
  const auto doc = to_json(v.reports[0]);
  std::string why;
  EXPECT_TRUE(matches_report_schema(nlohmann::json::parse(doc.dump()), &why)) << why;
  const std::vector<std::string> order{"order", "h", "bs", "sbs", "ssym", "aum", "sa",
                                       "aut", "omega", "theta", "n_mu", "n_mu_cap_h",
                                       "ker_phi", "checks"};
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, order);
  EXPECT_EQ(doc["checks"]["t19"]["status"], "pass");

  auto broken = nlohmann::json::parse(doc.dump());
  broken.erase("theta");
  EXPECT_FALSE(matches_report_schema(broken));
  broken = nlohmann::json::parse(doc.dump());
  broken["checks"]["t19"]["status"] = "maybe";
  EXPECT_FALSE(matches_report_schema(broken));
  broken = nlohmann::json::parse(doc.dump());
  broken["extra"] = 1;
  EXPECT_FALSE(matches_report_schema(broken));
}
