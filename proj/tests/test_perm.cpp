#include <random>

#include "gtest/gtest.h"
#include "loopforge/error.hpp"
#include "loopforge/perm.hpp"

using namespace loopforge;

namespace {

Perm random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(images);
}

}  // namespace

TEST(Perm, ComposeAppliesLeftToRight) {
  EXPECT_EQ(compose(Perm{1, 2, 0}, Perm{1, 0, 2}), (Perm{0, 2, 1}));
}

TEST(Perm, ComposeWithIdentityAndInverse) {
  const Perm p{3, 0, 2, 1};
  EXPECT_EQ(compose(p, Perm::identity(4)), p);
  EXPECT_EQ(compose(p, inverse(p)), Perm::identity(4));
}

TEST(Perm, Inverse) {
  EXPECT_EQ(inverse(Perm{1, 2, 0}), (Perm{2, 0, 1}));
  EXPECT_EQ(inverse(Perm::identity(5)), Perm::identity(5));
  const Perm p{4, 2, 0, 1, 3};
  EXPECT_EQ(inverse(inverse(p)), p);
}

TEST(Perm, DegreeMismatch) {
  try {
    compose(Perm::identity(3), Perm::identity(4));
    FAIL() << "expected DegreeMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
}

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW(Perm({0, 0, 1}), Error);
  EXPECT_THROW(Perm({0, 3, 1}), Error);
  EXPECT_THROW(Perm(std::vector<Element>{}), Error);
}

TEST(Perm, TextForm) {
  const Perm p{1, 2, 0};
  EXPECT_EQ(p.to_string(), "1,2,0");
  EXPECT_EQ(Perm::parse("1,2,0"), p);
  EXPECT_EQ(Perm::parse(" 1, 2 ,0"), p);
  EXPECT_THROW(Perm::parse("1,,0"), Error);
  EXPECT_THROW(Perm::parse("1,2,x"), Error);
  EXPECT_THROW(Perm::parse("1,1,0"), Error);
}

TEST(Perm, AllPermsIsLexicographic) {
  const auto perms = all_perms(4);
  ASSERT_EQ(perms.size(), 24u);
  EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
  EXPECT_EQ(perms.front(), Perm::identity(4));
}

TEST(PermProperty, GroupLawsOnRandomTriples) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Perm a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(compose(a, inverse(a)), Perm::identity(n));
    ASSERT_EQ(compose(inverse(a), a), Perm::identity(n));
    ASSERT_EQ(compose(Perm::identity(n), a), a);
    ASSERT_EQ(inverse(compose(a, b)), compose(inverse(b), inverse(a)));
    ASSERT_EQ(Perm::parse(a.to_string()), a);
    for (Element x = 0; x < n; ++x) ASSERT_EQ(compose(a, b)[x], b[a[x]]);
  }
}
