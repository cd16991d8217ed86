#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace cposet;
using testing_support::error_kind;
using testing_support::fig;

TEST(Corpus, Entries) {
  const auto corpus = builtin_corpus();
  ASSERT_EQ(corpus.size(), 5u);
  std::vector<std::string> names;
  for (const auto& e : corpus) names.push_back(e.name);
  EXPECT_EQ(names, testing_support::figure_names());
  EXPECT_FALSE(corpus_entry("fig9"));
}

TEST(Corpus, TablesSpotChecks) {
  const auto f1 = fig("fig1");
  EXPECT_EQ(f1.prime(element(f1.poset(), "a")), element(f1.poset(), "b"));
  const auto f2a = fig("fig2a");
  EXPECT_EQ(f2a.prime(element(f2a.poset(), "g")), element(f2a.poset(), "c"));
  EXPECT_EQ(fig("fig4").poset().size(), 12u);
}

TEST(Corpus, ExpectedListsReproduce) {
  for (const auto& e : builtin_corpus()) {
    const Report r = build_report(to_instance(e.name, e.instance), &e.expected);
    for (const auto& check : r.expectations) {
      if (e.name == "fig3" && check.list == "prime_filters") {
        // Published U(a), U(b); by definition (and via P \ I of the prime ideals) it is U(a), U(d).
        EXPECT_FALSE(check.match);
        const Poset& p = e.instance.poset();
        EXPECT_TRUE(same_family(check.computed, {p.up(element(p, "a")), p.up(element(p, "d"))}));
        continue;
      }
      EXPECT_TRUE(check.match) << e.name << ' ' << check.list;
    }
  }
}

TEST(Corpus, Fig4ExpectsAllPrincipalCIdeals) {
  const auto e = *corpus_entry("fig4");
  EXPECT_EQ(e.expected.lists.at("c_ideals").size(), 12u);
}

TEST(Generator, TwoChain) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const Poset p = random_poset(2, seed);
    EXPECT_EQ(p.cover_count(), 1u);
    const auto c = random_complementation(p, seed);
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)(*p.bottom()), *p.top());
    EXPECT_EQ((*c)(*p.top()), *p.bottom());
  }
}

TEST(Generator, SizeBounds) {
  EXPECT_EQ(error_kind([] { random_poset(25, 1); }), ErrorKind::BadSize);
  EXPECT_EQ(error_kind([] { random_poset(1, 1); }), ErrorKind::BadSize);
}

TEST(Generator, Deterministic) {
  EXPECT_EQ(random_poset(5, 1), random_poset(5, 1));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto want = testing_support::profile(seed);
    const auto a = random_complemented_poset(8, seed, want);
    const auto b = random_complemented_poset(8, seed, want);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->poset(), b->poset());
      EXPECT_EQ(a->comp(), b->comp());
    }
  }
}

TEST(Generator, SearchOnFixedOrders) {
  const Poset p1 = fig("fig1").poset();
  const auto c = random_complementation(p1, 5);
  ASSERT_TRUE(c);
  EXPECT_NO_THROW(attach_complementation(p1, *c));

  const Poset chain3 = build_poset({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  EXPECT_FALSE(random_complementation(chain3, 1));
}

TEST(GeneratorProperty, OutputsValidateAndMeetConstraints) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto want = testing_support::profile(seed);
    const Poset p = random_poset(3 + seed % 10, seed);
    EXPECT_TRUE(p.bounded());
    if (auto c = random_complementation(p, seed, want)) {
      ComplementedPoset cp = attach_complementation(p, *c);
      EXPECT_TRUE(want.satisfied_by(cp.props()));
    }
  }
}
