#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace cposet;
using testing_support::error_kind;
using testing_support::fig;

namespace {

ElementSet S(const ComplementedPoset& cp, std::initializer_list<std::string_view> names) {
  return element_set(cp.poset(), names);
}

ElementId E(const ComplementedPoset& cp, std::string_view name) { return element(cp.poset(), name); }

std::vector<ComplementedPoset> sample_instances() {
  std::vector<ComplementedPoset> out;
  for (const auto& n : testing_support::figure_names()) out.push_back(fig(n));
  for (auto& cp : testing_support::random_instances(1, 60, 4, 10)) out.push_back(std::move(cp));
  return out;
}

}  // namespace

TEST(Complementation, Fig1Properties) {
  const auto cp = fig("fig1");
  EXPECT_EQ(cp.prime(E(cp, "a")), E(cp, "b"));
  const auto& pr = cp.props();
  EXPECT_TRUE(pr.antitone);
  EXPECT_FALSE(pr.involution);
  EXPECT_TRUE(pr.triple_identity);
  EXPECT_FALSE(pr.x_le_xdd);
}

TEST(Complementation, TwoChainIsBoolean) {
  const auto cp = attach_complementation(build_poset({"0", "1"}, {{"0", "1"}}), {{"0", "1"}, {"1", "0"}});
  const auto& pr = cp.props();
  EXPECT_TRUE(pr.antitone && pr.involution && pr.x_le_xdd && pr.xdd_le_x && pr.triple_identity && pr.xd_le_xddd &&
              pr.xddd_le_xd && pr.de_morgan);
}

TEST(Complementation, ValidationErrors) {
  const Poset p1 = fig("fig1").poset();
  try {
    attach_complementation(p1, {{"0", "1"}, {"a", "a"}, {"b", "c"}, {"c", "b"}, {"1", "0"}});
    FAIL() << "expected AxiomViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos);
  }
  EXPECT_EQ(error_kind([&] { attach_complementation(p1, {{"0", "1"}, {"a", "b"}}); }), ErrorKind::PartialMap);
  EXPECT_EQ(error_kind([&] {
              attach_complementation(p1, {{"0", "1"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "b"}, {"1", "0"}});
            }),
            ErrorKind::DuplicateAssignment);
  const Poset unbounded = build_poset({"x", "y"}, {});
  EXPECT_EQ(error_kind([&] { attach_complementation(unbounded, {{"x", "y"}, {"y", "x"}}); }), ErrorKind::NotBounded);
}

TEST(Complementation, FigureFlags) {
  const auto f2a = fig("fig2a");
  EXPECT_EQ(f2a.prime(E(f2a, "g")), E(f2a, "c"));
  EXPECT_TRUE(f2a.props().antitone);
  EXPECT_FALSE(f2a.props().involution);
  EXPECT_FALSE(f2a.props().x_le_xdd);
  EXPECT_FALSE(f2a.poset().leq(E(f2a, "g"), f2a.prime(f2a.prime(E(f2a, "g")))));
  for (const char* name : {"fig3", "fig4"}) {
    EXPECT_TRUE(fig(name).props().antitone) << name;
    EXPECT_TRUE(fig(name).props().involution) << name;
  }
}

TEST(Complementation, BooleanElements) {
  EXPECT_EQ(boolean_elements(fig("fig1")), S(fig("fig1"), {"0", "b", "c", "1"}));
  EXPECT_EQ(boolean_elements(fig("fig2a")), S(fig("fig2a"), {"0", "e", "f", "1"}));
  EXPECT_EQ(boolean_elements(fig("fig3")), fig("fig3").poset().universe());
}

TEST(Complementation, DoublePrimesOnFig1) {
  const auto cp = fig("fig1");
  const Poset& p = cp.poset();
  auto dd = [&](std::string_view a) { return set_image_prime(cp, set_image_prime(cp, p.down(E(cp, a)))); };
  EXPECT_EQ(dd("0"), p.down(E(cp, "0")));
  EXPECT_EQ(dd("a"), p.down(E(cp, "c")));
  EXPECT_FALSE(dd("a").subset_of(p.down(E(cp, "a"))));
  EXPECT_EQ(dd("b"), p.down(E(cp, "b")));
  EXPECT_EQ(dd("c"), p.down(E(cp, "c")));
  EXPECT_EQ(dd("1"), S(cp, {"0", "b", "c", "1"}));
  EXPECT_EQ(set_image_prime(cp, ElementSet{}), ElementSet{});
}

TEST(Complementation, PreimageZero) {
  const auto f1 = fig("fig1");
  EXPECT_EQ(set_preimage_zero(f1, S(f1, {"c", "1"})), S(f1, {"0", "b"}));
  EXPECT_EQ(set_preimage_zero(f1, f1.poset().universe()), f1.poset().universe());
  const auto f3 = fig("fig3");
  EXPECT_EQ(set_preimage_zero(f3, S(f3, {"0", "a"})), S(f3, {"a'", "1"}));
}

// ---------------------------------------------------------------------------
// Properties

TEST(ComplementationProperty, FlagsAgreeWithDefinitions) {
  for (const auto& cp : sample_instances()) {
    const Poset& p = cp.poset();
    const std::size_t n = p.size();
    auto c = [&](std::size_t x) { return cp.prime(ElementId(x)); };
    bool antitone = true, involution = true, le = true, ge = true, triple = true;
    for (std::size_t x = 0; x < n; ++x) {
      const ElementId ex(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (p.leq(ex, ElementId(y)) && !p.leq(c(y), c(x))) antitone = false;
      }
      const ElementId xdd = cp.prime(c(x));
      involution = involution && xdd == ex;
      le = le && p.leq(ex, xdd);
      ge = ge && p.leq(xdd, ex);
      triple = triple && cp.prime(xdd) == c(x);
    }
    const auto& pr = cp.props();
    EXPECT_EQ(pr.antitone, antitone);
    EXPECT_EQ(pr.involution, involution);
    EXPECT_EQ(pr.x_le_xdd, le);
    EXPECT_EQ(pr.xdd_le_x, ge);
    EXPECT_EQ(pr.triple_identity, triple);
    if (pr.antitone && pr.involution) { EXPECT_TRUE(pr.de_morgan); }
  }
}

TEST(ComplementationProperty, BoundsSwap) {
  for (const auto& cp : sample_instances()) {
    EXPECT_EQ(cp.prime(cp.bottom()), cp.top());
    EXPECT_EQ(cp.prime(cp.top()), cp.bottom());
  }
}

TEST(ComplementationProperty, PreimageIsMonotone) {
  std::mt19937_64 rng(11);
  for (const auto& cp : sample_instances()) {
    const std::uint64_t mask = cp.poset().universe().bits();
    for (int k = 0; k < 100; ++k) {
      const auto b = ElementSet::from_bits(rng() & mask);
      const auto a = ElementSet::from_bits(b.bits() & rng());
      EXPECT_TRUE(set_preimage_zero(cp, a).subset_of(set_preimage_zero(cp, b)));
    }
  }
}

TEST(ComplementationProperty, TripleIdentityAndInvolutionOnSets) {
  std::mt19937_64 rng(13);
  for (const auto& cp : sample_instances()) {
    const std::uint64_t mask = cp.poset().universe().bits();
    for (int k = 0; k < 100; ++k) {
      const auto a = ElementSet::from_bits(rng() & mask);
      const ElementSet z = set_preimage_zero(cp, a);
      if (cp.props().triple_identity) {
        for (std::size_t x = 0; x < cp.size(); ++x) {
          EXPECT_EQ(z.contains(ElementId(x)), z.contains(cp.prime(cp.prime(ElementId(x)))));
        }
      }
      if (cp.props().involution) { EXPECT_EQ(set_preimage_zero(cp, z), a); }
    }
  }
}
