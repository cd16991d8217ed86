#include <gtest/gtest.h>

#include <regex>

#include "support/helpers.hpp"

using namespace cposet;
using testing_support::fig;

namespace {

const char* kFig1Text = R"(# five elements
name: fig1
elements: 0 a b c 1
le: 0 < a
le: 0 < b
le: 0 < c
le: a < 1
le: b < 1
le: c < 1

comp: 0 -> 1
comp: a -> b
comp: b -> c
comp: c -> b
comp: 1 -> 0
)";

struct ParseFailure {
  ErrorKind kind;
  std::optional<std::size_t> line;
};

ParseFailure parse_failure(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return {e.kind(), e.line()};
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return {};
}

std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), {}));
}

std::vector<Instance> round_trip_sample() {
  std::vector<Instance> out;
  for (const auto& e : builtin_corpus()) out.push_back(to_instance(e.name, e.instance));
  std::size_t k = 0;
  for (const auto& cp : testing_support::random_instances(1, 60, 3, 12)) {
    if (k++ == 50) break;
    out.push_back(to_instance("random" + std::to_string(k), cp));
  }
  return out;
}

}  // namespace

TEST(InstanceFormat, ParsesFig1) {
  const Instance inst = parse_instance(kFig1Text);
  EXPECT_EQ(inst.name, "fig1");
  EXPECT_EQ(inst.poset, fig("fig1").poset());
  ASSERT_TRUE(inst.comp);
  EXPECT_EQ(*inst.comp, fig("fig1").comp());
}

TEST(InstanceFormat, PosetOnly) {
  const Instance inst = parse_instance("name: v\nelements: 0 1\nle: 0 < 1\n");
  EXPECT_FALSE(inst.complemented());
  EXPECT_EQ(testing_support::error_kind([&] { complemented(inst); }), ErrorKind::PartialMap);
}

TEST(InstanceFormat, Errors) {
  auto f = parse_failure("name: x\nelements: a b\ncomp: a -> z\n");
  EXPECT_EQ(f.kind, ErrorKind::UnknownName);
  EXPECT_EQ(f.line, 3u);

  f = parse_failure("name: x\nelements: a b\nle: a << b\n");
  EXPECT_EQ(f.kind, ErrorKind::SyntaxError);
  EXPECT_EQ(f.line, 3u);

  f = parse_failure("name: x\nname: y\n");
  EXPECT_EQ(f.kind, ErrorKind::DuplicateSection);
  EXPECT_EQ(f.line, 2u);

  f = parse_failure("elements: a\nname: x\n");
  EXPECT_EQ(f.kind, ErrorKind::SyntaxError);
  EXPECT_EQ(f.line, 1u);

  f = parse_failure("name: x\nelements: a b\ncomp: a -> b\nle: a < b\n");
  EXPECT_EQ(f.kind, ErrorKind::SyntaxError);
  EXPECT_EQ(f.line, 4u);

  f = parse_failure("name: x\nelements: 0 1\nle: 0 < 1\ncomp: 0 -> 1\ncomp: 0 -> 0\n");
  EXPECT_EQ(f.kind, ErrorKind::DuplicateAssignment);
  EXPECT_EQ(f.line, 5u);

  EXPECT_EQ(parse_failure("name: x\nelements: p q\nle: p < q\nle: q < p\n").kind, ErrorKind::CycleDetected);
  EXPECT_EQ(parse_failure("name: x\nelements: 0 1\nle: 0 < 1\ncomp: 0 -> 1\n").kind, ErrorKind::PartialMap);
  EXPECT_EQ(parse_failure("nonsense\n").kind, ErrorKind::SyntaxError);
  EXPECT_EQ(parse_failure("name: x\n").kind, ErrorKind::SyntaxError);
}

TEST(InstanceFormat, RoundTrip) {
  for (const auto& inst : round_trip_sample()) {
    const std::string text = emit_instance(inst);
    EXPECT_EQ(parse_instance(text), inst) << text;
    EXPECT_EQ(emit_instance(parse_instance(text)), text);
  }
}

TEST(SetExpressions, Forms) {
  const Poset p = fig("fig3").poset();
  EXPECT_EQ(parse_set_expression(p, "L(a')"), p.down(element(p, "a'")));
  EXPECT_EQ(parse_set_expression(p, "U(b)"), p.up(element(p, "b")));
  EXPECT_EQ(parse_set_expression(p, "{a, b}"), element_set(p, {"a", "b"}));
  EXPECT_EQ(parse_set_expression(p, "{}"), ElementSet{});
  EXPECT_EQ(parse_set_expression(p, "a", BareToken::Element), element_set(p, {"a"}));
  EXPECT_EQ(parse_set_expression(p, "a'", BareToken::LowerCone), p.down(element(p, "a'")));
  EXPECT_EQ(parse_set_expression(p, "b", BareToken::UpperCone), p.up(element(p, "b")));
  EXPECT_EQ(testing_support::error_kind([&] { parse_set_expression(p, "{a,}"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(testing_support::error_kind([&] { parse_set_expression(p, "L(z)"); }), ErrorKind::UnknownName);
  EXPECT_EQ(principal_label(p, p.down(element(p, "d'")), true), "L(d')");
  EXPECT_EQ(principal_label(p, element_set(p, {"a", "b"}), true), "{a,b}");
}

TEST(Dot, CountsAndHighlights) {
  const std::string d1 = emit_dot(fig("fig1").poset());
  EXPECT_EQ(count(d1, R"(n\d+ \[label=)"), 5u);
  EXPECT_EQ(count(d1, R"(n\d+ -> n\d+;)"), 6u);
  EXPECT_NE(d1.find("rankdir=BT"), std::string::npos);

  const std::string ds = emit_dot(build_poset({"x"}, {}));
  EXPECT_EQ(count(ds, R"(n\d+ \[label=)"), 1u);
  EXPECT_EQ(count(ds, R"(n\d+ -> n\d+;)"), 0u);

  const Poset p3 = fig("fig3").poset();
  const std::string d3 = emit_dot(p3, {{"L(a')", p3.down(element(p3, "a'"))}});
  EXPECT_EQ(count(d3, "style=filled"), 5u);
  EXPECT_EQ(d3, emit_dot(p3, {{"L(a')", p3.down(element(p3, "a'"))}}));

  const std::string two = emit_dot(p3, {{"A", element_set(p3, {"a"})}, {"B", element_set(p3, {"b"})}});
  EXPECT_EQ(count(two, "fillcolor"), 2u);
  EXPECT_EQ(count(two, "#8dd3c7"), 1u);
  EXPECT_EQ(count(two, "#fb8072"), 1u);
}

TEST(MachineReport, RoundTripsCorpus) {
  for (const auto& e : builtin_corpus()) {
    const Report r = build_report(to_instance(e.name, e.instance), &e.expected);
    const std::string text = render_machine(r);
    const Report back = parse_machine(text);
    EXPECT_EQ(back, r) << e.name;
    EXPECT_EQ(render_machine(back), text);
  }
}

TEST(MachineReport, RoundTripsRandomAndPosetOnly) {
  for (const auto& inst : round_trip_sample()) {
    const Report r = build_report(inst);
    EXPECT_EQ(parse_machine(render_machine(r)), r);
    const Report bare = build_report(Instance{inst.name, inst.poset, std::nullopt});
    EXPECT_FALSE(bare.complement);
    EXPECT_EQ(parse_machine(render_machine(bare)), bare);
  }
}

TEST(MachineReport, RecoversLibrarySets) {
  const auto cp = fig("fig1");
  const Report r = parse_machine(render_machine(build_report(to_instance("fig1", cp))));
  const Harness h(cp);
  std::vector<ElementSet> ci;
  for (const auto& c : r.ideals) {
    if (c.c_ideal_witness) ci.push_back(c.subject);
  }
  EXPECT_EQ(ci, h.c_ideals());
  ASSERT_TRUE(r.complement);
  EXPECT_EQ(r.complement->boolean, boolean_elements(cp));
}

TEST(MachineReport, RejectsMalformed) {
  const auto kind = [](const std::string& text) {
    return testing_support::error_kind([&] { parse_machine(text); });
  };
  EXPECT_EQ(kind(""), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("cposet-report 1\nreport x\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("cposet-report 1\nbogus 1\nend\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("cposet-report 1\nelements a\nbottom z\nend\n"), ErrorKind::UnknownName);
}
