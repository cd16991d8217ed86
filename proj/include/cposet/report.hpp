#pragma once

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "io.hpp"
#include "theorems.hpp"

namespace cposet {

/// Published list versus the computed one, compared as sets of sets.
struct ExpectationCheck {
  std::string list;
  std::vector<std::string> labels;  // as published, e.g. "L(a)"
  std::vector<ElementSet> published;
  std::vector<ElementSet> computed;
  bool match = false;

  friend bool operator==(const ExpectationCheck&, const ExpectationCheck&) = default;
};

struct ComplementSection {
  Complementation comp;
  ComplementProperties props;
  ElementSet boolean;
  std::vector<ElementSet> principal_double_primes;  // L(a)'' for each a, in element order

  friend bool operator==(const ComplementSection&, const ComplementSection&) = default;
};

struct Report {
  std::string name;
  std::vector<std::string> elements;
  std::optional<ElementId> bottom;
  std::optional<ElementId> top;
  DistributivityReport distributivity;
  SemilatticeFlags semilattice;
  std::optional<ComplementSection> complement;
  std::vector<SubsetClassification> ideals;
  std::vector<SubsetClassification> filters;
  std::vector<TheoremCheckResult> theorems;
  std::vector<ExpectationCheck> expectations;
};

inline bool operator==(const DistributivityReport& a, const DistributivityReport& b) {
  return a.holds == b.holds && a.witness == b.witness && (a.holds || (a.lhs == b.lhs && a.rhs == b.rhs));
}
inline bool operator==(const SemilatticeFlags& a, const SemilatticeFlags& b) {
  return a.join_semilattice == b.join_semilattice && a.meet_semilattice == b.meet_semilattice;
}
inline bool operator==(const Report& a, const Report& b) {
  return a.name == b.name && a.elements == b.elements && a.bottom == b.bottom && a.top == b.top &&
         a.distributivity == b.distributivity && a.semilattice == b.semilattice && a.complement == b.complement &&
         a.ideals == b.ideals && a.filters == b.filters && a.theorems == b.theorems &&
         a.expectations == b.expectations;
}

// ---------------------------------------------------------------------------
// Classes

inline constexpr std::string_view kIdealClasses[] = {"all", "proper", "maximal", "prime", "c-ideal", "c-condition"};
inline constexpr std::string_view kFilterClasses[] = {"all",   "proper",   "ultrafilter",
                                                      "prime", "c-filter", "c-condition"};

inline bool in_class(const SubsetClassification& c, std::string_view cls, bool as_ideal) {
  if (cls == "all") return true;
  if (cls == "proper") return c.proper;
  if (cls == "c-condition") return c.c_condition;
  if (cls == "prime") return as_ideal ? c.prime_ideal : c.prime_filter;
  if (as_ideal) {
    if (cls == "maximal") return c.maximal_ideal;
    if (cls == "c-ideal") return c.c_ideal_witness.has_value();
  } else {
    if (cls == "ultrafilter") return c.ultrafilter;
    if (cls == "c-filter") return c.c_filter_witness.has_value();
  }
  throw Error(ErrorKind::SyntaxError, "unknown class '" + std::string(cls) + "'");
}

inline std::vector<ElementSet> members_of(const std::vector<SubsetClassification>& family, std::string_view cls,
                                          bool as_ideal) {
  std::vector<ElementSet> out;
  for (const auto& c : family) {
    if (in_class(c, cls, as_ideal)) out.push_back(c.subject);
  }
  return out;
}

/// Published list name -> (family, class).
inline std::optional<std::pair<bool, std::string_view>> expectation_class(std::string_view list) {
  if (list == "maximal_ideals") return std::pair{true, std::string_view("maximal")};
  if (list == "prime_ideals") return std::pair{true, std::string_view("prime")};
  if (list == "c_ideals") return std::pair{true, std::string_view("c-ideal")};
  if (list == "c_condition_ideals") return std::pair{true, std::string_view("c-condition")};
  if (list == "ultrafilters") return std::pair{false, std::string_view("ultrafilter")};
  if (list == "prime_filters") return std::pair{false, std::string_view("prime")};
  if (list == "c_filters") return std::pair{false, std::string_view("c-filter")};
  if (list == "c_condition_filters") return std::pair{false, std::string_view("c-condition")};
  return std::nullopt;
}

inline bool same_family(std::vector<ElementSet> a, std::vector<ElementSet> b) {
  std::sort(a.begin(), a.end(), EnumerationLess{});
  std::sort(b.begin(), b.end(), EnumerationLess{});
  return a == b;
}

// ---------------------------------------------------------------------------
// Building

inline Report build_report(const Instance& inst, const ExpectedLists* expected = nullptr,
                           const EnumerationBudget& budget = {}) {
  const Poset& p = inst.poset;
  Report r;
  r.name = inst.name;
  r.elements = p.names();
  r.bottom = p.bottom();
  r.top = p.top();
  r.distributivity = is_distributive(p);
  r.semilattice = semilattice_flags(p);

  if (!inst.comp) {
    SubstructureIndex index(p, budget);
    for (ElementSet s : index.ideals()) r.ideals.push_back(classify_order(index, s));
    for (ElementSet s : index.filters()) r.filters.push_back(classify_order(index, s));
    return r;
  }

  const Harness harness(complemented(inst), budget);
  const ComplementedPoset& cp = harness.complemented();
  ComplementSection cs{cp.comp(), cp.props(), boolean_elements(cp), {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    cs.principal_double_primes.push_back(set_image_prime(cp, set_image_prime(cp, p.down(ElementId(i)))));
  }
  r.complement = std::move(cs);
  for (ElementSet s : harness.index().ideals()) r.ideals.push_back(classify(harness.index(), cp.comp(), s));
  for (ElementSet s : harness.index().filters()) r.filters.push_back(classify(harness.index(), cp.comp(), s));
  r.theorems = harness.run_all();

  if (expected) {
    if (expected->boolean_elements) {
      ExpectationCheck e;
      e.list = "boolean_elements";
      ElementSet pub;
      for (const auto& tok : detail::tokens(*expected->boolean_elements)) {
        e.labels.push_back(tok);
        pub.insert(element(p, tok));
      }
      e.published = {pub};
      e.computed = {r.complement->boolean};
      e.match = pub == r.complement->boolean;
      r.expectations.push_back(std::move(e));
    }
    for (const auto& [list, labels] : expected->lists) {
      const auto cls = expectation_class(list);
      if (!cls) continue;
      ExpectationCheck e;
      e.list = list;
      e.labels = labels;
      for (const auto& l : labels) e.published.push_back(parse_set_expression(p, l));
      e.computed = members_of(cls->first ? r.ideals : r.filters, cls->second, cls->first);
      e.match = same_family(e.published, e.computed);
      r.expectations.push_back(std::move(e));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Machine format: one record per line, `key value...`, sets as `{a,b}`.

namespace detail {

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline std::string set_list(const Poset& p, const std::vector<ElementSet>& sets) {
  if (sets.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < sets.size(); ++k) out += (k ? ";" : "") + format_set(p, sets[k]);
  return out;
}

inline std::string element_list(const Poset& p, const std::vector<ElementId>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + p.name(xs[k]);
  return out;
}

inline std::string opt_element(const Poset& p, const std::optional<ElementId>& x) { return x ? p.name(*x) : "-"; }
inline std::string opt_set(const Poset& p, const std::optional<ElementSet>& s) { return s ? format_set(p, *s) : "-"; }

inline Poset antichain_of(const std::vector<std::string>& names) {
  return build_poset(std::span<const std::string>(names), std::span<const std::pair<std::string, std::string>>());
}

inline void emit_witness(std::ostream& out, const Poset& p, std::string_view key, StatementId id, const Witness& w) {
  out << key << ' ' << to_tag(id) << " elements=" << element_list(p, w.elements) << " sets=" << set_list(p, w.sets)
      << " note=" << w.note << '\n';
}

}  // namespace detail

/// One `ideal ...` / `filter ...` record.
inline void write_machine_classification(std::ostream& out, const Poset& names, std::string_view family,
                                         const SubsetClassification& c) {
  using detail::yes_no;
  out << family << ' ' << format_set(names, c.subject) << " ideal=" << yes_no(c.is_ideal)
      << " filter=" << yes_no(c.is_filter) << " proper=" << yes_no(c.proper)
      << " ideal_gen=" << detail::opt_element(names, c.ideal_generator)
      << " filter_gen=" << detail::opt_element(names, c.filter_generator) << " maximal=" << yes_no(c.maximal_ideal)
      << " prime_ideal=" << yes_no(c.prime_ideal) << " ultrafilter=" << yes_no(c.ultrafilter)
      << " prime_filter=" << yes_no(c.prime_filter) << " c_ideal=" << detail::opt_set(names, c.c_ideal_witness)
      << " c_filter=" << detail::opt_set(names, c.c_filter_witness) << " c_condition=" << yes_no(c.c_condition)
      << '\n';
}

/// `theorem ...` plus its optional counterexample, probe and note records.
inline void write_machine_theorem(std::ostream& out, const Poset& names, const TheoremCheckResult& t) {
  using detail::yes_no;
  out << "theorem " << to_tag(t.statement) << " hypotheses=" << yes_no(t.hypotheses_met)
      << " holds=" << (t.conclusion_holds ? yes_no(*t.conclusion_holds) : "-") << " cases=" << t.cases_checked << '\n';
  if (t.counterexample) detail::emit_witness(out, names, "counterexample", t.statement, *t.counterexample);
  if (t.unhypothesized_failure) detail::emit_witness(out, names, "probe", t.statement, *t.unhypothesized_failure);
  if (!t.hypothesis_note.empty()) out << "hypothesis_note " << to_tag(t.statement) << ' ' << t.hypothesis_note << '\n';
}

constexpr std::string_view kMachineFormatVersion = "cposet-report 1";

inline std::string render_machine(const Report& r) {
  // Only names are needed to print sets.
  const Poset names = detail::antichain_of(r.elements);
  using detail::yes_no;
  std::ostringstream out;
  out << kMachineFormatVersion << '\n';
  out << "report " << r.name << '\n';
  out << "elements";
  for (const auto& e : r.elements) out << ' ' << e;
  out << '\n';
  out << "bottom " << detail::opt_element(names, r.bottom) << '\n';
  out << "top " << detail::opt_element(names, r.top) << '\n';
  out << "distributive " << yes_no(r.distributivity.holds) << '\n';
  if (r.distributivity.witness) {
    const auto& w = *r.distributivity.witness;
    out << "distributive_witness " << names.name(w[0]) << ' ' << names.name(w[1]) << ' ' << names.name(w[2]) << ' '
        << format_set(names, r.distributivity.lhs) << ' ' << format_set(names, r.distributivity.rhs) << '\n';
  }
  out << "join_semilattice " << yes_no(r.semilattice.join_semilattice) << '\n';
  out << "meet_semilattice " << yes_no(r.semilattice.meet_semilattice) << '\n';
  out << "complemented " << yes_no(r.complement.has_value()) << '\n';
  if (r.complement) {
    const auto& c = *r.complement;
    for (std::size_t i = 0; i < r.elements.size(); ++i) {
      out << "comp " << r.elements[i] << ' ' << names.name(c.comp(ElementId(i))) << '\n';
    }
    const auto& pr = c.props;
    out << "property antitone " << yes_no(pr.antitone) << '\n'
        << "property involution " << yes_no(pr.involution) << '\n'
        << "property x_le_xdd " << yes_no(pr.x_le_xdd) << '\n'
        << "property xdd_le_x " << yes_no(pr.xdd_le_x) << '\n'
        << "property triple_identity " << yes_no(pr.triple_identity) << '\n'
        << "property xd_le_xddd " << yes_no(pr.xd_le_xddd) << '\n'
        << "property xddd_le_xd " << yes_no(pr.xddd_le_xd) << '\n'
        << "property de_morgan " << yes_no(pr.de_morgan) << '\n';
    out << "boolean " << format_set(names, c.boolean) << '\n';
    for (std::size_t i = 0; i < c.principal_double_primes.size(); ++i) {
      out << "double_prime " << r.elements[i] << ' ' << format_set(names, c.principal_double_primes[i]) << '\n';
    }
  }
  for (const auto& c : r.ideals) write_machine_classification(out, names, "ideal", c);
  for (const auto& c : r.filters) write_machine_classification(out, names, "filter", c);
  for (const auto& t : r.theorems) write_machine_theorem(out, names, t);
  for (const auto& e : r.expectations) {
    out << "expected " << e.list << ' ' << (e.match ? "match" : "mismatch")
        << " published=" << detail::set_list(names, e.published) << " computed=" << detail::set_list(names, e.computed)
        << " labels=";
    for (std::size_t k = 0; k < e.labels.size(); ++k) out << (k ? ";" : "") << e.labels[k];
    if (e.labels.empty()) out << '-';
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

namespace detail {

class MachineLine {
 public:
  MachineLine(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::string word() {
    skip();
    const auto e = text_.find(' ');
    std::string w(text_.substr(0, e));
    text_ = e == std::string_view::npos ? std::string_view{} : text_.substr(e);
    if (w.empty()) fail("unexpected end of line");
    return w;
  }

  std::string field(std::string_view key) {
    std::string w = word();
    const std::string prefix = std::string(key) + "=";
    if (w.rfind(prefix, 0) != 0) fail("expected field '" + std::string(key) + "'");
    return w.substr(prefix.size());
  }

  /// `key=` followed by the rest of the line.
  std::string tail(std::string_view key) {
    skip();
    const std::string prefix = std::string(key) + "=";
    if (text_.rfind(prefix, 0) != 0) fail("expected field '" + std::string(key) + "'");
    std::string out(text_.substr(prefix.size()));
    text_ = {};
    return out;
  }

  std::string rest() {
    skip();
    std::string out(text_);
    text_ = {};
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const { throw Error(ErrorKind::SyntaxError, why, line_); }
  std::size_t line() const { return line_; }

 private:
  void skip() {
    while (!text_.empty() && text_.front() == ' ') text_.remove_prefix(1);
  }
  std::string_view text_;
  std::size_t line_;
};

inline bool parse_bool(MachineLine& l, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  l.fail("expected true/false, got '" + v + "'");
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.emplace_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

}  // namespace detail

/// Inverse of render_machine.
inline Report parse_machine(std::string_view text) {
  using detail::MachineLine;
  Report r;
  std::optional<Poset> names;
  std::size_t line_no = 0;
  bool seen_header = false, seen_end = false;

  auto need_names = [&](MachineLine& l) -> const Poset& {
    if (!names) l.fail("'elements' must come first");
    return *names;
  };
  auto set_of = [&](MachineLine& l, const std::string& s) { return parse_set_literal(need_names(l), s); };
  auto opt_set = [&](MachineLine& l, const std::string& s) -> std::optional<ElementSet> {
    if (s == "-") return std::nullopt;
    return set_of(l, s);
  };
  auto opt_element = [&](MachineLine& l, const std::string& s) -> std::optional<ElementId> {
    if (s == "-") return std::nullopt;
    return element(need_names(l), s);
  };
  auto set_list = [&](MachineLine& l, const std::string& s) {
    std::vector<ElementSet> out;
    if (s == "-") return out;
    for (const auto& part : detail::split(s, ';')) out.push_back(set_of(l, part));
    return out;
  };
  auto witness = [&](MachineLine& l) {
    Witness w;
    const std::string els = l.field("elements");
    if (els != "-") {
      for (const auto& e : detail::split(els, ',')) w.elements.push_back(element(need_names(l), e));
    }
    w.sets = set_list(l, l.field("sets"));
    w.note = l.tail("note");
    return w;
  };
  auto theorem = [&](MachineLine& l, const std::string& tag) -> TheoremCheckResult& {
    auto id = statement_from_tag(tag);
    if (!id) l.fail("unknown statement '" + tag + "'");
    for (auto& t : r.theorems) {
      if (t.statement == *id) return t;
    }
    l.fail("statement '" + tag + "' has no theorem line");
  };

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (raw.empty()) continue;
    if (!seen_header) {
      if (raw != kMachineFormatVersion) throw Error(ErrorKind::SyntaxError, "missing format header", line_no);
      seen_header = true;
      continue;
    }
    if (seen_end) throw Error(ErrorKind::SyntaxError, "content after 'end'", line_no);
    MachineLine l(raw, line_no);
    const std::string key = l.word();
    if (key == "report") {
      r.name = l.word();
    } else if (key == "elements") {
      for (const auto& t : detail::tokens(l.rest())) r.elements.push_back(t);
      names = detail::antichain_of(r.elements);
    } else if (key == "bottom") {
      r.bottom = opt_element(l, l.word());
    } else if (key == "top") {
      r.top = opt_element(l, l.word());
    } else if (key == "distributive") {
      r.distributivity.holds = detail::parse_bool(l, l.word());
    } else if (key == "distributive_witness") {
      std::array<ElementId, 3> w;
      for (auto& x : w) x = element(need_names(l), l.word());
      r.distributivity.witness = w;
      r.distributivity.lhs = set_of(l, l.word());
      r.distributivity.rhs = set_of(l, l.word());
    } else if (key == "join_semilattice") {
      r.semilattice.join_semilattice = detail::parse_bool(l, l.word());
    } else if (key == "meet_semilattice") {
      r.semilattice.meet_semilattice = detail::parse_bool(l, l.word());
    } else if (key == "complemented") {
      if (detail::parse_bool(l, l.word())) {
        r.complement = ComplementSection{Complementation(std::vector<ElementId>(r.elements.size())), {}, {}, {}};
      }
    } else if (key == "comp" || key == "property" || key == "boolean" || key == "double_prime") {
      if (!r.complement) l.fail("'" + key + "' requires 'complemented true'");
      auto& c = *r.complement;
      if (key == "comp") {
        auto image = c.comp.image();
        const ElementId x = element(need_names(l), l.word());
        image[x.index] = element(need_names(l), l.word());
        c.comp = Complementation(std::move(image));
      } else if (key == "property") {
        const std::string prop = l.word();
        const bool v = detail::parse_bool(l, l.word());
        auto& pr = c.props;
        if (prop == "antitone") pr.antitone = v;
        else if (prop == "involution") pr.involution = v;
        else if (prop == "x_le_xdd") pr.x_le_xdd = v;
        else if (prop == "xdd_le_x") pr.xdd_le_x = v;
        else if (prop == "triple_identity") pr.triple_identity = v;
        else if (prop == "xd_le_xddd") pr.xd_le_xddd = v;
        else if (prop == "xddd_le_xd") pr.xddd_le_xd = v;
        else if (prop == "de_morgan") pr.de_morgan = v;
        else l.fail("unknown property '" + prop + "'");
      } else if (key == "boolean") {
        c.boolean = set_of(l, l.word());
      } else {
        const ElementId a = element(need_names(l), l.word());
        if (a.index != c.principal_double_primes.size()) l.fail("double_prime lines out of order");
        c.principal_double_primes.push_back(set_of(l, l.word()));
      }
    } else if (key == "ideal" || key == "filter") {
      SubsetClassification c;
      c.subject = set_of(l, l.word());
      c.is_ideal = detail::parse_bool(l, l.field("ideal"));
      c.is_filter = detail::parse_bool(l, l.field("filter"));
      c.proper = detail::parse_bool(l, l.field("proper"));
      c.ideal_generator = opt_element(l, l.field("ideal_gen"));
      c.filter_generator = opt_element(l, l.field("filter_gen"));
      c.maximal_ideal = detail::parse_bool(l, l.field("maximal"));
      c.prime_ideal = detail::parse_bool(l, l.field("prime_ideal"));
      c.ultrafilter = detail::parse_bool(l, l.field("ultrafilter"));
      c.prime_filter = detail::parse_bool(l, l.field("prime_filter"));
      c.c_ideal_witness = opt_set(l, l.field("c_ideal"));
      c.c_filter_witness = opt_set(l, l.field("c_filter"));
      c.c_condition = detail::parse_bool(l, l.field("c_condition"));
      (key == "ideal" ? r.ideals : r.filters).push_back(c);
    } else if (key == "theorem") {
      TheoremCheckResult t;
      const std::string tag = l.word();
      auto id = statement_from_tag(tag);
      if (!id) l.fail("unknown statement '" + tag + "'");
      t.statement = *id;
      t.hypotheses_met = detail::parse_bool(l, l.field("hypotheses"));
      const std::string holds = l.field("holds");
      if (holds != "-") t.conclusion_holds = detail::parse_bool(l, holds);
      t.cases_checked = std::stoul(l.field("cases"));
      r.theorems.push_back(t);
    } else if (key == "counterexample") {
      auto& t = theorem(l, l.word());
      t.counterexample = witness(l);
    } else if (key == "probe") {
      auto& t = theorem(l, l.word());
      t.unhypothesized_failure = witness(l);
    } else if (key == "hypothesis_note") {
      auto& t = theorem(l, l.word());
      t.hypothesis_note = l.rest();
    } else if (key == "expected") {
      ExpectationCheck e;
      e.list = l.word();
      const std::string m = l.word();
      if (m != "match" && m != "mismatch") l.fail("expected match/mismatch");
      e.match = m == "match";
      e.published = set_list(l, l.field("published"));
      e.computed = set_list(l, l.field("computed"));
      const std::string labels = l.field("labels");
      if (labels != "-") e.labels = detail::split(labels, ';');
      r.expectations.push_back(std::move(e));
    } else if (key == "end") {
      seen_end = true;
    } else {
      l.fail("unknown record '" + key + "'");
    }
  }
  if (!seen_end) throw Error(ErrorKind::SyntaxError, "missing 'end'", line_no);
  return r;
}

// ---------------------------------------------------------------------------
// Human-readable rendering

namespace detail {

inline std::string label_list(const Poset& p, const std::vector<ElementSet>& sets, bool as_ideal) {
  if (sets.empty()) return "(none)";
  std::string out;
  for (std::size_t k = 0; k < sets.size(); ++k) out += (k ? " " : "") + principal_label(p, sets[k], as_ideal);
  return out;
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline void write_text_classification(std::ostream& out, const Poset& p, const SubsetClassification& c,
                                      bool as_ideal) {
  out << "  " << std::left << std::setw(8) << principal_label(p, c.subject, as_ideal) << ' ' << format_set(p, c.subject);
  std::vector<std::string> tags;
  if (c.proper) tags.emplace_back("proper");
  if (as_ideal && c.maximal_ideal) tags.emplace_back("maximal");
  if (!as_ideal && c.ultrafilter) tags.emplace_back("ultrafilter");
  if (as_ideal ? c.prime_ideal : c.prime_filter) tags.emplace_back("prime");
  if (as_ideal && c.c_ideal_witness) tags.push_back("c-ideal via " + principal_label(p, *c.c_ideal_witness, false));
  if (!as_ideal && c.c_filter_witness) tags.push_back("c-filter via " + principal_label(p, *c.c_filter_witness, true));
  if (c.c_condition) tags.emplace_back("c-condition");
  if (!tags.empty()) {
    out << "  [";
    for (std::size_t k = 0; k < tags.size(); ++k) out << (k ? ", " : "") << tags[k];
    out << ']';
  }
  out << '\n';
}

inline void write_text_theorem(std::ostream& out, const TheoremCheckResult& t) {
  out << "  " << std::left << std::setw(18) << to_tag(t.statement) << ' ';
  if (!t.hypotheses_met) {
    out << "not applicable: " << t.hypothesis_note;
  } else if (*t.conclusion_holds) {
    out << "verified (" << t.cases_checked << (t.cases_checked == 1 ? " case)" : " cases)");
  } else {
    out << "COUNTEREXAMPLE: " << t.counterexample->note;
  }
  if (t.unhypothesized_failure) out << "; without hypotheses: " << t.unhypothesized_failure->note;
  out << '\n';
}

/// Needs the order to label principal sets, so takes the poset alongside.
inline std::string render_text(const Report& r, const Poset& p) {
  using detail::yn;
  std::ostringstream out;
  out << "instance " << r.name << ": " << r.elements.size() << " elements, " << p.cover_count() << " covers";
  out << ", bottom " << detail::opt_element(p, r.bottom) << ", top " << detail::opt_element(p, r.top) << '\n';

  out << "order:\n";
  out << "  distributive: " << yn(r.distributivity.holds);
  if (r.distributivity.witness) {
    const auto& w = *r.distributivity.witness;
    out << " (x=" << p.name(w[0]) << " y=" << p.name(w[1]) << " z=" << p.name(w[2])
        << ": L(U(x,y),z) = " << format_set(p, r.distributivity.lhs)
        << ", LU(L(x,z),L(y,z)) = " << format_set(p, r.distributivity.rhs) << ")";
  }
  out << '\n';
  out << "  join-semilattice: " << yn(r.semilattice.join_semilattice)
      << ", meet-semilattice: " << yn(r.semilattice.meet_semilattice) << '\n';

  if (r.complement) {
    const auto& c = *r.complement;
    out << "complementation:";
    for (std::size_t i = 0; i < r.elements.size(); ++i) out << ' ' << r.elements[i] << "->" << p.name(c.comp(ElementId(i)));
    out << '\n';
    const auto& pr = c.props;
    out << "  antitone: " << yn(pr.antitone) << ", involution: " << yn(pr.involution)
        << ", x<=x'': " << yn(pr.x_le_xdd) << ", x''<=x: " << yn(pr.xdd_le_x)
        << ", x'''=x': " << yn(pr.triple_identity) << ", x'<=x''': " << yn(pr.xd_le_xddd)
        << ", x'''<=x': " << yn(pr.xddd_le_xd) << ", De Morgan: " << yn(pr.de_morgan) << '\n';
    out << "boolean elements: " << format_set(p, c.boolean) << '\n';
    out << "double primes of principal ideals:\n";
    for (std::size_t i = 0; i < c.principal_double_primes.size(); ++i) {
      const ElementSet dd = c.principal_double_primes[i];
      const ElementSet la = p.down(ElementId(i));
      out << "  L(" << r.elements[i] << ")'' = " << format_set(p, dd);
      if (auto g = ideal_generator(p, dd)) out << " = L(" << p.name(*g) << ")";
      out << (dd.subset_of(la) ? "  within L(" : "  not within L(") << r.elements[i] << ")\n";
    }
  }

  auto family = [&](std::string_view title, const std::vector<SubsetClassification>& fam, bool as_ideal) {
    out << title << " (" << fam.size() << "):\n";
    for (const auto& c : fam) write_text_classification(out, p, c, as_ideal);
  };
  family("ideals", r.ideals, true);
  family("filters", r.filters, false);

  out << "classes:\n";
  out << "  maximal ideals: " << detail::label_list(p, members_of(r.ideals, "maximal", true), true) << '\n';
  out << "  ultrafilters: " << detail::label_list(p, members_of(r.filters, "ultrafilter", false), false) << '\n';
  out << "  prime ideals: " << detail::label_list(p, members_of(r.ideals, "prime", true), true) << '\n';
  out << "  prime filters: " << detail::label_list(p, members_of(r.filters, "prime", false), false) << '\n';
  if (r.complement) {
    out << "  c-ideals: " << detail::label_list(p, members_of(r.ideals, "c-ideal", true), true) << '\n';
    out << "  c-filters: " << detail::label_list(p, members_of(r.filters, "c-filter", false), false) << '\n';
    out << "  c-condition ideals: " << detail::label_list(p, members_of(r.ideals, "c-condition", true), true) << '\n';
    out << "  c-condition filters: " << detail::label_list(p, members_of(r.filters, "c-condition", false), false)
        << '\n';
  }

  if (!r.theorems.empty()) {
    out << "statements:\n";
    for (const auto& t : r.theorems) write_text_theorem(out, t);
  }

  if (!r.expectations.empty()) {
    out << "published lists:\n";
    for (const auto& e : r.expectations) {
      const bool as_ideal = e.list.find("ideal") != std::string::npos;
      out << "  " << e.list << ": ";
      if (e.match) {
        out << "match\n";
        continue;
      }
      out << "MISMATCH published ";
      if (e.list == "boolean_elements") {
        out << format_set(p, e.published.front()) << ", computed " << format_set(p, e.computed.front()) << '\n';
      } else {
        out << detail::label_list(p, e.published, as_ideal) << ", computed " << detail::label_list(p, e.computed, as_ideal)
            << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace cposet
