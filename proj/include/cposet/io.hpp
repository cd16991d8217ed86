#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complementation.hpp"
#include "substructures.hpp"

namespace cposet {

/// Parsed instance file: a poset and, optionally, a complement map that has
/// not yet been validated.
struct Instance {
  std::string name;
  Poset poset;
  std::optional<Complementation> comp;

  bool complemented() const { return comp.has_value(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Validates the complement map of an instance.
inline ComplementedPoset complemented(const Instance& inst) {
  if (!inst.comp) throw Error(ErrorKind::PartialMap, "instance '" + inst.name + "' has no comp section");
  return attach_complementation(inst.poset, *inst.comp);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Line-oriented instance grammar:
///   name: <token>
///   elements: <tok> <tok> ...
///   le: <a> < <b>          (any order pairs, closure applied)
///   comp: <a> -> <b>
/// Sections appear in that order; '#' starts a comment.
inline Instance parse_instance(std::string_view text) {
  enum Section { kNone, kName, kElements, kLe, kComp };
  Section at = kNone;
  std::optional<std::string> name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> le;
  std::vector<std::pair<std::string, std::string>> comp;
  std::vector<std::size_t> le_lines, comp_lines;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "expected '<section>: ...'", line_no);
    const std::string key(detail::trim(line.substr(0, colon)));
    const auto body = detail::tokens(line.substr(colon + 1));

    Section next;
    if (key == "name") next = kName;
    else if (key == "elements") next = kElements;
    else if (key == "le") next = kLe;
    else if (key == "comp") next = kComp;
    else throw Error(ErrorKind::SyntaxError, "unknown section '" + key + "'", line_no);

    if (next < at) throw Error(ErrorKind::SyntaxError, "section '" + key + "' out of order", line_no);
    if ((next == kName || next == kElements) && next == at) {
      throw Error(ErrorKind::DuplicateSection, "section '" + key + "' repeated", line_no);
    }
    if (next > kName && !name) throw Error(ErrorKind::SyntaxError, "'name:' must come first", line_no);
    if (next > kElements && elements.empty()) {
      throw Error(ErrorKind::SyntaxError, "'elements:' must precede '" + key + ":'", line_no);
    }
    at = next;

    switch (next) {
      case kName:
        if (body.size() != 1) throw Error(ErrorKind::SyntaxError, "name takes exactly one token", line_no);
        name = body[0];
        break;
      case kElements:
        if (body.empty()) throw Error(ErrorKind::SyntaxError, "elements list is empty", line_no);
        for (const auto& e : body) {
          if (!valid_element_name(e)) throw Error(ErrorKind::SyntaxError, "invalid element name '" + e + "'", line_no);
        }
        elements = body;
        break;
      case kLe:
        if (body.size() != 3 || body[1] != "<") throw Error(ErrorKind::SyntaxError, "expected 'le: a < b'", line_no);
        le.emplace_back(body[0], body[2]);
        le_lines.push_back(line_no);
        break;
      case kComp:
        if (body.size() != 3 || body[1] != "->") throw Error(ErrorKind::SyntaxError, "expected 'comp: a -> b'", line_no);
        comp.emplace_back(body[0], body[2]);
        comp_lines.push_back(line_no);
        break;
      case kNone:
        break;
    }
  }
  if (!name) throw Error(ErrorKind::SyntaxError, "missing 'name:' section", line_no);
  if (elements.empty()) throw Error(ErrorKind::SyntaxError, "missing 'elements:' section", line_no);

  auto known = [&](const std::string& s) { return std::find(elements.begin(), elements.end(), s) != elements.end(); };
  for (std::size_t k = 0; k < le.size(); ++k) {
    for (const auto& s : {le[k].first, le[k].second}) {
      if (!known(s)) throw Error(ErrorKind::UnknownName, "unknown element '" + s + "'", le_lines[k]);
    }
  }
  for (std::size_t k = 0; k < comp.size(); ++k) {
    for (const auto& s : {comp[k].first, comp[k].second}) {
      if (!known(s)) throw Error(ErrorKind::UnknownName, "unknown element '" + s + "'", comp_lines[k]);
    }
  }

  Instance inst{*name,
                build_poset(std::span<const std::string>(elements), std::span<const std::pair<std::string, std::string>>(le)),
                std::nullopt};
  if (!comp.empty()) {
    std::vector<std::optional<ElementId>> image(inst.poset.size());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const ElementId x = element(inst.poset, comp[k].first);
      if (image[x.index]) throw Error(ErrorKind::DuplicateAssignment, "'" + comp[k].first + "' assigned twice", comp_lines[k]);
      image[x.index] = element(inst.poset, comp[k].second);
    }
    std::vector<ElementId> total;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (!image[i]) throw Error(ErrorKind::PartialMap, "no image for '" + inst.poset.name(ElementId(i)) + "'");
      total.push_back(*image[i]);
    }
    inst.comp = Complementation(std::move(total));
  }
  return inst;
}

/// Canonical instance text: cover pairs only, complement in element order.
inline std::string emit_instance(const Instance& inst) {
  const Poset& p = inst.poset;
  std::ostringstream out;
  out << "name: " << inst.name << '\n' << "elements:";
  for (const auto& n : p.names()) out << ' ' << n;
  out << '\n';
  for (const auto& [lo, hi] : p.cover_pairs()) out << "le: " << p.name(lo) << " < " << p.name(hi) << '\n';
  if (inst.comp) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << "comp: " << p.name(ElementId(i)) << " -> " << p.name((*inst.comp)(ElementId(i))) << '\n';
    }
  }
  return out.str();
}

inline Instance to_instance(std::string name, const ComplementedPoset& cp) {
  return Instance{std::move(name), cp.poset(), cp.comp()};
}

// ---------------------------------------------------------------------------
// Set expressions: L(x), U(x), {a,b,...}, or a bare element name.

enum class BareToken { Element, LowerCone, UpperCone };

inline ElementSet parse_set_literal(const Poset& p, std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorKind::SyntaxError, "expected a set literal '{a,b,...}', got '" + std::string(text) + "'");
  }
  ElementSet s;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!detail::trim(body).empty()) {
    const auto comma = body.find(',');
    const auto tok = detail::trim(body.substr(0, comma));
    if (tok.empty()) throw Error(ErrorKind::SyntaxError, "empty member in '" + std::string(text) + "'");
    s.insert(element(p, tok));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (detail::trim(body).empty()) throw Error(ErrorKind::SyntaxError, "trailing comma in '" + std::string(text) + "'");
  }
  return s;
}

inline ElementSet parse_set_expression(const Poset& p, std::string_view text, BareToken bare = BareToken::Element) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '{') return parse_set_literal(p, text);
  if (text.size() > 3 && (text[0] == 'L' || text[0] == 'U') && text[1] == '(' && text.back() == ')') {
    const ElementId x = element(p, detail::trim(text.substr(2, text.size() - 3)));
    return text[0] == 'L' ? p.down(x) : p.up(x);
  }
  const ElementId x = element(p, text);
  switch (bare) {
    case BareToken::LowerCone: return p.down(x);
    case BareToken::UpperCone: return p.up(x);
    case BareToken::Element: break;
  }
  return ElementSet::single(x);
}

/// `L(a)` / `U(a)` when the set is principal in the requested direction,
/// otherwise the literal.
inline std::string principal_label(const Poset& p, ElementSet s, bool as_ideal) {
  if (auto g = as_ideal ? ideal_generator(p, s) : filter_generator(p, s)) {
    return std::string(as_ideal ? "L(" : "U(") + p.name(*g) + ")";
  }
  return format_set(p, s);
}

// ---------------------------------------------------------------------------
// DOT

struct Highlight {
  std::string label;
  ElementSet members;
};

/// Hasse diagram of the cover relation, bottom-up. The first highlight that
/// contains a node decides its fill colour.
inline std::string emit_dot(const Poset& p, const std::vector<Highlight>& highlights = {},
                            std::string_view graph_name = "poset") {
  static constexpr std::string_view kPalette[] = {"#8dd3c7", "#fb8072", "#80b1d3", "#fdb462",
                                                  "#b3de69", "#fccde5", "#bebada", "#ffffb3"};
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n"
      << "  rankdir=BT;\n"
      << "  node [shape=circle];\n"
      << "  edge [dir=none];\n";
  for (std::size_t k = 0; k < highlights.size(); ++k) {
    out << "  // highlight " << k << ": " << highlights[k].label << " " << format_set(p, highlights[k].members) << '\n';
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ElementId x(i);
    out << "  n" << i << " [label=\"" << p.name(x) << "\"";
    for (std::size_t k = 0; k < highlights.size(); ++k) {
      if (highlights[k].members.contains(x)) {
        out << ", style=filled, fillcolor=\"" << kPalette[k % std::size(kPalette)] << "\"";
        break;
      }
    }
    out << "];\n";
  }
  for (const auto& [lo, hi] : p.cover_pairs()) out << "  n" << lo.index << " -> n" << hi.index << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cposet
