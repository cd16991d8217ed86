#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"

namespace cposet {

/// Characters that cannot appear in element names (they delimit the text formats).
inline constexpr std::string_view kReservedNameChars = ",{}()#<>;=";

inline bool valid_element_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || kReservedNameChars.find(c) != std::string_view::npos;
  });
}

/// Finite poset over elements 0..n-1. Immutable after construction; the order
/// relation is kept as per-element down-sets and up-sets.
class Poset {
 public:
  std::size_t size() const { return names_.size(); }
  ElementSet universe() const { return ElementSet::full(size()); }

  const std::string& name(ElementId x) const { return names_[x.index]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(ElementId x, ElementId y) const { return down_[y.index].contains(x); }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }

  /// L(x) and U(x).
  ElementSet down(ElementId x) const { return down_[x.index]; }
  ElementSet up(ElementId x) const { return up_[x.index]; }

  /// Upper covers of x.
  ElementSet covers_of(ElementId x) const { return covers_up_[x.index]; }
  std::vector<std::pair<ElementId, ElementId>> cover_pairs() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (ElementId y : covers_up_[i]) out.emplace_back(ElementId(i), y);
    }
    return out;
  }
  std::size_t cover_count() const {
    std::size_t n = 0;
    for (auto s : covers_up_) n += s.size();
    return n;
  }

  std::optional<ElementId> bottom() const { return bottom_; }
  std::optional<ElementId> top() const { return top_; }
  bool bounded() const { return bottom_ && top_; }

  /// Same elements, reversed order.
  Poset dual() const {
    Poset d = *this;
    std::swap(d.down_, d.up_);
    std::swap(d.bottom_, d.top_);
    d.compute_covers();
    return d;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.names_ == b.names_ && a.down_ == b.down_; }

  friend Poset build_poset(std::span<const std::string> names,
                           std::span<const std::pair<std::string, std::string>> pairs);

 private:
  void compute_covers() {
    const std::size_t n = size();
    covers_up_.assign(n, ElementSet{});
    for (std::size_t i = 0; i < n; ++i) {
      ElementSet strict = up_[i];
      strict.erase(ElementId(i));
      ElementSet reachable_in_two;
      for (ElementId z : strict) {
        ElementSet above = up_[z.index];
        above.erase(z);
        reachable_in_two |= above;
      }
      covers_up_[i] = strict - reachable_in_two;
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> covers_up_;
  std::optional<ElementId> bottom_;
  std::optional<ElementId> top_;
};

/// Builds the reflexive-transitive closure of `pairs` (each pair reads
/// first <= second) over `names`.
inline Poset build_poset(std::span<const std::string> names,
                         std::span<const std::pair<std::string, std::string>> pairs) {
  if (names.empty()) throw Error(ErrorKind::EmptyPoset, "a poset needs at least one element");
  if (names.size() > kMaxElements) {
    throw Error(ErrorKind::TooLarge, std::to_string(names.size()) + " elements exceed the limit of " +
                                         std::to_string(kMaxElements));
  }
  Poset p;
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_element_name(names[i])) throw Error(ErrorKind::InvalidName, "invalid element name '" + names[i] + "'");
    if (!p.index_.emplace(names[i], ElementId(i)).second) {
      throw Error(ErrorKind::DuplicateName, "element '" + names[i] + "' declared twice");
    }
    p.names_.push_back(names[i]);
  }
  auto lookup = [&](const std::string& s) {
    auto it = p.index_.find(s);
    if (it == p.index_.end()) throw Error(ErrorKind::UnknownName, "unknown element '" + s + "'");
    return it->second;
  };

  // up_[i] is the set of elements >= i; closure by Warshall over bitsets.
  p.up_.assign(n, ElementSet{});
  for (std::size_t i = 0; i < n; ++i) p.up_[i].insert(ElementId(i));
  for (const auto& [lo, hi] : pairs) p.up_[lookup(lo).index].insert(lookup(hi));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i].contains(ElementId(k))) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, ElementSet{});
  for (std::size_t i = 0; i < n; ++i) {
    for (ElementId j : p.up_[i]) p.down_[j.index].insert(ElementId(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    ElementSet both = p.up_[i] & p.down_[i];
    both.erase(ElementId(i));
    if (!both.empty()) {
      throw Error(ErrorKind::CycleDetected,
                  "'" + p.names_[i] + "' and '" + p.names_[both.first().index] + "' are mutually below each other");
    }
  }
  const ElementSet all = p.universe();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.up_[i] == all) p.bottom_ = ElementId(i);
    if (p.down_[i] == all) p.top_ = ElementId(i);
  }
  p.compute_covers();
  return p;
}

inline Poset build_poset(std::initializer_list<std::string> names,
                         std::initializer_list<std::pair<std::string, std::string>> pairs) {
  std::vector<std::string> n(names);
  std::vector<std::pair<std::string, std::string>> p(pairs);
  return build_poset(std::span<const std::string>(n), std::span<const std::pair<std::string, std::string>>(p));
}

/// All pairs x <= y with x != y, in index order.
inline std::vector<std::pair<std::string, std::string>> strict_order_pairs(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (ElementId j : p.up(ElementId(i))) {
      if (j.index != i) out.emplace_back(p.name(ElementId(i)), p.name(j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cones

/// L(A): elements below every member of A. L of the empty set is P.
inline ElementSet lower_cone(const Poset& p, ElementSet a) {
  ElementSet out = p.universe();
  for (ElementId y : a) out &= p.down(y);
  return out;
}

/// U(A): elements above every member of A. U of the empty set is P.
inline ElementSet upper_cone(const Poset& p, ElementSet a) {
  ElementSet out = p.universe();
  for (ElementId y : a) out &= p.up(y);
  return out;
}

inline ElementSet pair_set(ElementId x, ElementId y) { return ElementSet::single(x) | ElementSet::single(y); }

/// Greatest element of `s`, if it has one.
inline std::optional<ElementId> maximum_of(const Poset& p, ElementSet s) {
  for (ElementId m : s) {
    if (s.subset_of(p.down(m))) return m;
  }
  return std::nullopt;
}

/// Least element of `s`, if it has one.
inline std::optional<ElementId> minimum_of(const Poset& p, ElementSet s) {
  for (ElementId m : s) {
    if (s.subset_of(p.up(m))) return m;
  }
  return std::nullopt;
}

/// x ∧ y: the maximum of L(x,y) when it exists.
inline std::optional<ElementId> meet(const Poset& p, ElementId x, ElementId y) {
  return maximum_of(p, lower_cone(p, pair_set(x, y)));
}

/// x ∨ y: the minimum of U(x,y) when it exists.
inline std::optional<ElementId> join(const Poset& p, ElementId x, ElementId y) {
  return minimum_of(p, upper_cone(p, pair_set(x, y)));
}

// ---------------------------------------------------------------------------
// Distributivity and semilattice predicates

struct DistributivityReport {
  bool holds = true;
  /// First violating triple (x, y, z) in index order.
  std::optional<std::array<ElementId, 3>> witness;
  /// L(U(x,y),z) and LU(L(x,z),L(y,z)) for the witness.
  ElementSet lhs;
  ElementSet rhs;
};

/// L(U(x,y),z) versus LU(L(x,z),L(y,z)) for one triple.
inline std::pair<ElementSet, ElementSet> distributivity_sides(const Poset& p, ElementId x, ElementId y, ElementId z) {
  ElementSet zs = ElementSet::single(z);
  ElementSet lhs = lower_cone(p, upper_cone(p, pair_set(x, y)) | zs);
  ElementSet rhs = lower_cone(p, upper_cone(p, lower_cone(p, ElementSet::single(x) | zs) |
                                                   lower_cone(p, ElementSet::single(y) | zs)));
  return {lhs, rhs};
}

inline DistributivityReport is_distributive(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        auto [lhs, rhs] = distributivity_sides(p, ElementId(x), ElementId(y), ElementId(z));
        if (lhs != rhs) {
          return DistributivityReport{false, std::array{ElementId(x), ElementId(y), ElementId(z)}, lhs, rhs};
        }
      }
    }
  }
  return {};
}

struct SemilatticeFlags {
  bool join_semilattice = true;
  bool meet_semilattice = true;
};

inline SemilatticeFlags semilattice_flags(const Poset& p) {
  SemilatticeFlags f;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (f.join_semilattice && !join(p, ElementId(x), ElementId(y))) f.join_semilattice = false;
      if (f.meet_semilattice && !meet(p, ElementId(x), ElementId(y))) f.meet_semilattice = false;
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Name helpers

inline ElementId element(const Poset& p, std::string_view name) {
  auto id = p.find(name);
  if (!id) throw Error(ErrorKind::UnknownName, "unknown element '" + std::string(name) + "'");
  return *id;
}

inline ElementSet element_set(const Poset& p, std::initializer_list<std::string_view> names) {
  ElementSet s;
  for (auto n : names) s.insert(element(p, n));
  return s;
}

/// `{a,b,c}` using element names, members in index order.
inline std::string format_set(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : s) {
    if (!first) out += ',';
    out += p.name(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace cposet
