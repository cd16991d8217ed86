#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "complementation.hpp"

namespace cposet {

/// Cap on the number of candidate down-sets visited during enumeration.
struct EnumerationBudget {
  std::uint64_t max_candidates = std::uint64_t{1} << 20;
};

struct SubsetRole {
  bool is_ideal = false;
  bool is_filter = false;
};

/// Nonempty, L(x) ⊆ S and U(x,y) ∩ S ≠ ∅ for all x, y in S.
inline bool is_ideal(const Poset& p, ElementSet s) {
  if (s.empty()) return false;
  for (ElementId x : s) {
    if (!p.down(x).subset_of(s)) return false;
    for (ElementId y : s) {
      if (y < x) continue;
      if (!upper_cone(p, pair_set(x, y)).intersects(s)) return false;
    }
  }
  return true;
}

/// Nonempty, U(x) ⊆ S and L(x,y) ∩ S ≠ ∅ for all x, y in S.
inline bool is_filter(const Poset& p, ElementSet s) {
  if (s.empty()) return false;
  for (ElementId x : s) {
    if (!p.up(x).subset_of(s)) return false;
    for (ElementId y : s) {
      if (y < x) continue;
      if (!lower_cone(p, pair_set(x, y)).intersects(s)) return false;
    }
  }
  return true;
}

inline SubsetRole subset_role(const Poset& p, ElementSet s) { return {is_ideal(p, s), is_filter(p, s)}; }

namespace detail {

// Down-sets are in bijection with antichains (their maximal elements); walk
// antichains in index order and emit the generated down-set of each.
inline void collect_downsets(const Poset& p, ElementSet allowed, ElementSet current, std::uint64_t& visited,
                             const EnumerationBudget& budget, std::vector<ElementSet>& out) {
  if (++visited > budget.max_candidates) {
    throw Error(ErrorKind::ScaleLimit, "enumeration exceeded " + std::to_string(budget.max_candidates) +
                                           " candidate down-sets on a " + std::to_string(p.size()) +
                                           "-element poset");
  }
  out.push_back(current);
  for (ElementId x : allowed) {
    // Only later elements stay available, and only those incomparable to x.
    ElementSet rest = allowed - (p.down(x) | p.up(x));
    rest = ElementSet::from_bits(rest.bits() & ~((std::uint64_t{2} << x.index) - 1));
    collect_downsets(p, rest, current | p.down(x), visited, budget, out);
  }
}

inline void sort_enumeration(std::vector<ElementSet>& v) { std::sort(v.begin(), v.end(), EnumerationLess{}); }

}  // namespace detail

/// Every down-set (including the empty one) in enumeration order.
inline std::vector<ElementSet> enumerate_downsets(const Poset& p, const EnumerationBudget& budget = {}) {
  std::vector<ElementSet> out;
  std::uint64_t visited = 0;
  detail::collect_downsets(p, p.universe(), ElementSet{}, visited, budget, out);
  detail::sort_enumeration(out);
  return out;
}

/// All ideals, ordered by size then lexicographically by member indices.
inline std::vector<ElementSet> enumerate_ideals(const Poset& p, const EnumerationBudget& budget = {}) {
  std::vector<ElementSet> out;
  for (ElementSet s : enumerate_downsets(p, budget)) {
    if (is_ideal(p, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ElementSet> enumerate_filters(const Poset& p, const EnumerationBudget& budget = {}) {
  std::vector<ElementSet> out;
  for (ElementSet s : enumerate_downsets(p.dual(), budget)) {
    if (is_filter(p, s)) out.push_back(s);
  }
  detail::sort_enumeration(out);
  return out;
}

/// Proper ideal such that L(x,y) ⊆ I forces x ∈ I or y ∈ I.
inline bool is_prime_ideal(const Poset& p, ElementSet s) {
  if (s == p.universe() || !is_ideal(p, s)) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x; y < p.size(); ++y) {
      const ElementSet xy = pair_set(ElementId(x), ElementId(y));
      if (lower_cone(p, xy).subset_of(s) && !xy.intersects(s)) return false;
    }
  }
  return true;
}

/// Proper filter such that U(x,y) ⊆ F forces x ∈ F or y ∈ F.
inline bool is_prime_filter(const Poset& p, ElementSet s) {
  if (s == p.universe() || !is_filter(p, s)) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x; y < p.size(); ++y) {
      const ElementSet xy = pair_set(ElementId(x), ElementId(y));
      if (upper_cone(p, xy).subset_of(s) && !xy.intersects(s)) return false;
    }
  }
  return true;
}

/// S contains exactly one of x and x' for every x.
inline bool satisfies_c_condition(const Complementation& c, ElementSet s) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ElementId x(i);
    if (s.contains(x) == s.contains(c(x))) return false;
  }
  return true;
}

/// Generator a with L(a) = S, if any.
inline std::optional<ElementId> ideal_generator(const Poset& p, ElementSet s) {
  for (ElementId a : s) {
    if (p.down(a) == s) return a;
  }
  return std::nullopt;
}

/// Generator a with U(a) = S, if any.
inline std::optional<ElementId> filter_generator(const Poset& p, ElementSet s) {
  for (ElementId a : s) {
    if (p.up(a) == s) return a;
  }
  return std::nullopt;
}

struct ConeUnion {
  ElementSet set;
  bool is_ideal = false;   // set by lu_union
  bool is_filter = false;  // set by ul_union
};

/// ⋃{LU(a,i) | i ∈ I} together with its ideal status.
inline ConeUnion lu_union(const Poset& p, ElementId a, ElementSet ideal) {
  ElementSet u;
  for (ElementId i : ideal) u |= lower_cone(p, upper_cone(p, pair_set(a, i)));
  return {u, is_ideal(p, u), false};
}

/// ⋃{UL(a,f) | f ∈ F} together with its filter status.
inline ConeUnion ul_union(const Poset& p, ElementId a, ElementSet filter) {
  ElementSet u;
  for (ElementId f : filter) u |= upper_cone(p, lower_cone(p, pair_set(a, f)));
  return {u, false, is_filter(p, u)};
}

/// P \ I.
inline ElementSet complement_pairing(const Poset& p, ElementSet s) { return p.universe() - s; }

/// Ideals and filters of one poset, enumerated once and reused.
class SubstructureIndex {
 public:
  explicit SubstructureIndex(const Poset& p, const EnumerationBudget& budget = {})
      : poset_(p), ideals_(enumerate_ideals(p, budget)), filters_(enumerate_filters(p, budget)) {}

  const Poset& poset() const { return poset_; }
  const std::vector<ElementSet>& ideals() const { return ideals_; }
  const std::vector<ElementSet>& filters() const { return filters_; }

  bool is_maximal_ideal(ElementSet s) const { return is_maximal(ideals_, s); }
  bool is_ultrafilter(ElementSet s) const { return is_maximal(filters_, s); }

  /// First filter F (enumeration order) with F_0 = S.
  std::optional<ElementSet> c_ideal_witness(const Complementation& c, ElementSet s) const {
    if (!is_ideal(poset_, s)) return std::nullopt;
    return first_with_preimage(filters_, c, s);
  }

  /// First ideal I (enumeration order) with I_0 = S.
  std::optional<ElementSet> c_filter_witness(const Complementation& c, ElementSet s) const {
    if (!is_filter(poset_, s)) return std::nullopt;
    return first_with_preimage(ideals_, c, s);
  }

 private:
  bool is_maximal(const std::vector<ElementSet>& family, ElementSet s) const {
    const ElementSet all = poset_.universe();
    if (s == all || std::find(family.begin(), family.end(), s) == family.end()) return false;
    return std::none_of(family.begin(), family.end(),
                        [&](ElementSet t) { return t != all && s.proper_subset_of(t); });
  }

  static std::optional<ElementSet> first_with_preimage(const std::vector<ElementSet>& family,
                                                       const Complementation& c, ElementSet s) {
    for (ElementSet t : family) {
      if (set_preimage_zero(c, t) == s) return t;
    }
    return std::nullopt;
  }

  Poset poset_;
  std::vector<ElementSet> ideals_;
  std::vector<ElementSet> filters_;
};

/// Ideal/filter-theoretic flags for one subset. Complement-dependent fields
/// stay empty/false when classified against a bare poset.
struct SubsetClassification {
  ElementSet subject;
  bool is_ideal = false;
  bool is_filter = false;
  bool proper = false;
  std::optional<ElementId> ideal_generator;  // L(a) = subject
  std::optional<ElementId> filter_generator;  // U(a) = subject
  bool maximal_ideal = false;
  bool prime_ideal = false;
  bool ultrafilter = false;
  bool prime_filter = false;
  std::optional<ElementSet> c_ideal_witness;   // a filter F with F_0 = subject
  std::optional<ElementSet> c_filter_witness;  // an ideal I with I_0 = subject
  bool c_condition = false;

  friend bool operator==(const SubsetClassification&, const SubsetClassification&) = default;
};

/// Order-only fields.
inline SubsetClassification classify_order(const SubstructureIndex& index, ElementSet s) {
  const Poset& p = index.poset();
  SubsetClassification r;
  r.subject = s;
  r.is_ideal = is_ideal(p, s);
  r.is_filter = is_filter(p, s);
  r.proper = (r.is_ideal || r.is_filter) && s != p.universe();
  if (r.is_ideal) {
    r.ideal_generator = ideal_generator(p, s);
    r.maximal_ideal = index.is_maximal_ideal(s);
    r.prime_ideal = is_prime_ideal(p, s);
  }
  if (r.is_filter) {
    r.filter_generator = filter_generator(p, s);
    r.ultrafilter = index.is_ultrafilter(s);
    r.prime_filter = is_prime_filter(p, s);
  }
  return r;
}

inline SubsetClassification classify(const SubstructureIndex& index, const Complementation& c, ElementSet s) {
  SubsetClassification r = classify_order(index, s);
  r.c_ideal_witness = index.c_ideal_witness(c, s);
  r.c_filter_witness = index.c_filter_witness(c, s);
  r.c_condition = satisfies_c_condition(c, s);
  return r;
}

inline SubsetClassification classify(const ComplementedPoset& cp, ElementSet s, const EnumerationBudget& budget = {}) {
  SubstructureIndex index(cp.poset(), budget);
  return classify(index, cp.comp(), s);
}

inline bool is_c_ideal(const SubstructureIndex& index, const Complementation& c, ElementSet s) {
  return index.c_ideal_witness(c, s).has_value();
}

inline bool is_c_filter(const SubstructureIndex& index, const Complementation& c, ElementSet s) {
  return index.c_filter_witness(c, s).has_value();
}

}  // namespace cposet
