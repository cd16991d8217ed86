#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"

namespace cposet {

/// Total unary map on a poset universe.
class Complementation {
 public:
  Complementation() = default;
  explicit Complementation(std::vector<ElementId> image) : image_(std::move(image)) {}

  ElementId operator()(ElementId x) const { return image_[x.index]; }
  std::size_t size() const { return image_.size(); }
  const std::vector<ElementId>& image() const { return image_; }

  friend bool operator==(const Complementation&, const Complementation&) = default;

 private:
  std::vector<ElementId> image_;
};

/// Flags describing how well-behaved a complementation is. Computed by
/// exhaustive scans over elements and pairs.
struct ComplementProperties {
  bool antitone = false;         // x <= y implies y' <= x'
  bool involution = false;       // x'' = x
  bool x_le_xdd = false;         // x <= x''
  bool xdd_le_x = false;         // x'' <= x
  bool triple_identity = false;  // x''' = x'
  bool xd_le_xddd = false;       // x' <= x'''
  bool xddd_le_xd = false;       // x''' <= x'
  bool de_morgan = false;        // L(x,y)' = U(x',y') and U(x,y)' = L(x',y')

  friend bool operator==(const ComplementProperties&, const ComplementProperties&) = default;
};

/// A' : pointwise image.
inline ElementSet set_image_prime(const Complementation& c, ElementSet a) {
  ElementSet out;
  for (ElementId x : a) out.insert(c(x));
  return out;
}

/// A_0 = {x | x' in A}.
inline ElementSet set_preimage_zero(const Complementation& c, ElementSet a) {
  ElementSet out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (a.contains(c(ElementId(i)))) out.insert(ElementId(i));
  }
  return out;
}

inline ComplementProperties compute_complement_properties(const Poset& p, const Complementation& c) {
  ComplementProperties r{true, true, true, true, true, true, true, true};
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId x(i);
    const ElementId x1 = c(x), x2 = c(x1), x3 = c(x2);
    r.involution &= x2 == x;
    r.x_le_xdd &= p.leq(x, x2);
    r.xdd_le_x &= p.leq(x2, x);
    r.triple_identity &= x3 == x1;
    r.xd_le_xddd &= p.leq(x1, x3);
    r.xddd_le_xd &= p.leq(x3, x1);
    for (std::size_t j = 0; j < n; ++j) {
      const ElementId y(j);
      if (p.leq(x, y) && !p.leq(c(y), x1)) r.antitone = false;
      if (r.de_morgan) {
        const ElementSet xy = pair_set(x, y);
        const ElementSet primed = pair_set(x1, c(y));
        if (set_image_prime(c, lower_cone(p, xy)) != upper_cone(p, primed) ||
            set_image_prime(c, upper_cone(p, xy)) != lower_cone(p, primed)) {
          r.de_morgan = false;
        }
      }
    }
  }
  return r;
}

/// Bounded poset with a validated complementation and cached property flags.
class ComplementedPoset {
 public:
  const Poset& poset() const { return poset_; }
  const Complementation& comp() const { return comp_; }
  const ComplementProperties& props() const { return props_; }

  std::size_t size() const { return poset_.size(); }
  ElementId bottom() const { return *poset_.bottom(); }
  ElementId top() const { return *poset_.top(); }
  ElementId prime(ElementId x) const { return comp_(x); }

  /// Order-dual with the same complement map (still a complementation there).
  ComplementedPoset dual() const { return ComplementedPoset(poset_.dual(), comp_); }

  friend ComplementedPoset attach_complementation(Poset p, Complementation c);

 private:
  ComplementedPoset(Poset p, Complementation c)
      : poset_(std::move(p)), comp_(std::move(c)), props_(compute_complement_properties(poset_, comp_)) {}

  Poset poset_;
  Complementation comp_;
  ComplementProperties props_;
};

/// Validates x ∨ x' = 1 and x ∧ x' = 0 for every x; reports the
/// lowest-indexed failing element.
inline ComplementedPoset attach_complementation(Poset p, Complementation c) {
  if (!p.bounded()) throw Error(ErrorKind::NotBounded, "complementation requires a bottom and a top element");
  if (c.size() != p.size()) {
    throw Error(ErrorKind::PartialMap, "map covers " + std::to_string(c.size()) + " of " +
                                           std::to_string(p.size()) + " elements");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ElementId x(i);
    if (c(x).index >= p.size()) throw Error(ErrorKind::UnknownName, "image of '" + p.name(x) + "' out of range");
    auto j = join(p, x, c(x));
    auto m = meet(p, x, c(x));
    if (j != p.top() || m != p.bottom()) {
      std::string why = "'" + p.name(x) + "' -> '" + p.name(c(x)) + "': ";
      why += j ? "join is '" + p.name(*j) + "'" : std::string("join does not exist");
      why += m ? ", meet is '" + p.name(*m) + "'" : std::string(", meet does not exist");
      throw Error(ErrorKind::AxiomViolation, why);
    }
  }
  return ComplementedPoset(std::move(p), std::move(c));
}

/// Name-based overload: every element must be assigned exactly once.
inline ComplementedPoset attach_complementation(Poset p, std::span<const std::pair<std::string, std::string>> map) {
  if (!p.bounded()) throw Error(ErrorKind::NotBounded, "complementation requires a bottom and a top element");
  std::vector<std::optional<ElementId>> image(p.size());
  for (const auto& [from, to] : map) {
    const ElementId x = element(p, from);
    const ElementId y = element(p, to);
    if (image[x.index]) throw Error(ErrorKind::DuplicateAssignment, "'" + from + "' assigned twice");
    image[x.index] = y;
  }
  std::vector<ElementId> total;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!image[i]) throw Error(ErrorKind::PartialMap, "no image for '" + p.name(ElementId(i)) + "'");
    total.push_back(*image[i]);
  }
  return attach_complementation(std::move(p), Complementation(std::move(total)));
}

inline ComplementedPoset attach_complementation(Poset p,
                                                std::initializer_list<std::pair<std::string, std::string>> map) {
  std::vector<std::pair<std::string, std::string>> m(map);
  return attach_complementation(std::move(p), std::span<const std::pair<std::string, std::string>>(m));
}

inline const ComplementProperties& complement_properties(const ComplementedPoset& cp) { return cp.props(); }

/// {a | a'' = a}.
inline ElementSet boolean_elements(const ComplementedPoset& cp) {
  ElementSet out;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const ElementId a(i);
    if (cp.prime(cp.prime(a)) == a) out.insert(a);
  }
  return out;
}

inline ElementSet set_image_prime(const ComplementedPoset& cp, ElementSet a) { return set_image_prime(cp.comp(), a); }
inline ElementSet set_preimage_zero(const ComplementedPoset& cp, ElementSet a) {
  return set_preimage_zero(cp.comp(), a);
}

}  // namespace cposet
