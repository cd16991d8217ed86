#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "complementation.hpp"
#include "substructures.hpp"

namespace cposet {

// ---------------------------------------------------------------------------
// Built-in figures

/// Published classification lists. Each list holds set expressions such as
/// `L(a)` or `U(f)`; a present-but-empty list means "none".
struct ExpectedLists {
  std::optional<std::string> boolean_elements;
  std::map<std::string, std::vector<std::string>> lists;
};

struct CorpusEntry {
  std::string name;
  ComplementedPoset instance;
  ExpectedLists expected;
};

namespace detail {

struct FigureTable {
  std::string_view name;
  std::string_view elements;  // space separated
  std::string_view covers;    // "lo<hi" tokens
  std::string_view comp;      // "x>y" tokens
  std::string_view boolean;   // empty: not published
  std::vector<std::pair<std::string_view, std::string_view>> lists;
};

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::pair<std::string, std::string> split_at(const std::string& tok, char sep) {
  const auto k = tok.find(sep);
  return {tok.substr(0, k), tok.substr(k + 1)};
}

// Cover relations and complement tables transcribed from the figures.
// Lines through intermediate vertices are chains of covers.
inline const std::vector<FigureTable>& figure_tables() {
  static const std::vector<FigureTable> tables{
      {"fig1", "0 a b c 1", "0<a 0<b 0<c a<1 b<1 c<1", "0>1 a>b b>c c>b 1>0", "0 b c 1",
       {{"maximal_ideals", "L(a) L(b) L(c)"},
        {"ultrafilters", "U(a) U(b) U(c)"},
        {"prime_ideals", ""},
        {"prime_filters", ""},
        {"c_ideals", "L(0) L(b) L(1)"},
        {"c_filters", "U(0) U(b) U(1)"}}},
      {"fig2a", "0 a b c d e f g 1",
       "0<a 0<b 0<f 0<g a<c a<d b<c b<d c<e d<e e<1 f<1 g<1",
       "0>1 a>f b>f c>f d>f e>f f>e g>c 1>0", "0 e f 1",
       {{"maximal_ideals", "L(e) L(f) L(g)"},
        {"ultrafilters", "U(a) U(b) U(f) U(g)"},
        {"prime_ideals", ""},
        {"prime_filters", ""},
        {"c_ideals", "L(0) L(e) L(f) L(1)"},
        {"c_filters", "U(0) U(g) U(1)"},
        {"c_condition_filters", ""}}},
      {"fig2b", "0 a b c d e f 1", "0<a 0<b 0<f a<c a<d b<c b<d c<e d<e e<1 f<1",
       "0>1 a>f b>f c>f d>f e>f f>e 1>0", "0 e f 1",
       {{"maximal_ideals", "L(e) L(f)"},
        {"ultrafilters", "U(a) U(b) U(f)"},
        {"prime_ideals", "L(e)"},
        {"prime_filters", "U(f)"},
        {"c_ideals", "L(0) L(e) L(f) L(1)"},
        {"c_filters", "U(0) U(f) U(1)"},
        {"c_condition_filters", "U(f)"}}},
      {"fig3", "0 a b c d d' c' b' a' 1",
       "0<a 0<b 0<c 0<d a<d' a<c' a<b' b<d' b<a' c<d' c<a' d<c' d<b' d<a' d'<1 c'<1 b'<1 a'<1",
       "0>1 a>a' b>b' c>c' d>d' d'>d c'>c b'>b a'>a 1>0", "0 a b c d a' b' c' d' 1",
       {{"maximal_ideals", "L(a') L(b') L(c') L(d')"},
        {"ultrafilters", "U(a) U(b) U(c) U(d)"},
        {"prime_ideals", "L(a') L(d')"},
        {"prime_filters", "U(a) U(b)"},
        {"c_ideals", "L(0) L(a) L(b) L(c) L(d) L(a') L(b') L(c') L(d') L(1)"},
        {"c_filters", "U(0) U(a) U(b) U(c) U(d) U(a') U(b') U(c') U(d') U(1)"}}},
      {"fig4", "0 a b c d e e' d' c' b' a' 1",
       "0<a 0<b 0<c 0<d a<e b<e c<e' d<e' e<d' e<c' a<b' b<a' c<d' d<c' e'<b' e'<a' "
       "d'<1 c'<1 b'<1 a'<1",
       "0>1 a>a' b>b' c>c' d>d' e>e' e'>e d'>d c'>c b'>b a'>a 1>0", "0 a b c d e a' b' c' d' e' 1",
       {{"maximal_ideals", "L(a') L(b') L(c') L(d')"},
        {"ultrafilters", "U(a) U(b) U(c) U(d)"},
        {"c_ideals", "L(0) L(a) L(b) L(c) L(d) L(e) L(a') L(b') L(c') L(d') L(e') L(1)"}}},
  };
  return tables;
}

inline CorpusEntry build_entry(const FigureTable& t) {
  std::vector<std::pair<std::string, std::string>> covers, comp;
  for (const auto& tok : split_ws(t.covers)) covers.push_back(split_at(tok, '<'));
  for (const auto& tok : split_ws(t.comp)) comp.push_back(split_at(tok, '>'));
  const auto names = split_ws(t.elements);
  Poset p = build_poset(std::span<const std::string>(names), std::span<const std::pair<std::string, std::string>>(covers));
  CorpusEntry e{std::string(t.name),
                attach_complementation(std::move(p), std::span<const std::pair<std::string, std::string>>(comp)),
                {}};
  if (!t.boolean.empty()) e.expected.boolean_elements = std::string(t.boolean);
  for (const auto& [list, items] : t.lists) e.expected.lists[std::string(list)] = split_ws(items);
  return e;
}

}  // namespace detail

/// fig1, fig2a, fig2b, fig3, fig4.
inline std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& t : detail::figure_tables()) out.push_back(detail::build_entry(t));
  return out;
}

inline std::optional<CorpusEntry> corpus_entry(std::string_view name) {
  for (const auto& t : detail::figure_tables()) {
    if (t.name == name) return detail::build_entry(t);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Seeded generators

namespace detail {

// Platform-independent draws from the standardized mt19937_64 output stream.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) < p;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}  // namespace detail

struct RandomPosetConfig {
  /// Probability of an order edge between middle elements on adjacent ranks.
  double edge_probability = 0.3;
};

inline constexpr std::size_t kMinRandomSize = 2;
inline constexpr std::size_t kMaxRandomSize = 24;

/// Bounded poset on n elements named 0, p1..p(n-2), 1: a random ranked DAG
/// on the middle elements between a forced bottom and top. Deterministic in
/// (n, seed, config).
inline Poset random_poset(std::size_t n, std::uint64_t seed, const RandomPosetConfig& config = {}) {
  if (n < kMinRandomSize || n > kMaxRandomSize) {
    throw Error(ErrorKind::BadSize, "random poset size must be within [2, 24], got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  const std::size_t middle = n - 2;
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i <= middle; ++i) names.push_back("p" + std::to_string(i));
  names.emplace_back("1");

  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 1; i <= middle; ++i) {
    pairs.emplace_back("0", names[i]);
    pairs.emplace_back(names[i], "1");
  }
  if (middle == 0) pairs.emplace_back("0", "1");

  if (middle > 1) {
    std::size_t max_ranks = 1;
    while (max_ranks * max_ranks < middle) ++max_ranks;
    const std::size_t ranks = 1 + detail::uniform_below(rng, max_ranks + 1);
    std::vector<std::size_t> rank(middle + 1);
    for (std::size_t i = 1; i <= middle; ++i) rank[i] = detail::uniform_below(rng, ranks);
    for (std::size_t i = 1; i <= middle; ++i) {
      for (std::size_t j = 1; j <= middle; ++j) {
        if (rank[j] == rank[i] + 1 && detail::bernoulli(rng, config.edge_probability)) {
          pairs.emplace_back(names[i], names[j]);
        }
      }
    }
  }
  return build_poset(std::span<const std::string>(names), std::span<const std::pair<std::string, std::string>>(pairs));
}

/// Property flags a generated complementation must satisfy.
struct ComplementConstraints {
  bool antitone = false;
  bool involution = false;
  bool x_le_xdd = false;
  bool xdd_le_x = false;
  bool triple_identity = false;

  bool satisfied_by(const ComplementProperties& p) const {
    return (!antitone || p.antitone) && (!involution || p.involution) && (!x_le_xdd || p.x_le_xdd) &&
           (!xdd_le_x || p.xdd_le_x) && (!triple_identity || p.triple_identity);
  }

  friend bool operator==(const ComplementConstraints&, const ComplementConstraints&) = default;
};

struct ComplementSearchLimits {
  std::uint64_t max_nodes = 2'000'000;
};

namespace detail {

class ComplementSearch {
 public:
  ComplementSearch(const Poset& p, std::uint64_t seed, const ComplementConstraints& want,
                   const ComplementSearchLimits& limits)
      : p_(p), want_(want), limits_(limits), image_(p.size()) {
    std::mt19937_64 rng(seed);
    const std::size_t n = p.size();
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const ElementId x(i), y(j);
        if (join(p, x, y) == p.top() && meet(p, x, y) == p.bottom()) candidates_[i].push_back(y);
      }
      shuffle(candidates_[i], rng);
    }
    for (std::size_t i = 0; i < n; ++i) order_.push_back(ElementId(i));
    shuffle(order_, rng);
    // Most constrained first keeps the tree shallow.
    std::stable_sort(order_.begin(), order_.end(), [&](ElementId a, ElementId b) {
      return candidates_[a.index].size() < candidates_[b.index].size();
    });
  }

  std::optional<Complementation> run() {
    for (const auto& c : candidates_) {
      if (c.empty()) return std::nullopt;
    }
    if (!assign_next(0)) return std::nullopt;
    std::vector<ElementId> out;
    for (const auto& v : image_) out.push_back(*v);
    return Complementation(std::move(out));
  }

 private:
  bool consistent(ElementId x) const {
    const ElementId xp = *image_[x.index];
    if (want_.involution) {
      const auto& back = image_[xp.index];
      if (back && *back != x) return false;
    }
    if (want_.antitone) {
      for (std::size_t j = 0; j < p_.size(); ++j) {
        const auto& yp = image_[j];
        if (!yp) continue;
        const ElementId y(j);
        if (p_.leq(x, y) && !p_.leq(*yp, xp)) return false;
        if (p_.leq(y, x) && !p_.leq(xp, *yp)) return false;
      }
    }
    // Double and triple images whose links are already assigned.
    auto check_chain = [&](ElementId z) {
      const auto& z1 = image_[z.index];
      if (!z1) return true;
      const auto& z2 = image_[z1->index];
      if (!z2) return true;
      if (want_.involution && *z2 != z) return false;
      if (want_.x_le_xdd && !p_.leq(z, *z2)) return false;
      if (want_.xdd_le_x && !p_.leq(*z2, z)) return false;
      const auto& z3 = image_[z2->index];
      if (want_.triple_identity && z3 && *z3 != *z1) return false;
      return true;
    };
    for (std::size_t j = 0; j < p_.size(); ++j) {
      if (!check_chain(ElementId(j))) return false;
    }
    return true;
  }

  bool assign_next(std::size_t k) {
    if (k == order_.size()) return true;
    const ElementId x = order_[k];
    if (image_[x.index]) return assign_next(k + 1);
    for (ElementId y : candidates_[x.index]) {
      if (++nodes_ > limits_.max_nodes) return false;
      image_[x.index] = y;
      bool paired = false;
      if (want_.involution && !image_[y.index] && y != x) {
        image_[y.index] = x;
        paired = true;
      }
      if (consistent(x) && (!paired || consistent(y)) && assign_next(k + 1)) return true;
      image_[x.index].reset();
      if (paired) image_[y.index].reset();
    }
    return false;
  }

  const Poset& p_;
  ComplementConstraints want_;
  ComplementSearchLimits limits_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> order_;
  std::vector<std::optional<ElementId>> image_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Seeded backtracking search for a complementation meeting `want`. Absent
/// when none exists or the node limit is exhausted.
inline std::optional<Complementation> random_complementation(const Poset& p, std::uint64_t seed,
                                                             const ComplementConstraints& want = {},
                                                             const ComplementSearchLimits& limits = {}) {
  if (!p.bounded()) throw Error(ErrorKind::NotBounded, "complementation requires a bottom and a top element");
  return detail::ComplementSearch(p, seed, want, limits).run();
}

/// A random complemented poset: tries consecutive derived seeds until the
/// poset admits a complementation meeting `want`.
inline std::optional<ComplementedPoset> random_complemented_poset(std::size_t n, std::uint64_t seed,
                                                                  const ComplementConstraints& want = {},
                                                                  std::size_t attempts = 64,
                                                                  const RandomPosetConfig& config = {}) {
  for (std::size_t k = 0; k < attempts; ++k) {
    const std::uint64_t s = seed * 1'000'003ULL + k;
    Poset p = random_poset(n, s, config);
    if (auto c = random_complementation(p, s, want)) {
      ComplementedPoset cp = attach_complementation(std::move(p), std::move(*c));
      if (want.satisfied_by(cp.props())) return cp;
    }
  }
  return std::nullopt;
}

}  // namespace cposet
