#pragma once

#include <cposet/cposet.hpp>

#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace testing_support {

inline cposet::ComplementedPoset fig(const std::string& name) { return cposet::corpus_entry(name)->instance; }

inline const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig1", "fig2a", "fig2b", "fig3", "fig4"};
  return names;
}

inline oracle::Set to_oracle(cposet::ElementSet s) {
  oracle::Set out;
  for (cposet::ElementId x : s) out.insert(static_cast<int>(x.index));
  return out;
}

inline std::set<oracle::Set> to_oracle(const std::vector<cposet::ElementSet>& v) {
  std::set<oracle::Set> out;
  for (auto s : v) out.insert(to_oracle(s));
  return out;
}

inline cposet::ElementSet from_oracle(const oracle::Set& s) {
  cposet::ElementSet out;
  for (int x : s) out.insert(cposet::ElementId(x));
  return out;
}

inline oracle::Model model_of(const cposet::ComplementedPoset& cp) {
  return oracle::parse(cposet::emit_instance(cposet::to_instance("m", cp)));
}

inline oracle::Model model_of(const cposet::Poset& p) {
  return oracle::parse(cposet::emit_instance(cposet::Instance{"m", p, std::nullopt}));
}

/// Rotating constraint profiles for random campaigns.
inline cposet::ComplementConstraints profile(std::uint64_t seed) {
  cposet::ComplementConstraints c;
  switch (seed % 5) {
    case 0: break;
    case 1: c.antitone = true; break;
    case 2: c.antitone = c.involution = true; break;
    case 3: c.antitone = c.x_le_xdd = true; break;
    case 4: c.triple_identity = true; break;
  }
  return c;
}

/// Random complemented posets; seeds with no solution are skipped.
inline std::vector<cposet::ComplementedPoset> random_instances(std::uint64_t first, std::uint64_t last,
                                                               std::size_t min_n, std::size_t max_n) {
  std::vector<cposet::ComplementedPoset> out;
  for (std::uint64_t seed = first; seed <= last; ++seed) {
    std::size_t n = min_n + seed % (max_n - min_n + 1);
    // An involutive complementation has no fixed points, so n must be even.
    if (profile(seed).involution && n % 2 == 1) n = n == max_n ? n - 1 : n + 1;
    if (auto cp = cposet::random_complemented_poset(n, seed, profile(seed))) out.push_back(std::move(*cp));
  }
  return out;
}

}  // namespace testing_support

namespace testing_support {

/// Kind of the cposet::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<cposet::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const cposet::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing_support
