#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "substructures.hpp"

namespace cposet {

// ---------------------------------------------------------------------------
// Statement catalog

enum class StatementId {
  LemBoolean,
  LemClPrime,
  LemClPrincipal,
  LemProperPair,
  PropProperEquiv,
  LemCidealDd,
  LemTripleA0,
  ThmF0Cideal,
  CorInvolution,
  RemPrincipalL0,
  LemPrimeCcond,
  Thm5IToII,
  Thm5IIIIIIVToI,
  Thm5VToVI,
  Thm5IIIVIVIIToV,
  LemJoinSemiLu,
  ThmSep1,
  CorSep1Prime,
  ThmSep2,
};

struct StatementInfo {
  StatementId id;
  std::string_view tag;
  std::string_view hypotheses;
  std::string_view conclusion;
};

inline constexpr std::array<StatementInfo, 19> kStatements{{
    {StatementId::LemBoolean, "LEM_BOOLEAN", "antitone; x <= x'' for all x",
     "if every ideal containing a contains a'', then a'' = a"},
    {StatementId::LemClPrime, "LEM_CL_PRIME", "none",
     "I prime ideal <=> P\\I prime filter <=> P\\I filter; I -> P\\I is a bijection of primes"},
    {StatementId::LemClPrincipal, "LEM_CL_PRINCIPAL", "finite poset (ACC and DCC)",
     "every ideal and every filter is principal"},
    {StatementId::LemProperPair, "LEM_PROPER_PAIR", "I a proper ideal (F a proper filter)",
     "never both a and a' in I (in F)"},
    {StatementId::PropProperEquiv, "PROP_PROPER_EQUIV", "none",
     "I proper <=> I_0 != P <=> I and I_0 disjoint; dually for filters"},
    {StatementId::LemCidealDd, "LEM_CIDEAL_DD", "x' <= x''' for all x (x''' <= x' for all x)",
     "I'' within I for every c-ideal I (F'' within F for every c-filter F)"},
    {StatementId::LemTripleA0, "LEM_TRIPLE_A0", "x''' = x' for all x",
     "a in A_0 <=> a'' in A_0 for every subset A"},
    {StatementId::ThmF0Cideal, "THM_F0_CIDEAL", "antitone; x <= x'' (x'' <= x)",
     "F_0 is a c-ideal for every filter F (I_0 is a c-filter for every ideal I)"},
    {StatementId::CorInvolution, "COR_INVOLUTION", "antitone involution",
     "I_0 filter, (I_0)_0 = I, I c-ideal; dually for filters"},
    {StatementId::RemPrincipalL0, "REM_PRINCIPAL_L0", "antitone involution", "L(a)_0 = U(a') and U(a')_0 = L(a)"},
    {StatementId::LemPrimeCcond, "LEM_PRIME_CCOND", "I prime ideal (F prime filter)", "I (F) satisfies the c-condition"},
    {StatementId::Thm5IToII, "THM5_I_II", "I satisfies the c-condition", "I is a maximal ideal"},
    {StatementId::Thm5IIIIIIVToI, "THM5_II_III_IV_I",
     "distributive; I maximal; union of LU(a,i) over i in I is an ideal for all a outside I",
     "I satisfies the c-condition"},
    {StatementId::Thm5VToVI, "THM5_V_VI", "F satisfies the c-condition", "F is an ultrafilter"},
    {StatementId::Thm5IIIVIVIIToV, "THM5_III_VI_VII_V",
     "distributive; F ultrafilter; union of UL(a,f) over f in F is a filter for all a outside F",
     "F satisfies the c-condition"},
    {StatementId::LemJoinSemiLu, "LEM_JOINSEMI_LU", "join-semilattice (meet-semilattice)",
     "union of LU(a,i) over i in I is an ideal (union of UL(a,f) over f in F is a filter)"},
    {StatementId::ThmSep1, "THM_SEP1", "antitone; x <= x''; F satisfies the c-condition; I and F disjoint",
     "some c-ideal J contains I and misses F"},
    {StatementId::CorSep1Prime, "COR_SEP1_PRIME", "antitone; x <= x''; F prime filter; I and F disjoint",
     "some c-ideal J contains I and misses F"},
    {StatementId::ThmSep2, "THM_SEP2",
     "distributive; antitone; F ultrafilter U(g); x meet g exists for x outside F; I and F disjoint",
     "some c-ideal J contains I and misses F"},
}};

inline const StatementInfo& statement_info(StatementId id) { return kStatements[static_cast<std::size_t>(id)]; }
inline std::string_view to_tag(StatementId id) { return statement_info(id).tag; }

inline std::optional<StatementId> statement_from_tag(std::string_view tag) {
  for (const auto& s : kStatements) {
    if (s.tag == tag) return s.id;
  }
  return std::nullopt;
}

inline bool is_separation_statement(StatementId id) {
  return id == StatementId::ThmSep1 || id == StatementId::CorSep1Prime || id == StatementId::ThmSep2;
}

// ---------------------------------------------------------------------------
// Results

/// Elements and subsets demonstrating a failure.
struct Witness {
  std::vector<ElementId> elements;
  std::vector<ElementSet> sets;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct TheoremCheckResult {
  StatementId statement{};
  bool hypotheses_met = false;
  std::optional<bool> conclusion_holds;  // absent when hypotheses are unmet
  std::optional<Witness> counterexample;
  std::size_t cases_checked = 0;  // subjects that met every hypothesis
  /// A subject that missed some hypothesis and also fails the conclusion.
  std::optional<Witness> unhypothesized_failure;
  std::string hypothesis_note;  // why hypotheses are unmet

  friend bool operator==(const TheoremCheckResult&, const TheoremCheckResult&) = default;
};

enum class SeparationFailure {
  NotAntitone,
  XLeXddFails,
  NoCCondition,
  NotPrimeFilter,
  NotDisjoint,
  NotUltrafilter,
  MeetMissing,
  NotDistributive,
  ProofStepFailed,
};

constexpr std::string_view to_string(SeparationFailure f) {
  switch (f) {
    case SeparationFailure::NotAntitone: return "NotAntitone";
    case SeparationFailure::XLeXddFails: return "XLeXddFails";
    case SeparationFailure::NoCCondition: return "NoCCondition";
    case SeparationFailure::NotPrimeFilter: return "NotPrimeFilter";
    case SeparationFailure::NotDisjoint: return "NotDisjoint";
    case SeparationFailure::NotUltrafilter: return "NotUltrafilter";
    case SeparationFailure::MeetMissing: return "MeetMissing";
    case SeparationFailure::NotDistributive: return "NotDistributive";
    case SeparationFailure::ProofStepFailed: return "ProofStepFailed";
  }
  return "Unknown";
}

enum class SeparationMode { First, Prime, Second };

struct SeparationResult {
  ElementSet ideal_in;
  ElementSet filter_in;
  std::optional<ElementSet> witness;  // the c-ideal J
  std::optional<SeparationFailure> failure;
  std::optional<ElementId> generator;  // g with U(g) = F (second mode)
  std::string detail;
};

// ---------------------------------------------------------------------------
// Harness

/// Verifies statements on one complemented poset. Every conclusion is checked
/// against the definitions by exhaustive evaluation.
class Harness {
 public:
  /// Subsets quantified over exhaustively up to this size, sampled above it.
  static constexpr std::size_t kExhaustiveSubsetLimit = 12;
  static constexpr std::size_t kSampledSubsets = 1000;
  static constexpr std::uint64_t kSubsetSampleSeed = 0x5eedc0de;

  explicit Harness(ComplementedPoset cp, const EnumerationBudget& budget = {})
      : cp_(std::move(cp)),
        index_(cp_.poset(), budget),
        distributivity_(is_distributive(cp_.poset())),
        semilattice_(semilattice_flags(cp_.poset())) {
    for (ElementSet s : index_.ideals()) {
      if (index_.c_ideal_witness(cp_.comp(), s)) c_ideals_.push_back(s);
    }
    for (ElementSet s : index_.filters()) {
      if (index_.c_filter_witness(cp_.comp(), s)) c_filters_.push_back(s);
    }
  }

  const ComplementedPoset& complemented() const { return cp_; }
  const SubstructureIndex& index() const { return index_; }
  const DistributivityReport& distributivity() const { return distributivity_; }
  const std::vector<ElementSet>& c_ideals() const { return c_ideals_; }
  const std::vector<ElementSet>& c_filters() const { return c_filters_; }

  TheoremCheckResult check(StatementId id) const { return summarize(id, evaluate(id)); }

  std::vector<TheoremCheckResult> run_all() const {
    std::vector<TheoremCheckResult> out;
    for (const auto& s : kStatements) out.push_back(check(s.id));
    return out;
  }

  /// Constructive separation: J := F_0 after checking antitone, x <= x'',
  /// the c-condition on F and disjointness.
  SeparationResult separate_first(ElementSet ideal, ElementSet filter) const {
    require_inputs(ideal, filter);
    SeparationResult r{ideal, filter, std::nullopt, std::nullopt, std::nullopt, {}};
    const auto& props = cp_.props();
    if (!props.antitone) return fail(r, SeparationFailure::NotAntitone, "complementation is not antitone");
    if (auto x = first_x_not_le_xdd()) {
      return fail(r, SeparationFailure::XLeXddFails, name(*x) + " is not below " + name(prime(prime(*x))));
    }
    if (!satisfies_c_condition(cp_.comp(), filter)) {
      return fail(r, SeparationFailure::NoCCondition, "filter " + fmt(filter) + " violates the c-condition");
    }
    if (ideal.intersects(filter)) {
      return fail(r, SeparationFailure::NotDisjoint, "ideal and filter share " + fmt(ideal & filter));
    }
    return construct(r);
  }

  /// First separation with a prime filter; primality yields the c-condition.
  SeparationResult separate_prime(ElementSet ideal, ElementSet filter) const {
    require_inputs(ideal, filter);
    SeparationResult r{ideal, filter, std::nullopt, std::nullopt, std::nullopt, {}};
    const auto& props = cp_.props();
    if (!props.antitone) return fail(r, SeparationFailure::NotAntitone, "complementation is not antitone");
    if (auto x = first_x_not_le_xdd()) {
      return fail(r, SeparationFailure::XLeXddFails, name(*x) + " is not below " + name(prime(prime(*x))));
    }
    if (!is_prime_filter(poset(), filter)) {
      return fail(r, SeparationFailure::NotPrimeFilter, "filter " + fmt(filter) + " is not prime");
    }
    if (!satisfies_c_condition(cp_.comp(), filter)) {
      return fail(r, SeparationFailure::ProofStepFailed, "prime filter " + fmt(filter) + " violates the c-condition");
    }
    return separate_first(ideal, filter);
  }

  /// Second separation: distributive order, antitone complementation and an
  /// ultrafilter F = U(g) whose generator has meets with everything outside F.
  SeparationResult separate_second(ElementSet ideal, ElementSet filter) const {
    require_inputs(ideal, filter);
    SeparationResult r{ideal, filter, std::nullopt, std::nullopt, std::nullopt, {}};
    if (!distributivity_.holds) {
      const auto& w = *distributivity_.witness;
      return fail(r, SeparationFailure::NotDistributive,
                  "distributivity fails at (" + name(w[0]) + "," + name(w[1]) + "," + name(w[2]) + ")");
    }
    if (!cp_.props().antitone) return fail(r, SeparationFailure::NotAntitone, "complementation is not antitone");
    if (!index_.is_ultrafilter(filter)) {
      return fail(r, SeparationFailure::NotUltrafilter, "filter " + fmt(filter) + " is not an ultrafilter");
    }
    auto g = minimum_of(poset(), filter);
    if (!g || poset().up(*g) != filter) {
      return fail(r, SeparationFailure::ProofStepFailed, "ultrafilter " + fmt(filter) + " is not principal");
    }
    r.generator = g;
    for (ElementId x : poset().universe() - filter) {
      if (!meet(poset(), x, *g)) {
        return fail(r, SeparationFailure::MeetMissing, name(x) + " and " + name(*g) + " have no meet");
      }
    }
    if (ideal.intersects(filter)) {
      return fail(r, SeparationFailure::NotDisjoint, "ideal and filter share " + fmt(ideal & filter));
    }
    if (!satisfies_c_condition(cp_.comp(), filter)) {
      return fail(r, SeparationFailure::ProofStepFailed, "ultrafilter " + fmt(filter) + " violates the c-condition");
    }
    if (!cp_.props().involution) {
      return fail(r, SeparationFailure::ProofStepFailed, "complementation is not an involution");
    }
    SeparationResult inner = separate_first(ideal, filter);
    inner.generator = g;
    return inner;
  }

  SeparationResult separate(SeparationMode mode, ElementSet ideal, ElementSet filter) const {
    switch (mode) {
      case SeparationMode::First: return separate_first(ideal, filter);
      case SeparationMode::Prime: return separate_prime(ideal, filter);
      case SeparationMode::Second: return separate_second(ideal, filter);
    }
    return separate_first(ideal, filter);
  }

  /// Definition-level re-check of a separation witness: J is an ideal, some
  /// filter G has G_0 = J, I ⊆ J and J ∩ F = ∅. Returns the failed clause.
  std::optional<std::string> verify_witness(ElementSet ideal, ElementSet filter, ElementSet j) const {
    if (!is_ideal(poset(), j)) return fmt(j) + " is not an ideal";
    if (!index_.c_ideal_witness(cp_.comp(), j)) return fmt(j) + " is not a c-ideal";
    if (!ideal.subset_of(j)) return fmt(j) + " does not contain " + fmt(ideal);
    if (j.intersects(filter)) return fmt(j) + " meets " + fmt(filter);
    return std::nullopt;
  }

 private:
  struct Case {
    bool local = true;
    std::optional<Witness> failure;
  };

  struct Evaluation {
    std::vector<std::string> global_failures;
    std::vector<Case> cases;
    std::string no_case_note = "no subject meets the hypotheses";
  };

  const Poset& poset() const { return cp_.poset(); }
  ElementId prime(ElementId x) const { return cp_.prime(x); }
  const std::string& name(ElementId x) const { return poset().name(x); }
  std::string fmt(ElementSet s) const { return format_set(poset(), s); }
  ElementSet zero(ElementSet s) const { return set_preimage_zero(cp_.comp(), s); }
  ElementSet primed(ElementSet s) const { return set_image_prime(cp_.comp(), s); }
  std::size_t size() const { return poset().size(); }

  static Witness witness(std::vector<ElementId> elements, std::vector<ElementSet> sets, std::string note) {
    return Witness{std::move(elements), std::move(sets), std::move(note)};
  }

  std::optional<ElementId> first_x_not_le_xdd() const {
    for (std::size_t i = 0; i < size(); ++i) {
      const ElementId x(i);
      if (!poset().leq(x, prime(prime(x)))) return x;
    }
    return std::nullopt;
  }

  void require_inputs(ElementSet ideal, ElementSet filter) const {
    if (!is_ideal(poset(), ideal)) throw Error(ErrorKind::NotIdeal, fmt(ideal) + " is not an ideal");
    if (!is_filter(poset(), filter)) throw Error(ErrorKind::NotFilter, fmt(filter) + " is not a filter");
  }

  static SeparationResult fail(SeparationResult r, SeparationFailure why, std::string detail) {
    r.failure = why;
    r.detail = std::move(detail);
    return r;
  }

  SeparationResult construct(SeparationResult r) const {
    const ElementSet j = zero(r.filter_in);
    if (auto bad = verify_witness(r.ideal_in, r.filter_in, j)) {
      return fail(r, SeparationFailure::ProofStepFailed, "F_0 rejected: " + *bad);
    }
    r.witness = j;
    return r;
  }

  bool separable(ElementSet ideal, ElementSet filter) const {
    return std::any_of(c_ideals_.begin(), c_ideals_.end(),
                       [&](ElementSet j) { return ideal.subset_of(j) && !j.intersects(filter); });
  }

  bool condition_iv(ElementSet ideal) const {
    for (ElementId a : poset().universe() - ideal) {
      if (!lu_union(poset(), a, ideal).is_ideal) return false;
    }
    return true;
  }

  bool condition_vii(ElementSet filter) const {
    for (ElementId a : poset().universe() - filter) {
      if (!ul_union(poset(), a, filter).is_filter) return false;
    }
    return true;
  }

  std::vector<ElementSet> quantified_subsets() const {
    std::vector<ElementSet> out;
    if (size() <= kExhaustiveSubsetLimit) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size()); ++bits) out.push_back(ElementSet::from_bits(bits));
    } else {
      std::mt19937_64 rng(kSubsetSampleSeed);
      const std::uint64_t mask = poset().universe().bits();
      for (std::size_t k = 0; k < kSampledSubsets; ++k) out.push_back(ElementSet::from_bits(rng() & mask));
    }
    return out;
  }

  TheoremCheckResult summarize(StatementId id, const Evaluation& ev) const {
    TheoremCheckResult r;
    r.statement = id;
    const bool global = ev.global_failures.empty();
    for (const Case& c : ev.cases) {
      const bool applies = global && c.local;
      if (applies) ++r.cases_checked;
      if (!c.failure) continue;
      if (applies) {
        if (!r.counterexample) r.counterexample = c.failure;
      } else if (!r.unhypothesized_failure) {
        r.unhypothesized_failure = c.failure;
      }
    }
    r.hypotheses_met = r.cases_checked > 0;
    if (r.hypotheses_met) {
      r.conclusion_holds = !r.counterexample.has_value();
    } else {
      r.counterexample.reset();
      std::string note;
      for (const auto& f : ev.global_failures) note += (note.empty() ? "" : "; ") + f;
      const bool any_local = std::any_of(ev.cases.begin(), ev.cases.end(), [](const Case& c) { return c.local; });
      if (!any_local) note += (note.empty() ? "" : "; ") + ev.no_case_note;
      r.hypothesis_note = note;
    }
    return r;
  }

  std::vector<std::string> require(std::initializer_list<std::pair<bool, std::string_view>> conds) const {
    std::vector<std::string> out;
    for (const auto& [ok, what] : conds) {
      if (!ok) out.emplace_back(what);
    }
    return out;
  }

  Evaluation evaluate(StatementId id) const {
    switch (id) {
      case StatementId::LemBoolean: return lem_boolean();
      case StatementId::LemClPrime: return lem_cl_prime();
      case StatementId::LemClPrincipal: return lem_cl_principal();
      case StatementId::LemProperPair: return lem_proper_pair();
      case StatementId::PropProperEquiv: return prop_proper_equiv();
      case StatementId::LemCidealDd: return lem_cideal_dd();
      case StatementId::LemTripleA0: return lem_triple_a0();
      case StatementId::ThmF0Cideal: return thm_f0_cideal();
      case StatementId::CorInvolution: return cor_involution();
      case StatementId::RemPrincipalL0: return rem_principal_l0();
      case StatementId::LemPrimeCcond: return lem_prime_ccond();
      case StatementId::Thm5IToII: return thm5_i_ii();
      case StatementId::Thm5IIIIIIVToI: return thm5_ii_iii_iv_i();
      case StatementId::Thm5VToVI: return thm5_v_vi();
      case StatementId::Thm5IIIVIVIIToV: return thm5_iii_vi_vii_v();
      case StatementId::LemJoinSemiLu: return lem_joinsemi_lu();
      case StatementId::ThmSep1: return separation_statement(SeparationMode::First);
      case StatementId::CorSep1Prime: return separation_statement(SeparationMode::Prime);
      case StatementId::ThmSep2: return separation_statement(SeparationMode::Second);
    }
    return {};
  }

  Evaluation lem_boolean() const {
    const auto& p = cp_.props();
    Evaluation ev{require({{p.antitone, "complementation is not antitone"}, {p.x_le_xdd, "x <= x'' fails"}}), {}, {}};
    ev.no_case_note = "no element a has a'' in every ideal containing a";
    for (std::size_t i = 0; i < size(); ++i) {
      const ElementId a(i), add = prime(prime(a));
      Case c;
      c.local = std::all_of(index_.ideals().begin(), index_.ideals().end(),
                            [&](ElementSet s) { return !s.contains(a) || s.contains(add); });
      if (add != a) c.failure = witness({a}, {}, name(a) + "'' = " + name(add) + " != " + name(a));
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation lem_cl_prime() const {
    Evaluation ev;
    const Poset& p = poset();
    std::vector<ElementSet> prime_ideals, prime_filters;
    for (ElementSet s : index_.ideals()) {
      const ElementSet rest = complement_pairing(p, s);
      const bool i = is_prime_ideal(p, s), ii = is_prime_filter(p, rest), iii = is_filter(p, rest);
      if (i) prime_ideals.push_back(s);
      Case c;
      if (i != ii || i != iii) {
        c.failure = witness({}, {s, rest},
                            "prime ideal " + std::to_string(i) + ", complement prime filter " + std::to_string(ii) +
                                ", complement filter " + std::to_string(iii));
      }
      ev.cases.push_back(c);
    }
    for (ElementSet f : index_.filters()) {
      if (!is_prime_filter(p, f)) continue;
      prime_filters.push_back(f);
      Case c;
      if (!is_prime_ideal(p, complement_pairing(p, f))) {
        c.failure = witness({}, {f}, "prime filter " + fmt(f) + " has no prime ideal complement");
      }
      ev.cases.push_back(c);
    }
    Case count;
    if (prime_ideals.size() != prime_filters.size()) {
      count.failure = witness({}, {}, std::to_string(prime_ideals.size()) + " prime ideals vs " +
                                          std::to_string(prime_filters.size()) + " prime filters");
    }
    ev.cases.push_back(count);
    return ev;
  }

  Evaluation lem_cl_principal() const {
    Evaluation ev;
    for (ElementSet s : index_.ideals()) {
      Case c;
      if (!ideal_generator(poset(), s)) c.failure = witness({}, {s}, "ideal " + fmt(s) + " is not principal");
      ev.cases.push_back(c);
    }
    for (ElementSet s : index_.filters()) {
      Case c;
      if (!filter_generator(poset(), s)) c.failure = witness({}, {s}, "filter " + fmt(s) + " is not principal");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation lem_proper_pair() const {
    Evaluation ev;
    const ElementSet all = poset().universe();
    auto scan = [&](ElementSet s) {
      Case c;
      c.local = s != all;
      for (ElementId a : s) {
        if (s.contains(prime(a))) {
          c.failure = witness({a, prime(a)}, {s}, fmt(s) + " contains both " + name(a) + " and " + name(prime(a)));
          break;
        }
      }
      ev.cases.push_back(c);
    };
    for (ElementSet s : index_.ideals()) scan(s);
    for (ElementSet s : index_.filters()) scan(s);
    return ev;
  }

  Evaluation prop_proper_equiv() const {
    Evaluation ev;
    const ElementSet all = poset().universe();
    auto scan = [&](ElementSet s) {
      const ElementSet z = zero(s);
      const bool proper = s != all, zero_proper = z != all, disjoint = !s.intersects(z);
      Case c;
      if (proper != zero_proper || proper != disjoint) {
        c.failure = witness({}, {s, z}, "proper " + std::to_string(proper) + ", zero-set proper " +
                                            std::to_string(zero_proper) + ", disjoint " + std::to_string(disjoint));
      }
      ev.cases.push_back(c);
    };
    for (ElementSet s : index_.ideals()) scan(s);
    for (ElementSet s : index_.filters()) scan(s);
    return ev;
  }

  Evaluation lem_cideal_dd() const {
    const auto& p = cp_.props();
    Evaluation ev;
    ev.no_case_note = "neither x' <= x''' nor x''' <= x' holds for all x";
    for (ElementSet s : index_.ideals()) {
      Case c;
      c.local = p.xd_le_xddd && index_.c_ideal_witness(cp_.comp(), s).has_value();
      const ElementSet dd = primed(primed(s));
      if (!dd.subset_of(s)) c.failure = witness({}, {s, dd}, fmt(s) + "'' = " + fmt(dd) + " is not contained in it");
      ev.cases.push_back(c);
    }
    for (ElementSet s : index_.filters()) {
      Case c;
      c.local = p.xddd_le_xd && index_.c_filter_witness(cp_.comp(), s).has_value();
      const ElementSet dd = primed(primed(s));
      if (!dd.subset_of(s)) c.failure = witness({}, {s, dd}, fmt(s) + "'' = " + fmt(dd) + " is not contained in it");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation lem_triple_a0() const {
    Evaluation ev{require({{cp_.props().triple_identity, "x''' = x' fails"}}), {}, {}};
    for (ElementSet a : quantified_subsets()) {
      const ElementSet z = zero(a);
      Case c;
      for (std::size_t i = 0; i < size(); ++i) {
        const ElementId x(i);
        if (z.contains(x) != z.contains(prime(prime(x)))) {
          c.failure = witness({x}, {a, z}, name(x) + " and " + name(prime(prime(x))) + " disagree on A_0");
          break;
        }
      }
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation thm_f0_cideal() const {
    const auto& p = cp_.props();
    Evaluation ev{require({{p.antitone, "complementation is not antitone"}}), {}, {}};
    ev.no_case_note = "neither x <= x'' nor x'' <= x holds for all x";
    for (ElementSet f : index_.filters()) {
      const ElementSet z = zero(f);
      Case c;
      c.local = p.x_le_xdd;
      if (!index_.c_ideal_witness(cp_.comp(), z)) c.failure = witness({}, {f, z}, fmt(z) + " is not a c-ideal");
      ev.cases.push_back(c);
    }
    for (ElementSet s : index_.ideals()) {
      const ElementSet z = zero(s);
      Case c;
      c.local = p.xdd_le_x;
      if (!index_.c_filter_witness(cp_.comp(), z)) c.failure = witness({}, {s, z}, fmt(z) + " is not a c-filter");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation cor_involution() const {
    const auto& p = cp_.props();
    Evaluation ev{require({{p.antitone, "complementation is not antitone"},
                           {p.involution, "complementation is not an involution"}}),
                  {},
                  {}};
    for (ElementSet s : index_.ideals()) {
      const ElementSet z = zero(s);
      Case c;
      if (!is_filter(poset(), z)) {
        c.failure = witness({}, {s, z}, fmt(s) + "_0 is not a filter");
      } else if (zero(z) != s) {
        c.failure = witness({}, {s, zero(z)}, "(" + fmt(s) + "_0)_0 differs");
      } else if (!index_.c_ideal_witness(cp_.comp(), s)) {
        c.failure = witness({}, {s}, fmt(s) + " is not a c-ideal");
      }
      ev.cases.push_back(c);
    }
    for (ElementSet f : index_.filters()) {
      const ElementSet z = zero(f);
      Case c;
      if (!is_ideal(poset(), z)) {
        c.failure = witness({}, {f, z}, fmt(f) + "_0 is not an ideal");
      } else if (zero(z) != f) {
        c.failure = witness({}, {f, zero(z)}, "(" + fmt(f) + "_0)_0 differs");
      } else if (!index_.c_filter_witness(cp_.comp(), f)) {
        c.failure = witness({}, {f}, fmt(f) + " is not a c-filter");
      }
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation rem_principal_l0() const {
    const auto& p = cp_.props();
    Evaluation ev{require({{p.antitone, "complementation is not antitone"},
                           {p.involution, "complementation is not an involution"}}),
                  {},
                  {}};
    for (std::size_t i = 0; i < size(); ++i) {
      const ElementId a(i);
      const ElementSet la = poset().down(a), ua = poset().up(prime(a));
      Case c;
      if (zero(la) != ua) {
        c.failure = witness({a}, {zero(la), ua}, "L(" + name(a) + ")_0 != U(" + name(prime(a)) + ")");
      } else if (zero(ua) != la) {
        c.failure = witness({a}, {zero(ua), la}, "U(" + name(prime(a)) + ")_0 != L(" + name(a) + ")");
      }
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation lem_prime_ccond() const {
    Evaluation ev;
    ev.no_case_note = "no prime ideals or prime filters";
    auto scan = [&](ElementSet s, bool local) {
      Case c;
      c.local = local;
      if (!satisfies_c_condition(cp_.comp(), s)) c.failure = witness({}, {s}, fmt(s) + " violates the c-condition");
      ev.cases.push_back(c);
    };
    for (ElementSet s : index_.ideals()) scan(s, is_prime_ideal(poset(), s));
    for (ElementSet s : index_.filters()) scan(s, is_prime_filter(poset(), s));
    return ev;
  }

  Evaluation thm5_i_ii() const {
    Evaluation ev;
    ev.no_case_note = "no ideal satisfies the c-condition";
    for (ElementSet s : index_.ideals()) {
      Case c;
      c.local = satisfies_c_condition(cp_.comp(), s);
      if (!index_.is_maximal_ideal(s)) c.failure = witness({}, {s}, fmt(s) + " is not a maximal ideal");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation thm5_ii_iii_iv_i() const {
    Evaluation ev{require({{distributivity_.holds, "poset is not distributive"}}), {}, {}};
    ev.no_case_note = "no maximal ideal satisfies the union-of-cones condition";
    for (ElementSet s : index_.ideals()) {
      Case c;
      c.local = index_.is_maximal_ideal(s) && condition_iv(s);
      if (!satisfies_c_condition(cp_.comp(), s)) c.failure = witness({}, {s}, fmt(s) + " violates the c-condition");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation thm5_v_vi() const {
    Evaluation ev;
    ev.no_case_note = "no filter satisfies the c-condition";
    for (ElementSet s : index_.filters()) {
      Case c;
      c.local = satisfies_c_condition(cp_.comp(), s);
      if (!index_.is_ultrafilter(s)) c.failure = witness({}, {s}, fmt(s) + " is not an ultrafilter");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation thm5_iii_vi_vii_v() const {
    Evaluation ev{require({{distributivity_.holds, "poset is not distributive"}}), {}, {}};
    ev.no_case_note = "no ultrafilter satisfies the union-of-cones condition";
    for (ElementSet s : index_.filters()) {
      Case c;
      c.local = index_.is_ultrafilter(s) && condition_vii(s);
      if (!satisfies_c_condition(cp_.comp(), s)) c.failure = witness({}, {s}, fmt(s) + " violates the c-condition");
      ev.cases.push_back(c);
    }
    return ev;
  }

  Evaluation lem_joinsemi_lu() const {
    Evaluation ev;
    ev.no_case_note = "poset is neither a join- nor a meet-semilattice";
    for (ElementSet s : index_.ideals()) {
      for (std::size_t i = 0; i < size(); ++i) {
        const ElementId a(i);
        const auto u = lu_union(poset(), a, s);
        Case c;
        c.local = semilattice_.join_semilattice;
        if (!u.is_ideal) c.failure = witness({a}, {s, u.set}, "LU-union " + fmt(u.set) + " is not an ideal");
        ev.cases.push_back(c);
      }
    }
    for (ElementSet s : index_.filters()) {
      for (std::size_t i = 0; i < size(); ++i) {
        const ElementId a(i);
        const auto u = ul_union(poset(), a, s);
        Case c;
        c.local = semilattice_.meet_semilattice;
        if (!u.is_filter) c.failure = witness({a}, {s, u.set}, "UL-union " + fmt(u.set) + " is not a filter");
        ev.cases.push_back(c);
      }
    }
    return ev;
  }

  Evaluation separation_statement(SeparationMode mode) const {
    const auto& p = cp_.props();
    Evaluation ev;
    std::function<bool(ElementSet)> filter_ok;
    if (mode == SeparationMode::Second) {
      ev.global_failures = require({{distributivity_.holds, "poset is not distributive"},
                                    {p.antitone, "complementation is not antitone"}});
      ev.no_case_note = "no disjoint pair with an ultrafilter whose generator has all meets";
      filter_ok = [&](ElementSet f) {
        if (!index_.is_ultrafilter(f)) return false;
        auto g = minimum_of(poset(), f);
        if (!g) return false;
        for (ElementId x : poset().universe() - f) {
          if (!meet(poset(), x, *g)) return false;
        }
        return true;
      };
    } else {
      ev.global_failures = require({{p.antitone, "complementation is not antitone"}, {p.x_le_xdd, "x <= x'' fails"}});
      if (mode == SeparationMode::First) {
        ev.no_case_note = "no filter satisfies the c-condition while missing some ideal";
        filter_ok = [&](ElementSet f) { return satisfies_c_condition(cp_.comp(), f); };
      } else {
        ev.no_case_note = "no prime filter misses some ideal";
        filter_ok = [&](ElementSet f) { return is_prime_filter(poset(), f); };
      }
    }
    const bool global = ev.global_failures.empty();
    for (ElementSet f : index_.filters()) {
      const bool f_ok = filter_ok(f);
      for (ElementSet s : index_.ideals()) {
        if (s.intersects(f)) continue;
        Case c;
        c.local = f_ok;
        if (!separable(s, f)) {
          c.failure = witness({}, {s, f}, "no c-ideal contains " + fmt(s) + " and misses " + fmt(f));
        } else if (global && c.local) {
          const SeparationResult r = separate(mode, s, f);
          if (!r.witness) {
            c.failure = witness({}, {s, f}, "construction failed: " + std::string(to_string(*r.failure)) + " " + r.detail);
          } else if (auto bad = verify_witness(s, f, *r.witness)) {
            c.failure = witness({}, {s, f, *r.witness}, "constructed witness rejected: " + *bad);
          }
        }
        ev.cases.push_back(c);
      }
    }
    return ev;
  }

  ComplementedPoset cp_;
  SubstructureIndex index_;
  DistributivityReport distributivity_;
  SemilatticeFlags semilattice_;
  std::vector<ElementSet> c_ideals_;
  std::vector<ElementSet> c_filters_;
};

inline TheoremCheckResult check_statement(const ComplementedPoset& cp, StatementId id,
                                          const EnumerationBudget& budget = {}) {
  return Harness(cp, budget).check(id);
}

inline std::vector<TheoremCheckResult> run_all(const ComplementedPoset& cp, const EnumerationBudget& budget = {}) {
  return Harness(cp, budget).run_all();
}

inline SeparationResult separate_first(const ComplementedPoset& cp, ElementSet ideal, ElementSet filter) {
  return Harness(cp).separate_first(ideal, filter);
}

inline SeparationResult separate_prime(const ComplementedPoset& cp, ElementSet ideal, ElementSet filter) {
  return Harness(cp).separate_prime(ideal, filter);
}

inline SeparationResult separate_second(const ComplementedPoset& cp, ElementSet ideal, ElementSet filter) {
  return Harness(cp).separate_second(ideal, filter);
}

}  // namespace cposet
