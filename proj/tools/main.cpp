#include <cposet/cposet.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cposet;

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kInvalid = 3, kFailed = 4 };

/// Bad command-line arguments (unknown element in --ideal, bad tag, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::DuplicateSection:
    case ErrorKind::UnknownName:
    case ErrorKind::InvalidName:
    case ErrorKind::DuplicateName:
    case ErrorKind::DuplicateAssignment:
      return kParse;
    default:
      return kInvalid;
  }
}

struct Loaded {
  Instance instance;
  std::optional<ExpectedLists> expected;  // set when the instance is a corpus entry
};

Loaded load(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    if (auto entry = corpus_entry(source)) {
      return {to_instance(entry->name, entry->instance), entry->expected};
    }
    throw UsageError("no such file or corpus entry: " + source);
  }
  std::ifstream in(source);
  std::stringstream buf;
  buf << in.rdbuf();
  Loaded out{parse_instance(buf.str()), std::nullopt};
  if (auto entry = corpus_entry(out.instance.name)) {
    if (to_instance(entry->name, entry->instance) == out.instance) out.expected = entry->expected;
  }
  return out;
}

ComplementedPoset require_complemented(const Instance& inst, std::string_view command) {
  if (!inst.comp) {
    throw Error(ErrorKind::PartialMap,
                "'" + std::string(command) + "' needs a complementation but '" + inst.name + "' has no comp lines");
  }
  return complemented(inst);
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

std::string machine_set(const Poset& p, std::optional<ElementSet> s) { return s ? format_set(p, *s) : "-"; }

// ---------------------------------------------------------------------------

struct Options {
  std::string format = "text";
  std::string file;
  std::string cls = "all";
  std::string statements;
  std::string ideal, filter, mode = "first";
  std::vector<std::string> highlights;
  std::string emit_dir;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::string require;
  std::size_t attempts = 64;
  std::string name;
  bool machine() const { return format == "machine"; }
};

int cmd_analyze(const Options& o) {
  const Loaded l = load(o.file);
  const Report r = build_report(l.instance, l.expected ? &*l.expected : nullptr);
  std::cout << (o.machine() ? render_machine(r) : render_text(r, l.instance.poset));
  const bool failed = std::any_of(r.theorems.begin(), r.theorems.end(),
                                  [](const TheoremCheckResult& t) { return t.counterexample.has_value(); });
  return failed ? kFailed : kOk;
}

int cmd_family(const Options& o, bool as_ideal) {
  const auto& classes = as_ideal ? kIdealClasses : kFilterClasses;
  if (std::find(std::begin(classes), std::end(classes), o.cls) == std::end(classes)) {
    throw UsageError("unknown class '" + o.cls + "'");
  }
  const Loaded l = load(o.file);
  const Poset& p = l.instance.poset;
  const bool needs_comp = o.cls == "c-ideal" || o.cls == "c-filter" || o.cls == "c-condition";
  const SubstructureIndex index(p);
  std::optional<ComplementedPoset> cp;
  if (needs_comp) cp = require_complemented(l.instance, as_ideal ? "ideals" : "filters");
  else if (l.instance.comp) cp = complemented(l.instance);

  for (ElementSet s : as_ideal ? index.ideals() : index.filters()) {
    const SubsetClassification c = cp ? classify(index, cp->comp(), s) : classify_order(index, s);
    if (!in_class(c, o.cls, as_ideal)) continue;
    if (o.machine()) {
      write_machine_classification(std::cout, p, as_ideal ? "ideal" : "filter", c);
    } else {
      std::cout << principal_label(p, s, as_ideal) << ' ' << format_set(p, s) << '\n';
    }
  }
  return kOk;
}

int cmd_check(const Options& o) {
  std::vector<StatementId> ids;
  const bool explicit_list = !o.statements.empty();
  if (explicit_list) {
    for (const auto& tag : split_commas(o.statements)) {
      auto id = statement_from_tag(tag);
      if (!id) throw UsageError("unknown statement tag '" + tag + "'");
      ids.push_back(*id);
    }
  } else {
    for (const auto& s : kStatements) ids.push_back(s.id);
  }
  const Loaded l = load(o.file);
  const Harness h(require_complemented(l.instance, "check"));
  int code = kOk;
  for (StatementId id : ids) {
    const TheoremCheckResult t = h.check(id);
    if (o.machine()) write_machine_theorem(std::cout, l.instance.poset, t);
    else write_text_theorem(std::cout, t);
    if (t.counterexample) code = kFailed;
    if (explicit_list && is_separation_statement(id) && !t.hypotheses_met) code = kFailed;
  }
  return code;
}

int cmd_separate(const Options& o) {
  SeparationMode mode;
  if (o.mode == "first") mode = SeparationMode::First;
  else if (o.mode == "prime") mode = SeparationMode::Prime;
  else if (o.mode == "second") mode = SeparationMode::Second;
  else throw UsageError("unknown mode '" + o.mode + "'");

  const Loaded l = load(o.file);
  const Poset& p = l.instance.poset;
  const ElementSet ideal = as_usage([&] { return parse_set_expression(p, o.ideal, BareToken::LowerCone); });
  const ElementSet filter = as_usage([&] { return parse_set_expression(p, o.filter, BareToken::UpperCone); });
  const Harness h(require_complemented(l.instance, "separate"));
  const SeparationResult r = h.separate(mode, ideal, filter);
  std::optional<std::string> rejected;
  if (r.witness) rejected = h.verify_witness(ideal, filter, *r.witness);

  if (o.machine()) {
    std::cout << "separation mode=" << o.mode << " ideal=" << format_set(p, ideal) << " filter=" << format_set(p, filter)
              << " witness=" << machine_set(p, r.witness)
              << " failure=" << (r.failure ? std::string(to_string(*r.failure)) : "-")
              << " generator=" << (r.generator ? p.name(*r.generator) : "-")
              << " verified=" << (r.witness && !rejected ? "true" : "false") << '\n';
    if (!r.detail.empty()) std::cout << "detail " << r.detail << '\n';
    if (rejected) std::cout << "rejected " << *rejected << '\n';
  } else {
    std::cout << "I = " << principal_label(p, ideal, true) << ' ' << format_set(p, ideal) << '\n'
              << "F = " << principal_label(p, filter, false) << ' ' << format_set(p, filter) << '\n';
    if (r.generator) std::cout << "g = " << p.name(*r.generator) << " (U(g) = F)\n";
    if (r.witness) {
      std::cout << "J = " << principal_label(p, *r.witness, true) << ' ' << format_set(p, *r.witness) << '\n';
      std::cout << (rejected ? "re-check FAILED: " + *rejected : std::string("re-check: c-ideal, I within J, J misses F"))
                << '\n';
    } else {
      std::cout << "no separation: " << to_string(*r.failure) << ": " << r.detail << '\n';
    }
  }
  return r.witness && !rejected ? kOk : kFailed;
}

int cmd_dot(const Options& o) {
  const Loaded l = load(o.file);
  std::vector<Highlight> hs;
  for (const auto& h : o.highlights) {
    hs.push_back({h, as_usage([&] { return parse_set_expression(l.instance.poset, h); })});
  }
  std::cout << emit_dot(l.instance.poset, hs, l.instance.name);
  return kOk;
}

int cmd_corpus(const Options& o) {
  for (const auto& e : builtin_corpus()) {
    const Instance inst = to_instance(e.name, e.instance);
    if (!o.emit_dir.empty()) {
      std::filesystem::create_directories(o.emit_dir);
      const auto path = std::filesystem::path(o.emit_dir) / (e.name + ".poset");
      std::ofstream(path) << emit_instance(inst);
      std::cout << path.string() << '\n';
    } else if (o.machine()) {
      std::cout << "corpus " << e.name << " elements=" << inst.poset.size() << " covers=" << inst.poset.cover_count()
                << '\n';
    } else {
      std::cout << e.name << ": " << inst.poset.size() << " elements, " << inst.poset.cover_count() << " covers\n";
    }
  }
  return kOk;
}

int cmd_gen(const Options& o) {
  ComplementConstraints want;
  for (const auto& r : split_commas(o.require)) {
    if (r == "antitone") want.antitone = true;
    else if (r == "involution") want.involution = true;
    else if (r == "x_le_xdd") want.x_le_xdd = true;
    else if (r == "xdd_le_x") want.xdd_le_x = true;
    else if (r == "triple_identity") want.triple_identity = true;
    else throw UsageError("unknown constraint '" + r + "'");
  }
  auto cp = as_usage([&] { return random_complemented_poset(o.size, o.seed, want, o.attempts); });
  if (!cp) {
    std::cerr << "error: no complemented poset of size " << o.size << " meeting the constraints within "
              << o.attempts << " attempts\n";
    return kInvalid;
  }
  const std::string name = o.name.empty() ? "gen_n" + std::to_string(o.size) + "_s" + std::to_string(o.seed) : o.name;
  std::cout << emit_instance(to_instance(name, *cp));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite complemented posets: ideals, filters, c-ideals and separation"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Full report for an instance file or corpus entry");
  analyze->add_option("file", o.file, "Instance file or corpus name")->required();

  auto* ideals = app.add_subcommand("ideals", "List ideals of a class");
  ideals->add_option("file", o.file)->required();
  ideals->add_option("--class", o.cls, "all|proper|maximal|prime|c-ideal|c-condition")->capture_default_str();

  auto* filters = app.add_subcommand("filters", "List filters of a class");
  filters->add_option("file", o.file)->required();
  filters->add_option("--class", o.cls, "all|proper|ultrafilter|prime|c-filter|c-condition")->capture_default_str();

  auto* check = app.add_subcommand("check", "Verify statements");
  check->add_option("file", o.file)->required();
  check->add_option("--statement", o.statements, "Comma separated statement tags (default: all)");

  auto* separate = app.add_subcommand("separate", "Construct a c-ideal separating an ideal from a filter");
  separate->add_option("file", o.file)->required();
  separate->add_option("--ideal", o.ideal, "Element x for L(x), or L(x), U(x), {a,b}")->required();
  separate->add_option("--filter", o.filter, "Element x for U(x), or L(x), U(x), {a,b}")->required();
  separate->add_option("--mode", o.mode, "first|prime|second")->capture_default_str();

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("file", o.file)->required();
  dot->add_option("--highlight", o.highlights, "Set to fill, e.g. L(a') or {a,b}; repeatable");

  auto* corpus = app.add_subcommand("corpus", "List or export the built-in corpus");
  corpus->add_option("--emit", o.emit_dir, "Write <name>.poset files into this directory");

  auto* gen = app.add_subcommand("gen", "Seeded random complemented poset");
  gen->add_option("--size", o.size, "Number of elements (2..24)")->required();
  gen->add_option("--seed", o.seed)->required();
  gen->add_option("--require", o.require, "Comma separated: antitone,involution,x_le_xdd,xdd_le_x,triple_identity");
  gen->add_option("--attempts", o.attempts)->capture_default_str();
  gen->add_option("--name", o.name, "Instance name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*ideals) return cmd_family(o, true);
    if (*filters) return cmd_family(o, false);
    if (*check) return cmd_check(o);
    if (*separate) return cmd_separate(o);
    if (*dot) return cmd_dot(o);
    if (*corpus) return cmd_corpus(o);
    if (*gen) return cmd_gen(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}
