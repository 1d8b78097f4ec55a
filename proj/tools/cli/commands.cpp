#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commprob/constructors.hpp"
#include "commprob/isoclinism.hpp"
#include "commprob/structure.hpp"
#include "commprob/theorems.hpp"
#include "group_file.hpp"
#include "report.hpp"

namespace commprob::cli {

namespace {

struct Common {
  std::size_t max_order = Limits{}.max_order;
  std::size_t oracle_cap = Limits{}.oracle_cap;
  std::string format = "json";

  Limits limits() const {
    Limits l;
    l.max_order = max_order;
    l.oracle_cap = oracle_cap;
    return l;
  }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--max-order", c.max_order, "Refuse groups larger than this")->capture_default_str();
  app->add_option("--oracle-cap", c.oracle_cap, "Largest order for brute-force oracles")->capture_default_str();
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

struct Loaded {
  std::string name;
  FiniteGroup group;
};

Loaded load_file(const std::string& path, const Limits& limits) {
  GroupFile f = read_group_file(path);
  return Loaded{path, generate_group(f.degree, f.generators, limits)};
}

Loaded load_name(const std::string& key, const Limits& limits) { return Loaded{key, named(key, limits)}; }

std::vector<std::string> per_normal_families() { return {"gallagher", "class-size", "klein"}; }

bool is_per_normal(const std::string& family) {
  auto f = per_normal_families();
  return std::find(f.begin(), f.end(), family) != f.end();
}

Subgroup select_normal(const FiniteGroup& g, const std::string& spec, std::size_t& position) {
  auto normals = normal_subgroups(g);
  auto locate = [&](const Subgroup& n) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (normals[i].members() == n.members()) {
        position = i;
        return normals[i];
      }
    }
    throw Error("normal subgroup not found among normal_subgroups");
  };
  if (spec == "center") return locate(center(g));
  if (spec == "derived") return locate(derived_subgroup(g));
  if (spec == "klein") {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (is_klein_four(normals[i])) {
        position = i;
        return normals[i];
      }
    }
    throw PreconditionError("--normal klein: group has no normal subgroup isomorphic to C2xC2");
  }
  if (spec == "minimal") {
    if (g.order() == 1) throw PreconditionError("--normal minimal: the trivial group has no minimal normal subgroup");
    return locate(minimal_normal_subgroups(g).front());
  }
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), index);
  if (ec != std::errc() || ptr != spec.data() + spec.size()) {
    throw PreconditionError("--normal expects center, derived, klein, minimal or an index, got '" + spec + "'");
  }
  if (index >= normals.size()) {
    throw PreconditionError("--normal " + spec + ": group has only " + std::to_string(normals.size()) +
                            " normal subgroups");
  }
  position = index;
  return normals[index];
}

void emit_report(const GroupReport& r, const Common& c, std::ostream& out) {
  if (c.json()) {
    out << to_json(r).dump() << '\n';
  } else {
    out << to_table(r);
  }
}

void emit_summary(const VerificationSummary& s, const Common& c, std::ostream& out) {
  if (c.json()) {
    out << to_json(s).dump() << '\n';
  } else {
    out << to_table(s);
  }
}

std::string catalog_help() {
  std::string text = "Catalog keys:";
  for (const auto& e : catalog()) text += " " + e.key;
  text += "\nKey grammar: Cn, Cn^k, AxB, N:Cm/k (k-th automorphism of N of order dividing m)";
  return text;
}

struct AnalyzeArgs {
  Common common;
  std::string name;
  std::vector<std::string> files;
};

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  Limits limits = a.common.limits();
  std::vector<Loaded> groups;
  if (!a.name.empty()) groups.push_back(load_name(a.name, limits));
  for (const auto& f : a.files) groups.push_back(load_file(f, limits));
  if (groups.empty()) throw PreconditionError("analyze: give a group file or --name");
  for (const auto& g : groups) emit_report(analyze(g.group, g.name), a.common, out);
  return kSuccess;
}

struct VerifyArgs {
  Common common;
  bool all = false;
  std::vector<std::string> names;
  std::vector<std::string> files;
  std::vector<std::string> theorems;
  std::vector<std::size_t> s_values;
  std::string normal;
  unsigned jobs = 1;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.limits = a.common.limits();
  options.jobs = std::max(1u, a.jobs);
  for (const auto& t : a.theorems) options.theorems.insert(t);
  if (!a.s_values.empty()) options.s_values = a.s_values;
  for (std::size_t s : options.s_values) {
    if (s < 2) throw PreconditionError("--s must be at least 2");
  }
  if (!a.all && a.names.empty() && a.files.empty()) {
    throw PreconditionError("verify: give --all, --name or a group file");
  }
  if (!a.all) options.names = a.names;
  if (a.all && !a.names.empty()) throw PreconditionError("verify: --all and --name are exclusive");
  for (const auto& f : a.files) {
    Loaded l = load_file(f, options.limits);
    options.extra_groups.emplace_back(l.name, std::move(l.group));
  }
  // Validate names before any work so typos are input errors.
  for (const auto& n : options.names) named(n, options.limits);

  if (a.normal.empty()) {
    CatalogVerification result = run_catalog_verification(options);
    for (const auto& r : result.reports) emit_report(r, a.common, out);
    emit_summary(result.summary, a.common, out);
    return result.ok() ? kSuccess : kVerificationFailure;
  }

  // An explicit N: group-level families as usual, per-N families on N only.
  std::set<std::string> wanted = options.theorems;
  if (wanted.empty()) wanted.insert(theorem_families().begin(), theorem_families().end());
  VerifyOptions group_level = options;
  group_level.theorems.clear();
  for (const auto& t : wanted) {
    if (!is_per_normal(t)) group_level.theorems.insert(t);
  }
  bool any_group_level = !group_level.theorems.empty();

  std::vector<Loaded> groups;
  if (a.all) {
    for (const auto& e : catalog()) groups.push_back(load_name(e.key, options.limits));
  }
  for (const auto& n : options.names) groups.push_back(load_name(n, options.limits));
  for (auto& [name, g] : options.extra_groups) groups.push_back(Loaded{name, g});

  std::vector<GroupReport> reports;
  bool precondition_failed = false;
  for (const auto& l : groups) {
    const FiniteGroup& g = l.group;
    GroupReport r;
    if (any_group_level) {
      r = verify_group(g, l.name, group_level);
    } else {
      VerifyOptions invariants_only = group_level;
      invariants_only.theorems = {"gustafson"};
      r = verify_group(g, l.name, invariants_only);
      r.verdicts.clear();
    }
    std::size_t position = 0;
    Subgroup n = select_normal(g, a.normal, position);
    std::string label = normal_label(position, n);
    auto push = [&](Verdict v) {
      if (v.status == VerdictStatus::PreconditionFailed) precondition_failed = true;
      v.detail = label + ": " + v.detail;
      r.verdicts.push_back(std::move(v));
    };
    if (wanted.count("gallagher")) push(verify_gallagher(g, n));
    if (wanted.count("class-size")) {
      for (std::size_t s : options.s_values) push(verify_small_class_in_split_normal(g, n, s));
    }
    if (wanted.count("klein")) push(verify_klein_fixed_point(g, n));
    emit_report(r, a.common, out);
    reports.push_back(std::move(r));
  }
  VerificationSummary summary = summarize(reports);
  emit_summary(summary, a.common, out);
  if (summary.failures > 0) return kVerificationFailure;
  return precondition_failed ? kInputError : kSuccess;
}

struct IsoclinicArgs {
  Common common;
  std::string name;
  std::string name2;
  std::vector<std::string> files;
  bool witness = false;
};

int do_isoclinic(const IsoclinicArgs& a, std::ostream& out) {
  Limits limits = a.common.limits();
  std::vector<Loaded> groups;
  if (!a.name.empty()) groups.push_back(load_name(a.name, limits));
  if (!a.name2.empty()) groups.push_back(load_name(a.name2, limits));
  for (const auto& f : a.files) groups.push_back(load_file(f, limits));
  if (groups.size() != 2) throw PreconditionError("isoclinic: give exactly two groups (--name, --name2 or files)");

  PairingStructure pa = commutator_pairing(groups[0].group);
  PairingStructure pb = commutator_pairing(groups[1].group);
  auto w = find_isoclinism(pa, pb);
  bool verified = w && verify_isoclinism(pa, pb, *w);
  if (w && !verified) throw Error("isoclinism witness failed verification");

  if (a.common.json()) {
    Json j;
    j["group"] = groups[0].name;
    j["group2"] = groups[1].name;
    j["isoclinic"] = w.has_value();
    if (a.witness && w) {
      j["witness"] = {{"quotient_order", pa.inner_quotient.order()},
                      {"derived_order", pa.derived.order()},
                      {"quotient_iso", w->quotient_iso},
                      {"derived_iso", w->derived_iso},
                      {"verified", verified}};
    }
    out << j.dump() << '\n';
  } else {
    out << groups[0].name << " and " << groups[1].name << (w ? " are isoclinic\n" : " are not isoclinic\n");
    if (a.witness && w) {
      out << "  G/Z(G) of order " << pa.inner_quotient.order() << ", G' of order " << pa.derived.order()
          << ", witness verified\n";
      out << "  quotient map:";
      for (Index x : w->quotient_iso) out << ' ' << x;
      out << "\n  derived map:";
      for (Index x : w->derived_iso) out << ' ' << x;
      out << '\n';
    }
  }
  return kSuccess;
}

int do_catalog_list(const Common& c, std::ostream& out) {
  Limits limits = c.limits();
  if (c.json()) {
    Json arr = Json::array();
    for (const auto& e : catalog()) {
      Json j;
      j["key"] = e.key;
      j["order"] = named(e.key, limits).order();
      j["description"] = e.description;
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
  } else {
    for (const auto& e : catalog()) {
      out << std::left << std::setw(14) << e.key << std::right << std::setw(5) << named(e.key, limits).order()
          << "  " << e.description << '\n';
    }
  }
  return kSuccess;
}

struct ConstructArgs {
  Common common;
  std::string n;
  std::string h;
  std::string action;
};

int do_construct_semidirect(const ConstructArgs& a, std::ostream& out) {
  Limits limits = a.common.limits();
  FiniteGroup n = named(a.n, limits);
  FiniteGroup h = named(a.h, limits);
  GroupFile action = read_group_file(a.action);
  if (action.degree != n.order()) {
    throw InputError(0, a.action + ": action degree " + std::to_string(action.degree) + " must equal |N| = " +
                            std::to_string(n.order()));
  }
  if (action.generators.size() != h.generators().size()) {
    throw InputError(0, a.action + ": expected one automorphism per generator of " + a.h + " (" +
                            std::to_string(h.generators().size()) + "), got " +
                            std::to_string(action.generators.size()));
  }
  ActionSpec spec{h.generators(), action.generators};
  SemidirectProduct sp = semidirect_product(n, h, spec, limits);
  out << format_group_file(sp.group, a.n + " x| " + a.h + ", order " + std::to_string(sp.group.order()));
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting probability and structure of small permutation groups"};
  app.footer(catalog_help());
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants and threshold statements for one group");
  add_common(analyze_cmd, analyze_args.common);
  analyze_cmd->add_option("--name", analyze_args.name, "Catalog key");
  analyze_cmd->add_option("files", analyze_args.files, "Group files");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check statements over catalog groups or group files");
  add_common(verify_cmd, verify_args.common);
  verify_cmd->add_flag("--all", verify_args.all, "Whole catalog");
  verify_cmd->add_option("--name", verify_args.names, "Catalog key (repeatable)");
  verify_cmd->add_option("files", verify_args.files, "Group files");
  verify_cmd->add_option("--theorem", verify_args.theorems, "Statement family (repeatable)")
      ->check(CLI::IsMember(theorem_families()));
  verify_cmd->add_option("--s", verify_args.s_values, "Class-size parameter (repeatable)");
  verify_cmd->add_option("--normal", verify_args.normal,
                         "Restrict per-subgroup statements to one N: center, derived, klein, minimal or an index");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->capture_default_str();

  IsoclinicArgs iso_args;
  auto* iso_cmd = app.add_subcommand("isoclinic", "Decide isoclinism of two groups");
  add_common(iso_cmd, iso_args.common);
  iso_cmd->add_option("--name", iso_args.name, "First catalog key");
  iso_cmd->add_option("--name2", iso_args.name2, "Second catalog key");
  iso_cmd->add_option("files", iso_args.files, "Group files");
  iso_cmd->add_flag("--witness", iso_args.witness, "Print the isoclinism");

  Common catalog_common;
  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in groups");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog keys");
  add_common(list_cmd, catalog_common);

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build groups");
  construct_cmd->require_subcommand(1);
  auto* semidirect_cmd = construct_cmd->add_subcommand("semidirect", "N x| H from an action file");
  semidirect_cmd->set_help_flag("--help", "Print this help message and exit");
  add_common(semidirect_cmd, construct_args.common);
  semidirect_cmd->add_option("--n", construct_args.n, "Catalog key of N")->required();
  semidirect_cmd->add_option("--h", construct_args.h, "Catalog key of H")->required();
  semidirect_cmd->add_option("--action", construct_args.action, "Automorphism images per H generator")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*analyze_cmd) return do_analyze(analyze_args, out);
    if (*verify_cmd) return do_verify(verify_args, out);
    if (*iso_cmd) return do_isoclinic(iso_args, out);
    if (*list_cmd) return do_catalog_list(catalog_common, out);
    if (*semidirect_cmd) return do_construct_semidirect(construct_args, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace commprob::cli
