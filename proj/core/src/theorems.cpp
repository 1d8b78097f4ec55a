#include "commprob/theorems.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "commprob/constructors.hpp"
#include "commprob/isoclinism.hpp"
#include "commprob/probability.hpp"

namespace commprob {

namespace {

const FiniteGroup& reference_a4() {
  static const FiniteGroup g = named("A4");
  return g;
}

const FiniteGroup& reference_c5c5c3() {
  static const FiniteGroup g = named("(C5xC5):C3");
  return g;
}

struct Facts {
  Rational d;
  bool odd = false;
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  std::size_t derived_order = 0;
  bool iso_a4 = false;
  bool quotient_iso_a4 = false;
  bool iso_c5c5c3 = false;
};

Facts gather(const FiniteGroup& g) {
  Facts f;
  f.d = commuting_probability(g);
  f.odd = g.order() % 2 == 1;
  f.abelian = g.is_abelian();
  f.nilpotent = is_nilpotent(g);
  f.supersolvable = is_supersolvable(g);
  f.derived_order = derived_subgroup(g).order();
  f.iso_a4 = are_isoclinic(g, reference_a4());
  f.quotient_iso_a4 = are_isoclinic(quotient(g, center(g)), reference_a4());
  f.iso_c5c5c3 = are_isoclinic(g, reference_c5c5c3());
  return f;
}

Verdict make(std::string statement, VerdictStatus status, std::string detail) {
  return Verdict{std::move(statement), status, std::move(detail), std::nullopt};
}

Verdict not_applicable(std::string statement, const std::string& why) {
  return make(std::move(statement), VerdictStatus::NotApplicable, "not applicable: " + why);
}

Verdict threshold_5_16(const Facts& f) {
  const char* id = "supersolvable-above-5/16";
  if (!(f.d > Rational(5, 16))) return not_applicable(id, "d = " + f.d.to_string() + " <= 5/16");
  std::vector<std::string> via;
  if (f.supersolvable) via.emplace_back("supersolvable");
  if (f.iso_a4) via.emplace_back("isoclinic to A4");
  if (f.quotient_iso_a4) via.emplace_back("G/Z(G) isoclinic to A4");
  if (via.empty()) {
    return make(id, VerdictStatus::Fails, "d = " + f.d.to_string() + " > 5/16 but no disjunct holds");
  }
  std::string detail = "holds via";
  for (std::size_t i = 0; i < via.size(); ++i) detail += (i ? ", " : " ") + via[i];
  return make(id, VerdictStatus::Holds, detail);
}

Verdict threshold_one_third(const Facts& f) {
  const char* id = "supersolvable-or-A4-at-1/3";
  if (f.d < Rational(1, 3)) return not_applicable(id, "d = " + f.d.to_string() + " < 1/3");
  if (f.supersolvable) return make(id, VerdictStatus::Holds, "holds via supersolvable");
  if (f.iso_a4) return make(id, VerdictStatus::Holds, "holds via isoclinic to A4");
  return make(id, VerdictStatus::Fails, "d = " + f.d.to_string() + " >= 1/3 but neither disjunct holds");
}

Verdict threshold_odd(const Facts& f) {
  const char* id = "odd-supersolvable-above-35/243";
  if (!f.odd) return not_applicable(id, "even order");
  if (!(f.d > Rational(35, 243))) return not_applicable(id, "d = " + f.d.to_string() + " <= 35/243");
  if (f.supersolvable) return make(id, VerdictStatus::Holds, "holds via supersolvable");
  if (f.iso_c5c5c3) return make(id, VerdictStatus::Holds, "holds via isoclinic to (C5xC5):C3");
  return make(id, VerdictStatus::Fails, "odd order, d = " + f.d.to_string() + " > 35/243 but neither disjunct holds");
}

void gustafson_verdicts(const Facts& f, std::vector<Verdict>& out) {
  if (f.d > Rational(5, 8)) {
    out.push_back(make("abelian-above-5/8", f.abelian ? VerdictStatus::Holds : VerdictStatus::Fails,
                       f.abelian ? "abelian" : "d > 5/8 but not abelian"));
  } else {
    out.push_back(not_applicable("abelian-above-5/8", "d = " + f.d.to_string() + " <= 5/8"));
  }
  if (f.d > Rational(1, 2)) {
    out.push_back(make("nilpotent-above-1/2", f.nilpotent ? VerdictStatus::Holds : VerdictStatus::Fails,
                       f.nilpotent ? "nilpotent" : "d > 1/2 but not nilpotent"));
  } else {
    out.push_back(not_applicable("nilpotent-above-1/2", "d = " + f.d.to_string() + " <= 1/2"));
  }
}

void character_bound_verdicts(const FiniteGroup& g, const Facts& f, std::vector<Verdict>& out) {
  std::size_t k = static_cast<std::size_t>(f.d.numerator()) * (g.order() / static_cast<std::size_t>(f.d.denominator()));
  std::size_t linear = g.order() / f.derived_order;
  auto line = [&](int c) {
    std::ostringstream s;
    s << "|G| = " << g.order() << ", [G:G'] + " << c << "(k - [G:G']) = "
      << static_cast<long long>(linear) + c * (static_cast<long long>(k) - static_cast<long long>(linear));
    return s.str();
  };
  bool four = check_character_bound(g, 4);
  out.push_back(make("character-bound-4", four ? VerdictStatus::Holds : VerdictStatus::Fails, line(4)));
  if (f.odd) {
    bool nine = check_character_bound(g, 9);
    out.push_back(make("character-bound-9", nine ? VerdictStatus::Holds : VerdictStatus::Fails, line(9)));
  } else {
    out.push_back(not_applicable("character-bound-9", "even order"));
  }
}

void derived_order_verdicts(const FiniteGroup& g, std::vector<Verdict>& out) {
  DerivedOrderWitness w = derived_order_bound_witness(g);
  auto verdict = [&](const char* id, Implication imp, const std::string& premise, std::size_t bound) {
    std::string detail = "|G'| = " + std::to_string(w.derived_order);
    switch (imp) {
      case Implication::Vacuous:
        return not_applicable(id, premise + " fails");
      case Implication::Satisfied:
        return make(id, VerdictStatus::Holds, detail + " < " + std::to_string(bound));
      case Implication::Violated:
        break;
    }
    return make(id, VerdictStatus::Fails, detail + " >= " + std::to_string(bound));
  };
  out.push_back(verdict("derived-order-below-12", w.above_5_16, "d > 5/16", 12));
  out.push_back(verdict("derived-order-below-27", w.odd_above_35_243, "odd order and d > 35/243", 27));
}

bool wants(const std::set<std::string>& families, const char* family) {
  return families.empty() || families.count("all") || families.count(family);
}

std::string describe_subgroup(const Subgroup& n) { return "N of order " + std::to_string(n.order()); }

}  // namespace

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds:
      return "holds";
    case VerdictStatus::Fails:
      return "fails";
    case VerdictStatus::NotApplicable:
      return "not_applicable";
    case VerdictStatus::PreconditionFailed:
      return "precondition_failed";
  }
  return "?";
}

bool is_klein_four(const Subgroup& n) {
  if (n.order() != 4) return false;
  const FiniteGroup& g = n.parent();
  return std::all_of(n.members().begin(), n.members().end(),
                     [&](Index x) { return g.mul(x, x) == g.identity(); });
}

std::string normal_label(std::size_t position, const Subgroup& n) {
  return "N#" + std::to_string(position) + " (order " + std::to_string(n.order()) + ")";
}

GroupReport analyze(const FiniteGroup& g, std::string name) {
  VerifyOptions opts;
  opts.theorems = {"gustafson", "5-16", "one-third", "odd", "char-bound", "derived-order"};
  return verify_group(g, name, opts);
}

Verdict verify_supersolvable_above_5_16(const FiniteGroup& g) { return threshold_5_16(gather(g)); }

Verdict verify_supersolvable_or_a4_at_one_third(const FiniteGroup& g) { return threshold_one_third(gather(g)); }

Verdict verify_odd_above_35_243(const FiniteGroup& g) {
  if (g.order() % 2 == 0) return not_applicable("odd-supersolvable-above-35/243", "even order");
  return threshold_odd(gather(g));
}

Verdict verify_small_class_in_split_normal(const FiniteGroup& g, const Subgroup& n, std::size_t s) {
  const char* id = "small-class-in-split-normal";
  auto precondition = [&](const std::string& why) {
    return make(id, VerdictStatus::PreconditionFailed, "precondition failed: " + why);
  };
  if (s < 2) return precondition("s must be at least 2");
  if (&n.parent() != &g) return precondition("subgroup of a different group");
  if (n.is_trivial()) return precondition("N is trivial");
  if (!is_normal(g, n)) return precondition("N is not normal");
  if (!n.is_abelian()) return precondition("N is not abelian");
  if (!n.is_whole() && !find_complement(g, n)) return precondition("G does not split over N");

  const std::string where = describe_subgroup(n) + ", s = " + std::to_string(s);
  Rational d = commuting_probability(g);
  Rational bound(1, static_cast<std::int64_t>(s));
  if (!(d > bound)) return not_applicable(id, where + ": d = " + d.to_string() + " <= " + bound.to_string());

  std::optional<ConjugacyClass> smallest;
  for (auto& c : classes_inside(g, n)) {
    if (c.representative == g.identity()) continue;
    if (!smallest || c.size() < smallest->size()) smallest = std::move(c);
  }
  Verdict v;
  v.statement = id;
  v.witness_class_size = smallest->size();
  if (smallest->size() > s - 1) {
    v.status = VerdictStatus::Fails;
    v.detail = where + ": smallest nontrivial class inside N has size " + std::to_string(smallest->size());
    return v;
  }
  // The centralizer of the witness gives the second conclusion.
  std::size_t index = centralizer(g, smallest->representative).index();
  bool consequence = smallest->size() == 1 ? !center(g).is_trivial() : (index == smallest->size() && index <= s - 1);
  v.status = consequence ? VerdictStatus::Holds : VerdictStatus::Fails;
  std::ostringstream detail;
  detail << where << ": class of element " << smallest->representative << " has size " << smallest->size()
         << " <= " << s - 1 << "; ";
  if (smallest->size() == 1) {
    detail << "Z(G) != 1";
  } else {
    detail << "its centralizer is a proper subgroup of index " << index;
  }
  v.detail = detail.str();
  return v;
}

Verdict verify_klein_fixed_point(const FiniteGroup& g, const Subgroup& n) {
  const char* id = "klein-fixed-point";
  auto precondition = [&](const std::string& why) {
    return make(id, VerdictStatus::PreconditionFailed, "precondition failed: " + why);
  };
  if (&n.parent() != &g) return precondition("subgroup of a different group");
  if (!is_klein_four(n)) return precondition("N is not isomorphic to C2xC2");
  if (!is_normal(g, n)) return precondition("N is not normal");
  if (!n.is_whole() && !find_complement(g, n)) return precondition("G does not split over N");

  Rational d = commuting_probability(g);
  if (!(d > Rational(1, 3))) return not_applicable(id, "d = " + d.to_string() + " <= 1/3");
  Subgroup z = center(g);
  for (Index x : n.members()) {
    if (x != g.identity() && z.contains(x)) {
      return make(id, VerdictStatus::Holds, "element " + std::to_string(x) + " of N is central");
    }
  }
  return make(id, VerdictStatus::Fails, "d = " + d.to_string() + " > 1/3 but no nontrivial element of N is central");
}

Verdict verify_gallagher(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) {
    return make("gallagher", VerdictStatus::PreconditionFailed, "precondition failed: N is not normal");
  }
  GallagherResult r = gallagher_check(g, n);
  std::ostringstream detail;
  detail << "k(G) = " << r.class_count << ", k(G/N) k(N) = " << r.quotient_class_count << "*"
         << r.normal_class_count << "; equality " << (r.equality ? "yes" : "no") << "; centralizers match "
         << (r.centralizers_match ? "yes" : "no") << "; d(G) <= d(G/N) d(N) "
         << (r.probability_bound ? "yes" : "no");
  bool ok = r.holds && r.probability_bound;
  return make("gallagher", ok ? VerdictStatus::Holds : VerdictStatus::Fails, detail.str());
}

GroupReport verify_group(const FiniteGroup& g, const std::string& name, const VerifyOptions& options) {
  GroupReport r;
  r.name = name;
  r.order = g.order();
  r.class_count = class_count(g);
  r.d = commuting_probability(g);
  r.acs = average_class_size(g);
  r.odd = g.order() % 2 == 1;
  Subgroup z = center(g);
  Subgroup gd = derived_subgroup(g);
  r.center_order = z.order();
  r.derived_order = gd.order();
  r.derived_index = gd.index();
  r.solvable = is_solvable(g);
  r.stem = z.is_subset_of(gd);

  Facts f = gather(g);
  r.abelian = f.abelian;
  r.nilpotent = f.nilpotent;
  r.supersolvable = f.supersolvable;
  r.isoclinic_to_a4 = f.iso_a4;
  r.quotient_by_center_isoclinic_to_a4 = f.quotient_iso_a4;
  r.isoclinic_to_c5c5c3 = f.iso_c5c5c3;

  const auto& fam = options.theorems;
  if (wants(fam, "gustafson")) gustafson_verdicts(f, r.verdicts);
  if (wants(fam, "5-16")) r.verdicts.push_back(threshold_5_16(f));
  if (wants(fam, "one-third")) r.verdicts.push_back(threshold_one_third(f));
  if (wants(fam, "odd")) r.verdicts.push_back(threshold_odd(f));
  if (wants(fam, "char-bound")) character_bound_verdicts(g, f, r.verdicts);
  if (wants(fam, "derived-order")) derived_order_verdicts(g, r.verdicts);

  bool per_normal = wants(fam, "gallagher") || wants(fam, "class-size") || wants(fam, "klein");
  if (!per_normal) return r;

  auto normals = normal_subgroups(g);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Subgroup& n = normals[i];
    const std::string label = normal_label(i, n);
    if (wants(fam, "gallagher")) {
      Verdict v = verify_gallagher(g, n);
      v.detail = label + ": " + v.detail;
      r.verdicts.push_back(std::move(v));
    }
    if (n.is_trivial()) continue;
    bool abelian = n.is_abelian();
    bool klein = is_klein_four(n);
    if (!(wants(fam, "class-size") && abelian) && !(wants(fam, "klein") && klein)) continue;
    bool splits = n.is_whole() || find_complement(g, n).has_value();
    if (!splits) continue;
    if (wants(fam, "class-size") && abelian) {
      for (std::size_t s : options.s_values) {
        Verdict v = verify_small_class_in_split_normal(g, n, s);
        v.detail = label + ": " + v.detail;
        r.verdicts.push_back(std::move(v));
      }
    }
    if (wants(fam, "klein") && klein) {
      Verdict v = verify_klein_fixed_point(g, n);
      v.detail = label + ": " + v.detail;
      r.verdicts.push_back(std::move(v));
    }
  }
  return r;
}

VerificationSummary summarize(const std::vector<GroupReport>& reports) {
  VerificationSummary s;
  s.groups = reports.size();
  for (const auto& r : reports) {
    for (const auto& v : r.verdicts) {
      ++s.verdicts;
      switch (v.status) {
        case VerdictStatus::Holds:
          ++s.applicable;
          ++s.holds;
          break;
        case VerdictStatus::Fails:
          ++s.applicable;
          ++s.failures;
          break;
        case VerdictStatus::NotApplicable:
          ++s.vacuous;
          break;
        case VerdictStatus::PreconditionFailed:
          ++s.precondition_failures;
          break;
      }
    }
  }
  return s;
}

CatalogVerification run_catalog_verification(const VerifyOptions& options) {
  std::vector<std::pair<std::string, FiniteGroup>> work;
  if (options.names.empty() && options.extra_groups.empty()) {
    for (const auto& e : catalog()) work.emplace_back(e.key, named(e.key, options.limits));
  } else {
    for (const auto& key : options.names) work.emplace_back(key, named(key, options.limits));
  }
  for (const auto& extra : options.extra_groups) work.push_back(extra);

  // Warm shared caches before fanning out.
  reference_a4();
  reference_c5c5c3();

  CatalogVerification out;
  out.reports.resize(work.size());
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) {
      out.reports[i] = verify_group(work[i].second, work[i].first, options);
    }
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned t = 0; t < jobs; ++t) {
      tasks.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < work.size(); i += jobs) {
          out.reports[i] = verify_group(work[i].second, work[i].first, options);
        }
      }));
    }
    for (auto& task : tasks) task.get();
  }
  out.summary = summarize(out.reports);
  return out;
}

}  // namespace commprob
