// One line per criterion; exit status is nonzero if any criterion fails.
// Usage: commprob_acceptance <path-to-commprob-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commprob/constructors.hpp"
#include "commprob/isoclinism.hpp"
#include "commprob/isomorphism.hpp"
#include "commprob/probability.hpp"
#include "commprob/theorems.hpp"

using namespace commprob;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

Check exact_values() {
  Check c;
  for (auto [key, value] : std::vector<std::pair<const char*, Rational>>{
           {"A4", {1, 3}}, {"(C5xC5):C15", {23, 375}}, {"C2^3:C7", {1, 7}}}) {
    // Includes building the group, which happens here for the first time.
    auto start = Clock::now();
    Rational d = commuting_probability(named(key));
    double t = seconds_since(start);
    c.expect(d == value, std::string("d(") + key + ") = " + d.to_string());
    c.expect(t < 1.0, std::string(key) + " took " + std::to_string(t) + " s");
    c.notes << ' ' << key << '=' << d << " (" << static_cast<int>(t * 1000) << " ms)";
  }
  return c;
}

Check structural_facts() {
  Check c;
  auto a4 = named("A4");
  auto derived = subgroup_as_group(derived_subgroup(a4));
  c.expect(are_isomorphic(derived, named("C2xC2")), "A4' is not C2xC2");
  auto aut_v = automorphism_group(named("C2xC2"));
  c.expect(aut_v.order() == 6, "|Aut(C2xC2)| = " + std::to_string(aut_v.order()));
  c.expect(are_isomorphic(aut_v, symmetric(3)), "Aut(C2xC2) is not S3");
  auto aut_9 = automorphism_group(named("C3xC3"));
  c.expect(aut_9.order() == 48, "|Aut(C3xC3)| = " + std::to_string(aut_9.order()));
  c.notes << " |A4'|=" << derived.order() << " |Aut(V4)|=" << aut_v.order() << " |Aut(C3xC3)|=" << aut_9.order();
  return c;
}

Check oracle_equivalence() {
  Check c;
  auto start = Clock::now();
  std::size_t groups = 0, smallest = 0, largest = 0;
  for (const auto& e : catalog()) {
    auto g = named(e.key);
    Rational fast = commuting_probability(g);
    Rational slow = commuting_pairs_oracle(g);
    c.expect(fast == slow, e.key + ": " + fast.to_string() + " vs " + slow.to_string());
    smallest = groups == 0 ? g.order() : std::min(smallest, g.order());
    largest = std::max(largest, g.order());
    ++groups;
  }
  double t = seconds_since(start);
  c.expect(groups >= 20, "only " + std::to_string(groups) + " groups");
  c.expect(smallest == 1 && largest == 375, "orders span " + std::to_string(smallest) + ".." + std::to_string(largest));
  c.expect(t < 60.0, "took " + std::to_string(t) + " s");
  c.notes << ' ' << groups << " groups, orders " << smallest << ".." << largest << ", " << t << " s";
  return c;
}

Check thresholds(CatalogVerification& full) {
  Check c;
  std::size_t checked = 0;
  for (const auto& r : full.reports) {
    for (const auto& v : r.verdicts) {
      if (v.statement == "small-class-in-split-normal" || v.statement == "klein-fixed-point") continue;
      ++checked;
      c.expect(v.status != VerdictStatus::Fails, r.name + " " + v.statement + ": " + v.detail);
      c.expect(v.status != VerdictStatus::PreconditionFailed, r.name + " " + v.statement + ": " + v.detail);
    }
  }
  // Bounds with c = 4 for every group and c = 9 for odd order, recomputed directly.
  for (const auto& e : catalog()) {
    auto g = named(e.key);
    c.expect(check_character_bound(g, 4), e.key + " fails c = 4");
    if (g.order() % 2 == 1) c.expect(check_character_bound(g, 9), e.key + " fails c = 9");
  }
  c.expect(full.ok(), "catalog verification reported failures");
  c.notes << ' ' << checked << " verdicts, " << full.summary.failures << " failures, exit code " << (full.ok() ? 0 : 1);
  return c;
}

Check class_size_suite(const CatalogVerification& full) {
  Check c;
  std::size_t applicable = 0, total = 0;
  for (const auto& r : full.reports) {
    for (const auto& v : r.verdicts) {
      if (v.statement != "small-class-in-split-normal") continue;
      ++total;
      if (v.applicable()) ++applicable;
      c.expect(v.status != VerdictStatus::Fails, r.name + ": " + v.detail);
      c.expect(v.status != VerdictStatus::PreconditionFailed, r.name + ": " + v.detail);
    }
  }
  auto a4 = named("A4");
  std::optional<std::size_t> witness;
  for (const auto& n : normal_subgroups(a4)) {
    if (!is_klein_four(n)) continue;
    auto v = verify_small_class_in_split_normal(a4, n, 4);
    c.expect(v.status == VerdictStatus::Holds, "A4/Klein/s=4: " + v.detail);
    witness = v.witness_class_size;
  }
  c.expect(witness == std::size_t{3}, "A4/Klein/s=4 witness size is not 3");
  c.notes << ' ' << total << " instances (" << applicable << " applicable), A4/Klein/s=4 witness size "
          << (witness ? std::to_string(*witness) : "none");
  return c;
}

Check isoclinism_suite() {
  Check c;
  auto pg = commutator_pairing(named("C2xA4"));
  auto ph = commutator_pairing(named("A4"));
  auto w = find_isoclinism(pg, ph);
  c.expect(w.has_value(), "C2xA4 not isoclinic to A4");
  if (w) c.expect(verify_isoclinism(pg, ph, *w), "witness does not verify");
  c.expect(!are_isoclinic(named("A4"), named("S3")), "A4 isoclinic to S3");

  std::vector<FiniteGroup> groups;
  for (const auto& e : catalog()) groups.push_back(named(e.key));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (!are_isoclinic(groups[i], groups[j])) continue;
      ++pairs;
      c.expect(commuting_probability(groups[i]) == commuting_probability(groups[j]),
               catalog()[i].key + " vs " + catalog()[j].key + ": d differs");
      c.expect(is_supersolvable(groups[i]) == is_supersolvable(groups[j]),
               catalog()[i].key + " vs " + catalog()[j].key + ": supersolvability differs");
    }
  }
  c.notes << ' ' << pairs << " isoclinic pairs agree";
  return c;
}

Check classifier_sanity() {
  Check c;
  for (const char* key : {"S3", "D8", "D10", "Q8", "C6"}) {
    c.expect(is_supersolvable(named(key)), std::string(key) + " not supersolvable");
  }
  for (const char* key : {"A4", "S4", "A5", "(C5xC5):C3"}) {
    c.expect(!is_supersolvable(named(key)), std::string(key) + " supersolvable");
  }
  std::size_t insoluble = 0;
  for (const auto& e : catalog()) {
    auto g = named(e.key);
    bool nil = is_nilpotent(g), sup = is_supersolvable(g), sol = is_solvable(g);
    c.expect(!nil || sup, e.key + ": nilpotent but not supersolvable");
    c.expect(!sup || sol, e.key + ": supersolvable but not solvable");
    c.expect(sol == (e.key != "A5"), e.key + ": solvable = " + (sol ? "true" : "false"));
    insoluble += !sol;
  }
  c.notes << ' ' << insoluble << " insoluble group (A5)";
  return c;
}

Check boundary_strictness() {
  Check c;
  for (const char* key : {"Q8", "D8"}) {
    auto r = analyze(named(key), key);
    c.expect(r.d == Rational(5, 8), std::string(key) + " d = " + r.d.to_string());
    for (const auto& v : r.verdicts) {
      if (v.statement == "abelian-above-5/8") {
        c.expect(v.status == VerdictStatus::NotApplicable, std::string(key) + " triggers the abelian claim");
      }
    }
  }
  std::size_t third = 0;
  for (const auto& e : catalog()) {
    auto g = named(e.key);
    if (commuting_probability(g) != Rational(1, 3)) continue;
    ++third;
    c.expect(verify_supersolvable_or_a4_at_one_third(g).applicable(), e.key + ": inclusive 1/3 not applicable");
    for (const auto& n : normal_subgroups(g)) {
      if (!is_klein_four(n)) continue;
      auto v = verify_klein_fixed_point(g, n);
      c.expect(v.status == VerdictStatus::NotApplicable, e.key + ": strict 1/3 claimed applicable");
    }
  }
  c.expect(third >= 2, "fewer than two groups with d = 1/3");
  c.notes << ' ' << third << " groups with d = 1/3";
  return c;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  status = pclose(pipe);
  return out;
}

Check determinism(const std::string& cli) {
  Check c;
  if (cli.empty()) {
    c.expect(false, "no CLI path given");
    return c;
  }
  std::string cmd = "'" + cli + "' verify --all --format json";
  int s1 = 0, s2 = 0;
  std::string a = capture(cmd, s1);
  std::string b = capture(cmd, s2);
  c.expect(s1 == 0 && s2 == 0, "non-zero exit status");
  c.expect(!a.empty(), "empty output");
  c.expect(a == b, "outputs differ");
  c.notes << ' ' << a.size() << " bytes, identical " << (a == b ? "yes" : "no");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  bool all_ok = true;
  auto report = [&](int number, const std::string& title, const std::function<Check()>& run) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    all_ok &= c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " [PRIMARY] " << number << ". " << title << ":" << c.notes.str()
              << std::endl;
  };

  report(1, "exact commuting probabilities", exact_values);
  report(2, "structural facts", structural_facts);
  report(3, "class count equals pair-counting oracle", oracle_equivalence);

  CatalogVerification full;
  try {
    full = run_catalog_verification();
  } catch (const std::exception& e) {
    std::cout << "catalog verification threw: " << e.what() << std::endl;
    all_ok = false;
  }
  report(4, "threshold statements catalog-wide", [&] { return thresholds(full); });
  report(5, "small class inside split abelian normal subgroups", [&] { return class_size_suite(full); });
  report(6, "isoclinism suite", isoclinism_suite);
  report(7, "classifier sanity", classifier_sanity);
  report(8, "boundary strictness", boundary_strictness);
  report(9, "deterministic verify --all output", [&] { return determinism(cli); });

  std::cout << (all_ok ? "all criteria passed" : "some criteria failed") << std::endl;
  return all_ok ? 0 : 1;
}
