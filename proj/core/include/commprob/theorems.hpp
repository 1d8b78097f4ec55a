#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "commprob/perm.hpp"
#include "commprob/rational.hpp"
#include "commprob/structure.hpp"

namespace commprob {

enum class VerdictStatus { Holds, Fails, NotApplicable, PreconditionFailed };

const char* to_string(VerdictStatus s);

/// Outcome of checking one statement on one input. A precondition failure
/// (e.g. N has no complement) is not a counterexample.
struct Verdict {
  std::string statement;
  VerdictStatus status = VerdictStatus::NotApplicable;
  std::string detail;
  /// Size of the exhibited class, for the class-size statements.
  std::optional<std::size_t> witness_class_size;

  bool applicable() const { return status == VerdictStatus::Holds || status == VerdictStatus::Fails; }
  /// Vacuous statements hold.
  bool holds() const { return status == VerdictStatus::Holds || status == VerdictStatus::NotApplicable; }
};

struct GroupReport {
  std::string name;
  std::size_t order = 0;
  std::size_t class_count = 0;
  Rational d;
  Rational acs;
  bool odd = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t derived_index = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool solvable = false;
  bool stem = false;
  bool isoclinic_to_a4 = false;
  bool quotient_by_center_isoclinic_to_a4 = false;
  bool isoclinic_to_c5c5c3 = false;
  std::vector<Verdict> verdicts;
};

/// Statement families, as accepted by `VerifyOptions::theorems`.
inline const std::vector<std::string>& theorem_families() {
  static const std::vector<std::string> f{"gustafson", "5-16",      "one-third",     "odd",       "char-bound",
                                          "derived-order", "gallagher", "class-size", "klein"};
  return f;
}

/// Invariants plus every group-level threshold statement.
GroupReport analyze(const FiniteGroup& g, std::string name = "");

/// d > 5/16 implies supersolvable, isoclinic to A4, or G/Z(G) isoclinic to A4.
Verdict verify_supersolvable_above_5_16(const FiniteGroup& g);
/// d >= 1/3 implies supersolvable or isoclinic to A4.
Verdict verify_supersolvable_or_a4_at_one_third(const FiniteGroup& g);
/// |G| odd and d > 35/243 implies supersolvable or isoclinic to (C5xC5):C3.
Verdict verify_odd_above_35_243(const FiniteGroup& g);
/// d > 1/s, N abelian normal nontrivial with a complement: some nontrivial
/// class inside N has size at most s-1.
Verdict verify_small_class_in_split_normal(const FiniteGroup& g, const Subgroup& n, std::size_t s);
/// N = C2xC2 normal with a complement and d > 1/3: some nontrivial element
/// of N is central.
Verdict verify_klein_fixed_point(const FiniteGroup& g, const Subgroup& n);
/// k(G) <= k(G/N) k(N) and d(G) <= d(G/N) d(N).
Verdict verify_gallagher(const FiniteGroup& g, const Subgroup& n);

struct VerifyOptions {
  /// Catalog keys to run; empty means the whole catalog.
  std::vector<std::string> names;
  /// Additional user-supplied groups, run after the catalog selection.
  std::vector<std::pair<std::string, FiniteGroup>> extra_groups;
  /// Statement families to check; empty means all.
  std::set<std::string> theorems;
  std::vector<std::size_t> s_values{2, 3, 4, 5, 6};
  unsigned jobs = 1;
  Limits limits;
};

struct VerificationSummary {
  std::size_t groups = 0;
  std::size_t verdicts = 0;
  std::size_t applicable = 0;
  std::size_t holds = 0;  // applicable and held
  std::size_t vacuous = 0;
  std::size_t failures = 0;
  std::size_t precondition_failures = 0;
};

struct CatalogVerification {
  std::vector<GroupReport> reports;
  VerificationSummary summary;
  bool ok() const { return summary.failures == 0; }
};

/// Full report for one group restricted to the chosen statement families,
/// including the per-normal-subgroup statements.
GroupReport verify_group(const FiniteGroup& g, const std::string& name, const VerifyOptions& options);

CatalogVerification run_catalog_verification(const VerifyOptions& options = {});

VerificationSummary summarize(const std::vector<GroupReport>& reports);

/// True iff N is isomorphic to C2 x C2.
bool is_klein_four(const Subgroup& n);

/// "N#i" labels refer to positions in normal_subgroups(G).
std::string normal_label(std::size_t position, const Subgroup& n);

}  // namespace commprob
