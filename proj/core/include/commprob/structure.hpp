#pragma once

#include <optional>
#include <span>
#include <vector>

#include "commprob/perm.hpp"

namespace commprob {

/// A subgroup of a parent FiniteGroup, stored as a sorted set of parent
/// element indices. The parent must outlive the subgroup.
class Subgroup {
 public:
  /// Validates that `members` is closed under multiplication and inverse.
  Subgroup(const FiniteGroup& parent, std::vector<Index> members);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return *parent_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  const std::vector<Index>& members() const { return members_; }
  bool contains(Index x) const { return x < mask_.size() && mask_[x]; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const;
  bool is_abelian() const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  struct Trusted {};
  Subgroup(const FiniteGroup& parent, std::vector<Index> members, Trusted);
  friend Subgroup make_trusted_subgroup(const FiniteGroup&, std::vector<Index>);

  const FiniteGroup* parent_;
  std::vector<Index> members_;
  std::vector<bool> mask_;
};

/// Internal: wraps a member set already known to be a subgroup.
Subgroup make_trusted_subgroup(const FiniteGroup& parent, std::vector<Index> members);

struct ConjugacyClass {
  Index representative;  // lowest index in the class
  std::vector<Index> members;
  std::size_t size() const { return members.size(); }
};

/// Result of realizing G/N on the right cosets of N.
struct QuotientMap {
  FiniteGroup group;
  std::vector<Index> projection;  // G index -> quotient index
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> seeds);

/// Smallest subgroup containing both (the join).
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Index x);
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Class sizes sorted ascending.
std::vector<std::size_t> class_size_multiset(const FiniteGroup& g);

/// G-classes contained in the normal subgroup N. Throws unless N is normal.
std::vector<ConjugacyClass> classes_inside(const FiniteGroup& g, const Subgroup& n);

Subgroup derived_subgroup(const FiniteGroup& g);
/// [A, B] generated by commutators a^-1 b^-1 a b.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);

QuotientMap quotient_map(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {});
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {});

/// Re-enumerates a subgroup as a standalone group on the parent's points.
/// `embedding`, if given, receives the standalone index of each member
/// (in member order).
FiniteGroup subgroup_as_group(const Subgroup& h, std::vector<Index>* embedding = nullptr);

std::vector<Subgroup> derived_series(const FiniteGroup& g);
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_supersolvable(const FiniteGroup& g);

/// A subgroup H with H n N = 1 and |H||N| = |G|, or nullopt when G does not
/// split over N. Requires N normal, nontrivial and proper.
std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& n);

/// A short generating set of the subgroup, chosen greedily in index order.
std::vector<Index> generating_set(const Subgroup& h);

}  // namespace commprob
