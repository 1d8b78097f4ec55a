#include "commprob/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "commprob/isomorphism.hpp"

namespace commprob {

namespace {

std::vector<Index> closure(const FiniteGroup& g, std::span<const Index> seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Index x = members[head];
    for (Index s : seeds) {
      Index y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

void require_normal(const FiniteGroup& g, const Subgroup& n, const char* op) {
  if (&n.parent() != &g) throw PreconditionError(std::string(op) + ": subgroup of a different group");
  if (!is_normal(g, n)) throw PreconditionError(std::string(op) + ": subgroup is not normal");
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Memo for is_supersolvable, keyed by isomorphism invariants with an
// isomorphism test on collision.
struct SupersolvableMemo {
  std::mutex mutex;
  std::map<GroupSignature, std::vector<std::pair<FiniteGroup, bool>>> entries;

  std::optional<bool> find(const GroupSignature& key, const FiniteGroup& g) {
    std::vector<std::pair<FiniteGroup, bool>> candidates;
    {
      std::lock_guard lock(mutex);
      auto it = entries.find(key);
      if (it == entries.end()) return std::nullopt;
      for (const auto& [h, value] : it->second) {
        if (h == g) return value;
      }
      candidates = it->second;
    }
    for (const auto& [h, value] : candidates) {
      if (are_isomorphic(g, h)) return value;
    }
    return std::nullopt;
  }

  void insert(const GroupSignature& key, const FiniteGroup& g, bool value) {
    std::lock_guard lock(mutex);
    entries[key].emplace_back(g, value);
  }
};

SupersolvableMemo& supersolvable_memo() {
  static SupersolvableMemo memo;
  return memo;
}

}  // namespace

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Index> members)
    : parent_(&parent), members_(std::move(members)), mask_(parent.order(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index x : members_) {
    if (!parent.valid(x)) throw PreconditionError("invalid element index " + std::to_string(x));
    mask_[x] = true;
  }
  if (!contains(parent.identity())) throw PreconditionError("subgroup must contain the identity");
  for (Index a : members_) {
    if (!contains(parent.inv(a))) throw PreconditionError("subgroup is not closed under inverse");
    for (Index b : members_) {
      if (!contains(parent.mul(a, b))) throw PreconditionError("subgroup is not closed under multiplication");
    }
  }
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Index> members, Trusted)
    : parent_(&parent), members_(std::move(members)), mask_(parent.order(), false) {
  for (Index x : members_) mask_[x] = true;
}

Subgroup make_trusted_subgroup(const FiniteGroup& parent, std::vector<Index> members) {
  return Subgroup(parent, std::move(members), Subgroup::Trusted{});
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  return make_trusted_subgroup(parent, {parent.identity()});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Index> all(parent.order());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return make_trusted_subgroup(parent, std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Index x) { return other.contains(x); });
}

bool Subgroup::is_abelian() const {
  auto gens = generating_set(*this);
  for (Index a : gens) {
    for (Index b : gens) {
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
    }
  }
  return true;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> seeds) {
  for (Index s : seeds) {
    if (!g.valid(s)) throw PreconditionError("invalid element index " + std::to_string(s));
  }
  return make_trusted_subgroup(g, closure(g, seeds));
}

std::vector<Index> generating_set(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Index> gens;
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  for (Index x : h.members()) {
    if (in[x]) continue;
    gens.push_back(x);
    std::fill(in.begin(), in.end(), false);
    for (Index y : closure(g, gens)) in[y] = true;
  }
  return gens;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  auto gens = generating_set(a);
  auto more = generating_set(b);
  gens.insert(gens.end(), more.begin(), more.end());
  return subgroup_generated(a.parent(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> out;
  for (Index x : a.members()) {
    if (b.contains(x)) out.push_back(x);
  }
  return make_trusted_subgroup(a.parent(), std::move(out));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Index s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) out.push_back(x);
  }
  return make_trusted_subgroup(g, std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, Index x) {
  if (!g.valid(x)) throw PreconditionError("invalid element index " + std::to_string(x));
  std::vector<Index> out;
  for (Index y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  }
  return make_trusted_subgroup(g, std::move(out));
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjugacyClass> out;
  for (Index x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    ConjugacyClass cls{x, {x}};
    assigned[x] = true;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      Index y = cls.members[head];
      for (Index s : g.generators()) {
        Index z = g.conj(y, s);
        if (!assigned[z]) {
          assigned[z] = true;
          cls.members.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> class_size_multiset(const FiniteGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<ConjugacyClass> classes_inside(const FiniteGroup& g, const Subgroup& n) {
  require_normal(g, n, "classes_inside");
  std::vector<ConjugacyClass> out;
  for (auto& c : conjugacy_classes(g)) {
    if (n.contains(c.representative)) out.push_back(std::move(c));
  }
  return out;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<Index> comms;
  for (Index x : a.members()) {
    for (Index y : b.members()) {
      Index c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return subgroup_generated(g, comms);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  Subgroup all = Subgroup::whole(g);
  return commutator_subgroup(all, all);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw PreconditionError("is_normal: subgroup of a different group");
  for (Index x : generating_set(h)) {
    for (Index s : g.generators()) {
      if (!h.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  // Normal closures of single classes; every normal subgroup is a join of these.
  std::vector<Subgroup> base;
  std::set<std::vector<Index>> base_seen;
  for (const auto& c : conjugacy_classes(g)) {
    if (c.representative == g.identity()) continue;
    Subgroup s = subgroup_generated(g, c.members);
    if (base_seen.insert(s.members()).second) base.push_back(std::move(s));
  }

  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> found;
  found.push_back(Subgroup::trivial(g));
  seen.insert(found.back().members());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& b : base) {
      const Subgroup& x = found[head];
      if (b.is_subset_of(x)) continue;
      // Both normal, so the join is the product set XB.
      std::vector<bool> in(g.order(), false);
      std::vector<Index> prod;
      for (Index u : x.members()) {
        for (Index v : b.members()) {
          Index w = g.mul(u, v);
          if (!in[w]) {
            in[w] = true;
            prod.push_back(w);
          }
        }
      }
      std::sort(prod.begin(), prod.end());
      if (seen.insert(prod).second) found.push_back(make_trusted_subgroup(g, std::move(prod)));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) throw PreconditionError("minimal_normal_subgroups: trivial group");
  auto all = normal_subgroups(g);
  std::vector<Subgroup> out;
  for (const auto& n : all) {
    if (n.is_trivial()) continue;
    bool minimal = std::none_of(all.begin(), all.end(), [&](const Subgroup& m) {
      return !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

QuotientMap quotient_map(const FiniteGroup& g, const Subgroup& n, const Limits& limits) {
  require_normal(g, n, "quotient");
  std::vector<Index> label(g.order(), kNoIndex);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (label[x] != kNoIndex) continue;
    Index id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index m : n.members()) label[g.mul(m, x)] = id;
  }
  const std::size_t cosets = reps.size();
  auto action_of = [&](Index x) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c) images[c] = label[g.mul(reps[c], x)];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (Index s : g.generators()) gens.push_back(action_of(s));
  FiniteGroup q = generate_group(cosets, gens, limits);

  std::vector<Index> projection(g.order());
  std::vector<Index> coset_image(cosets, kNoIndex);
  for (Index x = 0; x < g.order(); ++x) {
    // The action depends only on the coset of x.
    Index c = label[x];
    if (coset_image[c] == kNoIndex) coset_image[c] = *q.index_of(action_of(x));
    projection[x] = coset_image[c];
  }
  return QuotientMap{std::move(q), std::move(projection)};
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits) {
  return quotient_map(g, n, limits).group;
}

FiniteGroup subgroup_as_group(const Subgroup& h, std::vector<Index>* embedding) {
  const FiniteGroup& g = h.parent();
  std::vector<Permutation> gens;
  for (Index x : generating_set(h)) gens.push_back(g.element(x));
  Limits limits;
  limits.max_order = std::max(limits.max_order, h.order());
  FiniteGroup out = generate_group(g.degree(), gens, limits);
  if (embedding) {
    embedding->clear();
    for (Index x : h.members()) embedding->push_back(*out.index_of(g.element(x)));
  }
  return out;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  Subgroup all = Subgroup::whole(g);
  std::vector<Subgroup> series{all};
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }

bool is_supersolvable(const FiniteGroup& g) {
  if (g.order() == 1 || g.is_abelian()) return true;
  auto& memo = supersolvable_memo();
  GroupSignature key = signature(g);
  if (auto hit = memo.find(key, g)) return *hit;

  // If G is supersolvable, so is every quotient; so any single normal
  // subgroup of prime order decides the question.
  bool result = false;
  std::set<std::vector<Index>> tried;
  for (Index x = 0; x < g.order(); ++x) {
    if (!is_prime(element_order(g, x))) continue;
    const Index seed[] = {x};
    Subgroup cyc = subgroup_generated(g, seed);
    if (!tried.insert(cyc.members()).second) continue;
    if (!is_normal(g, cyc)) continue;
    result = is_supersolvable(quotient(g, cyc));
    break;
  }
  memo.insert(key, g, result);
  return result;
}

std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& n) {
  require_normal(g, n, "find_complement");
  if (n.is_trivial()) throw PreconditionError("find_complement: normal subgroup is trivial");
  if (n.is_whole()) throw PreconditionError("find_complement: normal subgroup is the whole group");

  QuotientMap q = quotient_map(g, n);
  // Coset generators of G/N, picked in index order.
  std::vector<Index> coset_gens;
  {
    std::vector<Index> images;
    std::vector<bool> covered(q.group.order(), false);
    covered[q.group.identity()] = true;
    for (Index x = 0; x < g.order(); ++x) {
      if (covered[q.projection[x]]) continue;
      coset_gens.push_back(x);
      images.push_back(q.projection[x]);
      std::fill(covered.begin(), covered.end(), false);
      for (Index y : closure(q.group, images)) covered[y] = true;
    }
  }
  std::vector<std::vector<Index>> candidates(coset_gens.size());
  for (std::size_t i = 0; i < coset_gens.size(); ++i) {
    for (Index m : n.members()) candidates[i].push_back(g.mul(m, coset_gens[i]));
    std::sort(candidates[i].begin(), candidates[i].end());
  }

  const std::size_t target = q.group.order();
  std::vector<Index> chosen;
  std::optional<Subgroup> result;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == coset_gens.size()) {
      auto members = closure(g, chosen);
      if (members.size() != target) return false;
      result = make_trusted_subgroup(g, std::move(members));
      return true;
    }
    for (Index c : candidates[depth]) {
      chosen.push_back(c);
      auto members = closure(g, chosen);
      bool meets_trivially = members.size() <= target &&
                             std::none_of(members.begin(), members.end(), [&](Index y) {
                               return y != g.identity() && n.contains(y);
                             });
      if (meets_trivially && search(depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  search(0);
  return result;
}

}  // namespace commprob
