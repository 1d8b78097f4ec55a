#include "commprob/perm.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace commprob {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point v = images_[i];
    if (v >= images_.size()) {
      throw Error("permutation image " + std::to_string(v) + " at position " +
                  std::to_string(i) + " is out of range for degree " +
                  std::to_string(images_.size()));
    }
    if (seen[v]) {
      throw Error("not a bijection: value " + std::to_string(v) + " repeated");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw Error("permutation degree must be positive");
  std::vector<Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Point>(i);
  return Permutation(std::move(id), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) throw Error("cycle point out of range");
      if (used[from]) throw Error("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::size_t PointVectorHash::operator()(const std::vector<Point>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point p : v) {
    h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> sorted,
                         const std::vector<Permutation>& generators)
    : degree_(degree), elements_(std::move(sorted)) {
  const std::size_t n = elements_.size();

  // Greedily pick points until the tuple of their images separates every element.
  {
    std::vector<std::size_t> cls(n, 0);
    std::size_t classes = 1;
    for (Point pt = 0; pt < degree_ && classes < n; ++pt) {
      std::unordered_map<std::uint64_t, std::size_t> refine;
      std::vector<std::size_t> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t key = (static_cast<std::uint64_t>(cls[i]) << 32) | elements_[i](pt);
        auto [it, inserted] = refine.try_emplace(key, refine.size());
        next[i] = it->second;
      }
      if (refine.size() > classes) {
        base_.push_back(pt);
        cls = std::move(next);
        classes = refine.size();
      }
    }
  }
  by_base_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) by_base_.emplace(base_image(elements_[i]), static_cast<Index>(i));

  identity_ = lookup_base(base_image(Permutation::identity(degree_)));

  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverse_[i] = lookup_base(base_image(elements_[i].inverse()));

  if (n <= kMulTableLimit) {
    table_.resize(n * n);
    std::vector<Point> key(base_.size());
    for (std::size_t a = 0; a < n; ++a) {
      const auto& pa = elements_[a].images();
      for (std::size_t b = 0; b < n; ++b) {
        const auto& pb = elements_[b].images();
        for (std::size_t k = 0; k < base_.size(); ++k) key[k] = pb[pa[base_[k]]];
        table_[a * n + b] = lookup_base(key);
      }
    }
  }

  for (const auto& g : generators) {
    Index idx = lookup_base(base_image(g));
    if (idx == identity_) continue;
    if (std::find(generators_.begin(), generators_.end(), idx) == generators_.end()) {
      generators_.push_back(idx);
    }
  }
}

std::vector<Point> FiniteGroup::base_image(const Permutation& p) const {
  std::vector<Point> key(base_.size());
  for (std::size_t k = 0; k < base_.size(); ++k) key[k] = p(base_[k]);
  return key;
}

Index FiniteGroup::lookup_base(const std::vector<Point>& key) const {
  auto it = by_base_.find(key);
  if (it == by_base_.end()) throw Error("element is not in the group");
  return it->second;
}

Index FiniteGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  const auto& pa = elements_[a].images();
  const auto& pb = elements_[b].images();
  std::vector<Point> key(base_.size());
  for (std::size_t k = 0; k < base_.size(); ++k) key[k] = pb[pa[base_[k]]];
  return lookup_base(key);
}

Index FiniteGroup::commutator(Index a, Index b) const {
  return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
}

std::optional<Index> FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = by_base_.find(base_image(p));
  if (it == by_base_.end()) return std::nullopt;
  // The base only separates group members; confirm the full image.
  if (elements_[it->second] != p) return std::nullopt;
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  for (Index g : generators_) {
    for (Index h : generators_) {
      if (mul(g, h) != mul(h, g)) return false;
    }
  }
  return true;
}

FiniteGroup generate_group(std::size_t degree, const std::vector<Permutation>& generators,
                           const Limits& limits) {
  if (degree == 0) throw Error("group degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error("generator degree " + std::to_string(g.degree()) +
                  " does not match group degree " + std::to_string(degree));
    }
  }
  std::unordered_set<std::vector<Point>, PointVectorHash> seen;
  std::vector<Permutation> found;
  std::deque<std::size_t> queue;

  Permutation id = Permutation::identity(degree);
  seen.insert(id.images());
  found.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(found[cur], g);
      if (seen.insert(next.images()).second) {
        if (found.size() >= limits.max_order) {
          throw LimitError("group order exceeds the cap of " +
                           std::to_string(limits.max_order) + " elements");
        }
        found.push_back(std::move(next));
        queue.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return FiniteGroup(degree, std::move(found), generators);
}

std::size_t element_order(const FiniteGroup& g, Index x) {
  if (!g.valid(x)) throw Error("invalid element index " + std::to_string(x));
  std::size_t m = 1;
  Index y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++m;
  }
  return m;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (Index i = 0; i < g.order(); ++i) out[i] = element_order(g, i);
  return out;
}

}  // namespace commprob
