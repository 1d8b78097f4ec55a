#include "commprob/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "commprob/structure.hpp"

namespace commprob {

namespace {

struct ElementProfile {
  std::size_t order;
  std::size_t class_size;
  auto operator<=>(const ElementProfile&) const = default;
};

std::vector<ElementProfile> profiles(const FiniteGroup& g) {
  std::vector<ElementProfile> out(g.order());
  auto orders = element_orders(g);
  for (const auto& c : conjugacy_classes(g)) {
    for (Index x : c.members) out[x] = {orders[x], c.size()};
  }
  return out;
}

std::vector<Index> closure_of(const FiniteGroup& g, std::span<const Index> seeds) {
  return subgroup_generated(g, seeds).members();
}

// Greedy generating set: each step takes the element that enlarges the
// generated subgroup most, preferring elements with fewer candidate images.
std::vector<Index> search_generators(const FiniteGroup& g,
                                     const std::vector<ElementProfile>& prof,
                                     const std::map<ElementProfile, std::size_t>& target_counts) {
  std::vector<Index> gens;
  std::size_t covered = 1;
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  while (covered < g.order()) {
    Index best = kNoIndex;
    std::size_t best_size = 0;
    std::size_t best_choices = 0;
    for (Index x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      auto trial = gens;
      trial.push_back(x);
      std::size_t size = closure_of(g, trial).size();
      auto it = target_counts.find(prof[x]);
      std::size_t choices = it == target_counts.end() ? 0 : it->second;
      if (best == kNoIndex || size > best_size || (size == best_size && choices < best_choices)) {
        best = x;
        best_size = size;
        best_choices = choices;
      }
    }
    gens.push_back(best);
    std::fill(in.begin(), in.end(), false);
    for (Index y : closure_of(g, gens)) in[y] = true;
    covered = best_size;
  }
  return gens;
}

}  // namespace

GroupSignature signature(const FiniteGroup& g) {
  GroupSignature sig;
  sig.order = g.order();
  sig.element_orders = element_orders(g);
  std::sort(sig.element_orders.begin(), sig.element_orders.end());
  sig.class_sizes = class_size_multiset(g);
  return sig;
}

std::optional<std::vector<Index>> extend_homomorphism(const FiniteGroup& g,
                                                      std::span<const Index> gens,
                                                      std::span<const Index> images,
                                                      const FiniteGroup& h,
                                                      HomomorphismFailure* failure) {
  if (gens.size() != images.size()) {
    throw PreconditionError("extend_homomorphism: generator and image counts differ");
  }
  std::vector<Index> map(g.order(), kNoIndex);
  map[g.identity()] = h.identity();
  std::vector<Index> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Index y = g.mul(x, gens[i]);
      Index v = h.mul(map[x], images[i]);
      if (map[y] == kNoIndex) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        if (failure) *failure = {x, i};
        return std::nullopt;
      }
    }
  }
  return map;
}

bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Index> map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Index v : map) {
    if (v >= h.order() || hit[v]) return false;
    hit[v] = true;
  }
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); ++b) {
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

std::size_t enumerate_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                   const std::function<bool(const std::vector<Index>&)>& visit) {
  if (g.order() != h.order()) return 0;
  auto pg = profiles(g);
  auto ph = profiles(h);
  {
    auto sg = pg;
    auto sh = ph;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return 0;
  }
  std::map<ElementProfile, std::size_t> counts;
  for (const auto& p : ph) ++counts[p];

  auto gens = search_generators(g, pg, counts);
  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Index y = 0; y < h.order(); ++y) {
      if (ph[y] == pg[gens[i]]) candidates[i].push_back(y);
    }
  }
  std::vector<std::size_t> prefix_order(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    prefix_order[i] = closure_of(g, std::span<const Index>(gens.data(), i + 1)).size();
  }

  std::size_t visited = 0;
  bool stop = false;
  std::vector<Index> images;
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (stop) return;
    for (Index c : candidates[depth]) {
      images.push_back(c);
      auto map = extend_homomorphism(g, std::span<const Index>(gens.data(), depth + 1), images, h);
      if (map) {
        // Injective on the prefix subgroup iff the image has the same size.
        std::vector<bool> hit(h.order(), false);
        std::size_t distinct = 0;
        for (Index v : *map) {
          if (v != kNoIndex && !hit[v]) {
            hit[v] = true;
            ++distinct;
          }
        }
        if (distinct == prefix_order[depth]) {
          if (depth + 1 == gens.size()) {
            ++visited;
            if (!visit(*map)) stop = true;
          } else {
            search(depth + 1);
          }
        }
      }
      images.pop_back();
      if (stop) return;
    }
  };
  if (gens.empty()) {
    // Both trivial.
    ++visited;
    visit(std::vector<Index>{h.identity()});
    return visited;
  }
  search(0);
  return visited;
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g == h) {
    std::vector<Index> id(g.order());
    for (Index i = 0; i < id.size(); ++i) id[i] = i;
    return id;
  }
  if (signature(g) != signature(h)) return std::nullopt;
  std::optional<std::vector<Index>> found;
  enumerate_isomorphisms(g, h, [&](const std::vector<Index>& map) {
    found = map;
    return false;
  });
  return found;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace commprob
