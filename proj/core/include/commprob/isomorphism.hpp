#pragma once

#include <compare>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "commprob/perm.hpp"

namespace commprob {

inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

/// Isomorphism invariants used for prechecks and memo keys.
struct GroupSignature {
  std::size_t order = 0;
  std::vector<std::size_t> element_orders;  // sorted
  std::vector<std::size_t> class_sizes;     // sorted
  auto operator<=>(const GroupSignature&) const = default;
};

GroupSignature signature(const FiniteGroup& g);

/// Where a homomorphism extension broke: the Cayley-graph edge from
/// `element` along generator number `generator`.
struct HomomorphismFailure {
  Index element = kNoIndex;
  std::size_t generator = 0;
};

/// Extends gens[i] -> images[i] to a homomorphism from <gens> <= G into H by
/// walking the Cayley graph of <gens>. Returns a table over G's indices
/// (kNoIndex outside <gens>), or nullopt if some relation fails.
std::optional<std::vector<Index>> extend_homomorphism(const FiniteGroup& g,
                                                      std::span<const Index> gens,
                                                      std::span<const Index> images,
                                                      const FiniteGroup& h,
                                                      HomomorphismFailure* failure = nullptr);

/// True iff `map` (indexed by G) is a bijective homomorphism G -> H.
bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Index> map);

/// Calls `visit` for every isomorphism G -> H in canonical order until it
/// returns false. Returns the number of isomorphisms visited.
std::size_t enumerate_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                   const std::function<bool(const std::vector<Index>&)>& visit);

std::optional<std::vector<Index>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace commprob
