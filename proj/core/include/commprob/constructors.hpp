#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commprob/perm.hpp"

namespace commprob {

FiniteGroup cyclic(std::size_t n);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
/// Dihedral group of the given order (order = 2m, acting on m points).
FiniteGroup dihedral(std::size_t order);

/// Acts on the disjoint union of the two point sets.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

/// An abstract group given by a multiplication rule on codes 0..order-1,
/// realized by its right regular representation.
struct RegularGroup {
  FiniteGroup group;
  std::vector<Index> embedding;  // code -> group index
};

RegularGroup regular_group(std::size_t order,
                           const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                           std::span<const std::size_t> generator_codes, const Limits& limits = {});

/// Aut(A) as permutations of A's element indices. Throws LimitError when
/// |A| exceeds `limits.automorphism_cap`.
FiniteGroup automorphism_group(const FiniteGroup& a, const Limits& limits = {});

/// A right action of H on N: acting_generators[i] (an index of H) sends the
/// element with N-index x to automorphism_images[i](x).
struct ActionSpec {
  std::vector<Index> acting_generators;
  std::vector<Permutation> automorphism_images;
};

/// The trivial action using H's own generators.
ActionSpec trivial_action(const FiniteGroup& n, const FiniteGroup& h);

struct SemidirectProduct {
  FiniteGroup group;
  std::vector<Index> normal_embedding;      // N index -> group index
  std::vector<Index> complement_embedding;  // H index -> group index
};

/// N x| H with (h, a)(h', a') = (hh', a^h' a'), where a^h is the image of a
/// under the automorphism assigned to h. Realized on |N||H| points.
SemidirectProduct semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                     const ActionSpec& action, const Limits& limits = {});

struct CatalogEntry {
  std::string key;
  std::string description;
};

/// Built-in groups in canonical catalog order.
const std::vector<CatalogEntry>& catalog();

/// Looks up a catalog key or parses the key grammar:
///   Cn        cyclic of order n
///   Cn^k      direct power
///   AxB       direct product (parenthesize compound factors)
///   N:Cm/k    semidirect product; the generator of Cm acts as the k-th
///             automorphism of N (canonical order) whose order divides m
/// Unknown keys throw PreconditionError listing the catalog.
FiniteGroup named(std::string_view key, const Limits& limits = {});

}  // namespace commprob
