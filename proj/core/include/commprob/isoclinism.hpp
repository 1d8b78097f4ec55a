#pragma once

#include <optional>
#include <vector>

#include "commprob/isomorphism.hpp"
#include "commprob/perm.hpp"
#include "commprob/structure.hpp"

namespace commprob {

/// The data an isoclinism must preserve: G/Z(G), G' as an abstract group,
/// and the commutator map (gZ, hZ) -> [g, h].
struct PairingStructure {
  FiniteGroup inner_quotient;
  std::vector<Index> to_inner;  // G index -> inner_quotient index
  FiniteGroup derived;
  std::vector<Index> to_derived;  // G index -> derived index, kNoIndex outside G'
  std::vector<Index> pairing;     // row-major |Q| x |Q| table of derived indices

  Index at(Index q1, Index q2) const { return pairing[q1 * inner_quotient.order() + q2]; }
};

/// Compatible isomorphisms between two pairing structures.
struct IsoclinismWitness {
  std::vector<Index> quotient_iso;  // inner quotient of G -> inner quotient of H
  std::vector<Index> derived_iso;   // derived group of G -> derived group of H
};

/// Throws Error if the pairing is not well defined on cosets of the center
/// (that would be an internal bug).
PairingStructure commutator_pairing(const FiniteGroup& g);

std::optional<IsoclinismWitness> find_isoclinism(const PairingStructure& pg,
                                                 const PairingStructure& ph);
std::optional<IsoclinismWitness> find_isoclinism(const FiniteGroup& g, const FiniteGroup& h);
bool are_isoclinic(const FiniteGroup& g, const FiniteGroup& h);

/// Both maps are isomorphisms and phi(pair(q1, q2)) = pair'(psi q1, psi q2)
/// for every pair.
bool verify_isoclinism(const PairingStructure& pg, const PairingStructure& ph,
                       const IsoclinismWitness& witness);

/// Z(G) is contained in G'.
bool is_stem(const FiniteGroup& g);

}  // namespace commprob
