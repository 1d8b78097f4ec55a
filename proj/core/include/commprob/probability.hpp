#pragma once

#include <string>

#include "commprob/perm.hpp"
#include "commprob/rational.hpp"
#include "commprob/structure.hpp"

namespace commprob {

/// k(G), the number of conjugacy classes.
std::size_t class_count(const FiniteGroup& g);

/// d(G) = k(G)/|G| in lowest terms.
Rational commuting_probability(const FiniteGroup& g);

/// d(G) by literally counting commuting ordered pairs. Throws LimitError
/// above `limits.oracle_cap` elements.
Rational commuting_pairs_oracle(const FiniteGroup& g, const Limits& limits = {});

/// |G|/k(G), the reciprocal of d(G).
Rational average_class_size(const FiniteGroup& g);

/// |G| >= [G:G'] + c (k(G) - [G:G']); c = 4 in general, 9 for odd order.
bool check_character_bound(const FiniteGroup& g, int c);

struct GallagherResult {
  std::size_t class_count = 0;           // k(G)
  std::size_t quotient_class_count = 0;  // k(G/N)
  std::size_t normal_class_count = 0;    // k(N)
  bool holds = false;                    // k(G) <= k(G/N) k(N)
  bool equality = false;                 // k(G) == k(G/N) k(N)
  /// C_{G/N}(gN) == C_G(g)N/N for every g, checked element by element.
  bool centralizers_match = false;
  /// d(G) <= d(G/N) d(N)
  bool probability_bound = false;
};

GallagherResult gallagher_check(const FiniteGroup& g, const Subgroup& n);

enum class Implication { Satisfied, Vacuous, Violated };

const char* to_string(Implication i);

struct DerivedOrderWitness {
  Rational d;
  std::size_t derived_order = 0;
  bool odd_order = false;
  /// d > 5/16 implies |G'| < 12
  Implication above_5_16 = Implication::Vacuous;
  /// |G| odd and d > 35/243 implies |G'| < 27
  Implication odd_above_35_243 = Implication::Vacuous;
};

DerivedOrderWitness derived_order_bound_witness(const FiniteGroup& g);

}  // namespace commprob
