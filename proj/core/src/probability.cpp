#include "commprob/probability.hpp"

#include <algorithm>

namespace commprob {

std::size_t class_count(const FiniteGroup& g) { return conjugacy_classes(g).size(); }

Rational commuting_probability(const FiniteGroup& g) {
  return Rational(static_cast<std::int64_t>(class_count(g)), static_cast<std::int64_t>(g.order()));
}

Rational commuting_pairs_oracle(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.oracle_cap) {
    throw LimitError("commuting-pairs oracle: order " + std::to_string(g.order()) +
                     " exceeds the oracle cap of " + std::to_string(limits.oracle_cap));
  }
  std::int64_t pairs = 0;
  for (Index x = 0; x < g.order(); ++x) {
    for (Index y = 0; y < g.order(); ++y) {
      if (g.mul(x, y) == g.mul(y, x)) ++pairs;
    }
  }
  auto n = static_cast<std::int64_t>(g.order());
  return Rational(pairs, n * n);
}

Rational average_class_size(const FiniteGroup& g) {
  return Rational(static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(class_count(g)));
}

bool check_character_bound(const FiniteGroup& g, int c) {
  auto order = static_cast<std::int64_t>(g.order());
  auto k = static_cast<std::int64_t>(class_count(g));
  auto linear = static_cast<std::int64_t>(derived_subgroup(g).index());
  return order >= linear + static_cast<std::int64_t>(c) * (k - linear);
}

GallagherResult gallagher_check(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw PreconditionError("gallagher_check: subgroup is not normal");
  QuotientMap q = quotient_map(g, n);
  FiniteGroup n_group = subgroup_as_group(n);

  GallagherResult r;
  r.class_count = class_count(g);
  r.quotient_class_count = class_count(q.group);
  r.normal_class_count = class_count(n_group);
  r.holds = r.class_count <= r.quotient_class_count * r.normal_class_count;
  r.equality = r.class_count == r.quotient_class_count * r.normal_class_count;

  r.centralizers_match = true;
  for (Index x = 0; x < g.order() && r.centralizers_match; ++x) {
    std::vector<bool> image(q.group.order(), false);
    Subgroup cent = centralizer(g, x);
    for (Index y : cent.members()) image[q.projection[y]] = true;
    Subgroup upstairs = centralizer(q.group, q.projection[x]);
    for (Index c = 0; c < q.group.order(); ++c) {
      if (image[c] != upstairs.contains(c)) {
        r.centralizers_match = false;
        break;
      }
    }
  }
  r.probability_bound =
      commuting_probability(g) <= commuting_probability(q.group) * commuting_probability(n_group);
  return r;
}

const char* to_string(Implication i) {
  switch (i) {
    case Implication::Satisfied:
      return "satisfied";
    case Implication::Vacuous:
      return "vacuous";
    case Implication::Violated:
      return "violated";
  }
  return "?";
}

DerivedOrderWitness derived_order_bound_witness(const FiniteGroup& g) {
  DerivedOrderWitness w;
  w.d = commuting_probability(g);
  w.derived_order = derived_subgroup(g).order();
  w.odd_order = g.order() % 2 == 1;
  if (w.d > Rational(5, 16)) {
    w.above_5_16 = w.derived_order < 12 ? Implication::Satisfied : Implication::Violated;
  }
  if (w.odd_order && w.d > Rational(35, 243)) {
    w.odd_above_35_243 = w.derived_order < 27 ? Implication::Satisfied : Implication::Violated;
  }
  return w;
}

}  // namespace commprob
