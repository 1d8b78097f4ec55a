#include <gtest/gtest.h>

#include "commprob/constructors.hpp"
#include "commprob/isoclinism.hpp"
#include "commprob/probability.hpp"

using namespace commprob;

TEST(Pairing, Examples) {
  auto ab = commutator_pairing(named("C2xC2xC3"));
  EXPECT_EQ(ab.inner_quotient.order(), 1u);
  EXPECT_EQ(ab.derived.order(), 1u);
  EXPECT_EQ(ab.pairing.size(), 1u);

  auto a4 = commutator_pairing(alternating(4));
  EXPECT_EQ(a4.inner_quotient.order(), 12u);
  EXPECT_EQ(a4.derived.order(), 4u);

  auto c2a4 = commutator_pairing(named("C2xA4"));
  EXPECT_EQ(c2a4.inner_quotient.order(), 12u);
  EXPECT_EQ(c2a4.derived.order(), 4u);
}

TEST(Isoclinism, Examples) {
  EXPECT_TRUE(are_isoclinic(cyclic(4), named("C3xC3")));
  EXPECT_TRUE(are_isoclinic(named("C2xA4"), alternating(4)));
  EXPECT_FALSE(are_isoclinic(alternating(4), symmetric(3)));
  EXPECT_TRUE(are_isoclinic(named("D8"), named("Q8")));
  EXPECT_TRUE(are_isoclinic(symmetric(3), named("C3xS3")));
  EXPECT_FALSE(are_isoclinic(symmetric(4), named("SL2(3)")));
}

TEST(Isoclinism, WitnessVerifies) {
  auto pg = commutator_pairing(named("C2xA4"));
  auto ph = commutator_pairing(alternating(4));
  auto w = find_isoclinism(pg, ph);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_isoclinism(pg, ph, *w));
  auto bad = *w;
  std::swap(bad.derived_iso[1], bad.derived_iso[2]);
  EXPECT_FALSE(verify_isoclinism(pg, ph, bad));
}

TEST(Isoclinism, CatalogPairsAreConsistent) {
  const auto& entries = catalog();
  std::vector<FiniteGroup> groups;
  for (const auto& e : entries) groups.push_back(named(e.key));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_TRUE(are_isoclinic(groups[i], groups[i])) << entries[i].key;
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      bool ij = are_isoclinic(groups[i], groups[j]);
      EXPECT_EQ(ij, are_isoclinic(groups[j], groups[i])) << entries[i].key << " " << entries[j].key;
      if (!ij) continue;
      EXPECT_EQ(commuting_probability(groups[i]), commuting_probability(groups[j]));
      EXPECT_EQ(is_supersolvable(groups[i]), is_supersolvable(groups[j]));
    }
  }
}

TEST(Stem, Examples) {
  EXPECT_TRUE(is_stem(alternating(4)));
  EXPECT_FALSE(is_stem(named("C2xA4")));
  EXPECT_TRUE(is_stem(named("Q8")));
}
