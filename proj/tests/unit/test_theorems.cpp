#include <gtest/gtest.h>

#include "commprob/constructors.hpp"
#include "commprob/theorems.hpp"

using namespace commprob;

namespace {

const Verdict& find(const GroupReport& r, const std::string& statement) {
  for (const auto& v : r.verdicts) {
    if (v.statement == statement) return v;
  }
  throw std::runtime_error("no verdict " + statement);
}

Subgroup klein_normal(const FiniteGroup& g) {
  for (const auto& n : normal_subgroups(g)) {
    if (is_klein_four(n)) return n;
  }
  throw std::runtime_error("no Klein normal subgroup");
}

}  // namespace

TEST(Analyze, A4Report) {
  auto r = analyze(named("A4"), "A4");
  EXPECT_EQ(r.order, 12u);
  EXPECT_EQ(r.class_count, 4u);
  EXPECT_EQ(r.d, Rational(1, 3));
  EXPECT_EQ(r.acs, Rational(3));
  EXPECT_FALSE(r.supersolvable);
  EXPECT_TRUE(r.isoclinic_to_a4);
  EXPECT_TRUE(r.stem);
}

TEST(Analyze, C6AndLargest) {
  auto c6 = analyze(named("C6"));
  EXPECT_EQ(c6.d, Rational(1));
  EXPECT_TRUE(c6.abelian);
  auto big = analyze(named("(C5xC5):C15"));
  EXPECT_EQ(big.order, 375u);
  EXPECT_EQ(big.d, Rational(23, 375));
  EXPECT_FALSE(big.supersolvable);
}

TEST(Threshold516, Examples) {
  auto a4 = verify_supersolvable_above_5_16(named("A4"));
  EXPECT_EQ(a4.status, VerdictStatus::Holds);
  EXPECT_NE(a4.detail.find("isoclinic to A4"), std::string::npos);
  EXPECT_EQ(verify_supersolvable_above_5_16(named("S4")).status, VerdictStatus::NotApplicable);
  auto d8 = verify_supersolvable_above_5_16(named("D8"));
  EXPECT_EQ(d8.status, VerdictStatus::Holds);
  EXPECT_NE(d8.detail.find("supersolvable"), std::string::npos);
}

TEST(ThresholdOneThird, Examples) {
  auto c2a4 = verify_supersolvable_or_a4_at_one_third(named("C2xA4"));
  EXPECT_EQ(c2a4.status, VerdictStatus::Holds);
  EXPECT_NE(c2a4.detail.find("isoclinic"), std::string::npos);
  EXPECT_EQ(verify_supersolvable_or_a4_at_one_third(named("A4")).status, VerdictStatus::Holds);
  EXPECT_EQ(verify_supersolvable_or_a4_at_one_third(named("A5")).status, VerdictStatus::NotApplicable);
}

TEST(ThresholdOdd, Examples) {
  auto g = verify_odd_above_35_243(named("(C5xC5):C3"));
  EXPECT_EQ(g.status, VerdictStatus::Holds);
  EXPECT_NE(g.detail.find("isoclinic"), std::string::npos);
  auto c7 = verify_odd_above_35_243(named("C7:C3"));
  EXPECT_EQ(c7.status, VerdictStatus::Holds);
  EXPECT_NE(c7.detail.find("supersolvable"), std::string::npos);
  EXPECT_EQ(verify_odd_above_35_243(named("(C5xC5):C15")).status, VerdictStatus::NotApplicable);
  auto a4 = verify_odd_above_35_243(named("A4"));
  EXPECT_EQ(a4.status, VerdictStatus::NotApplicable);
  EXPECT_EQ(a4.detail, "not applicable: even order");
}

TEST(SmallClass, A4KleinWitnessHasSizeThree) {
  auto g = named("A4");
  auto v = verify_small_class_in_split_normal(g, klein_normal(g), 4);
  EXPECT_EQ(v.status, VerdictStatus::Holds);
  ASSERT_TRUE(v.witness_class_size.has_value());
  EXPECT_EQ(*v.witness_class_size, 3u);
}

TEST(SmallClass, CentralC2InC2xA4) {
  auto g = named("C2xA4");
  auto v = verify_small_class_in_split_normal(g, center(g), 4);
  EXPECT_EQ(v.status, VerdictStatus::Holds);
  EXPECT_EQ(*v.witness_class_size, 1u);
  EXPECT_NE(v.detail.find("Z(G) != 1"), std::string::npos);
}

TEST(SmallClass, S3OverC3) {
  auto g = named("S3");
  auto v = verify_small_class_in_split_normal(g, derived_subgroup(g), 3);
  EXPECT_EQ(v.status, VerdictStatus::Holds);
  EXPECT_EQ(*v.witness_class_size, 2u);
}

TEST(SmallClass, PreconditionsReportedDistinctly) {
  auto q8 = named("Q8");
  EXPECT_EQ(verify_small_class_in_split_normal(q8, center(q8), 3).status, VerdictStatus::PreconditionFailed);
  auto a4 = named("A4");
  EXPECT_EQ(verify_small_class_in_split_normal(a4, Subgroup::trivial(a4), 3).status,
            VerdictStatus::PreconditionFailed);
  auto s4 = named("S4");
  auto a4_in_s4 = derived_subgroup(s4);
  EXPECT_EQ(verify_small_class_in_split_normal(s4, a4_in_s4, 3).status, VerdictStatus::PreconditionFailed);
  EXPECT_EQ(verify_small_class_in_split_normal(a4, klein_normal(a4), 1).status, VerdictStatus::PreconditionFailed);
  EXPECT_EQ(verify_small_class_in_split_normal(a4, klein_normal(a4), 3).status, VerdictStatus::NotApplicable);
}

TEST(Klein, Examples) {
  auto abel = named("C2xC2xC3");
  auto v = verify_klein_fixed_point(abel, klein_normal(abel));
  EXPECT_EQ(v.status, VerdictStatus::Holds);
  auto a4 = named("A4");
  auto w = verify_klein_fixed_point(a4, klein_normal(a4));
  EXPECT_EQ(w.status, VerdictStatus::NotApplicable);
  EXPECT_FALSE(w.applicable());
  EXPECT_EQ(verify_klein_fixed_point(a4, Subgroup::whole(a4)).status, VerdictStatus::PreconditionFailed);
}

TEST(Klein, ExhaustiveCatalogScan) {
  for (const auto& e : catalog()) {
    auto g = named(e.key);
    for (const auto& n : normal_subgroups(g)) {
      if (!is_klein_four(n)) continue;
      auto v = verify_klein_fixed_point(g, n);
      EXPECT_NE(v.status, VerdictStatus::Fails) << e.key << ": " << v.detail;
    }
  }
}

TEST(Gallagher, VerdictExamples) {
  auto g = named("C2xA4");
  auto v = verify_gallagher(g, center(g));
  EXPECT_EQ(v.status, VerdictStatus::Holds);
  EXPECT_NE(v.detail.find("equality yes"), std::string::npos);
}

TEST(Boundary, FiveEighthsMakesNoAbelianClaim) {
  for (const char* key : {"Q8", "D8", "C2xQ8"}) {
    auto r = analyze(named(key), key);
    EXPECT_EQ(r.d, Rational(5, 8));
    EXPECT_EQ(find(r, "abelian-above-5/8").status, VerdictStatus::NotApplicable) << key;
    EXPECT_FALSE(r.abelian);
  }
}

TEST(Boundary, OneThirdIsInclusiveForOneStatementOnly) {
  for (const char* key : {"A4", "C2xA4"}) {
    auto g = named(key);
    EXPECT_TRUE(verify_supersolvable_or_a4_at_one_third(g).applicable()) << key;
    auto k = verify_klein_fixed_point(g, klein_normal(g));
    EXPECT_EQ(k.status, VerdictStatus::NotApplicable) << key;
  }
}

TEST(Verification, CatalogHasNoFailures) {
  auto result = run_catalog_verification();
  EXPECT_TRUE(result.ok());
  EXPECT_EQ(result.summary.groups, catalog().size());
  EXPECT_EQ(result.summary.failures, 0u);
  EXPECT_EQ(result.summary.precondition_failures, 0u);
  EXPECT_GT(result.summary.applicable, 0u);
  EXPECT_EQ(result.summary.applicable, result.summary.holds);
}

TEST(Verification, SingleGroupFilter) {
  VerifyOptions o;
  o.names = {"A4"};
  auto result = run_catalog_verification(o);
  ASSERT_EQ(result.reports.size(), 1u);
  EXPECT_EQ(result.reports[0].name, "A4");
}

TEST(Verification, ParallelMatchesSequential) {
  VerifyOptions seq;
  VerifyOptions par;
  par.jobs = 4;
  auto a = run_catalog_verification(seq);
  auto b = run_catalog_verification(par);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(a.reports[i].name, b.reports[i].name);
    ASSERT_EQ(a.reports[i].verdicts.size(), b.reports[i].verdicts.size());
    for (std::size_t j = 0; j < a.reports[i].verdicts.size(); ++j) {
      EXPECT_EQ(a.reports[i].verdicts[j].detail, b.reports[i].verdicts[j].detail);
    }
  }
}

TEST(Verification, TheoremFilter) {
  VerifyOptions o;
  o.names = {"A4"};
  o.theorems = {"odd"};
  auto r = run_catalog_verification(o).reports.at(0);
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].detail, "not applicable: even order");
}

TEST(Verification, ClassifierChain) {
  for (const auto& r : run_catalog_verification().reports) {
    EXPECT_TRUE(!r.nilpotent || r.supersolvable) << r.name;
    EXPECT_TRUE(!r.supersolvable || r.solvable) << r.name;
    EXPECT_EQ(r.solvable, r.name != "A5") << r.name;
  }
}
