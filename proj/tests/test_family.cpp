#include "doctest.h"

#include "mi/family.hpp"
#include "mi/multiplier.hpp"
#include "mi/rng.hpp"
#include "mi/verify.hpp"

using namespace mi;

namespace {

MonomialIdeal ideal2(std::vector<std::pair<long long, long long>> pts) {
  std::vector<ExponentVector> gens;
  for (auto [x, y] : pts) gens.push_back({Int(x), Int(y)});
  return MonomialIdeal(2, std::move(gens));
}

GradedFamily polytope_family(long long a1, long long a2, long long rhs) {
  return GradedFamily::polytope(
      NewtonRegion::from_facets(2, {Facet{{Int(a1), Int(a2)}, Rat(rhs)}}));
}

} // namespace

TEST_CASE("family members by kind") {
  MonomialIdeal m2 = ideal2({{2, 0}, {1, 1}, {0, 2}});
  GradedFamily pw = GradedFamily::powers(m2);
  CHECK(pw.member(3) == power(m2, 3));
  CHECK_THROWS_AS(pw.member(0), InputError);

  GradedFamily pl = polytope_family(1, 2, 2);
  CHECK(pl.member(1) == ideal2({{2, 0}, {0, 1}}));
  CHECK(pl.member(2) == ideal2({{4, 0}, {2, 1}, {0, 2}}));

  std::vector<MonomialIdeal> members;
  for (Int k = 1; k <= 6; ++k) members.push_back(power(ideal2({{1, 0}, {0, 1}}), k));
  GradedFamily tb = GradedFamily::table(members, false);
  CHECK(tb.member(4) == power(ideal2({{1, 0}, {0, 1}}), 4));
  CHECK_THROWS_AS(tb.member(7), InputError);

  GradedFamily tb_ext = GradedFamily::table(members, true);
  CHECK(tb_ext.member(9) == power(ideal2({{1, 0}, {0, 1}}), 9));
}

TEST_CASE("table families must be multiplicative") {
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  // a_1·a_1 = m^2 is not inside a_2 = m^5.
  CHECK_THROWS_AS(GradedFamily::table({m, power(m, 5)}, false), InputError);
}

TEST_CASE("reindexing is the m-fold family") {
  MonomialIdeal m2 = ideal2({{2, 0}, {0, 2}});
  GradedFamily pw = GradedFamily::powers(m2);
  CHECK(pw.reindexed(3).member(2) == pw.member(6));

  GradedFamily pl = polytope_family(1, 2, 2);
  CHECK(pl.reindexed(2).member(3) == pl.member(6));

  std::vector<MonomialIdeal> members;
  for (Int k = 1; k <= 12; ++k)
    members.push_back(power(ideal2({{1, 0}, {0, 1}}), ceil_rat(Rat(3) * Rat(k) / 2)));
  GradedFamily tb = GradedFamily::table(members, true);
  CHECK(tb.reindexed(2).member(3) == tb.member(6));
}

TEST_CASE("asymptotic multiplier ideal of a powers family is immediate") {
  for (std::uint64_t t = 0; t < 25; ++t) {
    TrialRng rng(51, t);
    MonomialIdeal a = sample_ideal(rng, 2, 5);
    Rat c = sample_weight(rng);
    auto result = asymptotic_mi(GradedFamily::powers(a), c);
    CHECK(result.certified);
    CHECK(result.k0 == Int(1));
    CHECK(result.ideal == mi_ideal(a, c));
  }
}

TEST_CASE("asymptotic ideal of the polytope family stabilizes early") {
  GradedFamily pl = polytope_family(1, 2, 2);
  auto result = asymptotic_mi(pl, Rat(1));
  CHECK(result.certified);
  CHECK(result.k0 <= Int(2));

  // A polytope deep enough to give a non-trivial asymptotic ideal.
  GradedFamily deep = polytope_family(1, 2, 4);
  auto deep_result = asymptotic_mi(deep, Rat(1));
  CHECK(deep_result.certified);
  CHECK(deep_result.ideal == ideal2({{2, 0}, {0, 1}}));
}

TEST_CASE("asymptotic chain is ascending and integer weights rescale the family") {
  for (std::uint64_t t = 0; t < 12; ++t) {
    TrialRng rng(52, t);
    GradedFamily f = sample_family(rng, 4);
    auto result = asymptotic_mi(f, Rat(1));
    for (std::size_t i = 0; i + 1 < result.chain.size(); ++i)
      CHECK(result.chain[i + 1].second.contains(result.chain[i].second));

    for (long long m : {2LL, 3LL, 4LL}) {
      auto lhs = asymptotic_mi(f, Rat(m));
      auto rhs = asymptotic_mi(f.reindexed(m), Rat(1));
      CHECK(lhs.ideal == rhs.ideal);
    }
  }
}

TEST_CASE("base ideals sit inside the asymptotic multiplier ideal") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    TrialRng rng(53, t);
    GradedFamily f = sample_family(rng, 4);
    for (Int k = 1; k <= 6; ++k) {
      auto result = asymptotic_mi(f, Rat(k));
      if (!result.certified) continue;
      CHECK(result.ideal.contains(f.member(k)));
    }
  }
}

TEST_CASE("asymptotic subadditivity on the stated example") {
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  GradedFamily f = GradedFamily::powers(power(m, 2));
  auto left = asymptotic_mi(f, Rat(2));
  CHECK(left.ideal == power(m, 3)); // J((x,y)^4) = (x,y)^3
  auto right = asymptotic_mi(f, Rat(1));
  CHECK(right.ideal == m);
  auto outcome = check_asymptotic_subadditivity(f, 2);
  CHECK(!outcome.inconclusive);
  CHECK(!outcome.violation.has_value());

  auto trivial = check_asymptotic_subadditivity(f, 1);
  CHECK(!trivial.violation.has_value());

  GradedFamily pl = polytope_family(1, 2, 2);
  auto pl_outcome = check_asymptotic_subadditivity(pl, 3);
  CHECK(!pl_outcome.inconclusive);
  CHECK(!pl_outcome.violation.has_value());
}
