#include "doctest.h"

#include "mi/multiplier.hpp"
#include "mi/rng.hpp"
#include "mi/volume.hpp"

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

// b^{ceil(alpha·k)} table family: valid because the ceiling is subadditive.
GradedFamily ceil_family(const MonomialIdeal& b, const Rat& alpha, int len) {
  std::vector<MonomialIdeal> members;
  for (int k = 1; k <= len; ++k) members.push_back(power(b, ceil_rat(alpha * Rat(k))));
  return GradedFamily::table(std::move(members), true);
}

} // namespace

TEST_CASE("Samuel multiplicity via covolume") {
  CHECK(multiplicity(ideal2({{1, 0}, {0, 1}})) == ExtRat::finite(Rat(1)));
  CHECK(multiplicity(ideal2({{2, 0}, {0, 3}})) == ExtRat::finite(Rat(6)));
  CHECK(multiplicity(ideal2({{1, 0}})).is_infinite());
}

TEST_CASE("multiplicity against colength growth at m = 40") {
  MonomialIdeal a = ideal2({{2, 0}, {0, 3}});
  Rat via_colength = Rat(2) * colength(power(a, 40)).value() / Rat(1600);
  CHECK(via_colength >= Rat(27, 5));
  CHECK(via_colength <= Rat(33, 5));
}

TEST_CASE("volume of the maximal-ideal powers family") {
  GradedFamily f = GradedFamily::powers(ideal2({{1, 0}, {0, 1}}));
  auto est = volume(f, 12);
  REQUIRE(est.sequence.size() == 12);
  for (const auto& [k, col, norm] : est.sequence) {
    // Closed form: colength(m^k) = k(k+1)/2.
    CHECK(Rat(col) == Rat(k * (k + 1)) / 2);
    CHECK(norm == Rat(k + 1) / Rat(k));
    CHECK(norm >= Rat(1));
  }
  REQUIRE(est.exact_limit.has_value());
  CHECK(*est.exact_limit == Rat(1));
  CHECK(est.bracket_low == Rat(1));
  CHECK(est.bracket_high == Rat(1));
}

TEST_CASE("volume of the polytope family has the stated closed form") {
  GradedFamily f = polytope_family(1, 2, 2);
  auto est = volume(f, 12);
  for (const auto& [k, col, norm] : est.sequence) {
    CHECK(Rat(col) == Rat(k * (k + 1)));
    CHECK(norm == Rat(2) * Rat(k + 1) / Rat(k));
  }
  REQUIRE(est.exact_limit.has_value());
  CHECK(*est.exact_limit == Rat(2));
  CHECK(est.bracket_low == Rat(2));
  CHECK(est.bracket_high == Rat(2));

  GradedFamily squares = GradedFamily::powers(ideal2({{2, 0}, {0, 3}}));
  auto est2 = volume(squares, 8);
  REQUIRE(est2.exact_limit.has_value());
  CHECK(*est2.exact_limit == Rat(6));

  GradedFamily bad = GradedFamily::powers(ideal2({{1, 0}}));
  CHECK_THROWS_AS(volume(bad, 4), InfiniteVolume);
}

TEST_CASE("normalized colength dominates the multiplicity entries") {
  for (std::uint64_t t = 0; t < 8; ++t) {
    TrialRng rng(61, t);
    std::vector<ExponentVector> gens = {{Int(rng.uniform(1, 4)), Int(0)},
                                        {Int(0), Int(rng.uniform(1, 4))},
                                        {Int(rng.uniform(0, 4)), Int(rng.uniform(0, 4))}};
    GradedFamily f = GradedFamily::powers(MonomialIdeal(2, std::move(gens)));
    auto est = volume(f, 8);
    for (const auto& [k, col, norm] : est.sequence) CHECK(norm >= est.bracket_low);
    for (std::size_t i = 0; i + 1 < est.multiplicity_chain.size(); ++i)
      CHECK(est.multiplicity_chain[i].second >= est.multiplicity_chain[i + 1].second);
  }
}

TEST_CASE("moving sequences") {
  GradedFamily pl = polytope_family(1, 2, 2);
  for (const auto& [k, e] : moving_sequence(pl, 10)) CHECK(e == Rat(2));

  MonomialIdeal a = ideal2({{2, 0}, {1, 1}, {0, 2}});
  GradedFamily pw = GradedFamily::powers(a);
  Rat ea = multiplicity(a).value();
  for (const auto& [k, e] : moving_sequence(pw, 8)) CHECK(e == ea);

  // Table family with genuine jumps: non-constant, non-increasing along
  // the chain 1 | 2 | 4 | 8.
  GradedFamily tb = ceil_family(ideal2({{1, 0}, {0, 1}}), Rat(3, 2), 12);
  auto seq = moving_sequence(tb, 8);
  auto at = [&](long long k) {
    for (const auto& [kk, e] : seq)
      if (kk == k) return e;
    throw Error("missing entry");
  };
  CHECK(at(1) == Rat(4));
  CHECK(at(2) == Rat(9, 4));
  CHECK(at(4) == Rat(9, 4));
  CHECK(at(8) == Rat(9, 4));
  CHECK(at(1) > at(2));
  CHECK(at(2) >= at(4));
  CHECK(at(4) >= at(8));
}

TEST_CASE("fujita approximation certificates") {
  GradedFamily pl = polytope_family(1, 2, 2);
  auto cert = fujita_approximation(pl, Rat(1, 100), 8);
  CHECK(cert.reached);
  CHECK(cert.p == Int(1));
  CHECK(cert.achieved == Rat(2));
  CHECK(cert.target == Rat(2));
  CHECK(cert.base_ideal_contained);

  GradedFamily pw = GradedFamily::powers(ideal2({{2, 0}, {0, 3}}));
  auto cert2 = fujita_approximation(pw, Rat(1, 100), 8);
  CHECK(cert2.reached);
  CHECK(cert2.p == Int(1));
  CHECK(cert2.achieved == Rat(6));

  // The ceiling family needs level 2 to fall within 1/10.
  GradedFamily tb = ceil_family(ideal2({{1, 0}, {0, 1}}), Rat(3, 2), 12);
  auto cert3 = fujita_approximation(tb, Rat(1, 10), 8);
  CHECK(cert3.reached);
  CHECK(cert3.p == Int(2));
  CHECK(cert3.achieved == Rat(9, 4));
  CHECK(cert3.target == Rat(9, 4));
  CHECK(cert3.base_ideal_contained);
  // The certificate re-verifies from scratch.
  CHECK(multiplicity(tb.member(cert3.p)).value() / Rat(cert3.p * cert3.p) == cert3.achieved);

  CHECK_THROWS_AS(fujita_approximation(pl, Rat(0), 8), InputError);
}

TEST_CASE("volume consistency campaign holds") {
  auto report = run_volume_consistency_campaign(25, 99);
  CHECK(report.passed());
  CHECK(report.trials == 25);
}
