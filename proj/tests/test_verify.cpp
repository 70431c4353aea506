#include "doctest.h"

#include "mi/multiplier.hpp"
#include "mi/serialize.hpp"
#include "mi/verify.hpp"

using namespace mi;

namespace {

MonomialIdeal ideal2(std::vector<std::pair<long long, long long>> pts) {
  std::vector<ExponentVector> gens;
  for (auto [x, y] : pts) gens.push_back({Int(x), Int(y)});
  return MonomialIdeal(2, std::move(gens));
}

} // namespace

TEST_CASE("subadditivity holds on the stated instances") {
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  CHECK(!check_subadditivity(m, Rat(1), m, Rat(1)).has_value());
  // ... and the containment is strict there: J(m·m) = m inside the unit.
  MonomialIdeal left = mi_mixed(m, Rat(1), m, Rat(1));
  MonomialIdeal right = product(mi_ideal(m, Rat(1)), mi_ideal(m, Rat(1)));
  CHECK(left == m);
  CHECK(right == MonomialIdeal::unit(2));
  CHECK(right.contains(left));
  CHECK(left != right);

  CHECK(!check_subadditivity(ideal2({{2, 1}, {0, 3}}), Rat(1), ideal2({{3, 0}}), Rat(1))
             .has_value());

  // Unit neutral element: both sides agree exactly.
  MonomialIdeal a = ideal2({{2, 1}, {1, 2}});
  CHECK(mi_mixed(a, Rat(3, 2), MonomialIdeal::unit(2), Rat(1)) == mi_ideal(a, Rat(3, 2)));
}

TEST_CASE("product formula holds on the stated instances") {
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  CHECK(!check_product_formula(m, Rat(1), m, Rat(1)).has_value());
  MonomialIdeal m2 = product(m, m);
  CHECK(!check_product_formula(m2, Rat(1), m2, Rat(1)).has_value());
  // Explicit equality of both sides on the squared instance.
  MonomialIdeal lhs = mi_mixed(lift_left(m2, 2), Rat(1), lift_right(m2, 2), Rat(1));
  CHECK(lhs == external_product(m, m));
  CHECK(!check_product_formula(m2, Rat(1), MonomialIdeal::unit(2), Rat(1)).has_value());
  CHECK(!check_product_formula(MonomialIdeal(1, {{Int(3)}}), Rat(1, 2),
                               MonomialIdeal(1, {{Int(2)}}), Rat(2, 3))
             .has_value());
}

TEST_CASE("restriction theorem on the stated instances") {
  auto strict_case = check_restriction(ideal2({{2, 1}, {0, 3}}), Rat(1), {0});
  CHECK(!strict_case.vacuous);
  CHECK(!strict_case.violation.has_value());
  // Left (y^3), right (y^2): containment strict.
  CHECK(mi_ideal(restrict_ideal(ideal2({{2, 1}, {0, 3}}), {0}), Rat(1)) ==
        MonomialIdeal(1, {{Int(3)}}));
  CHECK(restrict_ideal(mi_ideal(ideal2({{2, 1}, {0, 3}}), Rat(1)), {0}) ==
        MonomialIdeal(1, {{Int(2)}}));

  auto unit_case = check_restriction(ideal2({{1, 0}, {0, 1}}), Rat(1), {0});
  CHECK(!unit_case.vacuous);
  CHECK(!unit_case.violation.has_value());

  auto vacuous_case = check_restriction(ideal2({{1, 0}}), Rat(1), {0});
  CHECK(vacuous_case.vacuous);
  CHECK(!vacuous_case.violation.has_value());
}

TEST_CASE("diagonal pipeline on the stated instances") {
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  CHECK(!check_diagonal_pipeline(m, Rat(1), m, Rat(1)).has_value());
  CHECK(!check_diagonal_pipeline(ideal2({{2, 0}}), Rat(1), ideal2({{0, 3}}), Rat(1))
             .has_value());
  CHECK(!check_diagonal_pipeline(ideal2({{2, 1}, {0, 2}}), Rat(3, 2),
                                 MonomialIdeal::unit(2), Rat(1))
             .has_value());
}

TEST_CASE("the 2D ideal grid has the expected size") {
  // Antichains of size s in the (E+1)x(E+1) grid number C(E+1, s)^2, so for
  // E = 4 and up to 3 generators: 25 + 100 + 100.
  CHECK(enumerate_ideals_2d(4, 3).size() == 225);
  CHECK(enumerate_ideals_2d(2, 2).size() == 9 + 9);
  CHECK(enumerate_ideals_2d(1, 2).size() == 4 + 1);
}

TEST_CASE("small exhaustive sweeps are violation-free") {
  const std::vector<Rat> menu = {Rat(1, 2), Rat(1), Rat(3, 2)};
  auto subadd = run_subadd_exhaustive(2, 2, menu);
  CHECK(subadd.passed());
  CHECK(subadd.trials == 18 * 18 * 9);

  auto prod = run_product_exhaustive(3, menu);
  CHECK(prod.passed());

  auto restrict_report = run_restrict_exhaustive(3, 3, menu);
  CHECK(restrict_report.passed());
  CHECK(restrict_report.vacuous > 0);
}

TEST_CASE("sampled campaigns pass and are scheduling-invariant") {
  auto one = run_subadd_campaign(2, 4, 60, 1234, 1);
  auto many = run_subadd_campaign(2, 4, 60, 1234, 4);
  CHECK(one.passed());
  CHECK(report_json(one).dump() == report_json(many).dump());

  auto restrict_one = run_restrict_campaign(3, 4, 40, 77, 1);
  auto restrict_many = run_restrict_campaign(3, 4, 40, 77, 3);
  CHECK(restrict_one.passed());
  CHECK(restrict_one.vacuous == restrict_many.vacuous);
  CHECK(report_json(restrict_one).dump() == report_json(restrict_many).dump());

  auto diag = run_diagonal_campaign(3, 20, 55, 2);
  CHECK(diag.passed());

  auto asym = run_asym_subadd_campaign(3, 10, 666, 24, 2);
  CHECK(asym.passed());
}

TEST_CASE("violation records re-check deterministically") {
  // A deliberately broken relation produces a violation whose witness data
  // is complete; subadditivity itself cannot be falsified, so fabricate a
  // failing containment by checking the reverse inclusion of a strict case.
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  MonomialIdeal left = mi_mixed(m, Rat(1), m, Rat(1));    // = m
  MonomialIdeal right = product(mi_ideal(m, Rat(1)), mi_ideal(m, Rat(1))); // unit
  CHECK(!left.contains(right));
  // The forward check stays quiet.
  CHECK(!check_subadditivity(m, Rat(1), m, Rat(1)).has_value());
}
