#include "doctest.h"

#include "mi/multiplier.hpp"
#include "mi/rng.hpp"

using namespace mi;

namespace {

MonomialIdeal ideal2(std::vector<std::pair<long long, long long>> pts) {
  std::vector<ExponentVector> gens;
  for (auto [x, y] : pts) gens.push_back({Int(x), Int(y)});
  return MonomialIdeal(2, std::move(gens));
}

MonomialIdeal random_ideal(TrialRng& rng, int vars, long long max_exp, long long max_gens) {
  long long count = rng.uniform(1, max_gens);
  std::vector<ExponentVector> gens;
  for (long long i = 0; i < count; ++i) {
    ExponentVector v(vars);
    for (int j = 0; j < vars; ++j) v[j] = Int(rng.uniform(0, max_exp));
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(vars, std::move(gens));
}

const std::vector<Rat> weight_menu = {Rat(1, 3), Rat(1, 2), Rat(2, 3),
                                      Rat(1),    Rat(3, 2), Rat(2)};

} // namespace

TEST_CASE("multiplier ideal of an SNC divisor rounds down coefficients") {
  SncDivisor d1{2, {Rat(3, 2), Rat(0)}, std::nullopt};
  CHECK(mi_snc(d1) == ideal2({{1, 0}}));

  SncDivisor d2{2, {Rat(1, 2), Rat(2, 3)}, std::nullopt};
  CHECK(mi_snc(d2) == MonomialIdeal::unit(2));

  SncDivisor d3{2, {Rat(2), Rat(1)}, std::nullopt};
  CHECK(mi_snc(d3) == ideal2({{2, 1}}));

  SncDivisor bad{2, {Rat(-1), Rat(0)}, std::nullopt};
  CHECK_THROWS_AS(mi_snc(bad), InputError);

  // The extra principal part folds into the coordinate coefficients.
  SncDivisor with_principal{2, {Rat(1, 2), Rat(0)},
                            std::pair<ExponentVector, Rat>{{Int(1), Int(2)}, Rat(3, 4)}};
  // Coefficients: 1/2 + 3/4 = 5/4 and 0 + 3/2; floors (1, 1).
  CHECK(mi_snc(with_principal) == ideal2({{1, 1}}));
}

TEST_CASE("multiplier ideals of the stated monomial ideals") {
  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  CHECK(mi_ideal(m, Rat(1)) == MonomialIdeal::unit(2));
  CHECK(mi_ideal(product(m, m), Rat(1)) == m);
  CHECK(mi_ideal(ideal2({{2, 1}, {0, 3}}), Rat(1)) == ideal2({{1, 1}, {0, 2}}));
  CHECK_THROWS_AS(mi_ideal(m, Rat(0)), InputError);
  CHECK_THROWS_AS(mi_ideal(m, Rat(-1, 2)), InputError);
}

TEST_CASE("minimal generators of J(c·a) stay inside the stated box") {
  for (std::uint64_t t = 0; t < 80; ++t) {
    TrialRng rng(41, t);
    MonomialIdeal a = random_ideal(rng, 2, 6, 5);
    Rat c = rng.pick(weight_menu);
    Int m = 0;
    for (const auto& g : a.gens())
      for (const auto& e : g) m = std::max(m, e);
    Int box = ceil_rat(c * Rat(m));
    MonomialIdeal j = mi_ideal(a, c);
    for (const auto& g : j.gens())
      for (const auto& e : g) CHECK(e <= box);
  }
}

TEST_CASE("mixed multiplier ideals") {
  CHECK(mi_mixed(ideal2({{1, 0}}), Rat(3, 2), ideal2({{0, 1}}), Rat(5, 2)) ==
        ideal2({{1, 2}}));

  MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  CHECK(mi_mixed(m, Rat(1), m, Rat(1)) == mi_ideal(product(m, m), Rat(1)));
  CHECK(mi_mixed(m, Rat(1, 2), m, Rat(1, 2)) == mi_ideal(m, Rat(1)));
  CHECK_THROWS_AS(mi_mixed(m, Rat(1), MonomialIdeal::unit(3), Rat(1)), InputError);
  CHECK_THROWS_AS(mi_mixed(m, Rat(0), m, Rat(1)), InputError);
}

TEST_CASE("mixed ideal with integer weights is the ideal of the power product") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    TrialRng rng(42, t);
    MonomialIdeal a = random_ideal(rng, 2, 4, 3);
    MonomialIdeal b = random_ideal(rng, 2, 4, 3);
    Int p(rng.uniform(1, 2)), q(rng.uniform(1, 2));
    CHECK(mi_mixed(a, Rat(p), b, Rat(q)) ==
          mi_ideal(product(power(a, p), power(b, q)), Rat(1)));
  }
}

TEST_CASE("log canonical threshold") {
  CHECK(lct(ideal2({{1, 0}, {0, 1}})) == ExtRat::finite(Rat(2)));
  CHECK(lct(ideal2({{2, 0}, {0, 2}})) == ExtRat::finite(Rat(1)));
  CHECK(lct(MonomialIdeal::unit(2)).is_infinite());

  // Boundary behaviour against mi_ideal: trivial strictly below the
  // threshold, non-trivial at it.
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(43, t);
    MonomialIdeal a = random_ideal(rng, 2, 6, 4);
    ExtRat threshold = lct(a);
    if (threshold.is_infinite()) {
      CHECK(a.is_unit());
      continue;
    }
    const Rat& c = threshold.value();
    CHECK(mi_ideal(a, c) != MonomialIdeal::unit(2));
    CHECK(mi_ideal(a, c * Rat(63, 64)) == MonomialIdeal::unit(2));
    // A few bisection steps bracket the same threshold.
    Rat lo = c / 2, hi = c * 2;
    for (int step = 0; step < 12; ++step) {
      Rat mid = (lo + hi) / 2;
      if (mi_ideal(a, mid) == MonomialIdeal::unit(2))
        lo = mid;
      else
        hi = mid;
    }
    CHECK(lo < c);
    CHECK(c <= hi);
    CHECK(hi - lo <= Rat(3, 2) * c / 4096);
  }
}

TEST_CASE("smooth fan refinement of the normal fan") {
  Fan2D f1 = refine_fan_2d(ideal2({{1, 0}, {0, 1}}));
  CHECK(f1.rays() == std::vector<std::vector<Int>>{{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
  CHECK(f1.is_smooth());

  Fan2D f2 = refine_fan_2d(ideal2({{2, 0}, {0, 3}}));
  CHECK(f2.is_smooth());
  CHECK(f2.has_ray({Int(3), Int(2)}));

  Fan2D f3 = refine_fan_2d(MonomialIdeal::unit(2));
  CHECK(f3.rays() == std::vector<std::vector<Int>>{{Int(1), Int(0)}, {Int(0), Int(1)}});

  CHECK_THROWS_AS(refine_fan_2d(MonomialIdeal(3, {{Int(1), Int(0), Int(0)}})),
                  UnsupportedDimension);

  SncDivisor d{2, {Rat(1), Rat(2)}, std::nullopt};
  CHECK(refine_fan_2d(d).rays().size() == 2);
}

TEST_CASE("fan refinement terminates on determinant-5 cones") {
  // Consecutive normals (4,5) and (3,5): a case where inserting plain ray
  // sums never reduces the determinant.
  MonomialIdeal a = ideal2({{0, 9}, {5, 5}, {10, 2}});
  Fan2D fan = refine_fan_2d(a);
  CHECK(fan.is_smooth());
  CHECK(fan.has_ray({Int(4), Int(5)}));
  CHECK(fan.has_ray({Int(3), Int(5)}));
}

TEST_CASE("fan validation") {
  CHECK_THROWS_AS(Fan2D({{Int(1), Int(0)}}), InputError);
  CHECK_THROWS_AS(Fan2D({{Int(0), Int(1)}, {Int(1), Int(0)}}), InputError);
  CHECK_THROWS_AS(Fan2D({{Int(1), Int(0)}, {Int(-1), Int(1)}, {Int(0), Int(1)}}), InputError);
  Fan2D simplicial({{Int(1), Int(0)}, {Int(1), Int(2)}, {Int(0), Int(1)}});
  CHECK(!simplicial.is_smooth());
}

TEST_CASE("from-definition evaluation on a smooth fan") {
  MonomialIdeal m2 = ideal2({{2, 0}, {1, 1}, {0, 2}});
  Fan2D fan = refine_fan_2d(m2);
  CHECK(mi_from_resolution_2d(m2, Rat(1), fan) == ideal2({{1, 0}, {0, 1}}));

  MonomialIdeal x3 = ideal2({{3, 0}});
  Fan2D basic({{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
  CHECK(mi_from_resolution_2d(x3, Rat(1, 2), basic) == ideal2({{1, 0}}));

  Fan2D simplicial({{Int(1), Int(0)}, {Int(1), Int(2)}, {Int(0), Int(1)}});
  CHECK_THROWS_AS(mi_from_resolution_2d(m2, Rat(1), simplicial), InvalidResolution);
  Fan2D too_coarse({{Int(1), Int(0)}, {Int(0), Int(1)}});
  CHECK_THROWS_AS(mi_from_resolution_2d(m2, Rat(1), too_coarse), InvalidResolution);
}

TEST_CASE("criterion and resolution definitions agree") {
  for (std::uint64_t t = 0; t < 150; ++t) {
    TrialRng rng(44, t);
    MonomialIdeal a = random_ideal(rng, 2, 8, 5);
    Fan2D fan = refine_fan_2d(a);
    for (const auto& c : weight_menu)
      CHECK(mi_ideal(a, c) == mi_from_resolution_2d(a, c, fan));
  }
}

TEST_CASE("resolution independence under over-refinement") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    TrialRng rng(45, t);
    MonomialIdeal a = random_ideal(rng, 2, 7, 4);
    Rat c = rng.pick(weight_menu);
    Fan2D fan = refine_fan_2d(a);
    MonomialIdeal expected = mi_from_resolution_2d(a, c, fan);
    CHECK(expected == mi_ideal(a, c));

    std::vector<std::vector<Int>> extra;
    for (int e = 0; e < 4; ++e) {
      Int p(rng.uniform(0, 11)), q(rng.uniform(0, 11));
      if (p == 0 && q == 0) p = 1;
      extra.push_back({p, q});
    }
    Fan2D refined = fan_with_rays(fan, extra);
    CHECK(refined.is_smooth());
    CHECK(mi_from_resolution_2d(a, c, refined) == expected);
  }
}

TEST_CASE("containment, monotonicity and the power identity") {
  for (std::uint64_t t = 0; t < 60; ++t) {
    TrialRng rng(46, t);
    MonomialIdeal a = random_ideal(rng, 2, 5, 4);
    MonomialIdeal j1 = mi_ideal(a, Rat(1));
    CHECK(j1.contains(a)); // a ⊆ J(a)

    Rat c = rng.pick(weight_menu);
    Rat cc = c * Rat(rng.uniform(1, 3));
    CHECK(mi_ideal(a, c).contains(mi_ideal(a, cc))); // antitone in the weight

    MonomialIdeal b = random_ideal(rng, 2, 5, 4);
    MonomialIdeal sum = ideal_sum(a, b); // a ⊆ sum
    CHECK(mi_ideal(sum, c).contains(mi_ideal(a, c))); // monotone in the ideal

    Int m(rng.uniform(1, 3));
    CHECK(mi_ideal(a, Rat(m)) == mi_ideal(power(a, m), Rat(1)));
    CHECK(mi_ideal(a, Rat(m) * c) == mi_ideal(power(a, m), c));
  }
}

TEST_CASE("principal ideals agree with their divisor reading") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(47, t);
    ExponentVector u = {Int(rng.uniform(0, 6)), Int(rng.uniform(0, 6))};
    Rat c = rng.pick(weight_menu);
    MonomialIdeal principal(2, {u});
    SncDivisor d{2, {Rat(0), Rat(0)}, std::pair<ExponentVector, Rat>{u, c}};
    CHECK(mi_ideal(principal, c) == mi_snc(d));
  }
}
