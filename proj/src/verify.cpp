#include "mi/verify.hpp"

#include <chrono>
#include <functional>

#include "mi/multiplier.hpp"
#include "mi/parallel.hpp"
#include "mi/serialize.hpp"

namespace mi {

namespace {

Json witness_json(const ExponentVector& v) {
  Json w = Json::array();
  for (const auto& e : v) w.push_back(e.convert_to<long long>());
  return w;
}

// First generator of inner that escapes outer, if any.
std::optional<ExponentVector> escape_witness(const MonomialIdeal& inner,
                                             const MonomialIdeal& outer) {
  for (const auto& g : inner.gens())
    if (!outer.contains_monomial(g)) return g;
  return std::nullopt;
}

template <class Stamp>
VerificationReport finish(VerificationReport r, Stamp started) {
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return r;
}

} // namespace

std::optional<std::string> check_subadditivity(const MonomialIdeal& a, const Rat& c,
                                               const MonomialIdeal& b, const Rat& d) {
  MonomialIdeal left = mi_mixed(a, c, b, d);
  MonomialIdeal right = product(mi_ideal(a, c), mi_ideal(b, d));
  if (right.contains(left)) return std::nullopt;
  Json detail;
  detail["a"] = ideal_json(a);
  detail["c"] = format_rat(c);
  detail["b"] = ideal_json(b);
  detail["d"] = format_rat(d);
  detail["left"] = ideal_json(left);
  detail["right"] = ideal_json(right);
  detail["witness"] = witness_json(*escape_witness(left, right));
  return detail.dump();
}

std::optional<std::string> check_product_formula(const MonomialIdeal& a, const Rat& c,
                                                 const MonomialIdeal& b, const Rat& d) {
  MonomialIdeal lifted_a = lift_left(a, b.dim());
  MonomialIdeal lifted_b = lift_right(b, a.dim());
  MonomialIdeal left = mi_mixed(lifted_a, c, lifted_b, d);
  MonomialIdeal right = external_product(mi_ideal(a, c), mi_ideal(b, d));
  if (left == right) return std::nullopt;
  Json detail;
  detail["a"] = ideal_json(a);
  detail["c"] = format_rat(c);
  detail["b"] = ideal_json(b);
  detail["d"] = format_rat(d);
  detail["left"] = ideal_json(left);
  detail["right"] = ideal_json(right);
  auto witness = escape_witness(left, right);
  if (!witness) witness = escape_witness(right, left);
  detail["witness"] = witness_json(*witness);
  return detail.dump();
}

RestrictionOutcome check_restriction(const MonomialIdeal& a, const Rat& c,
                                     const std::vector<int>& vanish) {
  RestrictionOutcome out;
  auto restricted = try_restrict(a, vanish);
  if (!restricted) {
    out.vacuous = true;
    return out;
  }
  MonomialIdeal left = mi_ideal(*restricted, c);
  MonomialIdeal full = mi_ideal(a, c);
  auto right = try_restrict(full, vanish);
  bool holds = right && right->contains(left);
  if (holds) return out;
  Json detail;
  detail["a"] = ideal_json(a);
  detail["c"] = format_rat(c);
  Json subset = Json::array();
  for (int i : vanish) subset.push_back(i);
  detail["vanish"] = std::move(subset);
  detail["left"] = ideal_json(left);
  if (right) {
    detail["right"] = ideal_json(*right);
    detail["witness"] = witness_json(*escape_witness(left, *right));
  } else {
    detail["right"] = "restriction of J vanished";
  }
  out.violation = detail.dump();
  return out;
}

std::optional<std::string> check_diagonal_pipeline(const MonomialIdeal& a, const Rat& c,
                                                   const MonomialIdeal& b, const Rat& d) {
  if (a.dim() != b.dim()) throw InputError("diagonal pipeline needs equal dimensions");
  int n = a.dim();
  MonomialIdeal lifted_a = lift_left(a, n);
  MonomialIdeal lifted_b = lift_right(b, n);

  // Step 1: product formula as an equality on the doubled space.
  MonomialIdeal doubled = mi_mixed(lifted_a, c, lifted_b, d);
  MonomialIdeal kunneth = external_product(mi_ideal(a, c), mi_ideal(b, d));
  bool step1 = doubled == kunneth;

  // Step 2: restriction of the doubled ideal to the diagonal.
  MonomialIdeal mixed = mi_mixed(a, c, b, d);
  MonomialIdeal diag = diagonal_restrict(doubled);
  bool step2 = diag.contains(mixed);

  // Step 3: the composite conclusion must match the direct check.
  bool direct = product(mi_ideal(a, c), mi_ideal(b, d)).contains(mixed);
  bool step3 = !(step1 && step2) || direct;

  if (step1 && step2 && step3) return std::nullopt;
  Json detail;
  detail["a"] = ideal_json(a);
  detail["c"] = format_rat(c);
  detail["b"] = ideal_json(b);
  detail["d"] = format_rat(d);
  detail["step1_product_formula"] = step1;
  detail["step2_diagonal_restriction"] = step2;
  detail["step3_matches_direct"] = step3;
  return detail.dump();
}

// ---- sampling --------------------------------------------------------------

MonomialIdeal sample_ideal(TrialRng& rng, int vars, const Int& max_exp) {
  long long cap = max_exp.convert_to<long long>();
  auto random_point = [&](bool allow_zero) {
    ExponentVector v(vars);
    do {
      for (int i = 0; i < vars; ++i) v[i] = Int(rng.uniform(0, cap));
    } while (!allow_zero && is_zero_vector(v));
    return v;
  };

  switch (rng.next() % 8) {
    case 0: { // principal
      return MonomialIdeal(vars, {random_point(false)});
    }
    case 1:
    case 2: { // m-primary: pure powers plus a couple of extra points
      std::vector<ExponentVector> gens;
      for (int i = 0; i < vars; ++i) {
        ExponentVector p(vars, 0);
        p[i] = Int(rng.uniform(1, cap > 0 ? cap : 1));
        gens.push_back(std::move(p));
      }
      long long extra = rng.uniform(0, 2);
      for (long long e = 0; e < extra; ++e) gens.push_back(random_point(false));
      return MonomialIdeal(vars, std::move(gens));
    }
    case 3: { // unit
      return MonomialIdeal::unit(vars);
    }
    default: { // general, 1..5 generators
      long long count = rng.uniform(1, 5);
      std::vector<ExponentVector> gens;
      for (long long g = 0; g < count; ++g) gens.push_back(random_point(true));
      return MonomialIdeal(vars, std::move(gens));
    }
  }
}

Rat sample_weight(TrialRng& rng) {
  static const std::vector<Rat> menu = {Rat(1, 3), Rat(1, 2), Rat(2, 3),
                                        Rat(1),    Rat(3, 2), Rat(2)};
  return rng.pick(menu);
}

GradedFamily sample_family(TrialRng& rng, const Int& max_exp) {
  long long cap = max_exp.convert_to<long long>();
  switch (rng.next() % 3) {
    case 0:
      return GradedFamily::powers(sample_ideal(rng, 2, max_exp));
    case 1: {
      // One or two facet rows with small positive data.
      std::vector<Facet> facets;
      long long count = rng.uniform(1, 2);
      for (long long i = 0; i < count; ++i) {
        Facet f;
        f.normal = {Int(rng.uniform(0, 3)), Int(rng.uniform(0, 3))};
        if (f.normal[0] == 0 && f.normal[1] == 0) f.normal[0] = 1;
        f.offset = Rat(rng.uniform(1, cap > 1 ? cap : 2));
        facets.push_back(std::move(f));
      }
      return GradedFamily::polytope(NewtonRegion::from_facets(2, std::move(facets)));
    }
    default: {
      // b^{ceil(alpha·k)} for a subadditive ceiling: a valid table family
      // with genuine jumps along the index.
      static const std::vector<Rat> alphas = {Rat(1), Rat(3, 2), Rat(2), Rat(5, 2)};
      Rat alpha = rng.pick(alphas);
      MonomialIdeal b = sample_ideal(rng, 2, max_exp);
      std::vector<MonomialIdeal> members;
      for (Int k = 1; k <= 12; ++k)
        members.push_back(power(b, ceil_rat(alpha * Rat(k))));
      return GradedFamily::table(std::move(members), true);
    }
  }
}

std::vector<MonomialIdeal> enumerate_ideals_2d(const Int& max_exp, int max_gens) {
  long long cap = max_exp.convert_to<long long>();
  std::vector<ExponentVector> points;
  for (long long x = 0; x <= cap; ++x)
    for (long long y = 0; y <= cap; ++y) points.push_back({Int(x), Int(y)});

  // Antichains in the grid: strictly increasing x with strictly decreasing y.
  std::vector<MonomialIdeal> out;
  std::vector<ExponentVector> current;
  std::function<void(std::size_t)> extend = [&](std::size_t next) {
    if (!current.empty()) out.push_back(MonomialIdeal(2, current));
    if (static_cast<int>(current.size()) == max_gens) return;
    for (std::size_t i = next; i < points.size(); ++i) {
      if (!current.empty()) {
        const auto& last = current.back();
        if (!(points[i][0] > last[0] && points[i][1] < last[1])) continue;
      }
      current.push_back(points[i]);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

// ---- campaigns -------------------------------------------------------------

namespace {

struct TrialOutcome {
  std::optional<std::string> violation;
  bool vacuous = false;
  bool inconclusive = false;
};

template <class Fn>
VerificationReport run_campaign(const std::string& check, long trials, std::uint64_t seed,
                                int workers, Fn&& trial_fn) {
  auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = check;
  report.seed = seed;
  report.trials = trials;
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  run_indexed(static_cast<std::size_t>(trials), workers, [&](std::size_t i) {
    TrialRng rng(seed, static_cast<std::uint64_t>(i));
    outcomes[i] = trial_fn(rng, i);
  });
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].vacuous) ++report.vacuous;
    if (outcomes[i].inconclusive) ++report.inconclusive;
    if (outcomes[i].violation) report.violations.push_back({i, *outcomes[i].violation});
  }
  return finish(std::move(report), started);
}

} // namespace

VerificationReport run_subadd_campaign(int vars, const Int& max_exp, long trials,
                                       std::uint64_t seed, int workers) {
  return run_campaign("subadd", trials, seed, workers, [&](TrialRng& rng, std::size_t) {
    MonomialIdeal a = sample_ideal(rng, vars, max_exp);
    MonomialIdeal b = sample_ideal(rng, vars, max_exp);
    Rat c = sample_weight(rng), d = sample_weight(rng);
    return TrialOutcome{check_subadditivity(a, c, b, d), false, false};
  });
}

VerificationReport run_product_campaign(const Int& max_exp, long trials, std::uint64_t seed,
                                        int workers) {
  return run_campaign("product", trials, seed, workers, [&](TrialRng& rng, std::size_t) {
    int n1 = static_cast<int>(rng.uniform(1, 2));
    int n2 = static_cast<int>(rng.uniform(1, 2));
    MonomialIdeal a = sample_ideal(rng, n1, max_exp);
    MonomialIdeal b = sample_ideal(rng, n2, max_exp);
    Rat c = sample_weight(rng), d = sample_weight(rng);
    return TrialOutcome{check_product_formula(a, c, b, d), false, false};
  });
}

VerificationReport run_restrict_campaign(int vars, const Int& max_exp, long trials,
                                         std::uint64_t seed, int workers) {
  if (vars < 2) throw InputError("restriction campaign needs at least 2 variables");
  return run_campaign("restrict", trials, seed, workers, [&](TrialRng& rng, std::size_t) {
    MonomialIdeal a = sample_ideal(rng, vars, max_exp);
    Rat c = sample_weight(rng);
    long long mask = rng.uniform(1, (1LL << vars) - 2);
    std::vector<int> vanish;
    for (int i = 0; i < vars; ++i)
      if (mask & (1LL << i)) vanish.push_back(i);
    auto outcome = check_restriction(a, c, vanish);
    return TrialOutcome{outcome.violation, outcome.vacuous, false};
  });
}

VerificationReport run_diagonal_campaign(const Int& max_exp, long trials, std::uint64_t seed,
                                         int workers) {
  return run_campaign("diagonal", trials, seed, workers, [&](TrialRng& rng, std::size_t) {
    MonomialIdeal a = sample_ideal(rng, 2, max_exp);
    MonomialIdeal b = sample_ideal(rng, 2, max_exp);
    Rat c = sample_weight(rng), d = sample_weight(rng);
    return TrialOutcome{check_diagonal_pipeline(a, c, b, d), false, false};
  });
}

VerificationReport run_asym_subadd_campaign(const Int& max_exp, long trials,
                                            std::uint64_t seed, const Int& search_bound,
                                            int workers) {
  return run_campaign("asym-subadd", trials, seed, workers, [&](TrialRng& rng, std::size_t) {
    GradedFamily f = sample_family(rng, max_exp);
    Int m(rng.uniform(1, 4));
    auto outcome = check_asymptotic_subadditivity(f, m, search_bound);
    return TrialOutcome{outcome.violation, false, outcome.inconclusive};
  });
}

VerificationReport run_subadd_exhaustive(const Int& max_exp, int max_gens,
                                         const std::vector<Rat>& weights, int workers) {
  auto started = std::chrono::steady_clock::now();
  auto ideals = enumerate_ideals_2d(max_exp, max_gens);
  const std::size_t n = ideals.size();
  const std::size_t w = weights.size();

  // J(c·a) is shared across the whole grid.
  std::vector<std::vector<MonomialIdeal>> mi_cache(n);
  run_indexed(n, workers, [&](std::size_t i) {
    mi_cache[i].reserve(w);
    for (const auto& c : weights) mi_cache[i].push_back(mi_ideal(ideals[i], c));
  });

  VerificationReport report;
  report.check = "subadd-exhaustive";
  report.trials = static_cast<long>(n * n * w * w);
  std::vector<std::optional<std::string>> found(n);
  run_indexed(n, workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < n && !found[i]; ++j) {
      for (std::size_t ci = 0; ci < w && !found[i]; ++ci) {
        for (std::size_t di = 0; di < w && !found[i]; ++di) {
          MonomialIdeal left = mi_mixed(ideals[i], weights[ci], ideals[j], weights[di]);
          MonomialIdeal right = product(mi_cache[i][ci], mi_cache[j][di]);
          if (!right.contains(left)) {
            Json detail;
            detail["a"] = ideal_json(ideals[i]);
            detail["c"] = format_rat(weights[ci]);
            detail["b"] = ideal_json(ideals[j]);
            detail["d"] = format_rat(weights[di]);
            detail["left"] = ideal_json(left);
            detail["right"] = ideal_json(right);
            detail["witness"] = witness_json(*escape_witness(left, right));
            found[i] = detail.dump();
          }
        }
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (found[i]) report.violations.push_back({i, *found[i]});
  return finish(std::move(report), started);
}

VerificationReport run_product_exhaustive(const Int& max_exp, const std::vector<Rat>& weights,
                                          int workers) {
  auto started = std::chrono::steady_clock::now();
  long long cap = max_exp.convert_to<long long>();
  std::vector<MonomialIdeal> line;
  for (long long e = 0; e <= cap; ++e) line.push_back(MonomialIdeal(1, {{Int(e)}}));

  VerificationReport report;
  report.check = "product-exhaustive";
  const std::size_t n = line.size(), w = weights.size();
  report.trials = static_cast<long>(n * n * w * w);
  std::vector<std::optional<std::string>> found(n);
  run_indexed(n, workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < n && !found[i]; ++j)
      for (std::size_t ci = 0; ci < w && !found[i]; ++ci)
        for (std::size_t di = 0; di < w && !found[i]; ++di)
          found[i] = check_product_formula(line[i], weights[ci], line[j], weights[di]);
  });
  for (std::size_t i = 0; i < n; ++i)
    if (found[i]) report.violations.push_back({i, *found[i]});
  return finish(std::move(report), started);
}

VerificationReport run_restrict_exhaustive(const Int& max_exp, int max_gens,
                                           const std::vector<Rat>& weights, int workers) {
  auto started = std::chrono::steady_clock::now();
  auto ideals = enumerate_ideals_2d(max_exp, max_gens);
  const std::size_t n = ideals.size(), w = weights.size();

  VerificationReport report;
  report.check = "restrict-exhaustive";
  report.trials = static_cast<long>(n * w * 2);
  std::vector<std::optional<std::string>> found(n);
  std::vector<long> vacuous(n, 0);
  run_indexed(n, workers, [&](std::size_t i) {
    for (std::size_t ci = 0; ci < w && !found[i]; ++ci) {
      for (int axis = 0; axis < 2 && !found[i]; ++axis) {
        auto outcome = check_restriction(ideals[i], weights[ci], {axis});
        if (outcome.vacuous) ++vacuous[i];
        if (outcome.violation) found[i] = outcome.violation;
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    report.vacuous += vacuous[i];
    if (found[i]) report.violations.push_back({i, *found[i]});
  }
  return finish(std::move(report), started);
}

} // namespace mi
