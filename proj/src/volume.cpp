#include "mi/volume.hpp"

#include <chrono>

#include "mi/multiplier.hpp"
#include "mi/parallel.hpp"
#include "mi/serialize.hpp"

namespace mi {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat rat_pow(const Rat& base, int exp) {
  Rat r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace

ExtRat multiplicity(const MonomialIdeal& a) {
  ExtRat covol = covolume(NewtonRegion::from_points(a.gens(), a.dim()));
  if (covol.is_infinite()) return covol;
  return ExtRat::finite(Rat(factorial(a.dim())) * covol.value());
}

VolumeEstimate volume(const GradedFamily& f, const Int& k_max) {
  if (k_max < 1) throw InputError("k_max must be at least 1");
  const int n = f.dim();
  const Int nfact = factorial(n);

  VolumeEstimate est;
  long long kk = k_max.convert_to<long long>();
  std::vector<std::tuple<Int, Int, Rat>> seq(static_cast<std::size_t>(kk));
  run_indexed(static_cast<std::size_t>(kk), 0, [&](std::size_t idx) {
    Int k = Int(idx) + 1;
    ExtRat col = colength(f.member(k));
    if (col.is_infinite())
      throw InfiniteVolume("family member a_" + k.str() + " is not m-primary");
    Int count = rat_num(col.value());
    Rat normalized = Rat(nfact) * col.value() / rat_pow(Rat(k), n);
    seq[idx] = {k, count, normalized};
  });
  est.sequence = std::move(seq);

  for (Int k = 1; k <= k_max; k *= 2) {
    ExtRat e = multiplicity(f.member(k));
    if (e.is_infinite())
      throw InfiniteVolume("family member a_" + k.str() + " is not m-primary");
    est.multiplicity_chain.emplace_back(k, e.value() / rat_pow(Rat(k), n));
  }
  est.bracket_low = est.multiplicity_chain.front().second;
  est.bracket_high = est.bracket_low;
  for (const auto& [k, e] : est.multiplicity_chain) {
    est.bracket_low = std::min(est.bracket_low, e);
    est.bracket_high = std::max(est.bracket_high, e);
  }

  if (f.kind() == FamilyKind::powers) {
    ExtRat e = multiplicity(f.base());
    if (!e.is_infinite()) est.exact_limit = e.value();
  } else if (f.kind() == FamilyKind::polytope) {
    ExtRat covol = covolume(f.region());
    if (!covol.is_infinite()) est.exact_limit = Rat(nfact) * covol.value();
  }
  return est;
}

std::vector<std::pair<Int, Rat>> moving_sequence(const GradedFamily& f, const Int& k_max) {
  if (k_max < 1) throw InputError("k_max must be at least 1");
  const int n = f.dim();
  long long kk = k_max.convert_to<long long>();
  std::vector<std::pair<Int, Rat>> seq(static_cast<std::size_t>(kk));
  run_indexed(static_cast<std::size_t>(kk), 0, [&](std::size_t idx) {
    Int k = Int(idx) + 1;
    ExtRat e = multiplicity(f.member(k));
    if (e.is_infinite())
      throw InfiniteVolume("family member a_" + k.str() + " is not m-primary");
    seq[idx] = {k, e.value() / rat_pow(Rat(k), n)};
  });
  return seq;
}

FujitaCertificate fujita_approximation(const GradedFamily& f, const Rat& eps,
                                       const Int& k_max) {
  if (eps <= 0) throw InputError("epsilon must be positive");
  auto seq = moving_sequence(f, k_max);

  Rat target;
  if (f.kind() == FamilyKind::powers) {
    target = multiplicity(f.base()).value();
  } else if (f.kind() == FamilyKind::polytope) {
    target = Rat(factorial(f.dim())) * covolume(f.region()).value();
  } else {
    target = seq.front().second;
    for (const auto& [k, e] : seq) target = std::min(target, e);
  }

  FujitaCertificate cert{Int(1), seq.front().second, target, eps, false,
                         MonomialIdeal::unit(f.dim()), MonomialIdeal::unit(f.dim()), false};
  for (const auto& [k, e] : seq) {
    if (e - target <= eps) {
      cert.p = k;
      cert.achieved = e;
      cert.reached = true;
      break;
    }
    if (e < cert.achieved) { // best so far when nothing reaches epsilon
      cert.p = k;
      cert.achieved = e;
    }
  }
  cert.truncation_base = f.member(cert.p);
  cert.asymptotic_ideal = asymptotic_mi(f, Rat(1)).ideal;
  cert.base_ideal_contained =
      asymptotic_mi(f, Rat(cert.p)).ideal.contains(cert.truncation_base);
  return cert;
}

VerificationReport run_volume_consistency_campaign(long trials, std::uint64_t seed,
                                                   int workers) {
  auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "volume-consistency";
  report.seed = seed;
  report.trials = trials;

  std::vector<std::optional<std::string>> found(static_cast<std::size_t>(trials));
  run_indexed(static_cast<std::size_t>(trials), workers, [&](std::size_t i) {
    TrialRng rng(seed, static_cast<std::uint64_t>(i));
    // m-primary 2D sample: pure powers plus extras, exponents <= 6.
    std::vector<ExponentVector> gens;
    gens.push_back({Int(rng.uniform(1, 6)), Int(0)});
    gens.push_back({Int(0), Int(rng.uniform(1, 6))});
    long long extra = rng.uniform(0, 3);
    for (long long e = 0; e < extra; ++e)
      gens.push_back({Int(rng.uniform(0, 6)), Int(rng.uniform(0, 6))});
    MonomialIdeal a(2, std::move(gens));

    Rat e = multiplicity(a).value();
    const Int m = 40;
    Rat via_colength = Rat(2) * colength(power(a, m)).value() / Rat(m * m);
    Rat gap = via_colength > e ? via_colength - e : e - via_colength;
    if (gap <= e / 10) return;
    Json detail;
    detail["a"] = ideal_json(a);
    detail["multiplicity"] = format_rat(e);
    detail["normalized_colength_at_40"] = format_rat(via_colength);
    found[i] = detail.dump();
  });
  for (std::size_t i = 0; i < found.size(); ++i)
    if (found[i]) report.violations.push_back({i, *found[i]});
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

} // namespace mi
