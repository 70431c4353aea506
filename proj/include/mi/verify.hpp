#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mi/family.hpp"
#include "mi/ideal.hpp"
#include "mi/rng.hpp"

namespace mi {

/// One falsifying instance. The detail is a JSON object carrying the
/// inputs, both sides and a witness monomial, so the record re-checks
/// deterministically on its own.
struct Violation {
  std::size_t trial = 0;
  std::string detail;
};

/// Outcome of a verification campaign. Failures are data: a violation
/// would falsify the implementation, since the theorems are true.
struct VerificationReport {
  std::string check;
  std::uint64_t seed = 0;
  long trials = 0;
  long vacuous = 0;        // restriction trials whose hypothesis failed
  long inconclusive = 0;   // asymptotic trials without a stabilization certificate
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
};

// ---- single-instance checks (violation detail on failure) ----------------

/// J((c·a)(d·b)) ⊆ J(c·a)·J(d·b).
std::optional<std::string> check_subadditivity(const MonomialIdeal& a, const Rat& c,
                                               const MonomialIdeal& b, const Rat& d);

/// Equality J((c·p1*a)(d·p2*b)) = J(c·a) ⊠ J(d·b) on disjoint variable blocks.
std::optional<std::string> check_product_formula(const MonomialIdeal& a, const Rat& c,
                                                 const MonomialIdeal& b, const Rat& d);

struct RestrictionOutcome {
  bool vacuous = false;
  std::optional<std::string> violation;
};

/// J(c·(a|_Y)) ⊆ J(c·a)|_Y for the coordinate subspace Y = {x_i = 0 : i in
/// vanish}; vacuous when the restriction hypothesis fails.
RestrictionOutcome check_restriction(const MonomialIdeal& a, const Rat& c,
                                     const std::vector<int>& vanish);

/// The three steps of the diagonal-trick proof run as computations:
/// product formula equality on the doubled space, restriction to the
/// diagonal, and agreement of the composite with the direct check.
std::optional<std::string> check_diagonal_pipeline(const MonomialIdeal& a, const Rat& c,
                                                   const MonomialIdeal& b, const Rat& d);

// ---- instance sampling ----------------------------------------------------

/// Stratified random ideal: general, principal, m-primary and unit strata,
/// generator count uniform in [1,5], exponents uniform in [0, max_exp].
MonomialIdeal sample_ideal(TrialRng& rng, int vars, const Int& max_exp);

/// Weight from the fixed rational menu {1/3, 1/2, 2/3, 1, 3/2, 2}.
Rat sample_weight(TrialRng& rng);

/// Stratified random graded family (powers, polytope, or table kind).
GradedFamily sample_family(TrialRng& rng, const Int& max_exp);

/// All monomial ideals in two variables with at most max_gens minimal
/// generators and exponents <= max_exp.
std::vector<MonomialIdeal> enumerate_ideals_2d(const Int& max_exp, int max_gens);

// ---- campaigns -------------------------------------------------------------

VerificationReport run_subadd_campaign(int vars, const Int& max_exp, long trials,
                                       std::uint64_t seed, int workers = 0);
VerificationReport run_product_campaign(const Int& max_exp, long trials,
                                        std::uint64_t seed, int workers = 0);
VerificationReport run_restrict_campaign(int vars, const Int& max_exp, long trials,
                                         std::uint64_t seed, int workers = 0);
VerificationReport run_diagonal_campaign(const Int& max_exp, long trials,
                                         std::uint64_t seed, int workers = 0);
VerificationReport run_asym_subadd_campaign(const Int& max_exp, long trials,
                                            std::uint64_t seed, const Int& search_bound = 24,
                                            int workers = 0);

/// Exhaustive sweeps over the grid of 2-variable ideals (exponents <=
/// max_exp, at most max_gens generators) and all weight pairs from the menu.
VerificationReport run_subadd_exhaustive(const Int& max_exp, int max_gens,
                                         const std::vector<Rat>& weights, int workers = 0);
/// Product formula swept exhaustively over single-variable blocks.
VerificationReport run_product_exhaustive(const Int& max_exp,
                                          const std::vector<Rat>& weights, int workers = 0);
VerificationReport run_restrict_exhaustive(const Int& max_exp, int max_gens,
                                           const std::vector<Rat>& weights, int workers = 0);

} // namespace mi
