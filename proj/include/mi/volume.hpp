#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "mi/family.hpp"
#include "mi/ideal.hpp"
#include "mi/verify.hpp"

namespace mi {

/// Samuel multiplicity e(a) = n!·covolume(region(a)); infinite iff a is not
/// primary to the maximal monomial ideal. Exact for dim <= 3.
ExtRat multiplicity(const MonomialIdeal& a);

/// Colength growth data of a graded family: the local transcription of the
/// volume of a big line bundle, with h^0(kL) played by colength(a_k) and
/// the normalization n!/k^n kept from the projective definition. Entries
/// decrease toward the limit; brackets come from the multiplicity sequence
/// along the doubling chain, which is monotone non-increasing there.
struct VolumeEstimate {
  std::vector<std::tuple<Int, Int, Rat>> sequence; // (k, colength(a_k), n!·col/k^n)
  std::optional<Rat> exact_limit;                  // closed form: powers/polytope kinds
  Rat bracket_low = 0;                             // min of the multiplicity chain
  Rat bracket_high = 0;                            // max of the multiplicity chain
  std::vector<std::pair<Int, Rat>> multiplicity_chain; // (k, e(a_k)/k^n), k doubling
};

VolumeEstimate volume(const GradedFamily& f, const Int& k_max);

/// Local moving-intersection sequence (k, e(a_k)/k^n) for k = 1..k_max;
/// non-increasing along divisibility chains and converging to the volume.
std::vector<std::pair<Int, Rat>> moving_sequence(const GradedFamily& f, const Int& k_max);

/// Fujita-type approximation certificate: the level-p truncation (powers of
/// a_p) approximates the volume within epsilon. In the local model the
/// approximant dominates the volume from above — ideals shrink where
/// section spaces grow — so the certified gap is achieved - target.
struct FujitaCertificate {
  Int p = 1;
  Rat achieved = 0;  // e(a_p)/p^n
  Rat target = 0;    // exact limit when available, else best computed bracket
  Rat epsilon = 0;
  bool reached = false;             // achieved - target <= epsilon at some p <= k_max
  MonomialIdeal truncation_base;    // a_p generating the truncated family
  MonomialIdeal asymptotic_ideal;   // J(||F||) at weight 1
  bool base_ideal_contained = false; // a_p ⊆ J(p·||F||), the paper's gauge of the truncation
};

FujitaCertificate fujita_approximation(const GradedFamily& f, const Rat& eps, const Int& k_max);

/// Campaign over random m-primary 2D ideals checking the two independent
/// multiplicity routes against each other: |n!·colength(a^m)/m^n - e(a)|
/// <= e(a)/10 at m = 40.
VerificationReport run_volume_consistency_campaign(long trials, std::uint64_t seed,
                                                   int workers = 0);

} // namespace mi
