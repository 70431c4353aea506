#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mi/ideal.hpp"
#include "mi/lattice.hpp"

namespace mi {

/// A simple-normal-crossing Q-divisor on affine n-space: the combination
/// Σ coeffs[i]·{x_i = 0}, optionally plus weight·div(x^exponent) for a
/// principal monomial part. All weights are non-negative (effective).
struct SncDivisor {
  int dim = 0;
  std::vector<Rat> coeffs;
  std::optional<std::pair<ExponentVector, Rat>> principal;
};

/// A complete smooth-or-simplicial fan of the first quadrant: primitive
/// rays ordered by angle, starting at (1,0) and ending at (0,1), with
/// positive determinant between consecutive rays. Smooth iff every
/// consecutive determinant is 1. The relative canonical coefficient along
/// a ray w is ⟨w, (1,1)⟩ - 1.
class Fan2D {
public:
  explicit Fan2D(std::vector<std::vector<Int>> rays);

  const std::vector<std::vector<Int>>& rays() const { return rays_; }
  bool is_smooth() const;
  bool has_ray(const std::vector<Int>& ray) const;

  friend bool operator==(const Fan2D& a, const Fan2D& b) { return a.rays_ == b.rays_; }

private:
  std::vector<std::vector<Int>> rays_;
};

/// Multiplier ideal of an SNC divisor: the identity map is already a log
/// resolution, so the result is the principal ideal with the rounded-down
/// coefficient in each coordinate.
MonomialIdeal mi_snc(const SncDivisor& d);

/// Multiplier ideal J(c·a) of a monomial ideal by the facet criterion:
/// x^v is a member iff ⟨w, v+1⟩ > c·offset for every facet of the Newton
/// region. Minimal generators lie in the box [0, ceil(c·M)]^n, M the
/// largest exponent among the generators of a.
MonomialIdeal mi_ideal(const MonomialIdeal& a, const Rat& c);

/// Mixed multiplier ideal J((c·a)·(d·b)) through a common scaled region:
/// with q clearing both denominators, the membership condition
/// ⟨w, v+1⟩ > c·ord_w(a) + d·ord_w(b) is decided on the facets of
/// q·(c·region(a) + d·region(b)), built from the pairwise sums of scaled
/// generators.
MonomialIdeal mi_mixed(const MonomialIdeal& a, const Rat& c, const MonomialIdeal& b,
                       const Rat& d);

/// Log canonical threshold sup{c : J(c·a) trivial} = min over facets with
/// positive offset of ⟨w, 1⟩ / offset; infinite for the unit ideal.
ExtRat lct(const MonomialIdeal& a);

/// Smooth refinement of the normal fan of region(a): rays are the facet
/// normals plus primitive sums inserted until every consecutive
/// determinant is 1.
Fan2D refine_fan_2d(const NewtonRegion& r);
Fan2D refine_fan_2d(const MonomialIdeal& a);
/// The support of an SNC divisor is already simple normal crossing, so the
/// basic fan resolves it.
Fan2D refine_fan_2d(const SncDivisor& d);

/// Insert additional rays and re-smooth; used for resolution-independence
/// experiments.
Fan2D fan_with_rays(const Fan2D& fan, const std::vector<std::vector<Int>>& extra);

/// From-the-definition evaluation of J(c·a) on an explicit smooth fan
/// resolution: x^v is a section iff for every ray w,
/// ⟨w, v⟩ + (⟨w,(1,1)⟩ - 1) - floor(c·ord_w(a)) >= 0. The fan must be
/// smooth and refine the normal fan of region(a). Must equal mi_ideal(a,c).
MonomialIdeal mi_from_resolution_2d(const MonomialIdeal& a, const Rat& c,
                                    const Fan2D& fan);

} // namespace mi
