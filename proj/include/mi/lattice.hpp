#pragma once

#include <vector>

#include "mi/errors.hpp"
#include "mi/exponent.hpp"
#include "mi/rational.hpp"

namespace mi {

/// Closed halfspace ⟨normal, x⟩ >= offset with a primitive integer normal.
struct Facet {
  std::vector<Int> normal;
  Rat offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// The Newton region conv(generators) + R^n_{>=0} of a monomial ideal, held
/// as its irredundant facet description. Facet normals are componentwise
/// non-negative primitive integer covectors; the facet list is sorted
/// lexicographically, so regions compare structurally. When the region was
/// built from generating points these are kept (minimized) for exact support
/// evaluation; regions built from a raw facet system carry no points.
class NewtonRegion {
public:
  /// Region conv(gens) + orthant. Facet enumeration is exact for dim <= 4.
  static NewtonRegion from_points(std::vector<ExponentVector> gens, int dim);

  /// Region {x >= 0} ∩ {facet inequalities}; the list is canonicalized to
  /// the irredundant facet description. Normals must be componentwise >= 0.
  static NewtonRegion from_facets(int dim, std::vector<Facet> raw);

  int dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Generating points, when the region was built from them (else empty).
  const std::vector<ExponentVector>& points() const { return points_; }

  /// Homothety by a positive rational factor: normals fixed, offsets scaled.
  NewtonRegion scaled(const Rat& factor) const;

  friend bool operator==(const NewtonRegion& a, const NewtonRegion& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const NewtonRegion& a, const NewtonRegion& b) {
    return !(a == b);
  }

private:
  NewtonRegion(int dim, std::vector<Facet> facets, std::vector<ExponentVector> pts)
      : dim_(dim), facets_(std::move(facets)), points_(std::move(pts)) {}

  int dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<ExponentVector> points_;
};

/// min over the region of ⟨w, .⟩ for a covector w >= 0 (not all zero);
/// equals the minimum over the generating points. Computed from the stored
/// points when present, else from the vertex set derived from the facets.
Rat support_value(const NewtonRegion& r, const std::vector<Int>& w);

/// Membership of p in the interior of the scaled region c·R: strict
/// inequality ⟨w, p⟩ > c·offset on every facet.
bool strict_contains(const NewtonRegion& r, const std::vector<Rat>& p, const Rat& c);

/// Exact volume of the complement R^n_{>=0} \ R; infinite iff some axis
/// never enters the region. Exact for dim <= 3.
ExtRat covolume(const NewtonRegion& r);

/// Facets of conv(points) + orthant by double description on the dual cone.
/// Exposed for cross-checking against the hull fast path; dim <= 4.
std::vector<Facet> facets_by_double_description(const std::vector<ExponentVector>& points,
                                                int dim);

/// A closed halfspace with arbitrary (possibly negative) integer normal,
/// used for bounded-cell volume work: ⟨normal, x⟩ >= offset.
struct Halfspace {
  std::vector<Int> normal;
  Rat offset;
};

/// All vertices of {x : every halfspace holds}, by exact enumeration of
/// n-fold tight subsets. Intended for small systems (dim <= 4).
std::vector<std::vector<Rat>> enumerate_vertices(int dim,
                                                 const std::vector<Halfspace>& rows);

/// Exact volume of the (bounded) convex polytope {x : rows}, dim <= 3.
/// Unbounded input is the caller's responsibility; lower-dimensional
/// polytopes have volume zero.
Rat polytope_volume(int dim, const std::vector<Halfspace>& rows);

/// One inequality ⟨w, v⟩ >= bound of a lattice up-set system; w >= 0.
struct UpsetRow {
  std::vector<Int> weights;
  Int bound;
};

/// Minimal lattice points of S = {v in Z^n_{>=0} : every row holds}.
/// Rows have componentwise non-negative weights, so S is an up-set; the
/// enumeration terminates on its own (no external box is needed). Returns
/// the empty list iff S is empty.
std::vector<ExponentVector> minimal_upset_points(int dim, const std::vector<UpsetRow>& rows);

} // namespace mi
