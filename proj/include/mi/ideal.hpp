#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mi/errors.hpp"
#include "mi/exponent.hpp"

namespace mi {

/// A monomial ideal in n variables, held as the antichain of its minimal
/// generators in canonical (lexicographic) order. Two ideals are equal iff
/// their canonical forms are identical. The zero ideal is unrepresentable:
/// construction from an empty generator set is rejected.
class MonomialIdeal {
public:
  /// Minimizes, sorts and validates. Throws InputError on an empty set,
  /// negative exponents, or mismatched lengths.
  MonomialIdeal(int dim, std::vector<ExponentVector> gens);

  static MonomialIdeal unit(int dim);

  int dim() const { return dim_; }
  const std::vector<ExponentVector>& gens() const { return gens_; }

  bool is_unit() const { return gens_.size() == 1 && is_zero_vector(gens_[0]); }

  /// x^v lies in the ideal iff some minimal generator divides it.
  bool contains_monomial(const ExponentVector& v) const;

  /// Ideal containment: other ⊆ this.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

private:
  int dim_;
  std::vector<ExponentVector> gens_;
};

/// Antichain of componentwise-minimal elements; ideal membership unchanged.
MonomialIdeal minimize(std::vector<ExponentVector> gens, int dim);

/// Generators {u + v}. Dimensions must agree.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// a^m by repeated product, m >= 1. m = 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, const Int& m);

/// Ideal sum (a, b): union of generators, minimized.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ideal on the product space: generators {(u, v)} in n + m variables,
/// a in the leading block, b in the trailing block.
MonomialIdeal external_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// a lifted to n + extra variables appended on the right (p_1^{-1} a).
MonomialIdeal lift_left(const MonomialIdeal& a, int extra);
/// b lifted to extra + m variables prepended on the left (p_2^{-1} b).
MonomialIdeal lift_right(const MonomialIdeal& b, int extra);

/// Image of a in the coordinate subspace {x_i = 0 : i in vanish}, i.e. the
/// generators free of those variables with the coordinates dropped.
/// Throws RestrictionVanishes when every generator meets the subset.
MonomialIdeal restrict_ideal(const MonomialIdeal& a, const std::vector<int>& vanish);

/// Non-throwing variant: nullopt when the restriction vanishes.
std::optional<MonomialIdeal> try_restrict(const MonomialIdeal& a,
                                          const std::vector<int>& vanish);

/// Substitution y_i -> x_i on an ideal in 2n variables split as (x | y):
/// generators {u + u'}.
MonomialIdeal diagonal_restrict(const MonomialIdeal& q);

/// Number of standard monomials (lattice points outside the staircase);
/// infinite iff some variable has no pure power among the generators.
ExtRat colength(const MonomialIdeal& a);

/// Smallest pure-power exponent of variable i among the generators, if any.
std::optional<Int> pure_power_exponent(const MonomialIdeal& a, int i);

/// Primary to the maximal monomial ideal: every variable has a pure power.
bool is_m_primary(const MonomialIdeal& a);

} // namespace mi
