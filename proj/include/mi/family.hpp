#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mi/ideal.hpp"
#include "mi/lattice.hpp"

namespace mi {

enum class FamilyKind { powers, polytope, table };

/// A graded family of monomial ideals: a rule k -> a_k with
/// a_k · a_l ⊆ a_{k+l} and every a_k nonzero.
///
///  - powers(a):    a_k = a^k.
///  - polytope(Q):  a_k = the monomials with exponent in k·Q, for a rational
///                  region Q with recession cone the orthant (multiplicative
///                  because k·Q + l·Q = (k+l)·Q).
///  - table(list):  explicit members a_1..a_len; beyond the list either an
///                  InputError (no extension) or the products extension
///                  a_k = Σ_{i+j=k} a_i·a_j. Multiplicativity of the listed
///                  members is spot-checked on all pairs k+l <= 12.
class GradedFamily {
public:
  static GradedFamily powers(MonomialIdeal base);
  static GradedFamily polytope(NewtonRegion q);
  static GradedFamily table(std::vector<MonomialIdeal> members, bool extend_products);

  FamilyKind kind() const { return kind_; }
  int dim() const { return dim_; }

  /// The member a_k, k >= 1.
  MonomialIdeal member(const Int& k) const;

  /// The m-fold reindexing F^{(m)}: k -> a_{mk}.
  GradedFamily reindexed(const Int& m) const;

  const MonomialIdeal& base() const;            // powers kind
  const NewtonRegion& region() const;           // polytope kind
  const std::vector<MonomialIdeal>& members() const; // table kind
  bool extend_products() const { return extend_; }
  const Int& stride() const { return stride_; }

private:
  GradedFamily() = default;

  MonomialIdeal raw_member(const Int& k) const;

  FamilyKind kind_ = FamilyKind::powers;
  int dim_ = 0;
  Int stride_ = 1;
  std::optional<MonomialIdeal> base_;
  std::optional<NewtonRegion> region_;
  std::vector<MonomialIdeal> table_;
  bool extend_ = false;
};

/// Asymptotic multiplier ideal data: the maximal member of the computed
/// chain J((c/k)·a_k) along k = 1, 2, 4, ... up to the search bound.
struct AsymptoticResult {
  MonomialIdeal ideal;
  Int k0 = 0;            // smallest chain index with J at k0 equal to J at 2·k0
  bool certified = false; // false: stabilization not certified within the bound
  std::vector<std::pair<Int, MonomialIdeal>> chain;
};

/// Computes the chain, asserts the chain property J((c/k)a_k) ⊆ J((c/2k)a_2k)
/// on every computed pair, and certifies stabilization by doubling
/// agreement. An uncertified result carries the best ideal so far and
/// certified = false rather than an error.
AsymptoticResult asymptotic_mi(const GradedFamily& f, const Rat& c, const Int& search_bound = 24);

/// Outcome of one asymptotic-subadditivity check J(m·||F||) ⊆ J(||F||)^m.
struct AsymSubadditivityOutcome {
  bool inconclusive = false;          // stabilization not certified on a side
  std::optional<std::string> violation; // JSON detail on failure
};

AsymSubadditivityOutcome check_asymptotic_subadditivity(const GradedFamily& f,
                                                        const Int& m,
                                                        const Int& search_bound = 24);

} // namespace mi
