#include "mi/ideal.hpp"

#include <algorithm>
#include <set>

namespace mi {

MonomialIdeal::MonomialIdeal(int dim, std::vector<ExponentVector> gens) : dim_(dim) {
  if (dim <= 0) throw InputError("ambient dimension must be positive");
  if (gens.empty()) throw InputError("gens must be nonempty");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw InputError("generator length does not match ambient dimension");
    for (const auto& e : g)
      if (e < 0) throw InputError("negative exponent in generator");
  }
  gens_ = antichain_min(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(int dim) {
  return MonomialIdeal(dim, {ExponentVector(dim, 0)});
}

bool MonomialIdeal::contains_monomial(const ExponentVector& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw InputError("monomial length does not match ambient dimension");
  for (const auto& g : gens_)
    if (divides(g, v)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw InputError("ideal dimension mismatch");
  for (const auto& g : other.gens_)
    if (!contains_monomial(g)) return false;
  return true;
}

MonomialIdeal minimize(std::vector<ExponentVector> gens, int dim) {
  return MonomialIdeal(dim, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw InputError("ideal dimension mismatch in product");
  std::vector<ExponentVector> sums;
  sums.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) sums.push_back(exp_add(u, v));
  return MonomialIdeal(a.dim(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& a, const Int& m) {
  if (m < 0) throw InputError("negative power of an ideal");
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  for (Int i = 0; i < m; ++i) result = product(result, a);
  return result;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw InputError("ideal dimension mismatch in sum");
  std::vector<ExponentVector> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal external_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) {
      ExponentVector w = u;
      w.insert(w.end(), v.begin(), v.end());
      gens.push_back(std::move(w));
    }
  }
  return MonomialIdeal(a.dim() + b.dim(), std::move(gens));
}

MonomialIdeal lift_left(const MonomialIdeal& a, int extra) {
  if (extra < 0) throw InputError("negative variable count");
  return external_product(a, MonomialIdeal::unit(extra));
}

MonomialIdeal lift_right(const MonomialIdeal& b, int extra) {
  if (extra < 0) throw InputError("negative variable count");
  return external_product(MonomialIdeal::unit(extra), b);
}

std::optional<MonomialIdeal> try_restrict(const MonomialIdeal& a,
                                          const std::vector<int>& vanish) {
  std::set<int> drop(vanish.begin(), vanish.end());
  for (int i : drop)
    if (i < 0 || i >= a.dim()) throw InputError("restriction index out of range");
  if (static_cast<int>(drop.size()) >= a.dim())
    throw InputError("restriction must leave at least one variable");
  std::vector<ExponentVector> image;
  for (const auto& g : a.gens()) {
    bool survives = true;
    for (int i : drop) {
      if (g[i] != 0) {
        survives = false;
        break;
      }
    }
    if (!survives) continue;
    ExponentVector reduced;
    for (int i = 0; i < a.dim(); ++i)
      if (!drop.count(i)) reduced.push_back(g[i]);
    image.push_back(std::move(reduced));
  }
  if (image.empty()) return std::nullopt;
  return MonomialIdeal(a.dim() - static_cast<int>(drop.size()), std::move(image));
}

MonomialIdeal restrict_ideal(const MonomialIdeal& a, const std::vector<int>& vanish) {
  auto r = try_restrict(a, vanish);
  if (!r)
    throw RestrictionVanishes("subspace lies in the zero locus of the ideal");
  return *r;
}

MonomialIdeal diagonal_restrict(const MonomialIdeal& q) {
  if (q.dim() % 2 != 0)
    throw InputError("diagonal restriction needs an even number of variables");
  int n = q.dim() / 2;
  std::vector<ExponentVector> gens;
  gens.reserve(q.gens().size());
  for (const auto& g : q.gens()) {
    ExponentVector v(n);
    for (int i = 0; i < n; ++i) v[i] = g[i] + g[n + i];
    gens.push_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::optional<Int> pure_power_exponent(const MonomialIdeal& a, int i) {
  std::optional<Int> best;
  for (const auto& g : a.gens()) {
    bool pure = true;
    for (int j = 0; j < a.dim(); ++j) {
      if (j != i && g[j] != 0) {
        pure = false;
        break;
      }
    }
    if (pure && (!best || g[i] < *best)) best = g[i];
  }
  return best;
}

bool is_m_primary(const MonomialIdeal& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (!pure_power_exponent(a, i)) return false;
  return true;
}

ExtRat colength(const MonomialIdeal& a) {
  if (a.is_unit()) return ExtRat::finite(Rat(0));
  int n = a.dim();
  std::vector<Int> box(n);
  for (int i = 0; i < n; ++i) {
    auto p = pure_power_exponent(a, i);
    if (!p) return ExtRat::infinite();
    box[i] = *p;
  }
  if (n == 2) {
    // Column walk over the staircase: for each x, the least y in the ideal.
    Int count = 0;
    for (Int x = 0; x < box[0]; ++x) {
      Int ymin = box[1];
      for (const auto& g : a.gens())
        if (g[0] <= x && g[1] < ymin) ymin = g[1];
      count += ymin;
    }
    return ExtRat::finite(Rat(count));
  }
  // Bounding-box enumeration in odometer order.
  Int count = 0;
  ExponentVector v(n, 0);
  while (true) {
    if (!a.contains_monomial(v)) ++count;
    int i = 0;
    while (i < n) {
      ++v[i];
      if (v[i] < box[i]) break;
      v[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return ExtRat::finite(Rat(count));
}

} // namespace mi
