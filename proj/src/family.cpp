#include "mi/family.hpp"

#include "mi/multiplier.hpp"
#include "mi/serialize.hpp"

namespace mi {

GradedFamily GradedFamily::powers(MonomialIdeal base) {
  GradedFamily f;
  f.kind_ = FamilyKind::powers;
  f.dim_ = base.dim();
  f.base_ = std::move(base);
  return f;
}

GradedFamily GradedFamily::polytope(NewtonRegion q) {
  GradedFamily f;
  f.kind_ = FamilyKind::polytope;
  f.dim_ = q.dim();
  f.region_ = std::move(q);
  return f;
}

GradedFamily GradedFamily::table(std::vector<MonomialIdeal> members, bool extend_products) {
  if (members.empty()) throw InputError("table family needs at least one member");
  GradedFamily f;
  f.kind_ = FamilyKind::table;
  f.dim_ = members.front().dim();
  for (const auto& m : members)
    if (m.dim() != f.dim_) throw InputError("table members must share one dimension");
  // Multiplicativity spot-check on all listed pairs with k + l <= 12.
  long len = static_cast<long>(members.size());
  for (long k = 1; k <= len; ++k) {
    for (long l = k; l + k <= std::min<long>(len, 12); ++l) {
      const auto& target = members[static_cast<std::size_t>(k + l - 1)];
      if (!target.contains(product(members[static_cast<std::size_t>(k - 1)],
                                   members[static_cast<std::size_t>(l - 1)])))
        throw InputError("table family is not multiplicative: a_" + std::to_string(k) +
                         "·a_" + std::to_string(l) + " is not inside a_" +
                         std::to_string(k + l));
    }
  }
  f.table_ = std::move(members);
  f.extend_ = extend_products;
  return f;
}

const MonomialIdeal& GradedFamily::base() const {
  if (!base_) throw Error("family has no base ideal");
  return *base_;
}

const NewtonRegion& GradedFamily::region() const {
  if (!region_) throw Error("family has no region");
  return *region_;
}

const std::vector<MonomialIdeal>& GradedFamily::members() const { return table_; }

MonomialIdeal GradedFamily::raw_member(const Int& k) const {
  switch (kind_) {
    case FamilyKind::powers:
      return power(*base_, k);
    case FamilyKind::polytope: {
      std::vector<UpsetRow> rows;
      rows.reserve(region_->facets().size());
      for (const auto& f : region_->facets())
        rows.push_back(UpsetRow{f.normal, ceil_rat(Rat(k) * f.offset)});
      return MonomialIdeal(dim_, minimal_upset_points(dim_, rows));
    }
    case FamilyKind::table: {
      long len = static_cast<long>(table_.size());
      if (k <= len) return table_[static_cast<std::size_t>(k - 1)];
      if (!extend_)
        throw InputError("table family member beyond its range: k = " + k.str());
      // Products extension a_k = Σ_{i+j=k} a_i·a_j, computed bottom-up.
      std::vector<MonomialIdeal> ext = table_;
      for (Int m = len + 1; m <= k; ++m) {
        std::optional<MonomialIdeal> acc;
        for (Int i = 1; i + 1 <= m; ++i) {
          MonomialIdeal p = product(ext[static_cast<std::size_t>(i - 1)],
                                    ext[static_cast<std::size_t>(m - i - 1)]);
          acc = acc ? ideal_sum(*acc, p) : std::move(p);
        }
        ext.push_back(std::move(*acc));
      }
      return ext.back();
    }
  }
  throw Error("unreachable family kind");
}

MonomialIdeal GradedFamily::member(const Int& k) const {
  if (k < 1) throw InputError("family members are indexed from 1");
  return raw_member(stride_ * k);
}

GradedFamily GradedFamily::reindexed(const Int& m) const {
  if (m < 1) throw InputError("reindexing factor must be positive");
  switch (kind_) {
    case FamilyKind::powers:
      return powers(power(*base_, m));
    case FamilyKind::polytope:
      return polytope(region_->scaled(Rat(m)));
    case FamilyKind::table: {
      GradedFamily f = *this;
      f.stride_ = stride_ * m;
      return f;
    }
  }
  throw Error("unreachable family kind");
}

AsymptoticResult asymptotic_mi(const GradedFamily& f, const Rat& c, const Int& search_bound) {
  if (c <= 0) throw InputError("weight must be positive");
  if (search_bound < 2) throw InputError("search bound must be at least 2");

  AsymptoticResult result{MonomialIdeal::unit(f.dim()), 0, false, {}};
  for (Int k = 1; k <= search_bound; k *= 2) {
    MonomialIdeal jk = mi_ideal(f.member(k), c / Rat(k));
    if (!result.chain.empty()) {
      // Chain property (the ascending-chain certificate of uniqueness).
      if (!jk.contains(result.chain.back().second))
        throw Error("chain property violated at k = " + k.str());
    }
    result.chain.emplace_back(k, std::move(jk));
  }
  for (std::size_t i = 0; i + 1 < result.chain.size(); ++i) {
    if (result.chain[i].second == result.chain[i + 1].second) {
      result.k0 = result.chain[i].first;
      result.certified = true;
      break;
    }
  }
  result.ideal = result.chain.back().second;
  return result;
}

AsymSubadditivityOutcome check_asymptotic_subadditivity(const GradedFamily& f, const Int& m,
                                                        const Int& search_bound) {
  if (m < 1) throw InputError("multiplicity must be at least 1");
  AsymSubadditivityOutcome out;
  AsymptoticResult left = asymptotic_mi(f, Rat(m), search_bound);
  AsymptoticResult right = asymptotic_mi(f, Rat(1), search_bound);
  if (!left.certified || !right.certified) {
    out.inconclusive = true;
    return out;
  }
  MonomialIdeal bound = power(right.ideal, m);
  if (!bound.contains(left.ideal)) {
    Json detail;
    detail["family"] = family_json(f);
    detail["m"] = m.convert_to<long long>();
    detail["left"] = ideal_json(left.ideal);
    detail["right_power"] = ideal_json(bound);
    for (const auto& g : left.ideal.gens()) {
      if (!bound.contains_monomial(g)) {
        Json witness = Json::array();
        for (const auto& e : g) witness.push_back(e.convert_to<long long>());
        detail["witness"] = std::move(witness);
        break;
      }
    }
    out.violation = detail.dump();
  }
  return out;
}

} // namespace mi
