#include "mi/multiplier.hpp"

#include <algorithm>

namespace mi {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// det(r1, r2) for 2D rays.
Int det2(const std::vector<Int>& r1, const std::vector<Int>& r2) {
  return r1[0] * r2[1] - r1[1] * r2[0];
}

// Membership system ⟨w, v⟩ >= bound from strict facet conditions
// ⟨w, v+1⟩ > threshold.
UpsetRow strict_row(const std::vector<Int>& w, const Rat& threshold) {
  Int ones = 0;
  for (const auto& x : w) ones += x;
  return UpsetRow{w, floor_rat(threshold) + 1 - ones};
}

} // namespace

MonomialIdeal mi_snc(const SncDivisor& d) {
  if (d.dim <= 0) throw InputError("divisor dimension must be positive");
  if (static_cast<int>(d.coeffs.size()) != d.dim)
    throw InputError("divisor coefficient count does not match dimension");
  std::vector<Rat> total = d.coeffs;
  for (const auto& a : total)
    if (a < 0) throw InputError("divisor coefficients must be non-negative");
  if (d.principal) {
    const auto& [u, c] = *d.principal;
    if (static_cast<int>(u.size()) != d.dim)
      throw InputError("principal exponent length does not match dimension");
    if (c < 0) throw InputError("principal weight must be non-negative");
    for (int i = 0; i < d.dim; ++i) {
      if (u[i] < 0) throw InputError("principal exponent must be non-negative");
      total[i] += c * Rat(u[i]);
    }
  }
  ExponentVector gen(d.dim);
  for (int i = 0; i < d.dim; ++i) gen[i] = floor_rat(total[i]);
  return MonomialIdeal(d.dim, {gen});
}

MonomialIdeal mi_ideal(const MonomialIdeal& a, const Rat& c) {
  if (c <= 0) throw InputError("weight must be positive");
  NewtonRegion region = NewtonRegion::from_points(a.gens(), a.dim());
  std::vector<UpsetRow> rows;
  rows.reserve(region.facets().size());
  for (const auto& f : region.facets()) rows.push_back(strict_row(f.normal, c * f.offset));
  return MonomialIdeal(a.dim(), minimal_upset_points(a.dim(), rows));
}

MonomialIdeal mi_mixed(const MonomialIdeal& a, const Rat& c, const MonomialIdeal& b,
                       const Rat& d) {
  if (a.dim() != b.dim()) throw InputError("ideal dimension mismatch in mixed ideal");
  if (c <= 0 || d <= 0) throw InputError("weights must be positive");
  Int q = lcm_int(rat_den(c), rat_den(d));
  Int m1 = rat_num(c) * (q / rat_den(c));
  Int m2 = rat_num(d) * (q / rat_den(d));

  std::vector<ExponentVector> pts;
  pts.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) {
      ExponentVector p(a.dim());
      for (int i = 0; i < a.dim(); ++i) p[i] = m1 * u[i] + m2 * v[i];
      pts.push_back(std::move(p));
    }
  }
  NewtonRegion region = NewtonRegion::from_points(std::move(pts), a.dim());
  std::vector<UpsetRow> rows;
  rows.reserve(region.facets().size());
  for (const auto& f : region.facets())
    rows.push_back(strict_row(f.normal, f.offset / q));
  return MonomialIdeal(a.dim(), minimal_upset_points(a.dim(), rows));
}

ExtRat lct(const MonomialIdeal& a) {
  NewtonRegion region = NewtonRegion::from_points(a.gens(), a.dim());
  bool found = false;
  Rat best;
  for (const auto& f : region.facets()) {
    if (f.offset <= 0) continue;
    Int ones = 0;
    for (const auto& x : f.normal) ones += x;
    Rat candidate = Rat(ones) / f.offset;
    if (!found || candidate < best) {
      best = candidate;
      found = true;
    }
  }
  return found ? ExtRat::finite(best) : ExtRat::infinite();
}

Fan2D::Fan2D(std::vector<std::vector<Int>> rays) : rays_(std::move(rays)) {
  if (rays_.size() < 2) throw InputError("fan needs at least the two axis rays");
  for (auto& r : rays_) {
    if (r.size() != 2) throw InputError("fan rays must be 2-dimensional");
    if (r[0] < 0 || r[1] < 0) throw InputError("fan rays must lie in the first quadrant");
    if (r[0] == 0 && r[1] == 0) throw InputError("fan ray must not be zero");
    primitive_reduce(r);
  }
  if (rays_.front() != std::vector<Int>{1, 0} || rays_.back() != std::vector<Int>{0, 1})
    throw InputError("fan must start at (1,0) and end at (0,1)");
  for (std::size_t i = 0; i + 1 < rays_.size(); ++i)
    if (det2(rays_[i], rays_[i + 1]) < 1)
      throw InputError("fan rays must be ordered by strictly increasing angle");
}

bool Fan2D::is_smooth() const {
  for (std::size_t i = 0; i + 1 < rays_.size(); ++i)
    if (det2(rays_[i], rays_[i + 1]) != 1) return false;
  return true;
}

bool Fan2D::has_ray(const std::vector<Int>& ray) const {
  return std::find(rays_.begin(), rays_.end(), ray) != rays_.end();
}

namespace {

// s·a + t·b = gcd(a, b).
void ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int old_r = a, r = b, old_s = 1, s_ = 0, old_t = 0, t_ = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s_;
    old_s = s_;
    s_ = tmp;
    tmp = old_t - q * t_;
    old_t = t_;
    t_ = tmp;
  }
  s = old_s;
  t = old_t;
}

// Hirzebruch-Jung subdivision ray for the cone (u, v) with det(u, v) = d >= 2:
// the unique primitive m with det(u, m) = 1 and 0 < det(m, v) < d. Splitting
// at m leaves a smooth cone on the left and a strictly smaller determinant on
// the right, which is the determinant-decrease that terminates the loop.
std::vector<Int> hj_ray(const std::vector<Int>& u, const std::vector<Int>& v, const Int& d) {
  Int s, t;
  ext_gcd(u[0], u[1], s, t); // s·u0 + t·u1 = 1
  std::vector<Int> m0 = {-t, s};
  Int r0 = det2(m0, v);
  Int r = r0 % d;
  if (r <= 0) r += d;
  Int shift = (r - r0) / d;
  return {m0[0] + shift * u[0], m0[1] + shift * u[1]};
}

Fan2D smooth_fan_from_rays(std::vector<std::vector<Int>> rays) {
  rays.push_back({Int(1), Int(0)});
  rays.push_back({Int(0), Int(1)});
  for (auto& r : rays) primitive_reduce(r);
  std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) {
    Int cross = det2(a, b);
    if (cross != 0) return cross > 0;
    return false;
  });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  for (std::size_t i = 0; i + 1 < rays.size();) {
    Int d = det2(rays[i], rays[i + 1]);
    if (d == 1) {
      ++i;
      continue;
    }
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                hj_ray(rays[i], rays[i + 1], d));
  }
  return Fan2D(std::move(rays));
}

} // namespace

Fan2D refine_fan_2d(const NewtonRegion& r) {
  if (r.dim() != 2)
    throw UnsupportedDimension("fan resolutions are implemented for dimension 2");
  std::vector<std::vector<Int>> rays;
  for (const auto& f : r.facets()) rays.push_back(f.normal);
  return smooth_fan_from_rays(std::move(rays));
}

Fan2D refine_fan_2d(const MonomialIdeal& a) {
  if (a.dim() != 2)
    throw UnsupportedDimension("fan resolutions are implemented for dimension 2");
  return refine_fan_2d(NewtonRegion::from_points(a.gens(), 2));
}

Fan2D refine_fan_2d(const SncDivisor& d) {
  if (d.dim != 2)
    throw UnsupportedDimension("fan resolutions are implemented for dimension 2");
  return Fan2D({{Int(1), Int(0)}, {Int(0), Int(1)}});
}

Fan2D fan_with_rays(const Fan2D& fan, const std::vector<std::vector<Int>>& extra) {
  std::vector<std::vector<Int>> rays = fan.rays();
  rays.insert(rays.end(), extra.begin(), extra.end());
  for (auto& r : rays) {
    if (r.size() != 2 || r[0] < 0 || r[1] < 0 || (r[0] == 0 && r[1] == 0))
      throw InputError("extra rays must be nonzero first-quadrant vectors");
  }
  return smooth_fan_from_rays(std::move(rays));
}

MonomialIdeal mi_from_resolution_2d(const MonomialIdeal& a, const Rat& c,
                                    const Fan2D& fan) {
  if (a.dim() != 2)
    throw UnsupportedDimension("fan resolutions are implemented for dimension 2");
  if (c <= 0) throw InputError("weight must be positive");
  if (!fan.is_smooth()) throw InvalidResolution("fan is not smooth");
  NewtonRegion region = NewtonRegion::from_points(a.gens(), 2);
  for (const auto& f : region.facets())
    if (!fan.has_ray(f.normal))
      throw InvalidResolution("fan does not refine the normal fan of the region");

  // x^v is a section of O(K_{X'/X} - [c·E]) iff along every ray
  // ⟨w,v⟩ + ⟨w,(1,1)⟩ - 1 - floor(c·ord_w(a)) >= 0.
  std::vector<UpsetRow> rows;
  rows.reserve(fan.rays().size());
  for (const auto& w : fan.rays()) {
    Int ord = dot(w, a.gens()[0]);
    for (std::size_t i = 1; i < a.gens().size(); ++i)
      ord = std::min(ord, dot(w, a.gens()[i]));
    Int ones = w[0] + w[1];
    rows.push_back(UpsetRow{w, floor_rat(c * Rat(ord)) + 1 - ones});
  }
  return MonomialIdeal(2, minimal_upset_points(2, rows));
}

} // namespace mi
