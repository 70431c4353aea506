#include "mi/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mi {

namespace {

using boost::multiprecision::gcd;

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal)
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(),
                                        b.normal.begin(), b.normal.end());
  return a.offset < b.offset;
}

// ---- double description on the dual cone -------------------------------
//
// Facets of R = conv(P) + orthant correspond to the extreme rays of the
// cone of valid inequalities C* = {(w, s) : w >= 0, <w, p> + s >= 0}. The
// change of variable t = s + M·<w, 1> (M = max coordinate of P) maps C*
// into the non-negative orthant of R^{n+1}, so the double description run
// can start from the simplicial orthant cone.

struct DDRay {
  std::vector<Int> y;
  std::vector<std::uint64_t> tight;
};

bool tight_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) {
  bits[i / 64] |= (std::uint64_t(1) << (i % 64));
}

std::vector<std::vector<Int>> dual_extreme_rays(const std::vector<ExponentVector>& pts,
                                                int n) {
  Int max_coord = 0;
  for (const auto& p : pts)
    for (const auto& x : p)
      if (x > max_coord) max_coord = x;

  const int d = n + 1;
  const std::size_t n_constraints = static_cast<std::size_t>(d) + pts.size();
  const std::size_t words = (n_constraints + 63) / 64;

  std::vector<DDRay> rays(d);
  for (int j = 0; j < d; ++j) {
    rays[j].y.assign(d, 0);
    rays[j].y[j] = 1;
    rays[j].tight.assign(words, 0);
    for (int k = 0; k < d; ++k)
      if (k != j) set_bit(rays[j].tight, k);
  }

  for (std::size_t c = 0; c < pts.size(); ++c) {
    // Row (p - M·1, 1) evaluated at y = (w, t).
    std::vector<Int> row(d);
    for (int j = 0; j < n; ++j) row[j] = pts[c][j] - max_coord;
    row[n] = 1;

    std::vector<Int> vals(rays.size());
    bool any_minus = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(row, rays[r].y);
      if (vals[r] < 0) any_minus = true;
    }
    const std::size_t bit = d + c;
    if (!any_minus) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (vals[r] == 0) set_bit(rays[r].tight, bit);
      continue;
    }

    std::vector<DDRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] > 0) {
        next.push_back(rays[r]);
      } else if (vals[r] == 0) {
        next.push_back(rays[r]);
        set_bit(next.back().tight, bit);
      }
    }
    for (std::size_t a = 0; a < rays.size(); ++a) {
      if (vals[a] <= 0) continue;
      for (std::size_t b = 0; b < rays.size(); ++b) {
        if (vals[b] >= 0) continue;
        // Combinatorial adjacency: no third ray is tight on the whole
        // common tight set of a and b.
        std::vector<std::uint64_t> common(words);
        for (std::size_t i = 0; i < words; ++i)
          common[i] = rays[a].tight[i] & rays[b].tight[i];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (r == a || r == b) continue;
          if (tight_subset(common, rays[r].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        DDRay fresh;
        fresh.y.resize(d);
        for (int j = 0; j < d; ++j)
          fresh.y[j] = vals[a] * rays[b].y[j] - vals[b] * rays[a].y[j];
        make_primitive(fresh.y);
        fresh.tight = std::move(common);
        set_bit(fresh.tight, bit);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<std::vector<Int>> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

std::vector<Facet> facets_from_dual_rays(const std::vector<std::vector<Int>>& rays,
                                         const std::vector<ExponentVector>& pts, int n) {
  std::vector<Facet> facets;
  for (const auto& y : rays) {
    std::vector<Int> w(y.begin(), y.begin() + n);
    bool zero = true;
    for (const auto& x : w)
      if (x != 0) zero = false;
    if (zero) continue; // the trivial inequality at infinity
    make_primitive(w);
    Int h = dot(w, pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      Int v = dot(w, pts[i]);
      if (v < h) h = v;
    }
    facets.push_back(Facet{std::move(w), Rat(h)});
  }
  std::sort(facets.begin(), facets.end(), facet_less);
  facets.erase(std::unique(facets.begin(), facets.end()),
               facets.end());
  return facets;
}

// ---- 2D staircase hull fast path ---------------------------------------

std::vector<Facet> facets_2d(const std::vector<ExponentVector>& antichain) {
  // Antichain sorted lex: x strictly increasing, y strictly decreasing.
  std::vector<const ExponentVector*> hull;
  for (const auto& p : antichain) {
    while (hull.size() >= 2) {
      const auto& a = *hull[hull.size() - 2];
      const auto& b = *hull[hull.size() - 1];
      Int cross = (b[0] - a[0]) * (p[1] - b[1]) - (b[1] - a[1]) * (p[0] - b[0]);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(&p);
  }
  std::vector<Facet> facets;
  facets.push_back(Facet{{Int(1), Int(0)}, Rat(antichain.front()[0])});
  facets.push_back(Facet{{Int(0), Int(1)}, Rat(antichain.back()[1])});
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& a = *hull[i];
    const auto& b = *hull[i + 1];
    std::vector<Int> w = {a[1] - b[1], b[0] - a[0]};
    make_primitive(w);
    Rat h(dot(w, a));
    facets.push_back(Facet{std::move(w), std::move(h)});
  }
  std::sort(facets.begin(), facets.end(), facet_less);
  return facets;
}

} // namespace

std::vector<Facet> facets_by_double_description(const std::vector<ExponentVector>& points,
                                                int dim) {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  if (dim > 4) throw UnsupportedDimension("facet enumeration supports dimension <= 4");
  if (points.empty()) throw InputError("gens must be nonempty");
  auto pts = antichain_min(points);
  return facets_from_dual_rays(dual_extreme_rays(pts, dim), pts, dim);
}

NewtonRegion NewtonRegion::from_points(std::vector<ExponentVector> gens, int dim) {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  if (dim > 4) throw UnsupportedDimension("facet enumeration supports dimension <= 4");
  if (gens.empty()) throw InputError("gens must be nonempty");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw InputError("generator length does not match ambient dimension");
    for (const auto& e : g)
      if (e < 0) throw InputError("negative exponent in generator");
  }
  auto pts = antichain_min(std::move(gens));

  std::vector<Facet> facets;
  if (dim == 1) {
    facets.push_back(Facet{{Int(1)}, Rat(pts.front()[0])});
  } else if (dim == 2) {
    facets = facets_2d(pts);
  } else {
    facets = facets_from_dual_rays(dual_extreme_rays(pts, dim), pts, dim);
  }
  return NewtonRegion(dim, std::move(facets), std::move(pts));
}

NewtonRegion NewtonRegion::from_facets(int dim, std::vector<Facet> raw) {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  if (dim > 4) throw UnsupportedDimension("facet enumeration supports dimension <= 4");
  std::vector<Halfspace> rows;
  for (auto& f : raw) {
    if (static_cast<int>(f.normal.size()) != dim)
      throw InputError("facet normal length does not match ambient dimension");
    bool zero = true;
    for (const auto& x : f.normal) {
      if (x < 0) throw InputError("facet normal must be componentwise non-negative");
      if (x != 0) zero = false;
    }
    if (zero) throw InputError("facet normal must not be zero");
    rows.push_back(Halfspace{f.normal, f.offset});
  }
  for (int i = 0; i < dim; ++i) {
    std::vector<Int> e(dim, 0);
    e[i] = 1;
    rows.push_back(Halfspace{std::move(e), Rat(0)});
  }

  // Vertices of the (pointed) region; the region is conv(vertices) + orthant,
  // so the irredundant facet list comes back out of the point-based path.
  auto verts = enumerate_vertices(dim, rows);
  if (verts.empty()) throw InputError("facet system has no vertex in the orthant");
  Int den = 1;
  for (const auto& v : verts)
    for (const auto& x : v) den = den / gcd(den, rat_den(x)) * rat_den(x);
  std::vector<ExponentVector> scaled;
  scaled.reserve(verts.size());
  for (const auto& v : verts) {
    ExponentVector p(dim);
    for (int j = 0; j < dim; ++j) p[j] = rat_num(v[j]) * (den / rat_den(v[j]));
    scaled.push_back(std::move(p));
  }
  auto pts = antichain_min(std::move(scaled));
  auto facets = facets_from_dual_rays(dual_extreme_rays(pts, dim), pts, dim);
  for (auto& f : facets) f.offset /= den;
  return NewtonRegion(dim, std::move(facets), {});
}

NewtonRegion NewtonRegion::scaled(const Rat& factor) const {
  if (factor <= 0) throw InputError("scale factor must be positive");
  std::vector<Facet> facets = facets_;
  for (auto& f : facets) f.offset *= factor;
  std::vector<ExponentVector> pts;
  if (!points_.empty() && rat_den(factor) == 1) {
    pts = points_;
    for (auto& p : pts)
      for (auto& x : p) x *= rat_num(factor);
  }
  return NewtonRegion(dim_, std::move(facets), std::move(pts));
}

Rat support_value(const NewtonRegion& r, const std::vector<Int>& w) {
  if (static_cast<int>(w.size()) != r.dim())
    throw InputError("covector length does not match ambient dimension");
  bool zero = true;
  for (const auto& x : w) {
    if (x < 0) throw InputError("covector must be componentwise non-negative");
    if (x != 0) zero = false;
  }
  if (zero) throw InputError("covector must not be zero");

  if (!r.points().empty()) {
    Int best = dot(w, r.points()[0]);
    for (std::size_t i = 1; i < r.points().size(); ++i) {
      Int v = dot(w, r.points()[i]);
      if (v < best) best = v;
    }
    return Rat(best);
  }
  std::vector<Halfspace> rows;
  for (const auto& f : r.facets()) rows.push_back(Halfspace{f.normal, f.offset});
  auto verts = enumerate_vertices(r.dim(), rows);
  bool first = true;
  Rat best;
  for (const auto& v : verts) {
    Rat s = 0;
    for (int j = 0; j < r.dim(); ++j) s += Rat(w[j]) * v[j];
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  if (first) throw Error("region has no vertices");
  return best;
}

bool strict_contains(const NewtonRegion& r, const std::vector<Rat>& p, const Rat& c) {
  if (static_cast<int>(p.size()) != r.dim())
    throw InputError("point length does not match ambient dimension");
  if (c <= 0) throw InputError("scale must be positive");
  for (const auto& f : r.facets()) {
    Rat lhs = 0;
    for (int j = 0; j < r.dim(); ++j) lhs += Rat(f.normal[j]) * p[j];
    if (!(lhs > c * f.offset)) return false;
  }
  return true;
}

// ---- exact vertex enumeration and volumes ------------------------------

namespace {

Rat det_rat(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

void combinations(std::size_t total, int choose,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(choose);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int k) {
    if (k == choose) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (choose - k) <= total; ++i) {
      idx[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
}

struct Frame2 {
  // Exact counterclockwise-around-center comparator for rational points.
  std::vector<Rat> center;
  bool less(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    Rat ax = a[0] - center[0], ay = a[1] - center[1];
    Rat bx = b[0] - center[0], by = b[1] - center[1];
    int ha = (ay < 0 || (ay == 0 && ax < 0)) ? 1 : 0;
    int hb = (by < 0 || (by == 0 && bx < 0)) ? 1 : 0;
    if (ha != hb) return ha < hb;
    Rat cross = ax * by - ay * bx;
    if (cross != 0) return cross > 0;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

} // namespace

std::vector<std::vector<Rat>> enumerate_vertices(int dim,
                                                 const std::vector<Halfspace>& rows) {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  if (dim > 4) throw UnsupportedDimension("vertex enumeration supports dimension <= 4");
  std::vector<std::vector<Rat>> verts;
  if (static_cast<int>(rows.size()) < dim) return verts;
  combinations(rows.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m[i][j] = Rat(rows[idx[i]].normal[j]);
    Rat d = det_rat(m);
    if (d == 0) return;
    std::vector<Rat> x(dim);
    for (int col = 0; col < dim; ++col) {
      auto mc = m;
      for (int i = 0; i < dim; ++i) mc[i][col] = rows[idx[i]].offset;
      x[col] = det_rat(std::move(mc)) / d;
    }
    for (const auto& row : rows) {
      Rat lhs = 0;
      for (int j = 0; j < dim; ++j) lhs += Rat(row.normal[j]) * x[j];
      if (lhs < row.offset) return;
    }
    verts.push_back(std::move(x));
  });
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

Rat polytope_volume(int dim, const std::vector<Halfspace>& rows) {
  if (dim < 1 || dim > 3)
    throw UnsupportedDimension("exact polytope volume supports dimension <= 3");
  auto verts = enumerate_vertices(dim, rows);
  if (static_cast<int>(verts.size()) < dim + 1) return Rat(0);

  if (dim == 1) {
    Rat lo = verts.front()[0], hi = verts.front()[0];
    for (const auto& v : verts) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return hi - lo;
  }

  std::vector<Rat> centroid(dim, Rat(0));
  for (const auto& v : verts)
    for (int j = 0; j < dim; ++j) centroid[j] += v[j];
  for (int j = 0; j < dim; ++j) centroid[j] /= Int(verts.size());

  if (dim == 2) {
    Frame2 frame{centroid};
    auto ordered = verts;
    std::sort(ordered.begin(), ordered.end(),
              [&](const auto& a, const auto& b) { return frame.less(a, b); });
    Rat twice_area = 0;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const auto& a = ordered[i];
      const auto& b = ordered[(i + 1) % ordered.size()];
      twice_area += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice_area) / 2;
  }

  // dim == 3: pyramids from the interior centroid over each facet, the
  // facet fan-triangulated in projected angular order.
  std::vector<Halfspace> unique_rows;
  for (const auto& row : rows) {
    Halfspace h = row;
    Int g = 0;
    for (const auto& x : h.normal) g = gcd(g, abs(x));
    if (g > 1) {
      for (auto& x : h.normal) x /= g;
      h.offset /= g;
    }
    bool seen = false;
    for (const auto& u : unique_rows)
      if (u.normal == h.normal && u.offset == h.offset) seen = true;
    if (!seen) unique_rows.push_back(std::move(h));
  }

  Rat six_vol = 0;
  for (const auto& row : unique_rows) {
    std::vector<std::vector<Rat>> incident;
    for (const auto& v : verts) {
      Rat lhs = 0;
      for (int j = 0; j < 3; ++j) lhs += Rat(row.normal[j]) * v[j];
      if (lhs == row.offset) incident.push_back(v);
    }
    if (incident.size() < 3) continue;

    int drop = 0;
    for (int j = 1; j < 3; ++j)
      if (abs(row.normal[j]) > abs(row.normal[drop])) drop = j;
    std::vector<std::vector<Rat>> flat;
    flat.reserve(incident.size());
    for (const auto& v : incident) {
      std::vector<Rat> q;
      for (int j = 0; j < 3; ++j)
        if (j != drop) q.push_back(v[j]);
      flat.push_back(std::move(q));
    }
    std::vector<Rat> fc(2, Rat(0));
    for (const auto& q : flat) {
      fc[0] += q[0];
      fc[1] += q[1];
    }
    fc[0] /= Int(flat.size());
    fc[1] /= Int(flat.size());
    Frame2 frame{fc};
    std::vector<std::size_t> order(flat.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return frame.less(flat[a], flat[b]);
    });

    const auto& base = incident[order[0]];
    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
      const auto& b = incident[order[i]];
      const auto& c = incident[order[i + 1]];
      std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
      for (int j = 0; j < 3; ++j) {
        m[0][j] = base[j] - centroid[j];
        m[1][j] = b[j] - centroid[j];
        m[2][j] = c[j] - centroid[j];
      }
      six_vol += abs(det_rat(std::move(m)));
    }
  }
  return six_vol / 6;
}

ExtRat covolume(const NewtonRegion& r) {
  if (r.dim() > 3)
    throw UnsupportedDimension("exact covolume supports dimension <= 3");
  const int n = r.dim();

  bool all_zero_offsets = true;
  for (const auto& f : r.facets())
    if (f.offset > 0) all_zero_offsets = false;
  if (all_zero_offsets) return ExtRat::finite(Rat(0)); // region is the orthant

  // Direction e_i never reaches the region iff some facet ignores x_i but
  // demands a positive value: the complement is then unbounded along it.
  for (int i = 0; i < n; ++i)
    for (const auto& f : r.facets())
      if (f.normal[i] == 0 && f.offset > 0) return ExtRat::infinite();

  // Axis intercepts bound the complement inside the box Π [0, t_i].
  std::vector<Rat> t(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (const auto& f : r.facets())
      if (f.normal[i] > 0) t[i] = std::max(t[i], f.offset / f.normal[i]);

  Rat box = 1;
  for (int i = 0; i < n; ++i) box *= t[i];
  if (box == 0) return ExtRat::finite(Rat(0));

  std::vector<Halfspace> rows;
  for (const auto& f : r.facets()) rows.push_back(Halfspace{f.normal, f.offset});
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = -1;
    rows.push_back(Halfspace{std::move(e), -t[i]});
  }
  Rat inside = polytope_volume(n, rows);
  return ExtRat::finite(box - inside);
}

// ---- minimal points of a lattice up-set --------------------------------

namespace {

struct ActiveRow {
  const std::vector<Int>* weights;
  Int bound;
};

// Minimal points of {v in Z^k_{>=0} : <w[0..k), v> >= bound for all rows}.
std::vector<ExponentVector> minimal_rec(int k, const std::vector<ActiveRow>& rows) {
  std::vector<ActiveRow> active;
  for (const auto& row : rows)
    if (row.bound > 0) active.push_back(row);
  if (active.empty()) return {ExponentVector(k, 0)};

  if (k == 1) {
    Int v = 0;
    for (const auto& row : active) {
      const Int& w = (*row.weights)[0];
      if (w == 0) return {}; // infeasible: positive bound, zero weight
      v = std::max(v, ceil_div(row.bound, w));
    }
    return {ExponentVector{v}};
  }

  // Slice on the last coordinate; beyond t_stop all rows involving it are
  // vacuous and further slices only repeat dominated points.
  Int t_stop = 0;
  for (const auto& row : active) {
    const Int& w = (*row.weights)[k - 1];
    if (w > 0) t_stop = std::max(t_stop, ceil_div(row.bound, w));
  }

  std::vector<ExponentVector> kept;
  ExponentVector zero(k - 1, 0);
  for (Int t = 0; t <= t_stop; ++t) {
    std::vector<ActiveRow> sub;
    sub.reserve(active.size());
    for (const auto& row : active)
      sub.push_back(ActiveRow{row.weights, row.bound - (*row.weights)[k - 1] * t});
    auto slice = minimal_rec(k - 1, sub);
    bool slice_is_origin = slice.size() == 1 && slice[0] == zero;
    for (auto& m : slice) {
      m.push_back(t);
      bool dominated = false;
      for (const auto& kpt : kept) {
        if (divides(kpt, m)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(std::move(m));
    }
    if (slice_is_origin) break;
  }
  return kept;
}

} // namespace

std::vector<ExponentVector> minimal_upset_points(int dim, const std::vector<UpsetRow>& rows) {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  std::vector<ActiveRow> active;
  active.reserve(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.weights.size()) != dim)
      throw InputError("row weight length does not match ambient dimension");
    for (const auto& w : row.weights)
      if (w < 0) throw InputError("up-set rows need non-negative weights");
    active.push_back(ActiveRow{&row.weights, row.bound});
  }
  auto points = minimal_rec(dim, active);
  std::sort(points.begin(), points.end(), lex_less);
  return points;
}

} // namespace mi
