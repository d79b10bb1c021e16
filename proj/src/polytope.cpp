#include "tropcong/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropcong/error.hpp"
#include "tropcong/lattice.hpp"

namespace tropcong {

namespace {

Integer cross(const IntVec& o, const IntVec& a, const IntVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<IntVec> planar_hull(const std::vector<IntVec>& pts) {
  // Andrew's monotone chain on lexicographically sorted, distinct points;
  // collinear boundary points are discarded.
  std::vector<IntVec> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polyhedron describe(const std::vector<IntVec>& verts, std::size_t n) {
  Polyhedron out(n);
  if (verts.empty()) {
    if (n > 0) {
      IntVec e(n);
      e[0] = 1;
      out.add_inequality(e, -1);
      out.add_inequality(Integer(-1) * e, 0);
    }
    return out;
  }
  const IntVec& v0 = verts.front();
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < verts.size(); ++i) diffs.push_back(verts[i] - v0);
  std::vector<IntVec> eqs = integer_kernel(diffs, n);
  for (const auto& e : eqs) out.add_equation(e, dot(e, v0));
  const std::size_t k = n - eqs.size();
  if (k == 0) return out;

  std::set<std::pair<IntVec, Integer>> seen;
  auto consider = [&](const IntVec& a, const Integer& b) {
    bool le = true, ge = true;
    for (const auto& v : verts) {
      Integer s = dot(a, v);
      if (s > b) le = false;
      if (s < b) ge = false;
      if (!le && !ge) return;
    }
    if (le && ge) return;
    IntVec na = le ? a : Integer(-1) * a;
    Integer nb = le ? b : -b;
    if (seen.insert({na, nb}).second) out.add_inequality(na, nb);
  };

  if (n == 2 && k == 2) {
    auto ring = planar_hull(verts);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const IntVec& p = ring[i];
      const IntVec& q = ring[(i + 1) % ring.size()];
      IntVec a = primitive(IntVec{q[1] - p[1], p[0] - q[0]});
      consider(a, dot(a, p));
    }
    return out;
  }

  for_each_subset(verts.size(), k, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVec> rows = eqs;
    for (std::size_t i = 1; i < s.size(); ++i) rows.push_back(verts[s[i]] - verts[s[0]]);
    auto ker = integer_kernel(rows, n);
    if (ker.size() != 1) return;
    IntVec a = primitive(ker.front());
    consider(a, dot(a, verts[s[0]]));
  });
  return out;
}

}  // namespace

LatticePolytope::LatticePolytope(std::size_t dim) : dim_(dim), facets_(describe({}, dim)) {}

bool in_convex_hull(const std::vector<IntVec>& points, const RatVec& x) {
  if (points.empty()) return false;
  const std::size_t n = x.size();
  std::vector<RatVec> a(n + 1, RatVec(points.size()));
  RatVec b(n + 1);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != n) throw DimensionMismatch("point has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) a[i][k] = points[k][i];
    a[n][k] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
  b[n] = 1;
  return solve_standard_form(a, b, {}).status != LpStatus::infeasible;
}

std::vector<IntVec> hull_vertices_lp(std::vector<IntVec> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionMismatch("point has wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<IntVec> keep = points;
  for (std::size_t i = 0; i < keep.size();) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (j != i) others.push_back(keep[j]);
    }
    if (!others.empty() && in_convex_hull(others, to_rational(keep[i]))) {
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return keep;
}

LatticePolytope LatticePolytope::hull(std::vector<IntVec> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionMismatch("point has wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LatticePolytope out(dim);
  if (points.size() <= 2) {
    out.vertices_ = std::move(points);
  } else if (dim == 1) {
    out.vertices_ = {points.front(), points.back()};
  } else if (dim == 2) {
    out.vertices_ = planar_hull(points);
    std::sort(out.vertices_.begin(), out.vertices_.end());
  } else {
    out.vertices_ = hull_vertices_lp(std::move(points), dim);
  }
  out.facets_ = describe(out.vertices_, dim);
  return out;
}

bool LatticePolytope::contains(const RatVec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point has wrong dimension");
  if (empty()) return false;
  return facets_.contains(x);
}

int LatticePolytope::affine_dim() const {
  if (empty()) return -1;
  return static_cast<int>(dim_ - facets_.equations().size());
}

std::vector<IntVec> LatticePolytope::lattice_points() const {
  std::vector<IntVec> out;
  if (empty()) return out;
  const std::size_t n = dim_;
  if (n == 0) return {IntVec{}};
  IntVec lo = vertices_.front(), hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  // Odometer over coordinates 1..n-1; coordinate 0 solved as an interval.
  IntVec x = lo;
  for (;;) {
    Integer x0lo = lo[0], x0hi = hi[0];
    bool ok = true;
    auto rest = [&](const IntVec& a) {
      Integer s;
      for (std::size_t i = 1; i < n; ++i) s += a[i] * x[i];
      return s;
    };
    for (const auto& c : facets_.equations()) {
      Rational r = c.rhs - Rational(rest(c.normal));
      if (c.normal[0].is_zero()) {
        if (!r.is_zero()) ok = false;
      } else {
        Rational v = r / Rational(c.normal[0]);
        if (!v.is_integer()) {
          ok = false;
        } else {
          x0lo = std::max(x0lo, v.num());
          x0hi = std::min(x0hi, v.num());
        }
      }
      if (!ok) break;
    }
    for (std::size_t k = 0; ok && k < facets_.inequalities().size(); ++k) {
      const auto& c = facets_.inequalities()[k];
      Rational r = c.rhs - Rational(rest(c.normal));
      int s = c.normal[0].sign();
      if (s == 0) {
        if (r.sign() < 0) ok = false;
      } else if (s > 0) {
        x0hi = std::min(x0hi, floor(r / Rational(c.normal[0])));
      } else {
        x0lo = std::max(x0lo, ceil(r / Rational(c.normal[0])));
      }
    }
    if (ok) {
      for (Integer t = x0lo; t <= x0hi; t += Integer(1)) {
        x[0] = t;
        out.push_back(x);
      }
    }
    std::size_t i = 1;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i >= n) break;
    x[i] += Integer(1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("Minkowski sum of different dimensions");
  std::vector<IntVec> pts;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) pts.push_back(p + q);
  return LatticePolytope::hull(std::move(pts), a.dim());
}

LatticePolytope translate(const LatticePolytope& p, const IntVec& t) {
  if (t.size() != p.dim()) throw DimensionMismatch("translation has wrong dimension");
  std::vector<IntVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return LatticePolytope::hull(std::move(pts), p.dim());
}

Integer diameter_squared(const LatticePolytope& p) {
  Integer best;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      IntVec d = v[i] - v[j];
      Integer s = dot(d, d);
      if (s > best) best = s;
    }
  return best;
}

std::optional<IntVec> fits_in_translate(const LatticePolytope& q, const LatticePolytope& p) {
  if (q.dim() != p.dim()) throw DimensionMismatch("fit test of different dimensions");
  if (q.empty() || p.empty()) throw PreconditionError("fit test needs nonempty polytopes");
  if (q.affine_dim() > p.affine_dim()) return std::nullopt;
  const IntVec& q0 = q.vertices().front();
  for (const auto& z : p.lattice_points()) {
    IntVec t = q0 - z;
    bool fits = true;
    for (const auto& v : q.vertices()) {
      if (!p.contains(v - t)) {
        fits = false;
        break;
      }
    }
    if (fits) return t;
  }
  return std::nullopt;
}

}  // namespace tropcong
