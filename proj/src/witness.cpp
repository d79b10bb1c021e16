#include "tropcong/witness.hpp"

#include <algorithm>
#include <set>

#include "tropcong/error.hpp"

namespace tropcong {

IntMatrix thin_matrix(std::size_t n, const Integer& N) {
  if (n < 2) throw PreconditionError("thin polytope needs n >= 2");
  if (N < Integer(3)) throw PreconditionError("thin polytope needs N >= 3");
  IntMatrix m(n, n);
  m(0, 0) = N - Integer(1);
  Integer power = N;
  for (std::size_t j = 1; j < n; ++j) {
    power = power * N;
    m(0, j) = power;
  }
  m(1, 0) = Integer(1);
  m(1, 1) = N + Integer(1);
  for (std::size_t i = 2; i < n; ++i) m(i, i) = Integer(1);
  return m;
}

ThinPolytope thin_polytope(std::size_t n, const Integer& N) {
  ThinPolytope t;
  t.n = n;
  t.N = N;
  t.matrix = thin_matrix(n, N);
  IntVec lambda(n, Integer(0));
  while (true) {
    t.points.push_back(t.matrix * lambda);
    std::size_t i = 0;
    while (i < n && lambda[i] == Integer(2)) lambda[i++] = Integer(0);
    if (i == n) break;
    lambda[i] += Integer(1);
  }
  std::sort(t.points.begin(), t.points.end());
  t.interior_point = t.matrix * IntVec(n, Integer(1));
  bool first = true;
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = i + 1; j < t.points.size(); ++j) {
      IntVec d = t.points[i] - t.points[j];
      Integer sq = dot(d, d);
      if (first || sq < t.min_dist_sq) t.min_dist_sq = sq;
      first = false;
    }
  return t;
}

namespace {

bool strictly_interior(const LatticePolytope& p, const IntVec& u) {
  const Polyhedron& h = p.facets();
  if (p.empty() || !h.equations().empty()) return false;
  for (const auto& c : h.inequalities())
    if (!(dot(c.normal, to_rational(u)) < c.rhs)) return false;
  return true;
}

bool contains_point(const PolyComplex& cx, const RatVec& x) {
  for (const auto& c : cx.cells())
    if (c.geometry.contains(x)) return true;
  return false;
}

// min { s : p in cell, s >= (u_i - u0) . p for every vertex u_i }
LpResult epigraph_min(const Polyhedron& cell, const std::vector<IntVec>& offsets) {
  std::size_t n = cell.dim();
  auto lift = [&](const IntVec& v, std::int64_t last) {
    IntVec w = v;
    w.push_back(Integer(last));
    return w;
  };
  Polyhedron h(n + 1);
  for (const auto& c : cell.equations()) h.add_equation(lift(c.normal, 0), c.rhs);
  for (const auto& c : cell.inequalities()) h.add_inequality(lift(c.normal, 0), c.rhs);
  for (const auto& c : offsets) h.add_inequality(lift(c, -1), Rational(0));
  IntVec obj(n + 1, Integer(0));
  obj[n] = Integer(1);
  return lp(obj, h, Sense::minimize);
}

TropPoly vertex_poly(const LatticePolytope& p) {
  TropPoly f(p.dim());
  for (const auto& v : p.vertices()) f.add_term(v, Rational(0));
  return f;
}

TropPoly with_bump(TropPoly f, const Rational& eps, const IntVec& u0) {
  f.add_term(u0, eps);
  return f;
}

PairStatus classify(const TropPoly& lhs, const TropPoly& rhs) {
  TropFun a = canon_fun(lhs), b = canon_fun(rhs);
  if (a.is_bottom() && b.is_bottom()) return PairStatus::dropped_bottom;
  if (a.terms().size() == 1 || b.terms().size() == 1) return PairStatus::dropped_monomial;
  return PairStatus::kept;
}

// Deterministic search: integer points by growing max-norm, then points with
// denominators 2..4 in the same box.
std::optional<RatVec> point_outside(const PolyComplex& cx) {
  const std::size_t n = cx.dim();
  constexpr std::int64_t radius = 4;
  for (std::int64_t q = 1; q <= 4; ++q) {
    for (std::int64_t r = 0; r <= radius * q; ++r) {
      std::vector<std::int64_t> k(n, -r);
      while (true) {
        std::int64_t norm = 0;
        bool reduced = q == 1;
        for (auto v : k) {
          norm = std::max(norm, v < 0 ? -v : v);
          if (v % q != 0) reduced = true;
        }
        if (norm == r && reduced) {
          RatVec x(n);
          for (std::size_t i = 0; i < n; ++i) x[i] = Rational(k[i], q);
          if (!contains_point(cx, x)) return x;
        }
        std::size_t i = 0;
        while (i < n && k[i] == r) k[i++] = -r;
        if (i == n) break;
        ++k[i];
      }
    }
  }
  return std::nullopt;
}

}  // namespace

WitnessPair witness_pair(const LatticePolytope& p, const IntVec& u0, const PolyComplex& cx) {
  const std::size_t n = cx.dim();
  if (p.dim() != n || u0.size() != n) throw DimensionMismatch("witness data of different dimensions");
  if (!strictly_interior(p, u0)) throw PreconditionError("u0 is not an interior point of P");
  RatVec origin(n, Rational(0));
  for (const auto& c : cx.cells())
    if (c.geometry.contains(origin)) throw PreconditionError("origin lies in cell " + c.id);

  std::vector<IntVec> offsets;
  for (const auto& v : p.vertices()) offsets.push_back(v - u0);
  WitnessPair w;
  bool first = true;
  for (const auto& c : cx.cells()) {
    LpResult r = epigraph_min(c.geometry, offsets);
    if (r.status != LpStatus::optimal) throw InternalError("epigraph LP not bounded on cell " + c.id);
    if (first || r.value < w.eps) {
      w.eps = r.value;
      w.attained_at.assign(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
      w.cell = c.id;
    }
    first = false;
  }
  if (w.eps.sign() <= 0) throw InternalError("witness epsilon is not positive");
  w.f = vertex_poly(p);
  w.g = with_bump(w.f, w.eps, u0);
  return w;
}

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::kept: return "kept";
    case PairStatus::dropped_bottom: return "dropped-bottom";
    case PairStatus::dropped_monomial: return "dropped-monomial";
  }
  return "?";
}

Certificate refute(const std::vector<std::pair<TropPoly, TropPoly>>& candidates, const PolyComplex& cx) {
  const std::size_t n = cx.dim();
  if (n < 2) throw PreconditionError("refutation needs ambient dimension >= 2");
  ValidationReport vr = validate_complex(cx);
  if (!vr.ok()) {
    std::string msg = "complex is not valid";
    if (!vr.problems.empty()) msg += ": " + vr.problems.front();
    throw PreconditionError(msg);
  }
  if (!unbounded_all_rational(cx)) throw PreconditionError("complex is not unbounded in all rational directions");

  Certificate cert;
  cert.complex = cx;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& [lhs, rhs] = candidates[i];
    if (lhs.dim() != n || rhs.dim() != n) throw DimensionMismatch("candidate " + std::to_string(i) + " has wrong dimension");
    if (!eq_on_complex(lhs, rhs, cx).equal)
      throw PreconditionError("candidate " + std::to_string(i) + " is not in E(|cx|)");
    cert.candidates.push_back({lhs, rhs, classify(lhs, rhs)});
  }

  auto a = point_outside(cx);
  if (!a) throw PreconditionError("no point outside |cx| found; the support is not a proper subset");
  cert.shift = *a;
  PolyComplex moved = translate_complex(cx, Rational(-1) * *a);

  // Newton polytopes are translation invariant, so the kept pairs need no
  // rewriting in the moved coordinates.
  Integer diam_sq(0);
  for (const auto& c : cert.candidates) {
    if (c.status != PairStatus::kept) continue;
    diam_sq = std::max(diam_sq, diameter_squared(newton(c.lhs)));
    diam_sq = std::max(diam_sq, diameter_squared(newton(c.rhs)));
  }
  cert.N = isqrt(diam_sq) + Integer(1);
  cert.thin_N = cert.N + Integer(3);
  ThinPolytope thin = thin_polytope(n, cert.thin_N);
  cert.thin_points = thin.points;
  LatticePolytope p = LatticePolytope::hull(thin.points, n);

  WitnessPair w = witness_pair(p, thin.interior_point, moved);
  cert.f = w.f;
  cert.g = w.g;
  cert.eps = w.eps;
  cert.u0 = thin.interior_point;

  for (auto& c : cert.candidates) {
    if (c.status != PairStatus::kept) continue;
    c.lhs_fits = fits_in_translate(newton(c.lhs), p).has_value();
    c.rhs_fits = fits_in_translate(newton(c.rhs), p).has_value();
    if (c.lhs_fits || c.rhs_fits) throw InternalError("a kept Newton polytope fits in the thin polytope");
  }
  return cert;
}

CertificateCheck verify_certificate(const Certificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  const PolyComplex& cx = cert.complex;
  const std::size_t n = cx.dim();
  if (n < 2) return fail("ambient dimension below 2");
  if (!validate_complex(cx).ok()) return fail("complex does not validate");
  if (!unbounded_all_rational(cx)) return fail("complex is not unbounded in all rational directions");

  Integer diam_sq(0);
  for (std::size_t i = 0; i < cert.candidates.size(); ++i) {
    const auto& c = cert.candidates[i];
    std::string tag = "candidate " + std::to_string(i);
    if (c.lhs.dim() != n || c.rhs.dim() != n) return fail(tag + " has wrong dimension");
    if (!eq_on_complex(c.lhs, c.rhs, cx).equal) return fail(tag + " is not in E(|Z|)");
    if (classify(c.lhs, c.rhs) != c.status) return fail(tag + " has the wrong status");
    if (c.status == PairStatus::kept) {
      diam_sq = std::max(diam_sq, diameter_squared(newton(c.lhs)));
      diam_sq = std::max(diam_sq, diameter_squared(newton(c.rhs)));
    }
  }

  if (cert.shift.size() != n) return fail("translation has wrong dimension");
  if (contains_point(cx, cert.shift)) return fail("translation point lies in |Z|");

  if (cert.N.sign() <= 0 || !(diam_sq < cert.N * cert.N)) return fail("N does not exceed every Newton diameter");
  if (cert.thin_N != cert.N + Integer(3)) return fail("thin parameter is not N + 3");

  ThinPolytope thin;
  try {
    thin = thin_polytope(n, cert.thin_N);
  } catch (const Error& e) {
    return fail(std::string("thin polytope: ") + e.what());
  }
  if (determinant(thin.matrix) != Integer(-1)) return fail("thin matrix determinant is not -1");
  std::vector<IntVec> pts = cert.thin_points;
  std::sort(pts.begin(), pts.end());
  if (pts != thin.points) return fail("thin points differ from the images of {0,1,2}^n");
  for (const auto& q : pts)
    if (q.size() != n) return fail("thin point of wrong dimension");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      IntVec d = pts[i] - pts[j];
      if (!(cert.N * cert.N < dot(d, d))) return fail("two thin points are within distance N");
    }
  LatticePolytope p = LatticePolytope::hull(pts, n);
  if (p.lattice_points() != pts) return fail("thin polytope has extra lattice points");

  if (!strictly_interior(p, cert.u0)) return fail("u0 is not interior to the thin polytope");
  if (cert.eps.sign() <= 0) return fail("epsilon is not positive");
  if (cert.f != vertex_poly(p)) return fail("f is not the vertex polynomial of P");
  if (cert.g != with_bump(cert.f, cert.eps, cert.u0)) return fail("g is not eps x^u0 + f");
  PolyComplex moved = translate_complex(cx, Rational(-1) * cert.shift);
  if (!eq_on_complex(cert.f, cert.g, moved).equal) return fail("witness pair differs on the translated complex");
  RatVec origin(n, Rational(0));
  if (cert.f.eval(origin) == cert.g.eval(origin)) return fail("witness pair agrees at the origin");

  for (std::size_t i = 0; i < cert.candidates.size(); ++i) {
    const auto& c = cert.candidates[i];
    if (c.status != PairStatus::kept) continue;
    bool lf = fits_in_translate(newton(c.lhs), p).has_value();
    bool rf = fits_in_translate(newton(c.rhs), p).has_value();
    if (lf != c.lhs_fits || rf != c.rhs_fits) return fail("candidate " + std::to_string(i) + " has a wrong fit verdict");
    if (lf || rf) return fail("candidate " + std::to_string(i) + " fits in the thin polytope");
  }
  return {true, ""};
}

}  // namespace tropcong
