#include "tropcong/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropcong/envelope.hpp"
#include "tropcong/error.hpp"
#include "tropcong/lattice.hpp"

namespace tropcong {

PolyComplex::PolyComplex(std::size_t dim, std::vector<Cell> cells, std::vector<std::string> facets)
    : dim_(dim), cells_(std::move(cells)), facets_(std::move(facets)) {
  if (dim_ == 0) throw InvalidInput("complex dimension must be positive");
  if (cells_.empty()) throw InvalidInput("complex has no cells");
  std::set<std::string> ids;
  for (const auto& c : cells_) {
    if (c.id.empty()) throw InvalidInput("cell with empty id");
    if (!ids.insert(c.id).second) throw InvalidInput("duplicate cell id '" + c.id + "'");
    if (c.geometry.dim() != dim_) throw DimensionMismatch("cell '" + c.id + "' has wrong dimension");
  }
  std::set<std::string> fs;
  for (const auto& f : facets_) {
    if (!ids.count(f)) throw InvalidInput("facet '" + f + "' is not a cell");
    if (!fs.insert(f).second) throw InvalidInput("facet '" + f + "' listed twice");
  }
  for (const auto& c : cells_) {
    bool facet = fs.count(c.id) > 0;
    is_facet_.push_back(facet);
    if (facet && !c.weight) throw InvalidInput("facet '" + c.id + "' has no weight");
    if (!facet && c.weight) throw InvalidInput("cell '" + c.id + "' has a weight but is not a facet");
    if (c.weight && c.weight->sign() <= 0) throw InvalidInput("weight of '" + c.id + "' is not positive");
    hulls_.push_back(affine_hull(c.geometry));
    if (hulls_.back().empty) throw InvalidInput("cell '" + c.id + "' is empty");
  }
}

std::size_t PolyComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].id == id) return i;
  }
  throw InvalidInput("no cell '" + id + "'");
}

PolyComplex full_space(std::size_t n) {
  return PolyComplex(n, {Cell{"R" + std::to_string(n), Polyhedron(n), Integer(1)}},
                     {"R" + std::to_string(n)});
}

PolyComplex standard_line() {
  std::vector<Cell> cells;
  cells.push_back({"o", Polyhedron(2, {{{1, 0}, 0}, {{0, 1}, 0}}, {}), std::nullopt});
  cells.push_back({"r1", Polyhedron(2, {{{0, 1}, 0}}, {{{1, 0}, 0}}), Integer(1)});
  cells.push_back({"r2", Polyhedron(2, {{{1, 0}, 0}}, {{{0, 1}, 0}}), Integer(1)});
  cells.push_back({"r3", Polyhedron(2, {{{1, -1}, 0}}, {{{-1, 0}, 0}}), Integer(1)});
  return PolyComplex(2, std::move(cells), {"r1", "r2", "r3"});
}

PolyComplex translate_complex(const PolyComplex& cx, const RatVec& a) {
  std::vector<Cell> cells;
  for (const auto& c : cx.cells()) cells.push_back({c.id, translate(c.geometry, a), c.weight});
  return PolyComplex(cx.dim(), std::move(cells), cx.facet_ids());
}

namespace {

bool face_given_relint(const Polyhedron& tau, const RatVec& tau_relint, const Polyhedron& sigma) {
  if (!is_subset(tau, sigma)) return false;
  Polyhedron f = sigma;
  for (const auto& c : sigma.inequalities()) {
    if (dot(c.normal, tau_relint) == c.rhs) f.add_equation(c.normal, c.rhs);
  }
  return is_subset(f, tau);
}

}  // namespace

bool is_face(const Polyhedron& tau, const Polyhedron& sigma) {
  AffineHull h = affine_hull(tau);
  if (h.empty) return false;
  return face_given_relint(tau, h.relint, sigma);
}

ValidationReport validate_complex(const PolyComplex& cx) {
  ValidationReport rep;
  const auto& cells = cx.cells();
  const std::size_t m = cells.size();
  auto find_cell = [&](const Polyhedron& p) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < m; ++k) {
      if (same_set(p, cells[k].geometry)) return k;
    }
    return std::nullopt;
  };

  // face_of[i][j]: cell i is a face of cell j
  std::vector<std::vector<bool>> face_of(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && cx.cell_dim(i) <= cx.cell_dim(j)) {
        face_of[i][j] = face_given_relint(cells[i].geometry, cx.hull(i).relint, cells[j].geometry);
      }
    }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (face_of[i][j] && face_of[j][i]) {
        rep.face_compatible = false;
        rep.problems.push_back("cells '" + cells[i].id + "' and '" + cells[j].id + "' coincide");
        continue;
      }
      Polyhedron meet = intersect(cells[i].geometry, cells[j].geometry);
      AffineHull h = affine_hull(meet);
      if (h.empty) continue;
      if (!face_given_relint(meet, h.relint, cells[i].geometry) ||
          !face_given_relint(meet, h.relint, cells[j].geometry)) {
        rep.face_compatible = false;
        rep.problems.push_back("intersection of '" + cells[i].id + "' and '" + cells[j].id +
                               "' is not a face of both");
      } else if (!find_cell(meet)) {
        rep.face_compatible = false;
        rep.problems.push_back("intersection of '" + cells[i].id + "' and '" + cells[j].id +
                               "' is not a cell of the complex");
      }
    }

  // closed under taking codimension-one faces
  for (std::size_t i = 0; i < m; ++i) {
    const auto& g = cells[i].geometry;
    const auto& h = cx.hull(i);
    if (h.dim == 0) continue;
    for (std::size_t k = 0; k < g.inequalities().size(); ++k) {
      if (h.implicit[k]) continue;
      Polyhedron f = g;
      f.add_equation(g.inequalities()[k].normal, g.inequalities()[k].rhs);
      AffineHull fh = affine_hull(f);
      if (fh.empty || fh.dim + 1 != h.dim) continue;
      if (!find_cell(f)) {
        rep.face_compatible = false;
        rep.problems.push_back("a face of '" + cells[i].id + "' is not a cell of the complex");
      }
    }
  }

  std::vector<bool> maximal(m, true);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (face_of[i][j] && !face_of[j][i]) maximal[i] = false;
    }
  std::optional<std::size_t> facet_dim;
  for (std::size_t i = 0; i < m; ++i) {
    if (cx.is_facet(i) && !maximal[i]) {
      rep.pure = false;
      rep.problems.push_back("facet '" + cells[i].id + "' is a proper face of another cell");
    }
    if (!cx.is_facet(i) && maximal[i]) {
      rep.pure = false;
      rep.problems.push_back("maximal cell '" + cells[i].id + "' is not declared a facet");
    }
    if (cx.is_facet(i)) {
      if (!facet_dim) {
        facet_dim = cx.cell_dim(i);
      } else if (*facet_dim != cx.cell_dim(i)) {
        rep.pure = false;
        rep.problems.push_back("facet '" + cells[i].id + "' has dimension " +
                               std::to_string(cx.cell_dim(i)) + ", expected " +
                               std::to_string(*facet_dim));
      }
    }
  }
  if (!facet_dim) {
    rep.pure = false;
    rep.problems.push_back("no facets declared");
  }

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (face_of[i][j]) parent[root(i)] = root(j);
    }
  std::map<std::size_t, std::vector<std::string>> comps;
  for (std::size_t i = 0; i < m; ++i) comps[root(i)].push_back(cells[i].id);
  if (comps.size() > 1) {
    rep.connected = false;
    std::string msg = "complex has " + std::to_string(comps.size()) + " components:";
    for (const auto& [r, ids] : comps) {
      msg += " {";
      for (std::size_t k = 0; k < ids.size(); ++k) msg += (k ? "," : "") + ids[k];
      msg += "}";
    }
    rep.problems.push_back(msg);
  }
  return rep;
}

IntVec outgoing_vector(const PolyComplex& cx, std::size_t sigma, std::size_t tau) {
  const AffineHull& hs = cx.hull(sigma);
  const AffineHull& ht = cx.hull(tau);
  const std::size_t k = hs.dim;
  if (ht.dim + 1 != k) throw PreconditionError("not a codimension-one face");
  std::vector<IntVec> coords;
  for (const auto& b : ht.lattice) {
    IntVec c;
    if (!lattice_coordinates(hs.lattice, b, c)) {
      throw PreconditionError("'" + cx.cells()[tau].id + "' is not parallel to a face of '" +
                              cx.cells()[sigma].id + "'");
    }
    coords.push_back(c);
  }
  IntVec w = extend_basis(coords, k).back();
  std::vector<IntVec> nu_basis = integer_kernel(coords, k);
  const IntVec& nu = nu_basis.front();
  RatVec dc;
  span_coordinates(hs.lattice, hs.relint - ht.relint, dc);
  int sd = dot(nu, dc).sign();
  int sw = dot(nu, w).sign();
  if (sd == 0 || sw == 0) throw InternalError("degenerate outgoing direction");
  IntVec u(cx.dim());
  for (std::size_t j = 0; j < k; ++j) u = u + w[j] * hs.lattice[j];
  if (sd != sw) u = Integer(-1) * u;
  return u;
}

BalanceReport balancing_check(const PolyComplex& cx) {
  const auto& cells = cx.cells();
  std::optional<std::size_t> d;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cx.is_facet(i)) continue;
    if (d && *d != cx.cell_dim(i)) throw PreconditionError("complex is not pure");
    d = cx.cell_dim(i);
  }
  if (!d) throw PreconditionError("complex has no facets");
  BalanceReport rep;
  if (*d == 0) return rep;
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (cx.cell_dim(t) + 1 != *d) continue;
    RidgeReport rr;
    rr.ridge = cells[t].id;
    rr.weighted_sum.assign(cx.dim(), Integer());
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if (!cx.is_facet(s)) continue;
      if (!face_given_relint(cells[t].geometry, cx.hull(t).relint, cells[s].geometry)) continue;
      IntVec u = outgoing_vector(cx, s, t);
      rr.weighted_sum = rr.weighted_sum + *cells[s].weight * u;
      rr.outgoing.emplace_back(cells[s].id, u);
    }
    if (rr.outgoing.empty()) continue;
    IntVec coords;
    rr.balanced = cx.hull(t).lattice.empty() ? is_zero(rr.weighted_sum)
                                             : lattice_coordinates(cx.hull(t).lattice, rr.weighted_sum, coords);
    rep.balanced = rep.balanced && rr.balanced;
    rep.ridges.push_back(std::move(rr));
  }
  return rep;
}

namespace {

// A cell written in coordinates y of its affine hull: x = origin + sum y_j b_j.
struct Frame {
  RatVec origin;
  std::vector<IntVec> basis;
  std::vector<Constraint> ineqs;  // in y, implicit and trivial rows dropped
};

Frame frame_of(const PolyComplex& cx, std::size_t i) {
  const AffineHull& h = cx.hull(i);
  Frame f{h.relint, h.lattice, {}};
  const auto& ineqs = cx.cells()[i].geometry.inequalities();
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    if (h.implicit[k]) continue;
    IntVec a(h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) a[j] = dot(ineqs[k].normal, h.lattice[j]);
    Rational rhs = ineqs[k].rhs - dot(ineqs[k].normal, h.relint);
    if (is_zero(a)) continue;  // constant on the hull, and slack at the relative interior
    f.ineqs.push_back({a, rhs});
  }
  return f;
}

RatVec to_ambient(const Frame& f, const RatVec& y) {
  RatVec x = f.origin;
  for (std::size_t j = 0; j < f.basis.size(); ++j) x = x + y[j] * to_rational(f.basis[j]);
  return x;
}

// Restriction of a polynomial to a frame: linear part -> best constant.
std::map<IntVec, Rational> restrict_terms(const TropPoly& p, const Frame& f) {
  std::map<IntVec, Rational> out;
  for (const auto& [u, a] : p.terms()) {
    IntVec lam(f.basis.size());
    for (std::size_t j = 0; j < f.basis.size(); ++j) lam[j] = dot(u, f.basis[j]);
    Rational v = a + dot(u, f.origin);
    auto [it, inserted] = out.emplace(lam, v);
    if (!inserted && it->second < v) it->second = v;
  }
  return out;
}

std::vector<Line> as_lines(const std::map<IntVec, Rational>& terms) {
  std::vector<Line> ls;
  for (const auto& [lam, v] : terms) ls.push_back({Rational(lam[0]), v});
  return ls;
}

EqResult unequal_at(const TropPoly& p, const TropPoly& q, const RatVec& x, const std::string& cell) {
  EqResult r;
  r.equal = false;
  r.witness = x;
  r.cell = cell;
  r.p_value = p.eval(x);
  r.q_value = q.eval(x);
  if (r.p_value == r.q_value) throw InternalError("witness point does not separate the functions");
  return r;
}

std::optional<RatVec> differ_by_regions(const std::map<IntVec, Rational>& rp,
                                        const std::map<IntVec, Rational>& rq, const Frame& f) {
  const std::size_t k = f.basis.size();
  for (const auto& [ls, vs] : rp)
    for (const auto& [lt, vt] : rq) {
      if (ls == lt && vs == vt) continue;
      Polyhedron region(k + 1);
      auto lift = [&](const IntVec& a) {
        IntVec w = a;
        w.push_back(1);
        return w;
      };
      std::vector<IntVec> grads;
      for (const auto& c : f.ineqs) {
        region.add_inequality(lift(c.normal), c.rhs);
        grads.push_back(c.normal);
      }
      for (const auto& [l2, v2] : rp) {
        if (l2 == ls) continue;
        region.add_inequality(lift(l2 - ls), vs - v2);
        grads.push_back(l2 - ls);
      }
      for (const auto& [l2, v2] : rq) {
        if (l2 == lt) continue;
        region.add_inequality(lift(l2 - lt), vt - v2);
        grads.push_back(l2 - lt);
      }
      IntVec cap(k + 1);
      cap[k] = 1;
      region.add_inequality(cap, 1);
      RatVec obj(k + 1);
      obj[k] = 1;
      LpResult r = lp(obj, region, Sense::maximize);
      if (r.status != LpStatus::optimal || r.value.sign() <= 0) continue;
      RatVec y(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(k));
      if (vs + dot(ls, y) != vt + dot(lt, y)) return y;
      // Same value at y but different affine forms: step along the gradient of
      // the difference, staying inside the open region.
      IntVec delta = ls - lt;
      Integer worst;
      for (const auto& g : grads) worst = std::max(worst, abs(dot(g, delta)));
      Rational eps = worst.is_zero() ? Rational(1) : r.value / Rational(2 * worst);
      return y + eps * to_rational(delta);
    }
  return std::nullopt;
}

}  // namespace

EqResult eq_on_complex(const TropPoly& p, const TropPoly& q, const PolyComplex& cx,
                       const EqOptions& opts) {
  if (p.dim() != cx.dim() || q.dim() != cx.dim()) {
    throw DimensionMismatch("polynomial and complex dimensions differ");
  }
  const auto& cells = cx.cells();
  if (p.is_bottom() || q.is_bottom()) {
    if (p.is_bottom() && q.is_bottom()) return {};
    return unequal_at(p, q, cx.hull(0).relint, cells[0].id);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::size_t k = cx.cell_dim(i);
    if (k == 0 && opts.fast_paths) {
      const RatVec& x = cx.hull(i).relint;
      if (p.eval(x) != q.eval(x)) return unequal_at(p, q, x, cells[i].id);
      continue;
    }
    Frame f = frame_of(cx, i);
    auto rp = restrict_terms(p, f);
    auto rq = restrict_terms(q, f);
    if (k == 1 && opts.fast_paths) {
      std::optional<Rational> lo, hi;
      for (const auto& c : f.ineqs) {
        Rational b = c.rhs / Rational(c.normal[0]);
        if (c.normal[0].sign() > 0) {
          if (!hi || b < *hi) hi = b;
        } else {
          if (!lo || b > *lo) lo = b;
        }
      }
      Envelope ep(as_lines(rp), lo, hi), eq(as_lines(rq), lo, hi);
      if (ep == eq) continue;
      auto t = find_difference(ep, eq);
      if (!t) throw InternalError("envelopes differ but no separating point found");
      return unequal_at(p, q, to_ambient(f, RatVec{*t}), cells[i].id);
    }
    if (auto y = differ_by_regions(rp, rq, f)) return unequal_at(p, q, to_ambient(f, *y), cells[i].id);
  }
  return {};
}

DirectionSup direction_sup(const PolyComplex& cx, const IntVec& u) {
  if (u.size() != cx.dim()) throw DimensionMismatch("direction has wrong dimension");
  if (is_zero(u)) throw PreconditionError("direction must be nonzero");
  DirectionSup out;
  bool have = false;
  const auto& cells = cx.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    LpResult r = lp(u, cells[i].geometry, Sense::maximize);
    if (r.status == LpStatus::unbounded) {
      out.unbounded = true;
      out.point = r.point;
      out.ray = to_rational(clear_denominators(r.ray));
      out.cell = cells[i].id;
      return out;
    }
    if (r.status == LpStatus::optimal && (!have || r.value > out.sup)) {
      have = true;
      out.sup = r.value;
      out.point = r.point;
      out.cell = cells[i].id;
    }
  }
  return out;
}

bool unbounded_all_rational(const PolyComplex& cx) {
  // B = intersection over facets of the polar of the recession cone, i.e. of
  // cone(inequality normals) + span(equation normals). Decide B = {0} by
  // bounding every coordinate over B intersected with the unit box.
  const std::size_t n = cx.dim();
  std::size_t vars = n;
  std::vector<std::size_t> facets;
  for (std::size_t i = 0; i < cx.cells().size(); ++i) {
    if (!cx.is_facet(i)) continue;
    facets.push_back(i);
    vars += cx.cells()[i].geometry.inequalities().size() + cx.cells()[i].geometry.equations().size();
  }
  Polyhedron b(vars);
  std::size_t next = n;
  for (std::size_t f : facets) {
    const auto& g = cx.cells()[f].geometry;
    std::size_t first = next;
    for (std::size_t k = 0; k < g.inequalities().size(); ++k) {
      IntVec nonneg(vars);
      nonneg[first + k] = -1;
      b.add_inequality(nonneg, 0);
    }
    next += g.inequalities().size() + g.equations().size();
    for (std::size_t i = 0; i < n; ++i) {
      IntVec row(vars);
      row[i] = 1;
      std::size_t col = first;
      for (const auto& c : g.inequalities()) row[col++] = -c.normal[i];
      for (const auto& c : g.equations()) row[col++] = -c.normal[i];
      b.add_equation(row, 0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(vars);
    e[i] = 1;
    b.add_inequality(e, 1);
    b.add_inequality(Integer(-1) * e, 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec obj(vars);
    obj[i] = 1;
    for (Sense s : {Sense::maximize, Sense::minimize}) {
      LpResult r = lp(obj, b, s);
      if (r.status != LpStatus::optimal) throw InternalError("bounded-direction LP failed");
      if (!r.value.is_zero()) return false;
    }
  }
  return true;
}

WalkResult walk_unbounded_1d(const PolyComplex& cx, const IntVec& u) {
  if (u.size() != cx.dim()) throw DimensionMismatch("direction has wrong dimension");
  const auto& cells = cx.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cx.is_facet(i) && cx.cell_dim(i) != 1) throw PreconditionError("complex is not pure of dimension 1");
  }
  if (!balancing_check(cx).balanced) throw PreconditionError("complex is not balanced");

  WalkResult out;
  std::optional<std::size_t> edge;
  IntVec d;
  for (std::size_t i = 0; i < cells.size() && !edge; ++i) {
    if (!cx.is_facet(i)) continue;
    const IntVec& b = cx.hull(i).lattice.front();
    Integer s = dot(u, b);
    if (s.is_zero()) continue;
    edge = i;
    d = s.sign() > 0 ? b : Integer(-1) * b;
  }
  if (!edge) {
    out.constant = true;
    return out;
  }
  RatVec here = cx.hull(*edge).relint;
  for (std::size_t guard = 0; guard <= cells.size(); ++guard) {
    out.path.push_back(cells[*edge].id);
    const Polyhedron& g = cells[*edge].geometry;
    if (g.recedes(to_rational(d))) {
      out.edge = cells[*edge].id;
      out.start = here;
      out.direction = d;
      return out;
    }
    LpResult r = lp(u, g, Sense::maximize);
    if (r.status != LpStatus::optimal) throw InternalError("edge maximum not found");
    here = r.point;
    std::optional<std::size_t> vertex;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cx.cell_dim(i) == 0 && cx.hull(i).relint == here) vertex = i;
    }
    if (!vertex) throw InvalidInput("endpoint of '" + cells[*edge].id + "' is not a cell");
    std::optional<std::size_t> best;
    IntVec best_dir;
    Integer best_score;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if (!cx.is_facet(s) || !cells[s].geometry.contains(here)) continue;
      IntVec o = outgoing_vector(cx, s, *vertex);
      Integer score = dot(u, o);
      if (score.sign() > 0 && (!best || score > best_score)) {
        best = s;
        best_dir = o;
        best_score = score;
      }
    }
    if (!best) throw InternalError("balancing gave no increasing edge");
    edge = best;
    d = best_dir;
  }
  throw InternalError("walk did not terminate");
}

}  // namespace tropcong
