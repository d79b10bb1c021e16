#include "tropcong/reduce.hpp"

#include "tropcong/error.hpp"

namespace tropcong {

namespace {

// Columns of the returned matrix are the given vectors.
IntMatrix columns(const std::vector<IntVec>& vs, std::size_t n) {
  return IntMatrix::from_rows(vs, n).transpose();
}

IntVec pull_exponent(const SubspaceChart& c, const IntVec& u) {
  IntVec out;
  out.reserve(c.d);
  for (const auto& q : c.basis) out.push_back(dot(u, q));
  return out;
}

// sum_i a_i dual_i
IntVec push_normal(const SubspaceChart& c, const IntVec& a) {
  IntVec out(c.n, Integer(0));
  for (std::size_t i = 0; i < c.d; ++i) out = out + a[i] * c.dual[i];
  return out;
}

Polyhedron pull_polyhedron(const SubspaceChart& c, const Polyhedron& p) {
  std::vector<Constraint> eqs, ineqs;
  for (const auto& e : p.equations()) {
    IntVec nrm = pull_exponent(c, e.normal);
    if (is_zero(nrm)) {
      if (e.rhs.sign() != 0) throw InternalError("cell inside W has an inconsistent equation");
      continue;
    }
    eqs.push_back({nrm, e.rhs});
  }
  for (const auto& e : p.inequalities()) {
    IntVec nrm = pull_exponent(c, e.normal);
    if (is_zero(nrm)) {
      if (e.rhs.sign() < 0) throw InternalError("cell inside W has an inconsistent inequality");
      continue;
    }
    ineqs.push_back({nrm, e.rhs});
  }
  return Polyhedron(c.d, eqs, ineqs);
}

Polyhedron push_polyhedron(const SubspaceChart& c, const Polyhedron& p) {
  std::vector<Constraint> eqs, ineqs;
  for (const auto& k : c.perp) eqs.push_back({k, Rational(0)});
  for (const auto& e : p.equations()) eqs.push_back({push_normal(c, e.normal), e.rhs});
  for (const auto& e : p.inequalities()) ineqs.push_back({push_normal(c, e.normal), e.rhs});
  return Polyhedron(c.n, eqs, ineqs);
}

Polyhedron subspace_polyhedron(const SubspaceChart& c) {
  std::vector<Constraint> eqs;
  for (const auto& k : c.perp) eqs.push_back({k, Rational(0)});
  return Polyhedron(c.n, eqs, {});
}

}  // namespace

SubspaceChart make_chart(const std::vector<IntVec>& spanning, std::size_t n) {
  std::vector<RatVec> r;
  for (const auto& v : spanning) r.push_back(to_rational(v));
  return make_chart(r, n);
}

SubspaceChart make_chart(const std::vector<RatVec>& spanning, std::size_t n) {
  if (n == 0) throw PreconditionError("ambient dimension must be positive");
  SubspaceChart c;
  c.n = n;
  c.basis = saturate(spanning, n);
  c.d = c.basis.size();
  std::vector<IntVec> full = extend_basis(c.basis, n);
  c.completion.assign(full.begin() + static_cast<std::ptrdiff_t>(c.d), full.end());
  IntMatrix a = columns(full, n);
  if (abs(determinant(a)) != Integer(1)) throw InternalError("chart completion is not unimodular");
  IntMatrix inv = unimodular_inverse(a);
  for (std::size_t i = 0; i < c.d; ++i) c.dual.push_back(inv.row(i));

  c.perp = integer_kernel(c.basis, n);
  std::vector<IntVec> pfull = extend_basis(c.perp, n);
  c.complement.assign(pfull.begin() + static_cast<std::ptrdiff_t>(c.perp.size()), pfull.end());
  return c;
}

bool SubspaceChart::contains(const RatVec& x) const {
  if (x.size() != n) throw DimensionMismatch("point has wrong dimension");
  for (const auto& k : perp)
    if (dot(k, x).sign() != 0) return false;
  return true;
}

RatVec SubspaceChart::coordinates(const RatVec& x) const {
  if (!contains(x)) throw PreconditionError("point is not in the subspace");
  RatVec y;
  for (const auto& u : dual) y.push_back(dot(u, x));
  return y;
}

RatVec SubspaceChart::embed(const RatVec& y) const {
  if (y.size() != d) throw DimensionMismatch("chart coordinates have wrong dimension");
  RatVec x(n, Rational(0));
  for (std::size_t j = 0; j < d; ++j) x = x + y[j] * to_rational(basis[j]);
  return x;
}

TropPoly pullback(const SubspaceChart& chart, const TropPoly& p) {
  if (p.dim() != chart.n) throw DimensionMismatch("polynomial has wrong dimension");
  if (chart.d == 0) throw PreconditionError("pullback to the zero subspace");
  TropPoly out(chart.d);
  for (const auto& [u, a] : p.terms()) out.add_term(pull_exponent(chart, u), a);
  return out;
}

std::vector<PolyPair> pushforward_generators(const SubspaceChart& chart, const std::vector<PolyPair>& pairs) {
  std::vector<PolyPair> out;
  for (const auto& [f, g] : pairs) out.emplace_back(pullback(chart, f), pullback(chart, g));
  return out;
}

std::vector<PolyPair> subspace_congruence_generators(const SubspaceChart& chart) {
  std::vector<PolyPair> out;
  for (const auto& k : chart.perp)
    out.emplace_back(TropPoly::monomial(Rational(0), k), TropPoly::constant(chart.n, Rational(0)));
  return out;
}

TropPoly normal_form_mod_subspace(const TropPoly& p, const SubspaceChart& chart) {
  if (p.dim() != chart.n) throw DimensionMismatch("polynomial has wrong dimension");
  std::vector<IntVec> full = chart.perp;
  full.insert(full.end(), chart.complement.begin(), chart.complement.end());
  IntMatrix inv = unimodular_inverse(columns(full, chart.n));
  const std::size_t k = chart.perp.size();
  TropPoly out(chart.n);
  for (const auto& [u, a] : p.terms()) {
    IntVec coords = inv * u;
    IntVec h(chart.n, Integer(0));
    for (std::size_t j = k; j < chart.n; ++j) h = h + coords[j] * full[j];
    out.add_term(h, a);
  }
  return out;
}

TropPoly translate_poly(const TropPoly& p, const RatVec& a) {
  if (a.size() != p.dim()) throw DimensionMismatch("translation has wrong dimension");
  TropPoly out(p.dim());
  for (const auto& [u, c] : p.terms()) out.add_term(u, c + dot(u, a));
  return out;
}

PolyComplex subspace_complex(const SubspaceChart& chart) {
  return PolyComplex(chart.n, {{"W", subspace_polyhedron(chart), Integer(1)}}, {"W"});
}

PolyComplex reduce_complex(const PolyComplex& cx, const SubspaceChart& chart) {
  if (cx.dim() != chart.n) throw DimensionMismatch("complex has wrong dimension");
  if (chart.d == 0) throw PreconditionError("reduction to the zero subspace");
  Polyhedron w = subspace_polyhedron(chart);
  std::vector<Cell> cells;
  for (const auto& c : cx.cells()) {
    if (!is_subset(c.geometry, w)) throw PreconditionError("cell " + c.id + " is not contained in W");
    cells.push_back({c.id, pull_polyhedron(chart, c.geometry), c.weight});
  }
  return PolyComplex(chart.d, std::move(cells), cx.facet_ids());
}

PolyComplex embed_complex(const PolyComplex& cx, const SubspaceChart& chart) {
  if (cx.dim() != chart.d) throw DimensionMismatch("complex has wrong dimension");
  std::vector<Cell> cells;
  for (const auto& c : cx.cells()) cells.push_back({c.id, push_polyhedron(chart, c.geometry), c.weight});
  return PolyComplex(chart.n, std::move(cells), cx.facet_ids());
}

}  // namespace tropcong
