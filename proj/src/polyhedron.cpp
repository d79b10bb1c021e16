#include "tropcong/polyhedron.hpp"

#include <sstream>

#include "tropcong/error.hpp"
#include "tropcong/lattice.hpp"

namespace tropcong {

Polyhedron::Polyhedron(std::size_t dim, std::vector<Constraint> equations,
                       std::vector<Constraint> inequalities)
    : dim_(dim), eqs_(std::move(equations)), ineqs_(std::move(inequalities)) {
  for (const auto& c : eqs_) check(c.normal);
  for (const auto& c : ineqs_) check(c.normal);
}

void Polyhedron::check(const IntVec& normal) const {
  if (normal.size() != dim_) throw DimensionMismatch("constraint normal has wrong length");
  if (is_zero(normal)) throw InvalidInput("constraint with zero normal");
}

Polyhedron& Polyhedron::add_equation(IntVec normal, Rational rhs) {
  check(normal);
  eqs_.push_back({std::move(normal), std::move(rhs)});
  return *this;
}

Polyhedron& Polyhedron::add_inequality(IntVec normal, Rational rhs) {
  check(normal);
  ineqs_.push_back({std::move(normal), std::move(rhs)});
  return *this;
}

bool Polyhedron::contains(const RatVec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point has wrong dimension");
  for (const auto& c : eqs_) {
    if (dot(c.normal, x) != c.rhs) return false;
  }
  for (const auto& c : ineqs_) {
    if (dot(c.normal, x) > c.rhs) return false;
  }
  return true;
}

bool Polyhedron::recedes(const RatVec& r) const {
  if (r.size() != dim_) throw DimensionMismatch("direction has wrong dimension");
  for (const auto& c : eqs_) {
    if (!dot(c.normal, r).is_zero()) return false;
  }
  for (const auto& c : ineqs_) {
    if (dot(c.normal, r).sign() > 0) return false;
  }
  return true;
}

std::string Polyhedron::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  auto put = [&](const Constraint& c, const char* op) {
    if (!first) os << ", ";
    first = false;
    os << to_string(c.normal) << "." << "x " << op << " " << c.rhs;
  };
  for (const auto& c : eqs_) put(c, "=");
  for (const auto& c : ineqs_) put(c, "<=");
  os << "}";
  return os.str();
}

LpResult lp(const RatVec& objective, const Polyhedron& p, Sense sense) {
  const std::size_t n = p.dim();
  if (objective.size() != n) throw DimensionMismatch("objective has wrong dimension");
  const auto& eqs = p.equations();
  const auto& ineqs = p.inequalities();
  LpResult out;
  if (eqs.empty() && ineqs.empty()) {
    out.point.assign(n, Rational());
    if (is_zero(objective)) {
      out.status = LpStatus::optimal;
    } else {
      out.status = LpStatus::unbounded;
      out.ray = sense == Sense::maximize ? objective : Rational(-1) * objective;
    }
    return out;
  }
  const std::size_t m = eqs.size() + ineqs.size();
  const std::size_t cols = 2 * n + ineqs.size();
  std::vector<RatVec> a(m, RatVec(cols));
  RatVec b(m);
  std::size_t r = 0;
  auto fill = [&](const Constraint& c) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c.normal[j].is_zero()) continue;
      a[r][j] = c.normal[j];
      a[r][n + j] = -c.normal[j];
    }
    b[r] = c.rhs;
  };
  for (const auto& c : eqs) {
    fill(c);
    ++r;
  }
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    fill(ineqs[i]);
    a[r][2 * n + i] = 1;
    ++r;
  }
  RatVec c(cols);
  for (std::size_t j = 0; j < n; ++j) {
    Rational v = sense == Sense::maximize ? -objective[j] : objective[j];
    c[j] = v;
    c[n + j] = -v;
  }
  StandardLpResult s = solve_standard_form(a, b, c);
  out.status = s.status;
  if (s.status == LpStatus::infeasible) return out;
  out.point.assign(n, Rational());
  for (std::size_t j = 0; j < n; ++j) out.point[j] = s.z[j] - s.z[n + j];
  if (s.status == LpStatus::unbounded) {
    out.ray.assign(n, Rational());
    for (std::size_t j = 0; j < n; ++j) out.ray[j] = s.ray[j] - s.ray[n + j];
    return out;
  }
  out.value = dot(objective, out.point);
  return out;
}

bool is_feasible(const Polyhedron& p) {
  return lp(RatVec(p.dim()), p, Sense::minimize).status != LpStatus::infeasible;
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("intersecting polyhedra of different dimension");
  auto eqs = a.equations();
  auto ineqs = a.inequalities();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
  return Polyhedron(a.dim(), std::move(eqs), std::move(ineqs));
}

Polyhedron translate(const Polyhedron& p, const RatVec& a) {
  if (a.size() != p.dim()) throw DimensionMismatch("translation has wrong dimension");
  auto shift = [&](std::vector<Constraint> cs) {
    for (auto& c : cs) c.rhs += dot(c.normal, a);
    return cs;
  };
  return Polyhedron(p.dim(), shift(p.equations()), shift(p.inequalities()));
}

bool is_subset(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("comparing polyhedra of different dimension");
  if (!is_feasible(a)) return true;
  for (const auto& c : b.equations()) {
    for (Sense s : {Sense::maximize, Sense::minimize}) {
      LpResult r = lp(c.normal, a, s);
      if (r.status != LpStatus::optimal || r.value != c.rhs) return false;
    }
  }
  for (const auto& c : b.inequalities()) {
    LpResult r = lp(c.normal, a, Sense::maximize);
    if (r.status != LpStatus::optimal || r.value > c.rhs) return false;
  }
  return true;
}

bool same_set(const Polyhedron& a, const Polyhedron& b) { return is_subset(a, b) && is_subset(b, a); }

namespace {

// Maximizes t subject to the equations, a.x + t <= c for the inequalities
// not flagged in `skip` (flagged ones become equations), and t <= 1.
LpResult max_slack(const Polyhedron& p, const std::vector<bool>& as_equation) {
  const std::size_t n = p.dim();
  Polyhedron q(n + 1);
  auto lift = [&](const IntVec& v, int last) {
    IntVec w = v;
    w.push_back(last);
    return w;
  };
  for (const auto& c : p.equations()) q.add_equation(lift(c.normal, 0), c.rhs);
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    const auto& c = p.inequalities()[i];
    if (as_equation[i]) {
      q.add_equation(lift(c.normal, 0), c.rhs);
    } else {
      q.add_inequality(lift(c.normal, 1), c.rhs);
    }
  }
  IntVec et(n + 1);
  et[n] = 1;
  q.add_inequality(et, 1);
  RatVec obj(n + 1);
  obj[n] = 1;
  return lp(obj, q, Sense::maximize);
}

}  // namespace

AffineHull affine_hull(const Polyhedron& p) {
  const std::size_t n = p.dim();
  const auto& ineqs = p.inequalities();
  AffineHull h;
  h.implicit.assign(ineqs.size(), false);
  LpResult r = max_slack(p, h.implicit);
  if (r.status != LpStatus::optimal || r.value.sign() < 0) return h;
  h.empty = false;
  RatVec x(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
  if (r.value.is_zero()) {
    bool any = false;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      if (dot(ineqs[i].normal, x) != ineqs[i].rhs) continue;
      LpResult m = lp(ineqs[i].normal, p, Sense::minimize);
      if (m.status == LpStatus::optimal && m.value == ineqs[i].rhs) {
        h.implicit[i] = true;
        any = true;
      }
    }
    if (!any) throw InternalError("no implicit equality found on a flat polyhedron");
    r = max_slack(p, h.implicit);
    if (r.status != LpStatus::optimal || r.value.sign() <= 0) {
      throw InternalError("relative interior point not found");
    }
    x.assign(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
  }
  h.relint = x;

  std::vector<Constraint> all = p.equations();
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (h.implicit[i]) all.push_back(ineqs[i]);
  }
  std::vector<IntVec> normals;
  for (const auto& c : all) {
    normals.push_back(c.normal);
    if (rank(normals) < normals.size()) {
      normals.pop_back();
    } else {
      h.equations.push_back(c);
    }
  }
  h.dim = n - normals.size();
  h.lattice = normals.empty() ? integer_kernel({}, n) : integer_kernel(normals, n);
  return h;
}

}  // namespace tropcong
