#include "tropcong/line.hpp"

#include <algorithm>
#include <set>

#include "tropcong/error.hpp"

namespace tropcong::line {

IntVec direction(Ray r) {
  switch (r) {
    case Ray::rho1: return {-1, 0};
    case Ray::rho2: return {0, -1};
    case Ray::rho3: return {1, 1};
  }
  throw InternalError("bad ray");
}

namespace {

constexpr Ray kRays[] = {Ray::rho1, Ray::rho2, Ray::rho3};

IntVec xy(const Integer& x, const Integer& y) { return {x, y}; }

TropFun bottom() { return TropFun(2); }

}  // namespace

std::vector<IntVec> DeltaSet::points() const {
  std::vector<IntVec> out;
  for (Integer x = a; x <= c - b; x += 1)
    for (Integer y = b; x + y <= c; y += 1) out.push_back(xy(x, y));
  return out;
}

TropPoly DeltaSet::to_poly() const { return poly_of(points()); }

bool DeltaSet::contains(const IntVec& p) const { return p[0] >= a && p[1] >= b && p[0] + p[1] <= c; }

DeltaSet delta(const std::vector<IntVec>& points) {
  if (points.empty()) throw PreconditionError("delta of an empty set");
  DeltaSet d{points[0][0], points[0][1], points[0][0] + points[0][1]};
  for (const auto& p : points) {
    if (p.size() != 2) throw DimensionMismatch("delta needs points of Z^2");
    d.a = std::min(d.a, p[0]);
    d.b = std::min(d.b, p[1]);
    d.c = std::max(d.c, p[0] + p[1]);
  }
  return d;
}

TropPoly poly_of(const std::vector<IntVec>& points) {
  TropPoly p(2);
  for (const auto& u : points) p.add_term(u, Rational(0));
  return p;
}

Envelope restrict_ray(const TropPoly& p, Ray r) {
  if (p.dim() != 2) throw DimensionMismatch("the standard line lives in R^2");
  if (p.is_bottom()) throw PreconditionError("restriction of -inf");
  IntVec d = direction(r);
  std::vector<Line> lines;
  for (const auto& [u, a] : p.terms()) lines.push_back({Rational(dot(u, d)), a});
  return Envelope(std::move(lines), Rational(0), std::nullopt);
}

Slopes starting_slopes(const TropPoly& p) {
  return {restrict_ray(p, Ray::rho1).pieces().front().slope, restrict_ray(p, Ray::rho2).pieces().front().slope,
          restrict_ray(p, Ray::rho3).pieces().front().slope};
}

bool eq_on_L(const TropPoly& p, const TropPoly& q) {
  if (p.dim() != 2 || q.dim() != 2) throw DimensionMismatch("the standard line lives in R^2");
  if (p.is_bottom() || q.is_bottom()) return p.is_bottom() && q.is_bottom();
  for (Ray r : kRays) {
    if (!(restrict_ray(p, r) == restrict_ray(q, r))) return false;
  }
  return true;
}

TropPoly StdForm::to_poly() const {
  TropPoly p(2);
  p.add_term(xy(0, 0), Rational(0));
  for (const auto& [i, c] : a) p.add_term(xy(-i, 0), c);
  for (const auto& [j, c] : b) p.add_term(xy(0, -j), c);
  for (const auto& [k, v] : c) p.add_term(xy(k, 0), v);
  return p;
}

std::optional<StdForm> as_std_form(const TropPoly& p) {
  if (p.dim() != 2) return std::nullopt;
  auto zero = p.terms().find(xy(0, 0));
  if (zero == p.terms().end() || !zero->second.is_zero()) return std::nullopt;
  StdForm f;
  for (const auto& [u, coeff] : p.terms()) {
    if (u[0].is_zero() && u[1].is_zero()) continue;
    if (u[1].is_zero() && u[0].sign() < 0 && coeff.sign() < 0) {
      f.a[-u[0]] = coeff;
    } else if (u[0].is_zero() && u[1].sign() < 0 && coeff.sign() < 0) {
      f.b[-u[1]] = coeff;
    } else if (u[1].is_zero() && u[0].sign() > 0 && coeff.sign() <= 0) {
      f.c[u[0]] = coeff;
    } else {
      return std::nullopt;
    }
  }
  return f;
}

TropPoly prune_noneffective(const TropPoly& p) {
  if (!as_std_form(p)) throw PreconditionError("not of the standard form: " + p.str());
  TermMap terms = p.terms();
  std::vector<IntVec> keys;
  for (const auto& [u, c] : terms) {
    if (!is_zero(u)) keys.push_back(u);
  }
  for (const auto& u : keys) {
    TermMap without = terms;
    without.erase(u);
    if (eq_on_L(TropPoly(2, terms), TropPoly(2, without))) terms = std::move(without);
  }
  return TropPoly(2, std::move(terms));
}

namespace {

Integer integral(const Rational& r) {
  if (!r.is_integer()) throw InternalError("non-integral slope");
  return r.num();
}

}  // namespace

Decomposition decompose(const TropPoly& p) {
  if (p.dim() != 2) throw DimensionMismatch("the standard line lives in R^2");
  if (p.is_bottom()) throw PreconditionError("decompose of -inf");
  Decomposition d;
  d.a = p.eval({Rational(0), Rational(0)}).value();
  Slopes s = starting_slopes(p);
  d.u = -integral(s.m1);
  d.v = -integral(s.m2);
  TropPoly shifted = times_monomial(p, -d.a, xy(-d.u, -d.v));
  // Each ray envelope of the shifted function starts at 0 with slope 0 on
  // rho1 and rho2; its later pieces are the effective terms.
  auto pieces = [&](Ray r) { return restrict_ray(shifted, r).pieces(); };
  for (const auto& pc : pieces(Ray::rho1)) {
    if (!pc.slope.is_zero()) d.f0.a[integral(pc.slope)] = pc.intercept;
  }
  for (const auto& pc : pieces(Ray::rho2)) {
    if (!pc.slope.is_zero()) d.f0.b[integral(pc.slope)] = pc.intercept;
  }
  for (const auto& pc : pieces(Ray::rho3)) {
    if (!pc.slope.is_zero()) d.f0.c[integral(pc.slope)] = pc.intercept;
  }
  if (!as_std_form(d.f0.to_poly()) || !eq_on_L(times_monomial(d.f0.to_poly(), d.a, xy(d.u, d.v)), p)) {
    throw InternalError("decomposition does not reproduce " + p.str());
  }
  return d;
}

bool is_generator(const Integer& u, const Integer& v) {
  if (gcd(u, v) != Integer(1)) return false;
  return u.sign() > 0 || (u.is_zero() && v == Integer(1));
}

GeneratorPair gen_S(const Integer& u, const Integer& v) {
  if (!is_generator(u, v)) {
    throw PreconditionError("(" + u.str() + "," + v.str() + ") is not a generator direction");
  }
  return {u, v, poly_of({xy(0, 0), xy(u, v)}), delta({xy(0, 0), xy(u, v)}).to_poly()};
}

std::optional<TropFun> verify_step(const TropFun& current, const Step& s) {
  if (!is_generator(s.u, s.v) || s.power == 0 || s.multiplier.exponent.size() != 2 || s.context.dim() != 2) {
    return std::nullopt;
  }
  GeneratorPair gp = gen_S(s.u, s.v);
  const TropPoly& from = s.direction == Direction::forward ? gp.lhs : gp.rhs;
  const TropPoly& to = s.direction == Direction::forward ? gp.rhs : gp.lhs;
  auto apply = [&](const TropPoly& side) {
    TropFun f = fun_pow(canon_fun(side), s.power);
    return fun_add(fun_times_monomial(f, s.multiplier.coeff, s.multiplier.exponent), s.context);
  };
  if (apply(from) != current) return std::nullopt;
  return apply(to);
}

ReplayReport verify_derivation(const Derivation& d) {
  ReplayReport rep;
  TropFun cur = d.start;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    auto next = verify_step(cur, d.steps[i]);
    if (!next) {
      rep.failed_step = i;
      rep.message = "step " + std::to_string(i) + " does not apply to " + cur.str();
      return rep;
    }
    cur = std::move(*next);
  }
  if (cur != d.end) {
    rep.failed_step = d.steps.size();
    rep.message = "chain ends at " + cur.str() + ", declared end " + d.end.str();
    return rep;
  }
  rep.ok = true;
  return rep;
}

Derivation reversed(const Derivation& d) {
  Derivation r{d.end, d.start, {}};
  for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it) {
    Step s = *it;
    s.direction = s.direction == Direction::forward ? Direction::backward : Direction::forward;
    r.steps.push_back(std::move(s));
  }
  return r;
}

namespace {

// Builds a derivation while replaying each step.
class Chain {
 public:
  explicit Chain(TropFun start) : d_{start, start, {}} {}
  const TropFun& current() const { return d_.end; }
  void push(Step s) {
    auto next = verify_step(d_.end, s);
    if (!next) throw InternalError("constructed step does not apply to " + d_.end.str());
    d_.end = std::move(*next);
    d_.steps.push_back(std::move(s));
  }
  void append(const Derivation& d) {
    if (d.start != d_.end) throw InternalError("derivations do not connect");
    for (const auto& s : d.steps) push(s);
  }
  Derivation finish() && { return std::move(d_); }

 private:
  Derivation d_;
};

// c x^p1 (+) c x^p2 -> c f_Delta({p1, p2}), inside a context.
Step pair_step(const Rational& c, const IntVec& p1, const IntVec& p2, const TropFun& context) {
  IntVec diff = p1 - p2;
  Integer g = gcd(diff[0], diff[1]);
  if (g.is_zero()) throw InternalError("pair step on a single point");
  Step s;
  s.power = static_cast<unsigned long>(g.to_int64());
  s.u = diff[0] / g;
  s.v = diff[1] / g;
  s.multiplier = {c, p2};
  if (!is_generator(s.u, s.v)) {
    s.u = -s.u;
    s.v = -s.v;
    s.multiplier.exponent = p1;
  }
  s.context = context;
  return s;
}

// The derivation multiplied by c x^e and joined with an outer context.
Derivation embed(const Derivation& d, const Rational& c, const IntVec& e, const TropFun& outer) {
  auto lift = [&](const TropFun& f) { return fun_add(fun_times_monomial(f, c, e), outer); };
  Derivation out{lift(d.start), lift(d.end), {}};
  for (Step s : d.steps) {
    s.multiplier.coeff = s.multiplier.coeff + c;
    s.multiplier.exponent = s.multiplier.exponent + e;
    s.context = lift(s.context);
    out.steps.push_back(std::move(s));
  }
  return out;
}

std::vector<IntVec> dedupe(std::vector<IntVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Points with the same Delta as {(0,0),(u,v)} that form a standard-form
// binomial sum.
std::vector<IntVec> standard_points(const Integer& u, const Integer& v) {
  const Integer s = u + v;
  const IntVec o = xy(0, 0);
  if (u.sign() >= 0 && v.sign() >= 0) return dedupe({o, xy(s, 0)});
  if (s.sign() >= 0 && v.sign() <= 0) return dedupe({o, xy(0, v), xy(s, 0)});
  if (s.sign() <= 0 && u.sign() >= 0) return dedupe({o, xy(0, v)});
  if (u.sign() <= 0 && v.sign() <= 0) return dedupe({o, xy(u, 0), xy(0, v)});
  if (v.sign() >= 0 && s.sign() <= 0) return dedupe({o, xy(u, 0)});
  return dedupe({o, xy(u, 0), xy(s, 0)});
}

// From a function with value 0 at the origin and zero starting slopes on
// rho1, rho2 to a standard-form function.
Derivation to_standard(const TropFun& f) {
  Chain ch(f);
  const TermMap& t0 = f.terms();
  auto zero = t0.find(xy(0, 0));
  if (zero == t0.end() || !zero->second.is_zero()) {
    // x^k and y^l with coefficient 0 carry the zero slopes on rho2 and rho1;
    // Delta of the two contains the origin.
    std::optional<IntVec> px, py;
    for (const auto& [u, a] : t0) {
      if (!a.is_zero()) continue;
      if (u[1].is_zero() && u[0].sign() >= 0 && !px) px = u;
      if (u[0].is_zero() && u[1].sign() >= 0 && !py) py = u;
    }
    if (!px || !py) throw InternalError("no axis terms in " + f.str());
    ch.push(pair_step(Rational(0), *px, *py, f));
  }
  TermMap terms = ch.current().terms();
  terms.erase(xy(0, 0));
  TropFun done = canon_fun(TropPoly::constant(2, Rational(0)));
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const auto& [w, a] = *it;
    if (a.sign() > 0) throw InternalError("positive coefficient at the origin");
    TropPoly pending(2);
    for (auto jt = std::next(it); jt != terms.end(); ++jt) pending.add_term(jt->first, jt->second);
    TropFun outer = fun_add(done, canon_fun(pending));
    Derivation b = binom_standard_rewrite(w[0], w[1]);
    Derivation lifted = embed(b, a, xy(0, 0), outer);
    if (lifted.start != ch.current()) throw InternalError("binomial split does not match");
    ch.append(lifted);
    done = fun_add(done, fun_times_monomial(b.end, a, xy(0, 0)));
  }
  return std::move(ch).finish();
}

}  // namespace

Derivation delta_rewrite(const std::vector<IntVec>& points) {
  std::vector<IntVec> a = dedupe(points);
  DeltaSet d = delta(a);
  Chain ch(canon_fun(poly_of(a)));
  if (a.size() == 2) {
    ch.push(pair_step(Rational(0), a[0], a[1], bottom()));
  } else if (a.size() > 2) {
    auto pick = [&](auto pred) { return *std::find_if(a.begin(), a.end(), pred); };
    IntVec u1 = pick([&](const IntVec& p) { return p[0] == d.a; });
    IntVec u2 = pick([&](const IntVec& p) { return p[1] == d.b; });
    IntVec u3 = pick([&](const IntVec& p) { return p[0] + p[1] == d.c; });
    if (u1 != u2) ch.push(pair_step(Rational(0), u1, u2, ch.current()));
    IntVec corner = xy(d.a, d.b);
    if (corner != u3) ch.push(pair_step(Rational(0), corner, u3, ch.current()));
  }
  if (ch.current() != canon_fun(d.to_poly())) throw InternalError("delta rewrite missed its target");
  return std::move(ch).finish();
}

Derivation binom_standard_rewrite(const Integer& u, const Integer& v) {
  const IntVec o = xy(0, 0), w = xy(u, v);
  Chain ch(canon_fun(poly_of({o, w})));
  if (is_zero(w)) return std::move(ch).finish();
  std::vector<IntVec> target = standard_points(u, v);
  if (target != dedupe({o, w})) {
    ch.push(pair_step(Rational(0), w, o, bottom()));
    ch.append(reversed(delta_rewrite(target)));
  }
  if (ch.current() != canon_fun(poly_of(target))) throw InternalError("binomial rewrite missed its target");
  return std::move(ch).finish();
}

Derivation derive(const TropPoly& f, const TropPoly& g) {
  if (f.dim() != 2 || g.dim() != 2) throw DimensionMismatch("the standard line lives in R^2");
  if (!eq_on_L(f, g)) throw PreconditionError("the pair is not in E(L): " + f.str() + " vs " + g.str());
  TropFun cf = canon_fun(f), cg = canon_fun(g);
  if (cf == cg) return {cf, cg, {}};
  Decomposition d = decompose(f);
  IntVec shift = xy(d.u, d.v);
  Derivation df = to_standard(fun_times_monomial(cf, -d.a, xy(-d.u, -d.v)));
  Derivation dg = to_standard(fun_times_monomial(cg, -d.a, xy(-d.u, -d.v)));
  // Standard forms equal on L are equal.
  if (df.end != dg.end) throw InternalError("standard forms of an E(L) pair differ");
  Chain ch(cf);
  ch.append(embed(df, d.a, shift, bottom()));
  ch.append(reversed(embed(dg, d.a, shift, bottom())));
  if (ch.current() != cg) throw InternalError("derivation does not end at the target");
  return std::move(ch).finish();
}

Obstruction minimality_obstruction(const Integer& u, const Integer& v, const std::vector<GeneratorPair>& pool) {
  LatticePolytope segment = LatticePolytope::hull({xy(0, 0), xy(u, v)}, 2);
  Obstruction out;
  for (const auto& m : pool) {
    for (bool lhs : {true, false}) {
      if (auto t = fits_in_translate(newton(lhs ? m.lhs : m.rhs), segment)) {
        out.obstructed = false;
        out.member = m;
        out.lhs_side = lhs;
        out.translation = *t;
        return out;
      }
    }
  }
  return out;
}

std::vector<GeneratorPair> generators_in_box(std::int64_t bound) {
  std::vector<GeneratorPair> out;
  for (std::int64_t u = 0; u <= bound; ++u)
    for (std::int64_t v = -bound; v <= bound; ++v) {
      if (is_generator(u, v)) out.push_back(gen_S(u, v));
    }
  return out;
}

}  // namespace tropcong::line
