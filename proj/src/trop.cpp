#include "tropcong/trop.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tropcong/error.hpp"
#include "tropcong/simplex.hpp"

namespace tropcong {

const Rational& TropNum::value() const {
  if (!v_) throw PreconditionError("value of -inf");
  return *v_;
}

std::string TropNum::str() const { return v_ ? v_->str() : "-inf"; }

TropNum trop_add(const TropNum& a, const TropNum& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return *a.v_ < *b.v_ ? b : a;
}

TropNum trop_mul(const TropNum& a, const TropNum& b) {
  if (a.is_bottom() || b.is_bottom()) return TropNum();
  return TropNum(*a.v_ + *b.v_);
}

std::strong_ordering operator<=>(const TropNum& a, const TropNum& b) {
  if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
  return *a.v_ <=> *b.v_;
}

TropPoly::TropPoly(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("polynomial dimension must be positive");
}

TropPoly::TropPoly(std::size_t dim, TermMap terms) : TropPoly(dim) {
  for (const auto& [u, a] : terms) {
    if (u.size() != dim) throw DimensionMismatch("exponent has wrong arity");
  }
  terms_ = std::move(terms);
}

TropPoly TropPoly::constant(std::size_t dim, Rational c) {
  TropPoly p(dim);
  p.terms_.emplace(IntVec(dim), std::move(c));
  return p;
}

TropPoly TropPoly::monomial(Rational c, IntVec exponent) {
  TropPoly p(exponent.size());
  p.terms_.emplace(std::move(exponent), std::move(c));
  return p;
}

void TropPoly::add_term(const IntVec& exponent, const Rational& coeff) {
  if (exponent.size() != dim_) throw DimensionMismatch("exponent has wrong arity");
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted && it->second < coeff) it->second = coeff;
}

TropNum TropPoly::eval(const RatVec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("evaluation point has wrong dimension");
  TropNum best;
  for (const auto& [u, a] : terms_) {
    Rational v = a + dot(u, x);
    if (best.is_bottom() || best.value() < v) best = TropNum(std::move(v));
  }
  return best;
}

namespace {

std::string var_name(std::size_t i, std::size_t n) {
  if (n == 1) return "x";
  if (n == 2) return i == 0 ? "x" : "y";
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string TropPoly::str() const {
  if (terms_.empty()) return "-inf";
  std::string out;
  for (const auto& [u, a] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i, dim_);
      if (u[i] != Integer(1)) mono += "^" + u[i].str();
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a.is_zero()) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : s_(text), n_(n), poly_(n) {}

  TropPoly run() {
    skip();
    if (at_end()) fail("empty polynomial");
    term();
    for (skip(); !at_end(); skip()) {
      expect('+');
      term();
    }
    return poly_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Integer signed_integer() {
    skip();
    std::string sign;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = "-";
      ++pos_;
      skip();
    }
    return Integer::parse(sign + digits());
  }

  // Returns nullopt for -inf.
  std::optional<Rational> coeff() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') {
      ++pos_;
      skip();
      if (s_.substr(pos_, 3) == "inf") {
        if (s_[start] != '-') fail("expected -inf");
        pos_ += 3;
        return std::nullopt;
      }
      pos_ = start;
    }
    Integer num = signed_integer();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      std::size_t dpos = pos_;
      Integer den = Integer::parse(digits());
      if (den.is_zero()) {
        pos_ = dpos;
        fail("zero denominator");
      }
      return Rational(num, den);
    }
    return Rational(num);
  }

  bool at_var() const {
    char c = peek();
    return c == 'x' || c == 'y';
  }

  std::size_t var() {
    std::size_t start = pos_;
    char c = s_[pos_++];
    std::size_t idx;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (c != 'x') {
        pos_ = start;
        fail("unknown variable");
      }
      std::string d = digits();
      if (d.size() > 9) {
        pos_ = start;
        fail("variable index too large");
      }
      idx = std::stoul(d);
      if (idx == 0) {
        pos_ = start;
        fail("variable indices start at 1");
      }
    } else if (c == 'x') {
      idx = 1;
      if (n_ > 2) {
        pos_ = start;
        fail("use x1..x" + std::to_string(n_) + " for " + std::to_string(n_) + " variables");
      }
    } else {
      idx = 2;
      if (n_ != 2) {
        pos_ = start;
        fail("variable y requires exactly 2 variables");
      }
    }
    if (idx > n_) {
      pos_ = start;
      fail("exponent arity mismatch: variable index " + std::to_string(idx) + " exceeds " +
           std::to_string(n_));
    }
    return idx - 1;
  }

  IntVec monom() {
    IntVec u(n_);
    for (;;) {
      skip();
      if (!at_var()) fail("expected a variable");
      std::size_t i = var();
      skip();
      Integer e(1);
      if (peek() == '^') {
        ++pos_;
        e = signed_integer();
      }
      u[i] += e;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return u;
  }

  void term() {
    skip();
    if (at_var()) {
      poly_.add_term(monom(), Rational(0));
      return;
    }
    std::optional<Rational> c = coeff();
    skip();
    IntVec u(n_);
    if (peek() == '*') {
      ++pos_;
      u = monom();
    }
    if (c) poly_.add_term(u, *c);
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
  TropPoly poly_;
};

}  // namespace

TropPoly parse_poly(std::string_view text, std::size_t n) {
  if (n == 0) throw PreconditionError("polynomial dimension must be positive");
  return PolyParser(text, n).run();
}

TropPoly trop_add(const TropPoly& p, const TropPoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("adding polynomials of different dimension");
  TropPoly r = p;
  for (const auto& [u, a] : q.terms()) r.add_term(u, a);
  return r;
}

TropPoly trop_mul(const TropPoly& p, const TropPoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("multiplying polynomials of different dimension");
  TropPoly r(p.dim());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add_term(u + v, a + b);
  return r;
}

TropPoly times_monomial(const TropPoly& p, const Rational& c, const IntVec& u) {
  if (u.size() != p.dim()) throw DimensionMismatch("monomial has wrong arity");
  TermMap t;
  for (const auto& [v, a] : p.terms()) t.emplace_hint(t.end(), v + u, a + c);
  return TropPoly(p.dim(), std::move(t));
}

bool lifted_dominated(const TermMap& others, const IntVec& u, const Rational& a) {
  if (others.empty()) return false;
  const std::size_t n = u.size();
  const std::size_t k = others.size();
  // columns: lambda_v (k), surplus s; rows: exponents (n), sum lambda = 1,
  // sum lambda a_v - s = a
  std::vector<RatVec> rows(n + 2, RatVec(k + 1));
  RatVec rhs(n + 2);
  std::size_t j = 0;
  for (const auto& [v, b] : others) {
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = v[i];
    rows[n][j] = 1;
    rows[n + 1][j] = b;
    ++j;
  }
  rows[n + 1][k] = -1;
  for (std::size_t i = 0; i < n; ++i) rhs[i] = u[i];
  rhs[n] = 1;
  rhs[n + 1] = a;
  return solve_standard_form(rows, rhs, {}).status != LpStatus::infeasible;
}

namespace {

Rational cross_lift(const IntVec& ou, const Rational& oa, const IntVec& pu, const Rational& pa,
                    const IntVec& qu, const Rational& qa) {
  Rational dx1(pu[0] - ou[0]), dx2(qu[0] - ou[0]);
  return dx1 * (qa - oa) - (pa - oa) * dx2;
}

TermMap upper_hull_1d(const TermMap& terms) {
  std::vector<std::pair<IntVec, Rational>> h;
  for (const auto& t : terms) {
    while (h.size() >= 2 &&
           cross_lift(h[h.size() - 2].first, h[h.size() - 2].second, h.back().first,
                      h.back().second, t.first, t.second)
                   .sign() >= 0) {
      h.pop_back();
    }
    h.push_back(t);
  }
  return TermMap(h.begin(), h.end());
}

}  // namespace

TropFun TropFun::of(const TropPoly& p) {
  const TermMap& terms = p.terms();
  if (terms.size() <= 1) return TropFun(p);
  const std::size_t n = p.dim();
  if (n == 1) return TropFun(TropPoly(n, upper_hull_1d(terms)));

  std::vector<IntVec> exps;
  exps.reserve(terms.size());
  for (const auto& t : terms) exps.push_back(t.first);
  const LatticePolytope newt = LatticePolytope::hull(exps, n);
  std::set<IntVec> vertex_set(newt.vertices().begin(), newt.vertices().end());

  // Terms over Newton vertices are always lifted vertices. A non-vertex term
  // is dominated as soon as its coefficient is at most every vertex
  // coefficient (it is a convex combination of vertices).
  Rational min_vertex_coeff = terms.at(*vertex_set.begin());
  for (const auto& v : vertex_set) min_vertex_coeff = std::min(min_vertex_coeff, terms.at(v));

  TermMap survivors = terms;
  for (const auto& [u, a] : terms) {
    if (vertex_set.count(u)) continue;
    if (a <= min_vertex_coeff) {
      survivors.erase(u);
      continue;
    }
    auto node = survivors.extract(u);
    if (!lifted_dominated(survivors, u, a)) survivors.insert(std::move(node));
  }
  return TropFun(TropPoly(n, std::move(survivors)));
}

TropFun canon_fun(const TropPoly& p) { return TropFun::of(p); }

bool fun_eq(const TropPoly& p, const TropPoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("comparing polynomials of different dimension");
  return canon_fun(p) == canon_fun(q);
}

TropFun fun_add(const TropFun& f, const TropFun& g) { return canon_fun(trop_add(f.poly(), g.poly())); }

TropFun fun_mul(const TropFun& f, const TropFun& g) { return canon_fun(trop_mul(f.poly(), g.poly())); }

TropFun fun_pow(const TropFun& f, unsigned long g) {
  if (g == 0) return canon_fun(TropPoly::constant(f.dim(), 0));
  TropFun result = f;
  TropFun base = f;
  --g;
  while (g > 0) {
    if (g & 1) result = fun_mul(result, base);
    g >>= 1;
    if (g) base = fun_mul(base, base);
  }
  return result;
}

TropFun fun_times_monomial(const TropFun& f, const Rational& c, const IntVec& u) {
  return TropFun(times_monomial(f.poly(), c, u));
}

LatticePolytope newton(const TropPoly& p) {
  std::vector<IntVec> exps;
  for (const auto& t : p.terms()) exps.push_back(t.first);
  return LatticePolytope::hull(std::move(exps), p.dim());
}

}  // namespace tropcong
