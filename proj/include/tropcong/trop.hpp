#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tropcong/number.hpp"
#include "tropcong/polytope.hpp"

namespace tropcong {

// Element of the max-plus semifield: a rational or -infinity ("bottom").
class TropNum {
 public:
  TropNum() = default;  // bottom
  TropNum(Rational v) : v_(std::move(v)) {}
  template <std::integral T>
  TropNum(T v) : v_(Rational(v)) {}
  static TropNum bottom() { return TropNum(); }

  bool is_bottom() const noexcept { return !v_.has_value(); }
  const Rational& value() const;  // requires !is_bottom()
  std::string str() const;

  friend TropNum trop_add(const TropNum& a, const TropNum& b);
  friend TropNum trop_mul(const TropNum& a, const TropNum& b);
  friend bool operator==(const TropNum&, const TropNum&) = default;
  // bottom compares below every finite value
  friend std::strong_ordering operator<=>(const TropNum& a, const TropNum& b);

 private:
  std::optional<Rational> v_;
};

using TermMap = std::map<IntVec, Rational>;

// Max-plus Laurent polynomial: exponent vector -> finite coefficient. The
// empty map is the constant -infinity.
class TropPoly {
 public:
  explicit TropPoly(std::size_t dim = 1);
  // Terms must have length dim.
  TropPoly(std::size_t dim, TermMap terms);
  static TropPoly constant(std::size_t dim, Rational c);
  static TropPoly monomial(Rational c, IntVec exponent);

  std::size_t dim() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_bottom() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // Adds a term, keeping the larger coefficient on collision.
  void add_term(const IntVec& exponent, const Rational& coeff);

  TropNum eval(const RatVec& x) const;
  // Text in the input grammar; parse_poly(str(), dim()) reproduces the terms.
  std::string str() const;

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  std::size_t dim_;
  TermMap terms_;
};

TropPoly parse_poly(std::string_view text, std::size_t n);

TropPoly trop_add(const TropPoly& p, const TropPoly& q);
TropPoly trop_mul(const TropPoly& p, const TropPoly& q);
// c (.) x^u (.) p
TropPoly times_monomial(const TropPoly& p, const Rational& c, const IntVec& u);

// Canonical representative of the function defined by a polynomial: only the
// terms whose lifted points are vertices of the upper hull of
// {(u, a_u)} are kept.
class TropFun {
 public:
  explicit TropFun(std::size_t dim = 1) : poly_(dim) {}
  static TropFun of(const TropPoly& p);

  std::size_t dim() const noexcept { return poly_.dim(); }
  const TermMap& terms() const noexcept { return poly_.terms(); }
  const TropPoly& poly() const noexcept { return poly_; }
  bool is_bottom() const noexcept { return poly_.is_bottom(); }
  TropNum eval(const RatVec& x) const { return poly_.eval(x); }
  std::string str() const { return poly_.str(); }

  friend bool operator==(const TropFun&, const TropFun&) = default;
  friend TropFun fun_times_monomial(const TropFun& f, const Rational& c, const IntVec& u);

 private:
  explicit TropFun(TropPoly p) : poly_(std::move(p)) {}
  TropPoly poly_;
};

TropFun canon_fun(const TropPoly& p);
bool fun_eq(const TropPoly& p, const TropPoly& q);

// Function-level operations; results are canonical.
TropFun fun_add(const TropFun& f, const TropFun& g);
TropFun fun_mul(const TropFun& f, const TropFun& g);
TropFun fun_pow(const TropFun& f, unsigned long g);
// A monomial factor maps canonical forms to canonical forms.
TropFun fun_times_monomial(const TropFun& f, const Rational& c, const IntVec& u);

LatticePolytope newton(const TropPoly& p);

// Whether the lifted point (u, a) lies in the lifted lower closure of the
// given terms: some convex combination of their exponents equals u with
// combined coefficient at least a. Exact LP.
bool lifted_dominated(const TermMap& others, const IntVec& u, const Rational& a);

}  // namespace tropcong
