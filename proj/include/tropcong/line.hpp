#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropcong/envelope.hpp"
#include "tropcong/number.hpp"
#include "tropcong/trop.hpp"

// Congruence of the standard tropical line L in R^2 (rays rho1 = R>=0 (-1,0),
// rho2 = R>=0 (0,-1), rho3 = R>=0 (1,1), all of weight 1).
namespace tropcong::line {

enum class Ray { rho1, rho2, rho3 };
IntVec direction(Ray r);

// Lattice triangle {(x,y) : x >= a, y >= b, x + y <= c}.
struct DeltaSet {
  Integer a, b, c;
  std::vector<IntVec> points() const;  // lexicographic
  TropPoly to_poly() const;            // all coefficients 0
  bool contains(const IntVec& p) const;
  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};

DeltaSet delta(const std::vector<IntVec>& points);
TropPoly poly_of(const std::vector<IntVec>& points);  // f_A, coefficients 0

// t -> p(t d) on [0, inf). p must not be bottom.
Envelope restrict_ray(const TropPoly& p, Ray r);

struct Slopes {
  Rational m1, m2, m3;
};
Slopes starting_slopes(const TropPoly& p);

bool eq_on_L(const TropPoly& p, const TropPoly& q);

// 0 (+) sum a_i x^-i (+) sum b_j y^-j (+) sum c_k x^k with a_i, b_j < 0 and
// c_k <= 0; keys are the positive integers i, j, k.
struct StdForm {
  std::map<Integer, Rational> a, b, c;
  TropPoly to_poly() const;
  friend bool operator==(const StdForm&, const StdForm&) = default;
};

// The polynomial has the shape of a standard form, term by term.
std::optional<StdForm> as_std_form(const TropPoly& p);

// Drops the terms of a standard form that do not change any ray envelope.
TropPoly prune_noneffective(const TropPoly& p);

struct Decomposition {
  Rational a;
  Integer u, v;
  StdForm f0;  // effective on L
};

// f = a x^u y^v f0 on L, with u = -(slope on rho1), v = -(slope on rho2).
Decomposition decompose(const TropPoly& p);

struct GeneratorPair {
  Integer u, v;
  TropPoly lhs;  // 0 (+) x^u y^v
  TropPoly rhs;  // f over Delta({(0,0),(u,v)})
};

bool is_generator(const Integer& u, const Integer& v);
GeneratorPair gen_S(const Integer& u, const Integer& v);

enum class Direction { forward, backward };

struct Monomial {
  Rational coeff;
  IntVec exponent;  // length 2
};

// Replaces multiplier (.) side^power (+) context by the other side.
struct Step {
  Integer u, v;
  unsigned long power = 1;
  Monomial multiplier;
  TropFun context{2};
  Direction direction = Direction::forward;
};

struct Derivation {
  TropFun start{2}, end{2};
  std::vector<Step> steps;
};

// The function after the step, or nullopt if the step does not apply to
// `current` (or names an invalid generator).
std::optional<TropFun> verify_step(const TropFun& current, const Step& s);

struct ReplayReport {
  bool ok = false;
  std::size_t failed_step = 0;  // index of the first bad step when !ok
  std::string message;
};
ReplayReport verify_derivation(const Derivation& d);

// Derivation run backwards: steps reversed with flipped directions.
Derivation reversed(const Derivation& d);

Derivation delta_rewrite(const std::vector<IntVec>& points);
Derivation binom_standard_rewrite(const Integer& u, const Integer& v);
// Throws PreconditionError if the pair is not equal on L.
Derivation derive(const TropPoly& f, const TropPoly& g);

struct Obstruction {
  bool obstructed = true;
  // counterexample when !obstructed
  std::optional<GeneratorPair> member;
  bool lhs_side = true;
  IntVec translation;
};

Obstruction minimality_obstruction(const Integer& u, const Integer& v,
                                   const std::vector<GeneratorPair>& pool);

// All generators with |u|, |v| <= bound.
std::vector<GeneratorPair> generators_in_box(std::int64_t bound);

}  // namespace tropcong::line
