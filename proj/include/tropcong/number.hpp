#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tropcong {

// Arbitrary-precision integer. Values that fit in int64 are stored inline;
// larger values live in an immutable shared GMP integer.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}

  template <std::unsigned_integral T>
  Integer(T v) {
    if (static_cast<unsigned long long>(v) <= static_cast<unsigned long long>(INT64_MAX)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      *this = from_mpz(mpz_class(static_cast<unsigned long>(v)));
    }
  }

  explicit Integer(const mpz_class& v) { *this = from_mpz(v); }

  // Accepts an optional sign followed by decimal digits.
  static Integer parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  int sign() const noexcept;
  bool fits_int64() const noexcept { return !big_; }
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  double to_double() const;
  std::string str() const;
  std::size_t hash() const noexcept;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  // Truncating division and remainder, as for built-in integers.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

 private:
  static Integer from_mpz(const mpz_class& v);

  std::int64_t small_ = 0;
  std::shared_ptr<const mpz_class> big_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
// Largest r >= 0 with r*r <= a. Requires a >= 0.
Integer isqrt(const Integer& a);
// Extended gcd: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);
std::ostream& operator<<(std::ostream& os, const Integer& a);

// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : num_(v) {}
  Rational(Integer v) : num_(std::move(v)) {}
  Rational(Integer num, Integer den);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == Integer(1); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }
  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_ = 1;
};

Rational abs(const Rational& a);
Integer floor(const Rational& a);
Integer ceil(const Rational& a);
std::ostream& operator<<(std::ostream& os, const Rational& a);

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

RatVec to_rational(const IntVec& v);
Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
Rational dot(const RatVec& a, const RatVec& b);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Integer& s, const IntVec& a);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& a);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
// Scales by the lcm of denominators and returns the primitive integer vector.
IntVec clear_denominators(const RatVec& v);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

struct IntegerHash {
  std::size_t operator()(const Integer& a) const noexcept { return a.hash(); }
};

}  // namespace tropcong
