#include "tropcong/number.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace tropcong {

namespace {

bool valid_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

}  // namespace

Integer Integer::from_mpz(const mpz_class& v) {
  Integer r;
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    r.small_ = mpz_get_si(v.get_mpz_t());
  } else {
    r.big_ = std::make_shared<const mpz_class>(v);
  }
  return r;
}

Integer Integer::parse(std::string_view text) {
  if (!valid_decimal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string_view digits = text.front() == '+' ? text.substr(1) : text;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec == std::errc() && ptr == digits.data() + digits.size()) return Integer(v);
  return from_mpz(mpz_class(std::string(digits), 10));
}

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return small_;
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  return mpz_class(static_cast<long>(small_));
}

double Integer::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(small_);
}

std::string Integer::str() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  std::size_t h = mpz_size(big_->get_mpz_t());
  for (std::size_t i = 0; i < mpz_size(big_->get_mpz_t()); ++i) {
    h = h * 1000003u ^ mpz_getlimbn(big_->get_mpz_t(), i);
  }
  return h ^ static_cast<std::size_t>(mpz_sgn(big_->get_mpz_t()));
}

Integer Integer::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Integer(-small_);
  return from_mpz(-to_mpz());
}

Integer& Integer::operator+=(const Integer& o) { return *this = *this + o; }
Integer& Integer::operator-=(const Integer& o) { return *this = *this - o; }
Integer& Integer::operator*=(const Integer& o) { return *this = *this * o; }

Integer operator+(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_mpz(a.to_mpz() + b.to_mpz());
}

Integer operator-(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_mpz(a.to_mpz() - b.to_mpz());
}

Integer operator*(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_mpz(a.to_mpz() * b.to_mpz());
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer::from_mpz(q);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer::from_mpz(r);
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c;
  if (a.big_ && b.big_) {
    c = mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t());
  } else if (a.big_) {
    c = mpz_cmp_si(a.big_->get_mpz_t(), static_cast<long>(b.small_));
  } else {
    c = -mpz_cmp_si(b.big_->get_mpz_t(), static_cast<long>(a.small_));
  }
  return c <=> 0;
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.fits_int64() && b.fits_int64()) {
    std::uint64_t g = binary_gcd(magnitude(a.to_int64()), magnitude(b.to_int64()));
    if (g <= static_cast<std::uint64_t>(INT64_MAX)) return Integer(static_cast<std::int64_t>(g));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer isqrt(const Integer& a) {
  if (a.sign() < 0) throw std::domain_error("isqrt of a negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b;
  Integer old_s = 1, cur_s = 0;
  Integer old_t = 0, cur_t = 1;
  while (!r.is_zero()) {
    Integer q = floor_div(old_r, r);
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Integer g = gcd(num, den);
  if (g != Integer(1) && !g.is_zero()) {
    num = num / g;
    den = den / g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  std::string_view d = text.substr(slash + 1);
  if (!d.empty() && (d.front() == '-' || d.front() == '+')) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Integer den = Integer::parse(d);
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(Integer::parse(text.substr(0, slash)), den);
}

double Rational::to_double() const {
  if (num_.fits_int64() && den_.fits_int64()) return num_.to_double() / den_.to_double();
  return mpq_class(num_.to_mpz(), den_.to_mpz()).get_d();
}

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

Rational operator+(const Rational& a, const Rational& b) {
  const Integer one(1);
  if (a.den_ == one && b.den_ == one) return Rational(a.num_ + b.num_, one, Rational::Reduced{});
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  Integer g = gcd(a.den_, b.den_);
  if (g == one) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Rational::Reduced{});
  }
  Integer bg = b.den_ / g;
  Integer t = a.num_ * bg + b.num_ * (a.den_ / g);
  Integer g2 = gcd(t, g);
  if (g2 == one) return Rational(std::move(t), a.den_ * bg, Rational::Reduced{});
  return Rational(t / g2, a.den_ / g2 * bg, Rational::Reduced{});
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const Integer one(1);
  if (a.den_ == one && b.den_ == one) return Rational(a.num_ * b.num_, one, Rational::Reduced{});
  if (a.num_.is_zero() || b.num_.is_zero()) return Rational();
  Integer g1 = gcd(a.num_, b.den_);
  Integer g2 = gcd(b.num_, a.den_);
  Integer n1 = g1 == one ? a.num_ : a.num_ / g1;
  Integer d2 = g1 == one ? b.den_ : b.den_ / g1;
  Integer n2 = g2 == one ? b.num_ : b.num_ / g2;
  Integer d1 = g2 == one ? a.den_ : a.den_ / g2;
  return Rational(n1 * n2, d1 * d2, Rational::Reduced{});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  Rational inv = b.sign() < 0 ? Rational(-b.den_, -b.num_, Rational::Reduced{})
                              : Rational(b.den_, b.num_, Rational::Reduced{});
  return a * inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
Integer floor(const Rational& a) { return floor_div(a.num(), a.den()); }
Integer ceil(const Rational& a) { return ceil_div(a.num(), a.den()); }
std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) s += Rational(a[i]) * b[i];
  }
  return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator*(const Integer& s, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rational& s, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

IntVec primitive(const IntVec& v) {
  Integer g;
  for (const auto& x : v) g = gcd(g, x);
  if (g.is_zero() || g == Integer(1)) return v;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec clear_denominators(const RatVec& v) {
  Integer l(1);
  for (const auto& x : v) l = lcm(l, x.den());
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].num() * (l / v[i].den());
  return primitive(r);
}

namespace {
template <class V>
std::string join(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}
}  // namespace

std::string to_string(const IntVec& v) { return join(v); }
std::string to_string(const RatVec& v) { return join(v); }

}  // namespace tropcong
