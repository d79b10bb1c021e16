#pragma once

#include <optional>
#include <vector>

#include "tropcong/number.hpp"

namespace tropcong {

struct Line {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& t) const { return slope * t + intercept; }
};

// One affine piece of an envelope, valid from `start` (nullopt = -infinity)
// up to the start of the next piece.
struct EnvelopePiece {
  std::optional<Rational> start;
  Rational slope;
  Rational intercept;
  friend bool operator==(const EnvelopePiece&, const EnvelopePiece&) = default;
};

// Upper envelope of finitely many lines over an interval. Canonical: pieces
// have positive length and consecutive pieces differ, so two envelopes over the
// same interval describe the same function iff their piece lists are equal.
class Envelope {
 public:
  // Requires at least one line and lo < hi when both are finite.
  Envelope(std::vector<Line> lines, std::optional<Rational> lo, std::optional<Rational> hi);

  const std::optional<Rational>& lo() const noexcept { return lo_; }
  const std::optional<Rational>& hi() const noexcept { return hi_; }
  const std::vector<EnvelopePiece>& pieces() const noexcept { return pieces_; }
  Rational at(const Rational& t) const;
  // Interior breakpoints, increasing.
  std::vector<Rational> breakpoints() const;

  friend bool operator==(const Envelope& a, const Envelope& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.pieces_ == b.pieces_;
  }

 private:
  std::optional<Rational> lo_, hi_;
  std::vector<EnvelopePiece> pieces_;
};

// A parameter in the common interval where the two envelopes take different
// values, or nullopt if they agree everywhere. Requires equal intervals.
std::optional<Rational> find_difference(const Envelope& a, const Envelope& b);

}  // namespace tropcong
