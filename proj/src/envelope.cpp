#include "tropcong/envelope.hpp"

#include <algorithm>

#include "tropcong/error.hpp"

namespace tropcong {

namespace {

Rational crossing(const Line& a, const Line& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

}  // namespace

Envelope::Envelope(std::vector<Line> lines, std::optional<Rational> lo, std::optional<Rational> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lines.empty()) throw PreconditionError("envelope of no lines");
  if (lo_ && hi_ && !(*lo_ < *hi_)) throw PreconditionError("envelope interval is empty or a point");
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept > b.intercept;
  });
  std::vector<Line> hull;
  for (const auto& l : lines) {
    if (!hull.empty() && hull.back().slope == l.slope) continue;
    while (hull.size() >= 2 &&
           crossing(hull[hull.size() - 2], l) <= crossing(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }
  for (std::size_t k = 0; k < hull.size(); ++k) {
    std::optional<Rational> start, end;
    if (k > 0) start = crossing(hull[k - 1], hull[k]);
    if (k + 1 < hull.size()) end = crossing(hull[k], hull[k + 1]);
    if (end && lo_ && *end <= *lo_) continue;
    if (start && hi_ && *start >= *hi_) continue;
    if (lo_ && (!start || *start < *lo_)) start = lo_;
    pieces_.push_back({start, hull[k].slope, hull[k].intercept});
  }
}

Rational Envelope::at(const Rational& t) const {
  auto it = std::upper_bound(pieces_.begin() + 1, pieces_.end(), t,
                             [](const Rational& v, const EnvelopePiece& p) { return v < *p.start; });
  const EnvelopePiece& p = *(it - 1);
  return p.slope * t + p.intercept;
}

std::vector<Rational> Envelope::breakpoints() const {
  std::vector<Rational> b;
  for (std::size_t k = 1; k < pieces_.size(); ++k) b.push_back(*pieces_[k].start);
  return b;
}

std::optional<Rational> find_difference(const Envelope& a, const Envelope& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw PreconditionError("envelopes over different intervals");
  std::vector<Rational> pts = a.breakpoints();
  auto more = b.breakpoints();
  pts.insert(pts.end(), more.begin(), more.end());
  if (a.lo()) pts.push_back(*a.lo());
  if (a.hi()) pts.push_back(*a.hi());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // On every cell of the common refinement both envelopes are affine; two
  // distinct affine functions agree in at most one point, so two probes per
  // cell suffice.
  std::vector<Rational> probes;
  if (pts.empty()) {
    probes = {Rational(0), Rational(1)};
  } else {
    if (!a.lo()) probes.insert(probes.end(), {pts.front() - 1, pts.front() - 2});
    if (!a.hi()) probes.insert(probes.end(), {pts.back() + 1, pts.back() + 2});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Rational w = pts[i + 1] - pts[i];
      probes.push_back(pts[i] + w / 2);
      probes.push_back(pts[i] + w / 3);
    }
  }
  for (const auto& t : probes) {
    if (a.at(t) != b.at(t)) return t;
  }
  return std::nullopt;
}

}  // namespace tropcong
