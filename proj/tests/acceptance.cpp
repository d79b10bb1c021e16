// Acceptance run: one line per criterion, PASS only when the check holds and
// the run stays under its time limit.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "line_gen.hpp"
#include "oracles.hpp"
#include "tropcong/line.hpp"
#include "tropcong/reduce.hpp"
#include "tropcong/witness.hpp"

using namespace tropcong;

namespace {

std::uint64_t g_seed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using testgen::pick;

std::vector<IntVec> random_set(std::mt19937_64& rng, int bound, int max_size) {
  std::vector<IntVec> a;
  for (std::int64_t k = pick(rng, 1, max_size); k > 0; --k) a.push_back({pick(rng, -bound, bound), pick(rng, -bound, bound)});
  return a;
}

// A set inside the box with the same triangle as a: the lower-left corner,
// a point of a on the diagonal side, and random box points of the triangle.
std::vector<IntVec> same_triangle_in_box(std::mt19937_64& rng, const std::vector<IntVec>& a, int bound) {
  Integer x0 = a[0][0], y0 = a[0][1], s0 = a[0][0] + a[0][1];
  IntVec top = a[0];
  for (const auto& p : a) {
    x0 = std::min(x0, p[0]);
    y0 = std::min(y0, p[1]);
    if (p[0] + p[1] > s0) {
      s0 = p[0] + p[1];
      top = p;
    }
  }
  std::vector<IntVec> b{{x0, y0}, top};
  for (std::int64_t k = pick(rng, 0, 4); k > 0; --k) {
    IntVec p{pick(rng, -bound, bound), pick(rng, -bound, bound)};
    if (p[0] >= x0 && p[1] >= y0 && p[0] + p[1] <= s0) b.push_back(p);
  }
  std::shuffle(b.begin(), b.end(), rng);
  return b;
}

Outcome c1_delta_equality() {
  std::mt19937_64 rng(g_seed + 1);
  int agree = 0, equal = 0, oracle_agree = 0;
  const int total = 500;
  for (int i = 0; i < total; ++i) {
    auto a = random_set(rng, 6, 6);
    auto b = i % 2 ? same_triangle_in_box(rng, a, 6) : random_set(rng, 6, 6);
    TropPoly fa = line::poly_of(a), fb = line::poly_of(b);
    bool on_l = line::eq_on_L(fa, fb);
    bool by_delta = line::delta(a) == line::delta(b);
    if (on_l == by_delta) ++agree;
    if (on_l == oracle::equal_on_standard_line(fa, fb)) ++oracle_agree;
    if (on_l) ++equal;
  }
  std::ostringstream d;
  d << agree << "/" << total << " match Delta, " << oracle_agree << "/" << total << " match ray oracle, " << equal
    << " equal pairs";
  return {agree == total && oracle_agree == total && equal > 100 && equal < total, d.str()};
}

Outcome c2_derivations() {
  std::mt19937_64 rng(g_seed + 2);
  int ok = 0;
  std::size_t steps = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    auto [f, g] = testgen::random_pair_on_L(rng);
    if (!oracle::equal_on_standard_line(f, g)) continue;
    line::Derivation d = line::derive(f, g);
    bool good = line::verify_derivation(d).ok && d.start == canon_fun(f) && d.end == canon_fun(g);
    // Replay step by step as well.
    TropFun cur = d.start;
    for (const auto& s : d.steps) {
      auto next = line::verify_step(cur, s);
      if (!next) {
        good = false;
        break;
      }
      cur = *next;
    }
    good = good && cur == d.end;
    steps += d.steps.size();
    if (good) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << total << " derivations replayed (" << steps << " steps)";
  return {ok == total, d.str()};
}

Outcome c3_minimality() {
  auto targets = line::generators_in_box(10);
  auto big = line::generators_in_box(20);
  int obstructed = 0;
  for (const auto& t : targets) {
    std::vector<line::GeneratorPair> pool;
    for (const auto& g : big)
      if (!(g.u == t.u && g.v == t.v)) pool.push_back(g);
    if (line::minimality_obstruction(t.u, t.v, pool).obstructed) ++obstructed;
  }
  std::ostringstream d;
  d << obstructed << "/" << targets.size() << " generators obstructed against a pool of " << big.size() - 1;
  return {obstructed == static_cast<int>(targets.size()), d.str()};
}

Outcome c4_thin() {
  int ok = 0, total = 0;
  for (std::size_t n : {2u, 3u})
    for (std::int64_t N : {3, 5, 10}) {
      ++total;
      ThinPolytope t = thin_polytope(n, N);
      Integer best;
      bool first = true;
      for (std::size_t i = 0; i < t.points.size(); ++i)
        for (std::size_t j = i + 1; j < t.points.size(); ++j) {
          IntVec d = t.points[i] - t.points[j];
          if (first || dot(d, d) < best) best = dot(d, d);
          first = false;
        }
      if (determinant(t.matrix) == Integer(-1) && best == t.min_dist_sq && best >= Integer((N - 2) * (N - 2))) ++ok;
    }
  std::ostringstream d;
  d << ok << "/" << total << " parameter pairs with det -1 and min distance^2 >= (N-2)^2";
  return {ok == total, d.str()};
}

Outcome c5_witness() {
  PolyComplex cx = translate_complex(standard_line(), {Rational(1), Rational(2)});
  LatticePolytope p = LatticePolytope::hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}}, 2);
  WitnessPair w = witness_pair(p, {1, 1}, cx);
  bool eq = eq_on_complex(w.f, w.g, cx).equal;
  RatVec o{Rational(0), Rational(0)};
  Rational gap = w.g.eval(o).value() - w.f.eval(o).value();
  std::ostringstream d;
  d << "eps = " << w.eps << ", equal on L+(1,2): " << (eq ? "yes" : "no") << ", gap at origin = " << gap;
  return {w.eps == Rational(1) && eq && gap == Rational(1), d.str()};
}

Outcome c6_refuter(double& worst) {
  auto gens = line::generators_in_box(3);
  const std::size_t m = gens.size();
  PolyComplex L = standard_line();
  std::size_t subsets = 0, verified = 0, tampered = 0, tamper_caught = 0;
  worst = 0;
  std::vector<std::size_t> idx;
  // Every subset of size <= 8, enumerated in lexicographic order of index lists.
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    ++subsets;
    std::vector<std::pair<TropPoly, TropPoly>> cands;
    for (auto i : idx) cands.emplace_back(gens[i].lhs, gens[i].rhs);
    auto t0 = std::chrono::steady_clock::now();
    Certificate cert = refute(cands, L);
    bool ok = verify_certificate(cert).ok;
    worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    if (ok) ++verified;
    if (idx.size() <= 2 || subsets % 16 == 0) {
      Certificate bad = cert;
      bad.eps = bad.eps * Rational(2);
      bad.g.add_term(bad.u0, bad.eps);
      tampered += 3;
      if (!verify_certificate(bad).ok) ++tamper_caught;
      bad = cert;
      bad.thin_points.back()[1] += Integer(1);
      if (!verify_certificate(bad).ok) ++tamper_caught;
      bad = cert;
      bool flipped = false;
      for (auto& c : bad.candidates)
        if (c.status == PairStatus::kept) {
          c.rhs_fits = true;
          flipped = true;
          break;
        }
      if (!flipped) bad.candidates.push_back({gens[0].lhs, gens[0].rhs, PairStatus::kept, true, false});
      if (!verify_certificate(bad).ok) ++tamper_caught;
    }
    if (idx.size() == 8) return;
    for (std::size_t i = from; i < m; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  std::ostringstream d;
  d << verified << "/" << subsets << " certificates verified, " << tamper_caught << "/" << tampered
    << " tampered certificates rejected, slowest " << std::fixed << std::setprecision(4) << worst << " s";
  return {verified == subsets && subsets == 39203 && tamper_caught == tampered && worst < 10.0, d.str()};
}

PolyComplex tripod(const IntMatrix& t, const std::vector<Integer>& w) {
  auto ray = [](const IntVec& d) { return Polyhedron(2, {{{-d[1], d[0]}, 0}}, {{{-d[0], -d[1]}, 0}}); };
  Polyhedron o(2, {{{1, 0}, 0}, {{0, 1}, 0}}, {});
  return PolyComplex(2,
                     {{"o", o, std::nullopt},
                      {"a", ray(t * IntVec{-1, 0}), w[0]},
                      {"b", ray(t * IntVec{0, -1}), w[1]},
                      {"c", ray(t * IntVec{1, 1}), w[2]}},
                     {"a", "b", "c"});
}

Outcome c7_balancing() {
  bool base = balancing_check(standard_line()).balanced;
  int perturbed = 0, caught = 0;
  PolyComplex L = standard_line();
  for (std::size_t f = 0; f < L.cells().size(); ++f) {
    if (!L.is_facet(f)) continue;
    for (int w = 2; w <= 5; ++w) {
      std::vector<Cell> cells = L.cells();
      cells[f].weight = Integer(w);
      ++perturbed;
      if (!balancing_check(PolyComplex(2, cells, L.facet_ids())).balanced) ++caught;
    }
  }
  std::mt19937_64 rng(g_seed + 7);
  int preserved = 0, reduced = 0;
  while (reduced < 20) {
    IntVec g1{pick(rng, -3, 3), pick(rng, -3, 3), pick(rng, -3, 3)}, g2{pick(rng, -3, 3), pick(rng, -3, 3), pick(rng, -3, 3)};
    SubspaceChart c = make_chart(std::vector<IntVec>{g1, g2}, 3);
    if (c.d != 2) continue;
    IntMatrix t = IntMatrix::identity(2);
    for (int k = 0; k < 4; ++k) {
      IntMatrix e = IntMatrix::identity(2);
      std::size_t i = rng() % 2;
      e(i, 1 - i) = Integer(pick(rng, -2, 2));
      t = t * e;
    }
    Integer w(pick(rng, 1, 2));
    std::vector<Integer> ws{w, w, reduced % 2 ? w + Integer(1) : w};
    PolyComplex up = embed_complex(tripod(t, ws), c);
    PolyComplex down = reduce_complex(up, c);
    if (balancing_check(up).balanced == balancing_check(down).balanced &&
        balancing_check(down).balanced == (reduced % 2 == 0))
      ++preserved;
    ++reduced;
  }
  std::ostringstream d;
  d << "L balanced: " << (base ? "yes" : "no") << ", " << caught << "/" << perturbed << " weight perturbations fail, "
    << preserved << "/" << reduced << " reductions preserve balancing";
  return {base && caught == perturbed && preserved == reduced, d.str()};
}

Outcome c8_subspace() {
  std::mt19937_64 rng(g_seed + 8);
  int gens_ok = 0, gens_total = 0, pairs_ok = 0, pairs_total = 0, spaces = 0;
  while (spaces < 20) {
    std::size_t want = 1 + spaces % 3;
    std::vector<IntVec> span;
    for (std::size_t i = 0; i < want; ++i)
      span.push_back({pick(rng, -3, 3), pick(rng, -3, 3), pick(rng, -3, 3), pick(rng, -3, 3)});
    SubspaceChart c = make_chart(span, 4);
    if (c.d != want) continue;
    ++spaces;
    PolyComplex w = subspace_complex(c);
    for (const auto& [f, g] : subspace_congruence_generators(c)) {
      ++gens_total;
      if (eq_on_complex(f, g, w).equal) ++gens_ok;
    }
    // Pairs equal on W: exponents moved along W^perp, plus terms dominated on W.
    for (int k = 0; k < 50; ++k) {
      TropPoly f(4), g(4);
      for (std::int64_t t = pick(rng, 1, 3); t > 0; --t)
        f.add_term({pick(rng, -2, 2), pick(rng, -2, 2), pick(rng, -2, 2), pick(rng, -2, 2)},
                   oracle::random_rational(rng, 3, 2));
      for (const auto& [u, a] : f.terms()) {
        IntVec v = u;
        for (const auto& q : c.perp) v = v + Integer(pick(rng, -1, 1)) * q;
        g.add_term(v, a);
        if (rng() % 2) g.add_term(v + c.perp[rng() % c.perp.size()], a - Rational(pick(rng, 0, 2)));
      }
      if (!eq_on_complex(f, g, w).equal) continue;
      ++pairs_total;
      if (fun_eq(normal_form_mod_subspace(f, c), normal_form_mod_subspace(g, c))) ++pairs_ok;
    }
  }
  std::ostringstream d;
  d << spaces << " subspaces of R^4: " << gens_ok << "/" << gens_total << " generators vanish on W, " << pairs_ok << "/"
    << pairs_total << " equal pairs have equal normal forms";
  return {gens_ok == gens_total && pairs_ok == pairs_total && pairs_total >= 50 * 20, d.str()};
}

TropPoly random_poly2(std::mt19937_64& rng, std::size_t terms) {
  TropPoly p(2);
  for (std::size_t i = 0; i < terms; ++i)
    p.add_term({pick(rng, -4, 4), pick(rng, -4, 4)}, oracle::random_rational(rng, 5, 3));
  return p;
}

std::vector<IntVec> exponents(const TropPoly& p) {
  std::vector<IntVec> e;
  for (const auto& [u, a] : p.terms()) e.push_back(u);
  return e;
}

// A term that cannot raise p anywhere: below an existing term, or below the
// average of two or three terms whose exponent average is integral.
std::pair<IntVec, Rational> dominated_term(std::mt19937_64& rng, const TropPoly& p) {
  std::vector<std::pair<IntVec, Rational>> ts(p.terms().begin(), p.terms().end());
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::size_t k = 2 + rng() % 2;
    IntVec sum{0, 0};
    Rational coeff(0);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& t = ts[rng() % ts.size()];
      sum = sum + t.first;
      coeff += t.second;
    }
    if (floor_mod(sum[0], Integer(k)).is_zero() && floor_mod(sum[1], Integer(k)).is_zero()) {
      IntVec u{floor_div(sum[0], Integer(k)), floor_div(sum[1], Integer(k))};
      return {u, coeff / Rational(static_cast<std::int64_t>(k)) - Rational(pick(rng, 0, 2))};
    }
  }
  const auto& t = ts[rng() % ts.size()];
  return {t.first, t.second - Rational(pick(rng, 1, 3))};
}

Outcome c9_core() {
  std::mt19937_64 rng(g_seed + 9);
  int newt_ok = 0;
  for (int i = 0; i < 300; ++i) {
    TropPoly p = random_poly2(rng, 1 + rng() % 5), q = random_poly2(rng, 1 + rng() % 5);
    auto ep = exponents(p), eq = exponents(q);
    std::vector<IntVec> uni = ep, sums;
    uni.insert(uni.end(), eq.begin(), eq.end());
    for (const auto& a : ep)
      for (const auto& b : eq) sums.push_back(a + b);
    bool ok = newton(trop_add(p, q)).vertices() == oracle::hull_2d(uni) &&
              newton(trop_mul(p, q)).vertices() == oracle::hull_2d(sums);
    if (ok) ++newt_ok;
  }
  int canon_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    TropPoly p = random_poly2(rng, 1 + rng() % 6);
    TropPoly aug = p;
    for (int k = 0; k < 2; ++k) {
      auto [u, a] = dominated_term(rng, p);
      if (!p.terms().count(u)) aug.add_term(u, a);
    }
    TropFun c = canon_fun(p);
    bool ok = canon_fun(aug) == c;
    for (int k = 0; k < 50 && ok; ++k) {
      RatVec x = oracle::random_point(rng, 2, 6, 4);
      ok = c.eval(x) == p.eval(x) && aug.eval(x) == p.eval(x);
    }
    if (ok) ++canon_ok;
  }
  std::ostringstream d;
  d << newt_ok << "/300 Newton identities match the hull oracle, " << canon_ok << "/1000 canonical forms sound";
  return {newt_ok == 300 && canon_ok == 1000, d.str()};
}

Outcome c10_charts() {
  std::mt19937_64 rng(g_seed + 10);
  int ok = 0, charts = 0;
  while (charts < 20) {
    std::size_t n = 2 + rng() % 4;
    std::vector<IntVec> span;
    for (std::size_t i = 0, k = 1 + rng() % n; i < k; ++i) {
      IntVec v;
      for (std::size_t j = 0; j < n; ++j) v.push_back(pick(rng, -4, 4));
      span.push_back(v);
    }
    SubspaceChart c = make_chart(span, n);
    if (c.d == 0) continue;
    ++charts;
    bool good = true;
    for (std::size_t i = 0; i < c.d; ++i) {
      IntVec e(c.d, Integer(0));
      e[i] = Integer(1);
      good = good && pullback(c, TropPoly::monomial(Rational(0), c.dual[i])) == TropPoly::monomial(Rational(0), e);
      for (std::size_t j = 0; j < c.d; ++j) good = good && dot(c.dual[i], c.basis[j]) == Integer(i == j ? 1 : 0);
    }
    if (good) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << charts << " charts with pullback(x^{u_i}) = y_i";
  return {ok == charts, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--seed") == 0) g_seed = std::stoull(argv[i + 1]);

  double worst_cert = 0;
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> cs{
      {1, "delta-equality theorem", 30, c1_delta_equality},
      {2, "derivation soundness and completeness on L", 60, c2_derivations},
      {3, "minimality of the generating set", 60, c3_minimality},
      {4, "thin polytopes", 5, c4_thin},
      {5, "witness lemma instance", 5, c5_witness},
      {6, "refuter certificates", 0, [&] { return c6_refuter(worst_cert); }},
      {7, "balancing", 10, c7_balancing},
      {8, "subspace generators and normal forms", 60, c8_subspace},
      {9, "core Newton and canonical-form identities", 120, c9_core},
      {10, "pull-back surjectivity witnesses", 5, c10_charts},
  };
  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Criterion 6 is limited per certificate (checked inside), not in total.
    bool in_time = c.limit == 0 || secs < c.limit;
    bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit > 0) std::cout << ", limit " << std::setprecision(0) << c.limit << " s";
    else std::cout << ", limit 10 s per certificate";
    std::cout << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
