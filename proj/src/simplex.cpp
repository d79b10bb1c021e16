#include "tropcong/simplex.hpp"

#include "tropcong/error.hpp"

namespace tropcong {

namespace {

class Tableau {
 public:
  // rows_[0..m) are constraints, rows_[m] is the reduced-cost row; the last
  // column holds the right-hand side (negated objective value in the cost row).
  std::vector<RatVec> rows;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  std::size_t m() const { return basis.size(); }
  Rational& rhs(std::size_t i) { return rows[i][ncols]; }

  void pivot(std::size_t p, std::size_t j) {
    RatVec& pr = rows[p];
    Rational inv = Rational(1) / pr[j];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= ncols; ++k) {
      if (pr[k].is_zero()) continue;
      pr[k] *= inv;
      nz.push_back(k);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == p || rows[i][j].is_zero()) continue;
      Rational f = rows[i][j];
      for (std::size_t k : nz) rows[i][k] -= f * pr[k];
    }
    basis[p] = j;
  }

  // Bland's rule. Returns false when an improving column has no positive
  // entry; `unbounded_col` then holds it.
  bool optimize(std::size_t col_limit, std::size_t& unbounded_col) {
    std::size_t cost = m();
    for (;;) {
      std::size_t enter = col_limit;
      for (std::size_t j = 0; j < col_limit; ++j) {
        if (rows[cost][j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == col_limit) return true;
      std::size_t leave = m();
      Rational best;
      for (std::size_t i = 0; i < m(); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rational ratio = rows[i][ncols] / rows[i][enter];
        if (leave == m() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m()) {
        unbounded_col = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }
};

}  // namespace

StandardLpResult solve_standard_form(const std::vector<RatVec>& a, const RatVec& b,
                                     const RatVec& c) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a.front().size() : c.size();
  if (b.size() != m) throw DimensionMismatch("LP right-hand side has wrong length");
  if (!c.empty() && c.size() != n) throw DimensionMismatch("LP objective has wrong length");

  // Rows with nonnegative right-hand side; pick an existing unit column as the
  // starting basic variable where possible, otherwise add an artificial.
  std::vector<RatVec> rows(m);
  RatVec rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("LP row has wrong length");
    rows[i] = a[i];
    rhs[i] = b[i];
    if (rhs[i].sign() < 0) {
      for (auto& x : rows[i]) x = -x;
      rhs[i] = -rhs[i];
    }
  }
  std::vector<std::size_t> start(m, SIZE_MAX);
  std::vector<char> used(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hit = SIZE_MAX;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (rows[i][j].is_zero()) continue;
      if (hit != SIZE_MAX || rows[i][j].sign() < 0) ok = false;
      hit = i;
    }
    if (ok && hit != SIZE_MAX && start[hit] == SIZE_MAX) {
      start[hit] = j;
      used[j] = 1;
    }
  }
  std::size_t nart = 0;
  for (std::size_t i = 0; i < m; ++i) nart += start[i] == SIZE_MAX;

  Tableau t;
  t.ncols = n + nart;
  t.rows.assign(m + 1, RatVec(t.ncols + 1));
  t.basis.assign(m, 0);
  std::size_t next_art = n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = rows[i][j];
    t.rows[i][t.ncols] = rhs[i];
    if (start[i] == SIZE_MAX) {
      t.rows[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      Rational inv = Rational(1) / t.rows[i][start[i]];
      if (inv != Rational(1)) {
        for (auto& x : t.rows[i]) x *= inv;
      }
      t.basis[i] = start[i];
    }
  }

  StandardLpResult res;
  std::size_t dummy;
  if (nart > 0) {
    RatVec& cost = t.rows[m];
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < n) continue;
      for (std::size_t k = 0; k <= t.ncols; ++k) {
        if (k >= n && k < t.ncols) continue;
        if (!t.rows[i][k].is_zero()) cost[k] -= t.rows[i][k];
      }
    }
    t.optimize(t.ncols, dummy);
    if (!t.rows[m][t.ncols].is_zero()) {
      res.status = LpStatus::infeasible;
      return res;
    }
    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.m();) {
      if (t.basis[i] < n) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n && t.rows[i][j].is_zero()) ++j;
      if (j < n) {
        t.pivot(i, j);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& r : t.rows) {
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(n), r.end() - 1);
    }
    t.ncols = n;
  }

  auto extract = [&](RatVec& z) {
    z.assign(n, Rational());
    for (std::size_t i = 0; i < t.m(); ++i) z[t.basis[i]] = t.rows[i][t.ncols];
  };

  if (c.empty()) {
    res.status = LpStatus::optimal;
    extract(res.z);
    return res;
  }

  RatVec& cost = t.rows[t.m()];
  for (std::size_t k = 0; k <= t.ncols; ++k) cost[k] = k < n ? c[k] : Rational();
  for (std::size_t i = 0; i < t.m(); ++i) {
    const Rational& cb = c[t.basis[i]];
    if (cb.is_zero()) continue;
    for (std::size_t k = 0; k <= t.ncols; ++k) {
      if (!t.rows[i][k].is_zero()) cost[k] -= cb * t.rows[i][k];
    }
  }
  std::size_t ucol = 0;
  bool bounded = t.optimize(n, ucol);
  extract(res.z);
  if (!bounded) {
    res.status = LpStatus::unbounded;
    res.ray.assign(n, Rational());
    res.ray[ucol] = 1;
    for (std::size_t i = 0; i < t.m(); ++i) res.ray[t.basis[i]] = -t.rows[i][ucol];
    return res;
  }
  res.status = LpStatus::optimal;
  res.value = -t.rows[t.m()][t.ncols];
  return res;
}

}  // namespace tropcong
