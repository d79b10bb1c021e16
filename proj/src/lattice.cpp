#include "tropcong/lattice.hpp"

#include <utility>

#include "tropcong/error.hpp"

namespace tropcong {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_vectors() const {
  std::vector<IntVec> r;
  r.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace {

using RatMatrix = std::vector<RatVec>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void column_op(IntMatrix& m, std::size_t k, std::size_t j, const Integer& s, const Integer& t,
               const Integer& p, const Integer& q) {
  // col_k <- s col_k + t col_j ; col_j <- p col_k + q col_j
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer ck = m(i, k), cj = m(i, j);
    if (ck.is_zero() && cj.is_zero()) continue;
    m(i, k) = s * ck + t * cj;
    m(i, j) = p * ck + q * cj;
  }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, src).is_zero()) m(i, dst) += f * m(i, src);
  }
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  RatMatrix a(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  auto piv = rref(a, n);
  if (piv.size() != n) throw PreconditionError("matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (!x.is_integer()) throw PreconditionError("matrix is not unimodular");
      inv(i, j) = x.num();
    }
  return inv;
}

std::size_t rank(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  RatMatrix a = rows;
  return rref(a, rows.front().size()).size();
}

std::size_t rank(const std::vector<IntVec>& rows) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rank(r);
}

ColumnHnf column_hnf(const IntMatrix& m) {
  ColumnHnf out{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t n = m.cols();
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows() && k < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) {
      if (h(i, j).is_zero()) continue;
      if (h(i, k).is_zero()) {
        swap_cols(h, k, j);
        swap_cols(u, k, j);
        continue;
      }
      Integer a = h(i, k), b = h(i, j), s, t;
      Integer g = ext_gcd(a, b, s, t);
      Integer p = -(b / g), q = a / g;
      column_op(h, k, j, s, t, p, q);
      column_op(u, k, j, s, t, p, q);
    }
    if (h(i, k).is_zero()) continue;
    if (h(i, k).sign() < 0) {
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, k) = -h(r, k);
      for (std::size_t r = 0; r < u.rows(); ++r) u(r, k) = -u(r, k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Integer f = floor_div(h(i, j), h(i, k));
      if (f.is_zero()) continue;
      add_col_multiple(h, j, k, -f);
      add_col_multiple(u, j, k, -f);
    }
    ++k;
  }
  out.rank = k;
  return out;
}

std::vector<IntVec> row_hnf(const std::vector<IntVec>& rows, std::size_t n) {
  if (rows.empty()) return {};
  IntMatrix mt = IntMatrix::from_rows(rows, n).transpose();
  ColumnHnf c = column_hnf(mt);
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < c.rank; ++j) out.push_back(c.h.col(j));
  return out;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t n) {
  if (rows.empty()) return IntMatrix::identity(n).row_vectors();
  ColumnHnf c = column_hnf(IntMatrix::from_rows(rows, n));
  std::vector<IntVec> ker;
  for (std::size_t j = c.rank; j < n; ++j) ker.push_back(c.u.col(j));
  return row_hnf(ker, n);
}

std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t n) {
  std::vector<IntVec> nz;
  for (const auto& g : gens) {
    if (g.size() != n) throw DimensionMismatch("generator has wrong length");
    if (!is_zero(g)) nz.push_back(g);
  }
  if (nz.empty()) return {};
  return integer_kernel(integer_kernel(nz, n), n);
}

std::vector<IntVec> saturate(const std::vector<RatVec>& gens, std::size_t n) {
  std::vector<IntVec> ints;
  for (const auto& g : gens) {
    if (g.size() != n) throw DimensionMismatch("generator has wrong length");
    ints.push_back(clear_denominators(g));
  }
  return saturate(ints, n);
}

std::vector<IntVec> extend_basis(const std::vector<IntVec>& basis, std::size_t n) {
  if (basis.empty()) return IntMatrix::identity(n).row_vectors();
  std::size_t r = basis.size();
  ColumnHnf c = column_hnf(IntMatrix::from_rows(basis, n));
  if (c.rank != r) throw PreconditionError("basis vectors are linearly dependent");
  for (std::size_t i = 0; i < r; ++i) {
    if (c.h(i, i) != Integer(1)) throw PreconditionError("lattice is not saturated");
  }
  IntMatrix inv = unimodular_inverse(c.u);
  std::vector<IntVec> rest;
  for (std::size_t i = r; i < n; ++i) rest.push_back(inv.row(i));
  std::vector<IntVec> out = basis;
  for (auto& v : row_hnf(rest, n)) out.push_back(std::move(v));
  return out;
}

bool span_coordinates(const std::vector<IntVec>& basis, const RatVec& v, RatVec& coords) {
  std::size_t r = basis.size(), n = v.size();
  RatMatrix a(n, RatVec(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = basis[j][i];
    a[i][r] = v[i];
  }
  auto piv = rref(a, r + 1);
  if (!piv.empty() && piv.back() == r) return false;
  coords.assign(r, Rational());
  for (std::size_t i = 0; i < piv.size(); ++i) coords[piv[i]] = a[i][r];
  return true;
}

bool lattice_coordinates(const std::vector<IntVec>& basis, const IntVec& v, IntVec& coords) {
  RatVec rc;
  if (!span_coordinates(basis, to_rational(v), rc)) return false;
  coords.assign(rc.size(), Integer());
  for (std::size_t i = 0; i < rc.size(); ++i) {
    if (!rc[i].is_integer()) return false;
    coords[i] = rc[i].num();
  }
  return true;
}

}  // namespace tropcong
