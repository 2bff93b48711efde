#include "grothring/smith.hpp"

#include <stdexcept>
#include <utility>

namespace grothring {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<mpz_class> row_times(const std::vector<mpz_class>& row, const IntMatrix& m) {
  if (row.size() != m.rows()) throw std::invalid_argument("row length mismatch");
  std::vector<mpz_class> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[i] * m(i, j);
  }
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Floor-free quotient so the remainder has |r| < |pivot|.
mpz_class trunc_quotient(const mpz_class& x, const mpz_class& pivot) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
  return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFResult res{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n), {}};
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  IntMatrix& Vi = res.V_inverse;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Least nonzero |entry| in the trailing block.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pr == m || abs(D(i, j)) < abs(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) break;  // trailing block is zero
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);
      Vi.swap_rows(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const mpz_class q = trunc_quotient(D(i, t), D(t, t));
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const mpz_class q = trunc_quotient(D(t, j), D(t, t));
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        Vi.add_row_multiple(t, j, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      D.add_row_multiple(t, bad, 1);
      U.add_row_multiple(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  for (std::size_t t = 0; t < steps; ++t)
    if (D(t, t) != 0) res.invariant_factors.push_back(D(t, t));
  return res;
}

}  // namespace grothring
