#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace grothring {

/// Dense integer matrix with exact (GMP) entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Row vector times matrix.
std::vector<mpz_class> row_times(const std::vector<mpz_class>& row, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Square matrices only.
mpz_class determinant(const IntMatrix& m);

struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  /// V⁻¹, tracked alongside V.
  IntMatrix V_inverse;
  /// Nonzero diagonal entries d₁ | d₂ | ... ; their count is the rank.
  std::vector<mpz_class> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// U·A·V = D with U, V unimodular and D diagonal, nonnegative, with a
/// divisibility chain. Pivots on the entry of least absolute value.
SNFResult smith_normal_form(const IntMatrix& a);

}  // namespace grothring
