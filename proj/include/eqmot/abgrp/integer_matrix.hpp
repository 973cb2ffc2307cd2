#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqmot {

using Integer = mpz_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense integer matrix, row-major, arbitrary precision entries.
// Zero rows or zero columns are allowed and denote maps to/from the zero group.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  // copies assign only the nonzero entries; a zero mpz_class costs no allocation
  IntegerMatrix(const IntegerMatrix& other);
  IntegerMatrix& operator=(const IntegerMatrix& other);
  IntegerMatrix(IntegerMatrix&&) noexcept = default;
  IntegerMatrix& operator=(IntegerMatrix&&) noexcept = default;

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);
  // a column vector with given entries
  static IntegerMatrix column(const std::vector<Integer>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Integer>& entries() const { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  IntegerMatrix transpose() const;
  IntegerMatrix column_range(std::size_t begin, std::size_t end) const;
  IntegerMatrix row_range(std::size_t begin, std::size_t end) const;
  std::vector<Integer> column_vector(std::size_t j) const;
  // horizontal concatenation [this | other]
  IntegerMatrix hconcat(const IntegerMatrix& other) const;
  // block placement helper used by cones and tensor products
  void set_block(std::size_t row0, std::size_t col0, const IntegerMatrix& block, long scale = 1);

  // Bareiss fraction-free determinant; throws on non-square input
  Integer determinant() const;

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix operator+(const IntegerMatrix& other) const;
  IntegerMatrix operator-(const IntegerMatrix& other) const;
  IntegerMatrix operator-() const;
  IntegerMatrix scaled(const Integer& s) const;
  bool operator==(const IntegerMatrix& other) const;
  bool operator!=(const IntegerMatrix& other) const { return !(*this == other); }

  std::vector<std::vector<long>> to_long_rows() const;  // throws if an entry does not fit
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<Integer> multiply(const IntegerMatrix& a, const std::vector<Integer>& x);

}  // namespace eqmot
