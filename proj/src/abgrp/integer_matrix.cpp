#include "eqmot/abgrp/integer_matrix.hpp"

#include <sstream>
#include <utility>

namespace eqmot {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

IntegerMatrix::IntegerMatrix(const IntegerMatrix& other)
    : rows_(other.rows_), cols_(other.cols_), data_(other.data_.size()) {
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] = other.data_[k];
}

IntegerMatrix& IntegerMatrix::operator=(const IntegerMatrix& other) {
  if (this != &other) {
    IntegerMatrix copy(other);
    *this = std::move(copy);
  }
  return *this;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::column(const std::vector<Integer>& entries) {
  return IntegerMatrix(entries.size(), 1, entries);
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::column_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw DimensionError("column range out of bounds");
  IntegerMatrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

IntegerMatrix IntegerMatrix::row_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw DimensionError("row range out of bounds");
  IntegerMatrix m(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

std::vector<Integer> IntegerMatrix::column_vector(std::size_t j) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntegerMatrix IntegerMatrix::hconcat(const IntegerMatrix& other) const {
  if (rows_ != other.rows_) throw DimensionError("hconcat: row counts differ");
  IntegerMatrix m(rows_, cols_ + other.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, other);
  return m;
}

void IntegerMatrix::set_block(std::size_t row0, std::size_t col0, const IntegerMatrix& block, long scale) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
    throw DimensionError("set_block: block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) {
      const Integer& v = block(i, j);
      if (sgn(v) == 0) continue;
      (*this)(row0 + i, col0 + j) = scale == 1 ? v : Integer(v * scale);
    }
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_)
    throw DimensionError("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                         std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  IntegerMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Integer& b = other(k, j);
        if (sgn(b) != 0) m(i, j) += a * b;
      }
    }
  return m;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("sum of differently shaped matrices");
  IntegerMatrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += other.data_[k];
  return m;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("difference of differently shaped matrices");
  IntegerMatrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= other.data_[k];
  return m;
}

IntegerMatrix IntegerMatrix::operator-() const { return scaled(-1); }

IntegerMatrix IntegerMatrix::scaled(const Integer& s) const {
  IntegerMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<std::vector<long>> IntegerMatrix::to_long_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).fits_slong_p()) throw std::overflow_error("matrix entry exceeds machine range");
      out[i][j] = (*this)(i, j).get_si();
    }
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> multiply(const IntegerMatrix& a, const std::vector<Integer>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector size mismatch");
  std::vector<Integer> y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(a(i, j)) != 0) y[i] += a(i, j) * x[j];
  }
  return y;
}

}  // namespace eqmot
