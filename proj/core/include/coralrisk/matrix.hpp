#pragma once

#include <cstddef>
#include <vector>

#include "coralrisk/error.hpp"

namespace coralrisk {

/// Dense row-major matrix of doubles. Rows are samples, columns features.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double value = 0.0) : rows(r), cols(c), data(r * c, value) {}
  Matrix(std::size_t r, std::size_t c, std::vector<double> values);

  /// Builds from nested initializer-style rows; every row must have equal length.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  double* row_ptr(std::size_t r) { return data.data() + r * cols; }
  const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }

  bool empty() const { return rows == 0 || cols == 0; }
  std::size_t size() const { return data.size(); }
  bool same_shape(const Matrix& other) const { return rows == other.rows && cols == other.cols; }

  void fill(double value) { data.assign(data.size(), value); }

  /// Copies the given rows (in the given order) into a new matrix.
  Matrix take_rows(const std::vector<std::size_t>& indices) const;

  bool all_finite() const;
};

bool operator==(const Matrix& a, const Matrix& b);

/// a * b. Throws ShapeError when inner dimensions differ.
Matrix matmul(const Matrix& a, const Matrix& b);

/// a^T * b, without materializing the transpose.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

/// a * b^T, without materializing the transpose.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, double s);
Matrix hadamard(const Matrix& a, const Matrix& b);

void add_in_place(Matrix& a, const Matrix& b);
void scale_in_place(Matrix& a, double s);

/// Adds a 1 x cols row vector to every row of `a`.
void add_row_vector(Matrix& a, const Matrix& row);

/// Column sums as a 1 x cols matrix.
Matrix col_sums(const Matrix& a);
Matrix col_means(const Matrix& a);
/// Population variance (divides by rows) per column.
Matrix col_vars_population(const Matrix& a, const Matrix& means);

/// Row sums as an n x 1 matrix.
Matrix row_sums(const Matrix& a);

}  // namespace coralrisk
