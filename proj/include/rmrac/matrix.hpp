#pragma once

#include <cstddef>
#include <vector>

namespace rmrac {

using Vector = std::vector<double>;

// Small dense row-major matrix. Everything in this library is n <= ~10,
// so no attempt is made at blocking or expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  double frobenius_norm() const;
  double max_abs() const;

  // max |M(i,j) - M(j,i)| over all pairs; 0 for the empty matrix
  double symmetry_defect() const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

Vector mat_vec(const Matrix& a, const Vector& x);
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

}  // namespace rmrac
