#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace pgspec {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Real symmetric matrix, stored full and mirrored on every write.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  /// Throws DomainError unless rows form an exactly symmetric square matrix.
  static DenseSymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseSymMatrix diagonal(std::span<const double> values);
  static DenseSymMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const { return data_; }

  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  std::vector<double> diagonal_values() const;
  std::vector<double> row_sums() const;

  DenseSymMatrix& operator+=(const DenseSymMatrix& other);
  DenseSymMatrix& operator-=(const DenseSymMatrix& other);
  DenseSymMatrix& operator*=(double s);
  friend DenseSymMatrix operator+(DenseSymMatrix a, const DenseSymMatrix& b) { return a += b; }
  friend DenseSymMatrix operator-(DenseSymMatrix a, const DenseSymMatrix& b) { return a -= b; }
  friend DenseSymMatrix operator*(double s, DenseSymMatrix a) { return a *= s; }

  friend bool operator==(const DenseSymMatrix&, const DenseSymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// General dense matrix (row-major) for the non-symmetric quotient and
/// companion matrices.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Full symmetric matrix as CSV, 17 significant digits.
std::string to_csv(const DenseSymMatrix& m);
nlohmann::json to_json(const DenseSymMatrix& m);

}  // namespace pgspec
