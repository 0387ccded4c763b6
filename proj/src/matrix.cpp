#include "pgspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pgspec {

DenseSymMatrix DenseSymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  DenseSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j].at(i)) {
        throw DomainError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      m.data_[i * n + j] = rows[i][j];
    }
  }
  return m;
}

DenseSymMatrix DenseSymMatrix::diagonal(std::span<const double> values) {
  DenseSymMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

DenseSymMatrix DenseSymMatrix::identity(std::size_t n) {
  DenseSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

double DenseSymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseSymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double DenseSymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> DenseSymMatrix::diagonal_values() const {
  std::vector<double> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

std::vector<double> DenseSymMatrix::row_sums() const {
  std::vector<double> s(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s[i] += (*this)(i, j);
  return s;
}

DenseSymMatrix& DenseSymMatrix::operator+=(const DenseSymMatrix& other) {
  if (other.n_ != n_) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseSymMatrix& DenseSymMatrix::operator-=(const DenseSymMatrix& other) {
  if (other.n_ != n_) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseSymMatrix& DenseSymMatrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string to_csv(const DenseSymMatrix& m) {
  std::ostringstream out;
  char buf[40];
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << (j ? "," : "") << buf;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const DenseSymMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return {{"n", m.size()}, {"rows", rows}};
}

}  // namespace pgspec
