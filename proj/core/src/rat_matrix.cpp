#include "algq/rat_matrix.hpp"

#include <utility>

namespace algq {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw value_error("matrix dimensions must be nonnegative");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw value_error("matrix dimensions must be nonnegative");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw value_error("matrix entry count does not match dimensions");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

const Rational& RatMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw value_error("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

Rational& RatMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw value_error("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw value_error("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw value_error("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw value_error("matrix shape mismatch in *");
  RatMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw value_error("only square matrices can be inverted");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw value_error("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = a.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::string RatMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += to_string(at(i, j));
    }
  }
  s += "]";
  return s;
}

}  // namespace algq
