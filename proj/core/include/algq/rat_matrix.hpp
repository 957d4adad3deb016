#pragma once

// Dense matrices over the exact rationals. Sized for representation-theoretic
// bookkeeping (a handful of rows), not linear-algebra workloads.

#include "algq/rational.hpp"

#include <string>
#include <vector>

namespace algq {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(int rows, int cols, std::vector<Rational> entries);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);

  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
  friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Gauss-Jordan over the rationals; throws value_error if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace algq
