#pragma once

#include <vector>

#include "eurcs/numeric.hpp"

namespace eurcs {

/// Dense square rational matrix (the pencil coefficients are all symmetric,
/// which psd() and the builders enforce).
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int size) : n_(size), a_(static_cast<size_t>(size) * size, Rational(0)) {}

  int size() const { return n_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool is_symmetric() const;

  Rational quadratic_form(const std::vector<Rational>& v) const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& m);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Exact positive-semidefiniteness: symmetric elimination pivoting on
/// positive diagonal entries; a zero diagonal entry forces its whole
/// row/column to vanish. Decides boundary cases (determinant exactly zero)
/// correctly. Throws std::invalid_argument on asymmetric input.
bool psd(const QMatrix& m);

}  // namespace eurcs
