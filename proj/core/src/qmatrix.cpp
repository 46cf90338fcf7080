#include "eurcs/qmatrix.hpp"

#include <stdexcept>

namespace eurcs {

bool QMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rational QMatrix::quadratic_form(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("QMatrix::quadratic_form: length mismatch");
  Rational total(0);
  for (int i = 0; i < n_; ++i) {
    Rational row(0);
    for (int j = 0; j < n_; ++j) row += at(i, j) * v[static_cast<size_t>(j)];
    total += v[static_cast<size_t>(i)] * row;
  }
  return total;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("QMatrix: size mismatch");
  QMatrix r(a.n_);
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = Rational(a.a_[i] + b.a_[i]);
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& m) {
  QMatrix r(m.n_);
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = Rational(c * m.a_[i]);
  return r;
}

bool psd(const QMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("psd: matrix must be symmetric");
  QMatrix a = m;
  const int n = a.size();
  for (int k = 0; k < n; ++k) {
    const int s = sgn(a.at(k, k));
    if (s < 0) return false;
    if (s == 0) {
      // A PSD matrix with a zero diagonal entry is zero along that row.
      for (int j = k + 1; j < n; ++j)
        if (sgn(a.at(k, j)) != 0) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      if (sgn(a.at(i, k)) == 0) continue;
      const Rational f(a.at(i, k) / a.at(k, k));
      for (int j = i; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      a.at(i, k) = 0;
    }
    // Keep the trailing submatrix symmetric for the next pivots.
    for (int i = k + 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a.at(j, i) = a.at(i, j);
  }
  return true;
}

}  // namespace eurcs
