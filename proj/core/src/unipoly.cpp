#include "eurcs/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace eurcs {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Rational c) { return UniPoly(std::vector<Rational>{std::move(c)}); }

UniPoly UniPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const Integer& z : coeffs) c.emplace_back(z);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& UniPoly::operator[](int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw std::domain_error("UniPoly::leading: zero polynomial");
  return c_.back();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(Rational(static_cast<long>(i)) * c_[i]);
  return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = Rational(r * x + *it);
  return r;
}

RadicalExpr UniPoly::eval(const RadicalExpr& x) const {
  RadicalExpr r(Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + RadicalExpr(*it);
  return r;
}

DyadicInterval UniPoly::eval(const DyadicInterval& x, unsigned bits) const {
  DyadicInterval r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * x + dyadic_enclose(*it, bits);
  return r;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) c[i] -= q.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly();
  std::vector<Rational> c(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> r(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] = Rational(c * p.c_[i]);
  return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& p, const UniPoly& div, UniPoly& q, UniPoly& rem) {
  if (div.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
  std::vector<Rational> r = p.c_;
  const int dd = div.degree();
  std::vector<Rational> qq;
  if (static_cast<int>(r.size()) - 1 >= dd)
    qq.assign(r.size() - static_cast<size_t>(dd), Rational(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    if (sgn(r[static_cast<size_t>(i)]) == 0) continue;
    Rational f(r[static_cast<size_t>(i)] / div.leading());
    qq[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<size_t>(i - dd + j)] -= f * div[j];
  }
  q = UniPoly(std::move(qq));
  rem = UniPoly(std::move(r));
}

UniPoly UniPoly::exact_div(const UniPoly& p, const UniPoly& div) {
  UniPoly q, rem;
  divmod(p, div, q, rem);
  if (!rem.is_zero()) throw std::logic_error("UniPoly::exact_div: nonzero remainder");
  return q;
}

std::vector<Integer> UniPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer den_lcm(1);
  for (const Rational& q : c_) {
    Integer d = q.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> z;
  z.reserve(c_.size());
  Integer content(0);
  for (const Rational& q : c_) {
    Integer v = Integer(q.get_num() * (den_lcm / q.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  for (Integer& v : z) v /= content;
  return z;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (os.tellp() > 0) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly quo, rem;
    UniPoly::divmod(a, b, quo, rem);
    // Normalize to the primitive integer form to tame coefficient growth.
    if (!rem.is_zero()) rem = UniPoly::from_integers(rem.primitive_integer());
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return Rational(1 / a.leading()) * a;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 1) return p;
  const UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return UniPoly::exact_div(p, g);
}

}  // namespace eurcs
