#include "eurcs/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "eurcs/counting.hpp"

namespace eurcs {

namespace {

int sign_at(const std::vector<Integer>& c, const Integer& u, const Integer& v) {
  // sign of sum c_i (u/v)^i for v > 0, via v^deg scaling.
  Integer r(0), vp(1);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it == c.rbegin()) {
      r = *it;
    } else {
      vp *= v;
      r = r * u + (*it) * vp;
    }
  }
  return sgn(r);
}

int sign_at(const std::vector<Integer>& c, const Rational& x) {
  return sign_at(c, Integer(x.get_num()), Integer(x.get_den()));
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
  chain_.push_back(p.primitive_integer());
  UniPoly prev = UniPoly::from_integers(chain_.back());
  UniPoly cur = prev.derivative();
  while (!cur.is_zero()) {
    chain_.push_back(cur.primitive_integer());
    cur = UniPoly::from_integers(chain_.back());
    UniPoly q, rem;
    UniPoly::divmod(prev, cur, q, rem);
    prev = std::move(cur);
    cur = Rational(-1) * rem;
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int vars = 0, last = 0;
  for (const auto& poly : chain_) {
    const int s = sign_at(poly, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (lo >= hi) return 0;
  return variations_at(lo) - variations_at(hi);
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  if (lo >= hi) return 0;
  UniPoly q = p;
  // Endpoints that are roots are divided out; a root at hi lies in (lo, hi].
  int extra = 0;
  while (sgn(q.eval(lo)) == 0)
    q = UniPoly::exact_div(q, UniPoly({Rational(-lo), Rational(1)}));
  if (sgn(q.eval(hi)) == 0) {
    extra = 1;
    do {
      q = UniPoly::exact_div(q, UniPoly({Rational(-hi), Rational(1)}));
    } while (sgn(q.eval(hi)) == 0);
  }
  if (q.degree() <= 0) return extra;
  return SturmChain(q).count(lo, hi) + extra;
}

Rational root_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("root_bound: zero polynomial");
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational q(abs(p[i] / p.leading()));
    if (q > m) m = q;
  }
  const Rational b(1 + m);
  Rational pow(1);
  while (pow < b) pow *= 2;
  return pow;
}

int count_real_roots(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  const Rational b = root_bound(p);
  return SturmChain(p).count(Rational(-b), b);
}

bool is_palindromic(const UniPoly& p) {
  const auto& c = p.coeffs();
  for (size_t i = 0, j = c.size(); i < j--; ++i)
    if (c[i] != c[j]) return false;
  return true;
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
  if (p.degree() == 0) return true;
  const UniPoly g = squarefree_part(p);
  return count_real_roots(g) == g.degree();
}

RootIsolator::RootIsolator(const UniPoly& p)
    : g_(squarefree_part(p)), chain_(g_), bound_(g_.degree() >= 1 ? root_bound(g_) : Rational(1)) {
  if (p.is_zero()) throw std::domain_error("RootIsolator: zero polynomial");
}

int RootIsolator::total_roots() const {
  if (g_.degree() <= 0) return 0;
  return chain_.count(Rational(-bound_), bound_);
}

Rational RootIsolator::pick_non_root(const Rational& lo, const Rational& hi) const {
  Rational mid((lo + hi) / 2);
  Rational off((hi - lo) / 4);
  while (sgn(g_.eval(mid)) == 0) {  // at most deg(g) retries
    mid += off;
    off /= 2;
  }
  return mid;
}

RootInterval RootIsolator::smallest(const Rational& width) const {
  if (total_roots() == 0) throw std::domain_error("RootIsolator: no real roots");
  Rational lo(-bound_), hi(bound_);
  // Invariant: the leftmost root lies in (lo, hi].
  while (hi - lo > width || count(lo, hi) != 1) {
    const Rational mid = pick_non_root(lo, hi);
    if (chain_.count(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return RootInterval{lo, hi, true};
}

RootInterval RootIsolator::largest(const Rational& width) const {
  if (total_roots() == 0) throw std::domain_error("RootIsolator: no real roots");
  Rational lo(-bound_), hi(bound_);
  while (hi - lo > width || count(lo, hi) != 1) {
    const Rational mid = pick_non_root(lo, hi);
    if (chain_.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return RootInterval{lo, hi, true};
}

RootInterval RootIsolator::refine(const RootInterval& iv, const Rational& width) const {
  Rational lo = iv.lo, hi = iv.hi;
  if (sgn(g_.eval(lo)) == 0) return RootInterval{lo, lo, true};
  if (count(lo, hi) != 1) throw std::invalid_argument("RootIsolator::refine: not isolating");
  while (hi - lo > width) {
    const Rational mid = pick_non_root(lo, hi);
    if (chain_.count(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return RootInterval{lo, hi, true};
}

std::vector<RootInterval> RootIsolator::all_roots(const Rational& width) const {
  std::vector<RootInterval> out;
  if (g_.degree() <= 0) return out;
  struct Seg {
    Rational lo, hi;
    int cnt;
  };
  std::vector<Seg> stack{{Rational(-bound_), bound_, total_roots()}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.cnt == 0) continue;
    if (s.cnt == 1 && s.hi - s.lo <= width) {
      out.push_back(RootInterval{s.lo, s.hi, true});
      continue;
    }
    const Rational mid = pick_non_root(s.lo, s.hi);
    const int left = chain_.count(s.lo, mid);
    stack.push_back(Seg{s.lo, mid, left});
    stack.push_back(Seg{mid, s.hi, s.cnt - left});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval extreme_root(int n, const Rational& width) {
  if (n < 1) throw std::invalid_argument("extreme_root: n >= 1 required");
  if (sgn(width) <= 0) throw std::invalid_argument("extreme_root: width must be positive");
  const RootIsolator iso(UniPoly::from_integers(eulerian_poly(n)));
  return iso.smallest(width);
}

Rational default_root_width() { return pow2(-64); }

UniPoly reflect_poly(const UniPoly& p) {
  std::vector<Rational> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = Rational(-c[i]);
  return UniPoly(std::move(c));
}

UniPoly reciprocal_poly(const UniPoly& p) {
  if (p.is_zero() || sgn(p[0]) == 0)
    throw std::domain_error("reciprocal_poly: p(0) != 0 required");
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return UniPoly(std::move(c));
}

std::strong_ordering compare_value_root(const RadicalExpr& v, const RootIsolator& iso,
                                        RootInterval iv) {
  const UniPoly& g = iso.squarefree();
  if (sign_of(g.eval(v)) == 0) {
    // v is some root of g; inside the isolating interval it is the root.
    if (compare(v, RadicalExpr(iv.lo)) >= 0 && compare(v, RadicalExpr(iv.hi)) <= 0)
      return std::strong_ordering::equal;
    return compare(v, RadicalExpr(iv.lo)) < 0 ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
  }
  const Rational limit = pow2(-4096);
  while (true) {
    if (compare(v, RadicalExpr(iv.lo)) < 0) return std::strong_ordering::less;
    if (compare(v, RadicalExpr(iv.hi)) > 0) return std::strong_ordering::greater;
    if (iv.width() < limit) throw std::logic_error("compare_value_root: refinement exhausted");
    iv = iso.refine(iv, Rational(iv.width() / 256));
  }
}

std::strong_ordering compare_roots(const RootIsolator& ia, RootInterval iva,
                                   const RootIsolator& ib, RootInterval ivb) {
  const UniPoly h = poly_gcd(ia.squarefree(), ib.squarefree());
  if (h.degree() >= 1) {
    const Rational lo = std::max(iva.lo, ivb.lo), hi = std::min(iva.hi, ivb.hi);
    if (lo <= hi) {
      if (sgn(h.eval(lo)) == 0 || sturm_count(h, lo, hi) >= 1)
        return std::strong_ordering::equal;  // the common root is both isolated roots
    }
  }
  const Rational limit = pow2(-4096);
  while (true) {
    if (iva.hi < ivb.lo) return std::strong_ordering::less;
    if (ivb.hi < iva.lo) return std::strong_ordering::greater;
    if (iva.width() < limit && ivb.width() < limit)
      throw std::logic_error("compare_roots: refinement exhausted");
    iva = ia.refine(iva, Rational(iva.width() / 256));
    ivb = ib.refine(ivb, Rational(ivb.width() / 256));
  }
}

}  // namespace eurcs
