#include "eurcs/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "eurcs/counting.hpp"
#include "eurcs/lform.hpp"

namespace eurcs {

Rational colucci_bound(int n) {
  if (n < 1) throw std::invalid_argument("colucci_bound: n >= 1 required");
  return make_rational(Integer(pow_int(2, static_cast<unsigned long>(n) + 1) - n - 2), Integer(n));
}

RadicalExpr laguerre_upper(int n) {
  if (n < 2) throw std::invalid_argument("laguerre_upper: n >= 2 required (division by n-1)");
  const Rational e1(eulerian_number(n, n - 1));
  const Rational e2(eulerian_number(n, n - 2));
  const Rational radicand(e1 * e1 - Rational(2 * n) / Rational(n - 1) * e2);
  if (sgn(radicand) < 0) throw std::logic_error("laguerre_upper: negative discriminant");
  return RadicalExpr(Rational(e1 / n), make_rational(n - 1, n), radicand);
}

UnBoundResult un_bound(int n) {
  if (n < 1) throw std::invalid_argument("un_bound: n >= 1 required");
  const Rational l0 = lform_eulerian_uni(n, 0), l1 = lform_eulerian_uni(n, 1),
                 l2 = lform_eulerian_uni(n, 2), l3 = lform_eulerian_uni(n, 3);
  UnBoundResult r;
  r.c = Rational(l0 * l2 - l1 * l1);
  r.b = Rational(l0 * l3 - l1 * l2);
  r.a = Rational(l1 * l3 - l2 * l2);
  if (sgn(r.a) == 0 && sgn(r.b) == 0 && sgn(r.c) == 0) {
    r.degenerate = true;
    return r;
  }
  // The branch 2a/(b - sqrt(b^2-4ac)) needs a, b, c > 0; verified, not assumed.
  if (sgn(r.a) <= 0 || sgn(r.b) <= 0 || sgn(r.c) <= 0)
    throw std::logic_error("un_bound: unexpected determinant signs at n=" + std::to_string(n));
  const Rational disc(r.b * r.b - 4 * r.a * r.c);
  if (sgn(disc) < 0) throw std::logic_error("un_bound: negative discriminant");
  // 2a/(b - sqrt(disc)) rationalized to (b + sqrt(disc)) / (2c).
  r.value = RadicalExpr(Rational(r.b / (2 * r.c)), Rational(Rational(1) / (2 * r.c)), disc);
  return r;
}

VectorBoundResult vector_bound(const DiagonalPencil& d, const std::vector<Rational>& v) {
  VectorBoundResult r;
  r.numerator = d.msigma.quadratic_form(v);
  r.denominator = d.m0.quadratic_form(v);
  if (sgn(r.numerator) <= 0) {
    r.status = VectorBoundStatus::InvalidDirection;  // the inequality reverses
    return r;
  }
  if (sgn(r.denominator) <= 0) {
    r.status = VectorBoundStatus::Degenerate;
    return r;
  }
  r.status = VectorBoundStatus::Valid;
  r.value = Rational(r.numerator / r.denominator);
  return r;
}

Rational b11_bound(int n) {
  if (n < 1) throw std::invalid_argument("b11_bound: n >= 1 required");
  const auto e = [](long b, long ex) { return pow_int(b, static_cast<unsigned long>(ex)); };
  const Integer num = e(2, 1 + n) + e(2, 3 + 2 * n) - 4 * e(3, 1 + n) -
                      e(2, 1 + n) * e(3, 2 + n) + 3 * e(4, 1 + n) + e(8, 1 + n);
  const Integer den = -(2 - e(2, 2 + n) + 2 * e(3, 1 + n) - e(4, 1 + n));
  const Rational closed = make_rational(num, den);
  const auto direct = vector_bound(diagonal(univariate_pencil(n)), {Rational(1), Rational(1)});
  if (direct.status != VectorBoundStatus::Valid || *direct.value != closed)
    throw std::logic_error("b11_bound: closed form disagrees with the pencil at n=" +
                           std::to_string(n));
  return closed;
}

std::pair<UniPoly, UniPoly> mult_DN_quadratics(int n) {
  if (n < 2) throw std::invalid_argument("mult_DN: n >= 2 required (empty variable tail)");
  const auto e = [](long b, long ex) { return Rational(pow_int(b, static_cast<unsigned long>(ex))); };
  const Rational d0(10 - e(2, 2 + n) + e(2, 2 + 2 * n) - 2 * e(3, 1 + n) + n);
  const Rational d1(2 * (4 - e(2, 1 + n) + n));
  const Rational d2(n);
  const Rational n0(-10 + e(2, 3 + n) - e(2, 3 + 2 * n) / 3 - e(2, 4 + 2 * n) / 3 +
                    e(2, 4 + 3 * n) / 7 + e(2, 5 + 3 * n) / 7 + 2 * e(3, n) - 4 * e(3, 1 + n) +
                    2 * e(3, 2 + n) - e(2, 1 + n) * e(3, 3 + n) / 5 - e(4, 1 + n) + e(4, 2 + n) -
                    e(6, 2 + n) / 5 + e(8, 1 + n) / 7 - n);
  const Rational n1(-8 - e(2, 2 + n) + e(2, 3 + n) - e(2, 3 + 2 * n) / 3 - e(2, 4 + 2 * n) / 3 +
                    4 * e(3, 1 + n) - 2 * n);
  const Rational n2(-2 + e(2, 1 + n) - n);
  return {UniPoly({d0, d1, d2}), UniPoly({n0, n1, n2})};
}

std::pair<Rational, Rational> mult_DN(int n, const Rational& y) {
  const auto [d, nn] = mult_DN_quadratics(n);
  return {d.eval(y), nn.eval(y)};
}

std::pair<RadicalExpr, RadicalExpr> mult_DN(int n, const RadicalExpr& y) {
  const auto [d, nn] = mult_DN_quadratics(n);
  return {d.eval(y), nn.eval(y)};
}

OptimalYResult optimal_y(int n) {
  const auto [d, nn] = mult_DN_quadratics(n);
  OptimalYResult r;
  r.derivative_numerator = nn.derivative() * d - nn * d.derivative();
  if (r.derivative_numerator.degree() != 2)
    throw std::logic_error("optimal_y: N'D - ND' degenerated at n=" + std::to_string(n));
  const Rational qa = r.derivative_numerator[2], qb = r.derivative_numerator[1],
                 qc = r.derivative_numerator[0];
  const Rational disc(qb * qb - 4 * qa * qc);
  if (sgn(disc) <= 0) throw std::logic_error("optimal_y: nonpositive discriminant");
  // Leftmost root: minus sign before the radical (for qa > 0).
  if (sgn(qa) <= 0) throw std::logic_error("optimal_y: nonpositive leading coefficient");
  r.y_star = RadicalExpr(Rational(-qb / (2 * qa)), Rational(Rational(-1) / (2 * qa)), disc);
  r.d_positive = sign_of(d.eval(r.y_star)) > 0;
  r.n_positive = sign_of(nn.eval(r.y_star)) > 0;
  r.y_above_one = compare(r.y_star, RadicalExpr(Rational(1))) > 0;
  return r;
}

MultVResult mult_v_bound(int n) {
  MultVResult r;
  r.opt = optimal_y(n);
  r.valid = r.opt.d_positive && r.opt.n_positive;
  if (!r.valid) return r;  // report the status, never a silent wrong bound
  const auto [d, nn] = mult_DN_quadratics(n);
  r.value = nn.eval(r.opt.y_star) / d.eval(r.opt.y_star);
  return r;
}

int default_mult_det_cap() { return 8; }

namespace {

/// Divisors of |z| when |z| factors over primes <= 10^4 and the divisor
/// count stays small; empty on failure (the exact path is then skipped).
std::vector<Integer> bounded_divisors(Integer z) {
  std::vector<std::pair<Integer, int>> fac;
  z = abs(z);
  if (sgn(z) == 0) return {};
  for (long p = 2; p <= 10000 && z > 1; p == 2 ? p = 3 : p += 2) {
    if (z % p != 0) continue;
    int e = 0;
    while (z % p == 0) {
      z /= p;
      ++e;
    }
    fac.emplace_back(Integer(p), e);
  }
  if (z > 1) {
    if (mpz_probab_prime_p(z.get_mpz_t(), 25) == 0) return {};
    fac.emplace_back(z, 1);
  }
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : fac) {
    const size_t base = divs.size();
    if (base * static_cast<size_t>(e + 1) > 4096) return {};
    Integer pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(Integer(divs[j] * pk));
    }
  }
  return divs;
}

/// Exact roots of a degree <= 2 polynomial (empty when complex).
std::vector<RadicalExpr> exact_low_degree_roots(const UniPoly& g) {
  std::vector<RadicalExpr> roots;
  if (g.degree() == 1) {
    roots.emplace_back(Rational(-g[0] / g[1]));
  } else if (g.degree() == 2) {
    const Rational disc(g[1] * g[1] - 4 * g[2] * g[0]);
    if (sgn(disc) < 0) return roots;
    roots.emplace_back(Rational(-g[1] / (2 * g[2])), Rational(Rational(-1) / (2 * g[2])), disc);
    roots.emplace_back(Rational(-g[1] / (2 * g[2])), Rational(Rational(1) / (2 * g[2])), disc);
  }
  return roots;
}

/// Rational roots of the primitive integer form of g, found by bounded
/// divisor enumeration; may miss roots when the coefficients do not factor
/// cheaply (callers fall back to certified intervals).
std::vector<Rational> bounded_rational_roots(const UniPoly& g) {
  std::vector<Rational> roots;
  const std::vector<Integer> z = g.primitive_integer();
  if (z.size() < 2) return roots;
  size_t low = 0;
  while (low < z.size() && sgn(z[low]) == 0) ++low;  // factor x^low out
  if (low > 0) roots.emplace_back(0);
  const auto nums = bounded_divisors(z[low]);
  const auto dens = bounded_divisors(z.back());
  if (nums.empty() || dens.empty()) return roots;
  for (const Integer& p : nums)
    for (const Integer& q : dens) {
      for (int s : {1, -1}) {
        const Rational cand = make_rational(s * p, q);
        if (sgn(g.eval(cand)) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  return roots;
}

}  // namespace

MultDetResult mult_det_bound(int n, int det_cap) {
  if (n < 2) throw std::domain_error("mult_det_bound: n >= 2 required (degenerate pencil)");
  if (n > det_cap)
    throw resource_error("mult_det_bound: n exceeds the determinant cap " +
                         std::to_string(det_cap));
  MultDetResult r;
  r.det = det_diagonal_poly(diagonal(eulerian_pencil(n)));
  if (r.det.is_zero()) throw std::logic_error("mult_det_bound: vanishing determinant");
  const RootIsolator iso(r.det);
  const UniPoly& g = iso.squarefree();
  // All roots are negative (the relaxation contains the origin with a
  // positive-definite constant matrix); verified, not assumed.
  const Rational big = root_bound(g);
  if (sgn(g.eval(Rational(0))) == 0 || sturm_count(g, Rational(0), big) != 0)
    throw std::logic_error("mult_det_bound: nonnegative determinant root at n=" + std::to_string(n));
  r.root = iso.largest(pow2(-66));

  // Exact identification of the root closest to zero, when cheap: either the
  // square-free part already has degree <= 2, or rational-root deflation
  // leaves a factor of degree <= 2.
  std::vector<RadicalExpr> candidates;
  if (g.degree() <= 2) {
    candidates = exact_low_degree_roots(g);
  } else {
    const std::vector<Rational> rr = bounded_rational_roots(g);
    UniPoly h = g;
    for (const Rational& rt : rr) {
      h = UniPoly::exact_div(h, UniPoly({Rational(-rt), Rational(1)}));
      candidates.emplace_back(rt);
    }
    if (h.degree() <= 2)
      for (RadicalExpr& e : exact_low_degree_roots(h)) candidates.push_back(std::move(e));
  }
  for (const RadicalExpr& cand : candidates) {
    if (sign_of(g.eval(cand)) != 0) continue;
    if (compare(cand, RadicalExpr(r.root.lo)) >= 0 && compare(cand, RadicalExpr(r.root.hi)) <= 0) {
      r.exact = true;
      r.value = RadicalExpr(Rational(-1)) / cand;  // reciprocal via the conjugate
      r.enclosure = enclose(*r.value, 70);
      return r;
    }
  }

  // Certified interval: refine the root until the reciprocal has width 2^-64.
  RootInterval iv = r.root;
  const Rational target = pow2(-64);
  while (true) {
    const DyadicInterval rec = reciprocal(
        DyadicInterval(Rational(-iv.hi), Rational(-iv.lo)), 70);
    if (rec.width() <= target) {
      r.enclosure = rec;
      r.root = iv;
      return r;
    }
    iv = iso.refine(iv, Rational(iv.width() / 1024));
  }
}

namespace {

/// |q_1^{(n)}| as the largest root of A_n(-x), with its isolator.
struct AbsExtreme {
  RootIsolator iso;
  RootInterval iv;
  explicit AbsExtreme(int n, const Rational& width)
      : iso(reflect_poly(UniPoly::from_integers(eulerian_poly(n)))), iv(iso.largest(width)) {}
};

void check(bool ok, const std::string& what, int n) {
  if (!ok)
    throw std::logic_error("bound_report: " + what + " violated at n=" + std::to_string(n));
}

}  // namespace

BoundReport bound_report(int n, int det_cap, const Rational& oracle_width) {
  if (n < 1) throw std::invalid_argument("bound_report: n >= 1 required");
  BoundReport rep;
  rep.n = n;
  rep.colucci = colucci_bound(n);
  rep.b11 = b11_bound(n);

  const UnBoundResult un = un_bound(n);
  rep.un_degenerate = un.degenerate;
  rep.un = un.value;
  if (n >= 2) {
    rep.laguerre = laguerre_upper(n);
    const MultVResult mv = mult_v_bound(n);
    rep.y_star = mv.opt.y_star;
    rep.mult_valid = mv.valid;
    rep.mult_v = mv.value;
    if (n <= det_cap) rep.mult_det = mult_det_bound(n, det_cap);
  }

  AbsExtreme abs_root(n, oracle_width);
  rep.oracle_abs = DyadicInterval(abs_root.iv.lo, abs_root.iv.hi);
  rep.oracle_root = RootInterval{Rational(-abs_root.iv.hi), Rational(-abs_root.iv.lo), true};

  // Ordering invariants; every comparison exact.
  check(rep.colucci <= rep.b11, "colucci <= b11", n);
  if (rep.un) {
    check(compare(RadicalExpr(rep.b11), *rep.un) <= 0, "b11 <= un", n);
    check(compare_value_root(*rep.un, abs_root.iso, abs_root.iv) <= 0, "un <= |q1|", n);
  }
  if (rep.laguerre)
    check(compare_value_root(*rep.laguerre, abs_root.iso, abs_root.iv) >= 0, "|q1| <= I(n)", n);
  if (rep.mult_v) {
    check(sign_of(*rep.mult_v) > 0, "mult_v > 0", n);
    check(compare_value_root(*rep.mult_v, abs_root.iso, abs_root.iv) <= 0, "mult_v <= |q1|", n);
  }
  if (rep.mult_det) {
    const MultDetResult& md = *rep.mult_det;
    if (md.exact) {
      if (rep.mult_v) check(compare(*md.value, *rep.mult_v) >= 0, "mult_det >= mult_v", n);
      check(compare_value_root(*md.value, abs_root.iso, abs_root.iv) <= 0, "mult_det <= |q1|", n);
      if (rep.un) rep.mult_det_ge_un = compare(*md.value, *rep.un) >= 0;
    } else {
      // The bound is the largest det root seen through x -> -1/x; compare as
      // an isolated root of the transformed polynomial.
      const RootIsolator rec_iso(reflect_poly(reciprocal_poly(md.det)));
      const RootInterval rec_iv = rec_iso.largest(pow2(-64));
      if (rep.mult_v)
        check(compare_value_root(*rep.mult_v, rec_iso, rec_iv) <= 0, "mult_det >= mult_v", n);
      check(compare_roots(rec_iso, rec_iv, abs_root.iso, abs_root.iv) <= 0, "mult_det <= |q1|", n);
      if (rep.un) rep.mult_det_ge_un = compare_value_root(*rep.un, rec_iso, rec_iv) <= 0;
    }
  }
  return rep;
}

std::vector<RatioRow> ratio_diagnostics(int n_min, int n_max, const Rational& width) {
  if (n_min < 2 || n_min > n_max)
    throw std::invalid_argument("ratio_diagnostics: need 2 <= n_min <= n_max");
  if (sgn(width) <= 0) throw std::invalid_argument("ratio_diagnostics: width must be positive");
  std::vector<RatioRow> rows;
  const Rational& target = width;
  for (int n = n_min; n <= n_max; ++n) {
    RatioRow row;
    row.n = n;
    const RadicalExpr un = *un_bound(n).value;
    const MultVResult mv = mult_v_bound(n);
    if (!mv.valid) throw std::logic_error("ratio_diagnostics: invalid mult_v at n=" + std::to_string(n));
    const Rational inv_pow(pow2(-(n + 1)));
    const Rational scale_diff(2 * pow_rat(make_rational(4, 3), n));
    for (unsigned bits = 128;; bits *= 2) {
      row.un_ratio = scale(enclose(un, bits), inv_pow, bits);
      row.b11_ratio = dyadic_enclose(Rational(b11_bound(n) * inv_pow), bits);
      row.scaled_diff = scale(enclose(*mv.value, bits) - enclose(un, bits), scale_diff, bits);
      if (row.un_ratio.width() <= target && row.b11_ratio.width() <= target &&
          row.scaled_diff.width() <= target)
        break;
      if (bits > (1u << 16))
        throw std::logic_error("ratio_diagnostics: refinement failed at n=" + std::to_string(n));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eurcs
