#pragma once

#include <string>
#include <vector>

#include "eurcs/lform.hpp"
#include "eurcs/qmatrix.hpp"
#include "eurcs/unipoly.hpp"

namespace eurcs {

/// Linear matrix polynomial A_0 + sum_k x_k A_k with symmetric rational
/// coefficients, rows labelled by the monomials {1, x_2, ..., x_{n+1}}.
/// The ghost tag x_1 (never a descent top) is not materialized unless a
/// builder is asked for the didactic full-size form.
struct Pencil {
  int n = 0;                           // Eulerian order / deg of the source
  std::vector<std::string> labels;     // row monomials
  QMatrix constant;                    // A_0
  std::vector<std::pair<std::string, QMatrix>> coeffs;  // (variable label, A_k)

  int size() const { return constant.size(); }
};

/// Diagonal restriction M_0 + x * MSigma with MSigma the sum of all
/// variable coefficient matrices.
struct DiagonalPencil {
  QMatrix m0;
  QMatrix msigma;
};

/// Degree-3 truncation of A_n(x,1): squarefree coefficients are the
/// exact-descent-top counts; all square terms vanish.
Trunc3Polynomial trunc3_eulerian(int n);

/// Pencil from any normalized truncation, entries L(x_k m_u m_v) taken from
/// the series L-form (the authoritative path).
Pencil build_pencil(const Trunc3Polynomial& t);

/// Closed-form fast path for the multivariate Eulerian pencil; agrees with
/// build_pencil(trunc3_eulerian(n)) (tested). include_ghost emits the full
/// (n+2)-size pencil with the zero row/column and zero coefficient for x_1.
Pencil eulerian_pencil(int n, bool include_ghost = false);

/// 2x2 pencil of the univariate Eulerian polynomial.
Pencil univariate_pencil(int n);

DiagonalPencil diagonal(const Pencil& p);

/// A_0 + sum point_k A_k; point is ordered like p.coeffs.
QMatrix evaluate(const Pencil& p, const std::vector<Rational>& point);

/// psd(evaluate(p, point)).
bool membership(const Pencil& p, const std::vector<Rational>& point);

int default_det_size_cap();  // 12: coefficient growth is steep beyond that

/// det(M0 + x * MSigma) over Q[x] via fraction-free (Bareiss) elimination
/// with exact polynomial division. Throws resource_error above the cap.
UniPoly det_diagonal_poly(const DiagonalPencil& d, int size_cap = default_det_size_cap());

/// Bit-exact JSON serialization:
/// {"n":., "labels":[...], "A0":[["p/q",...]], "coeffs":{"x2":[[...]], ...}}.
std::string pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const std::string& text);

}  // namespace eurcs
